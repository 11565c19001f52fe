"""Zero product determined Lie algebras and zero action determined modules.

Exact linear algebra over Q and GF(p), a catalog of small algebras and
modules, commuting-pair generators, and decision procedures that return
replayable certificates or witnesses.
"""

from .catalog import (
    age1,
    age1_module,
    bm_algebra,
    bm_module,
    borel,
    dim3_family,
    from_ref,
    galilei,
    heisenberg,
    sl2,
    truncated_current,
    truncated_quantum_plane,
    vm_module,
)
from .commuting import SamplerConfig, centralizer, exhaustive_kprime_gfp, generate_pairs, module_pairs
from .decide import (
    check_comm_preserving,
    decide_zad,
    decide_zpd,
    extract_witness,
    is_proportional_commuting,
    kprime_span,
    mprime,
    verify_certificate,
    verify_witness,
    verify_zad_certificate,
)
from .exactla import GF, QQ, Matrix, Subspace, parse_field, wedge_coords, wedge_index
from .liealg import (
    LieAlgebra,
    abelian,
    center,
    derived_subalgebra,
    direct_sum,
    h2_dimensions,
    is_centrally_closed,
    semidirect,
    validate,
)
from .repmod import LieModule, mv_space, restrict_module, validate_module

__all__ = [name for name in dir() if not name.startswith("_")]
