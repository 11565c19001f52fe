"""zpd / zad decisions with replayable evidence.

A positive verdict carries a certificate: commuting pairs whose wedges (or
tensors x (x) v for modules) span the whole kernel of the bracket (action)
map.  A negative verdict carries a witness: a functional that kills every
wedge found so far but not the kernel, together with a kernel element it
does not kill.  Over GF(p) the span can be computed exhaustively, which
makes negatives exact for that field; over Q negatives are probabilistic.
"""

from __future__ import annotations

import random
from collections import namedtuple
from dataclasses import dataclass, field as dc_field, replace
from typing import Iterable, Sequence

import numpy as np

from . import _gfscan
from .commuting import (
    _inverse_table,
    projective_count,
    projective_points,
    structure_tensor,
    CommutingPair,
    ModulePair,
    SamplerConfig,
    centralizer,
    check_budget,
    exhaustive_kprime_gfp,
    exhaustive_kv_gfp,
    first_large_centralizer,
    generate_pairs,
    module_pairs,
)
from .errors import DimensionError, InputError, UnsupportedFieldError
from .exactla import Matrix, Subspace, dot, is_zero, kernel_basis, wedge_coords, wedge_index
from .liealg import LieAlgebra, bracket_map_matrix, derived_subalgebra
from .repmod import LieModule, kernel_of_action, lv_subspace, mv_space

ZPD_CERTIFIED = "ZPD_CERTIFIED"
NOT_ZPD_EXHAUSTIVE = "NOT_ZPD_EXHAUSTIVE"
NOT_ZPD_PROBABILISTIC = "NOT_ZPD_PROBABILISTIC"
ZAD_CERTIFIED = "ZAD_CERTIFIED"
NOT_ZAD_EXHAUSTIVE = "NOT_ZAD_EXHAUSTIVE"
NOT_ZAD_PROBABILISTIC = "NOT_ZAD_PROBABILISTIC"
UNDECIDED = "UNDECIDED"

TRUE_EXHAUSTIVE = "TRUE_EXHAUSTIVE"
TRUE_PROBABILISTIC = "TRUE_PROBABILISTIC"
FALSE = "FALSE"
PRESERVES_SAMPLED = "PRESERVES_SAMPLED"
VIOLATION = "VIOLATION"

SpanResult = namedtuple("SpanResult", "span pairs stabilized rounds examined")
ProportionalResult = namedtuple("ProportionalResult", "verdict pair")
PreserveResult = namedtuple("PreserveResult", "verdict pair checked")


class Verification(namedtuple("Verification", "ok diagnosis")):
    def __bool__(self):
        return bool(self.ok)


@dataclass
class Witness:
    """xi kills the accumulated span; mu lies in the kernel with xi(mu) != 0.

    ``terms`` presents mu as a sum of x ^ y (or x (x) v) with zero total
    bracket (action).
    """

    xi: list
    mu: list
    terms: list
    value: object
    validated: int = 0
    failed: bool = False


@dataclass
class ZpdReport:
    input: str
    algebra: LieAlgebra
    dims: dict
    verdict: str
    certificate: list | None = None
    witness: Witness | None = None
    stats: dict = dc_field(default_factory=dict)
    seed: int = 0
    kind: str = "zpd"

    @property
    def field(self):
        return self.algebra.field


@dataclass
class ZadReport:
    input: str
    module: LieModule
    dims: dict
    verdict: str
    certificate: list | None = None
    witness: Witness | None = None
    stats: dict = dc_field(default_factory=dict)
    seed: int = 0
    kind: str = "zad"

    @property
    def field(self):
        return self.module.field


def _refuse_char2(F):
    if F.char == 2:
        raise UnsupportedFieldError("zpd/zad decisions are not made in characteristic 2")


# -- spans -----------------------------------------------------------------

def mprime(L: LieAlgebra) -> Subspace:
    """Kernel of x^y -> [x, y] in wedge coordinates."""
    return kernel_basis(bracket_map_matrix(L))


def _accumulate(stream, coords, ambient, field, target: int, cfg: SamplerConfig) -> SpanResult:
    S = Subspace(field, ambient)
    used = []
    last_growth = 0
    rounds = 0
    examined = 0
    stabilized = False
    if S.dim >= target:
        return SpanResult(S, used, False, 0, 0)
    for r, pair in stream:
        if r > cfg.rounds:
            break
        if r > 0 and r - last_growth > cfg.window:
            stabilized = True
            break
        rounds = r
        examined += 1
        if S.insert(coords(pair)):
            used.append(pair)
            last_growth = r
            if S.dim >= target:
                break
    return SpanResult(S, used, stabilized, rounds, examined)


def kprime_span(L: LieAlgebra, cfg: SamplerConfig, target: int | None = None) -> SpanResult:
    """Grow span{x ^ y : [x,y] = 0} from sampled pairs.

    Stops at ``target`` (default dim M'), after ``cfg.window`` random rounds
    without growth, or when the round budget runs out.
    """
    w = wedge_index(L.n)
    if target is None:
        target = mprime(L).dim
    F = L.field
    return _accumulate(
        generate_pairs(L, cfg), lambda p: wedge_coords(p.x, p.y, w, F), w.dim, F, target, cfg
    )


def kv_span(M: LieModule, cfg: SamplerConfig, target: int | None = None) -> SpanResult:
    if target is None:
        target = mv_space(M).dim
    return _accumulate(
        module_pairs(M, cfg), lambda p: M.tensor_coords(p.x, p.v), M.parent.n * M.dim, M.field, target, cfg
    )


# -- witnesses -------------------------------------------------------------

def _fresh_algebra_pairs(L: LieAlgebra, cfg: SamplerConfig):
    fresh = replace(cfg, strategies=("family", "random"))
    rng = random.Random(f"fresh:{cfg.seed}")
    return (p for r, p in generate_pairs(L, fresh, rng) if r > 0)


def _fresh_module_pairs(M: LieModule, cfg: SamplerConfig):
    fresh = replace(cfg, strategies=("family", "random"))
    rng = random.Random(f"fresh:{cfg.seed}")
    return (p for r, p in module_pairs(M, fresh, rng) if r > 0)


def _validate_functional(xi, fresh, coords, needed: int, max_draws: int, F) -> tuple[int, bool]:
    """Count nontrivial fresh pairs on which xi vanishes; stop on a failure."""
    count = 0
    for draws, pair in enumerate(fresh):
        if count >= needed or draws >= max_draws:
            break
        c = coords(pair)
        if is_zero(c):
            continue
        if dot(F, xi, c) != 0:
            return count, True
        count += 1
    return count, False


def extract_witness(
    obj, span: Subspace, kernel: Subspace, fresh: Iterable | None = None, validation: int = 0
) -> Witness:
    """Pick xi in span's annihilator with xi(kernel) != 0 and a kernel vector mu.

    ``obj`` is the LieAlgebra (wedge coordinates) or LieModule (tensor
    coordinates).  Among annihilator rows the one with the smallest pivot
    wins.  When ``fresh`` pairs are given, xi is checked on ``validation``
    nontrivial ones.
    """
    if span.dim >= kernel.dim:
        raise InputError("no witness exists: the span already fills the kernel")
    F = span.field
    ann = span.annihilator()
    for xi in ann.basis:
        mu = next((b for b in kernel.basis if dot(F, xi, b) != 0), None)
        if mu is not None:
            break
    else:
        raise InputError("span does not lie in the kernel")
    if isinstance(obj, LieAlgebra):
        w = wedge_index(obj.n)
        terms = [(_scaled_unit(F, obj.n, i, c), obj.unit(j)) for (i, j), c in zip(w.pairs, mu) if c != 0]

        def coords(p):
            return wedge_coords(p.x, p.y, w, F)
    else:
        d = obj.dim
        terms = [
            (_scaled_unit(F, obj.parent.n, t // d, c), obj.unit(t % d)) for t, c in enumerate(mu) if c != 0
        ]

        def coords(p):
            return obj.tensor_coords(p.x, p.v)

    wit = Witness(list(xi), list(mu), terms, dot(F, xi, mu))
    if fresh is not None and validation > 0:
        wit.validated, wit.failed = _validate_functional(xi, fresh, coords, validation, 50 * validation, F)
    return wit


def _scaled_unit(F, n, i, c):
    v = F.zeros(n)
    v[i] = c
    return v


# -- decisions -------------------------------------------------------------

def _zpd_dims(L, Mp, kdim):
    w = wedge_index(L.n)
    return {"n": L.n, "derived": derived_subalgebra(L).dim, "wedge": w.dim, "M'": Mp.dim, "K'": kdim}


def decide_zpd(L: LieAlgebra, cfg: SamplerConfig | None = None, ref: str | None = None) -> ZpdReport:
    cfg = cfg or SamplerConfig()
    F = L.field
    _refuse_char2(F)
    ref = ref or L.tag or "inline"
    Mp = mprime(L)
    stats = {"seed": cfg.seed}
    if Mp.dim == 0:
        return ZpdReport(ref, L, _zpd_dims(L, Mp, 0), ZPD_CERTIFIED, [], None, stats, cfg.seed)
    if cfg.exhaustive:
        if F.char == 0:
            raise UnsupportedFieldError("exhaustive mode needs a prime field")
        res = exhaustive_kprime_gfp(L, cfg.cap, Mp.dim)
        stats.update(mode="exhaustive", scanned=res.scanned, points=res.total, pairs=len(res.pairs))
        dims = _zpd_dims(L, Mp, res.span.dim)
        if res.span == Mp:
            return ZpdReport(ref, L, dims, ZPD_CERTIFIED, res.pairs, None, stats, cfg.seed)
        wit = extract_witness(L, res.span, Mp)
        return ZpdReport(ref, L, dims, NOT_ZPD_EXHAUSTIVE, None, wit, stats, cfg.seed)
    res = kprime_span(L, cfg, Mp.dim)
    stats.update(mode="sampling", rounds=res.rounds, pairs=res.examined, contributing=len(res.pairs))
    dims = _zpd_dims(L, Mp, res.span.dim)
    if res.span == Mp:
        return ZpdReport(ref, L, dims, ZPD_CERTIFIED, res.pairs, None, stats, cfg.seed)
    if not res.stabilized:
        return ZpdReport(ref, L, dims, UNDECIDED, None, None, stats, cfg.seed)
    wit = extract_witness(L, res.span, Mp, _fresh_algebra_pairs(L, cfg), cfg.validation)
    stats["validation"] = wit.validated
    ok = not wit.failed and wit.validated >= cfg.validation
    return ZpdReport(ref, L, dims, NOT_ZPD_PROBABILISTIC if ok else UNDECIDED, None, wit, stats, cfg.seed)


def _zad_dims(M, Mv, kdim):
    return {"n": M.parent.n, "d": M.dim, "tensor": M.parent.n * M.dim, "LV": lv_subspace(M).dim, "M_V": Mv.dim, "K_V": kdim}


def decide_zad(M: LieModule, cfg: SamplerConfig | None = None, ref: str | None = None) -> ZadReport:
    cfg = cfg or SamplerConfig()
    F = M.field
    _refuse_char2(F)
    ref = ref or M.tag or "inline"
    Mv = mv_space(M)
    stats = {"seed": cfg.seed}
    if Mv.dim == 0:
        return ZadReport(ref, M, _zad_dims(M, Mv, 0), ZAD_CERTIFIED, [], None, stats, cfg.seed)
    if cfg.exhaustive:
        if F.char == 0:
            raise UnsupportedFieldError("exhaustive mode needs a prime field")
        res = exhaustive_kv_gfp(M, cfg.cap, Mv.dim)
        stats.update(mode="exhaustive", scanned=res.scanned, points=res.total, pairs=len(res.pairs))
        dims = _zad_dims(M, Mv, res.span.dim)
        if res.span == Mv:
            return ZadReport(ref, M, dims, ZAD_CERTIFIED, res.pairs, None, stats, cfg.seed)
        wit = extract_witness(M, res.span, Mv)
        return ZadReport(ref, M, dims, NOT_ZAD_EXHAUSTIVE, None, wit, stats, cfg.seed)
    res = kv_span(M, cfg, Mv.dim)
    stats.update(mode="sampling", rounds=res.rounds, pairs=res.examined, contributing=len(res.pairs))
    dims = _zad_dims(M, Mv, res.span.dim)
    if res.span == Mv:
        return ZadReport(ref, M, dims, ZAD_CERTIFIED, res.pairs, None, stats, cfg.seed)
    if not res.stabilized:
        return ZadReport(ref, M, dims, UNDECIDED, None, None, stats, cfg.seed)
    wit = extract_witness(M, res.span, Mv, _fresh_module_pairs(M, cfg), cfg.validation)
    stats["validation"] = wit.validated
    ok = not wit.failed and wit.validated >= cfg.validation
    return ZadReport(ref, M, dims, NOT_ZAD_PROBABILISTIC if ok else UNDECIDED, None, wit, stats, cfg.seed)


# -- replay ----------------------------------------------------------------

def verify_certificate(L: LieAlgebra, cert: Sequence) -> Verification:
    """Every pair commutes and the wedges span M'."""
    w = wedge_index(L.n)
    F = L.field
    S = Subspace(F, w.dim)
    for k, pair in enumerate(cert):
        x, y = (pair.x, pair.y) if isinstance(pair, CommutingPair) else pair
        if len(x) != L.n or len(y) != L.n:
            return Verification(False, f"pair {k} has the wrong length")
        if not is_zero(L.bracket(x, y)):
            return Verification(False, f"pair {k} does not commute")
        S.insert(wedge_coords(x, y, w, F))
    Mp = mprime(L)
    if S != Mp:
        return Verification(False, f"wedges span dimension {S.dim}, M' has dimension {Mp.dim}")
    return Verification(True, f"{len(cert)} pairs span M' (dimension {Mp.dim})")


def verify_zad_certificate(M: LieModule, cert: Sequence) -> Verification:
    F = M.field
    S = Subspace(F, M.parent.n * M.dim)
    for k, pair in enumerate(cert):
        x, v = (pair.x, pair.v) if isinstance(pair, ModulePair) else pair
        if len(x) != M.parent.n or len(v) != M.dim:
            return Verification(False, f"pair {k} has the wrong length")
        if not is_zero(M.act(x, v)):
            return Verification(False, f"pair {k}: x v != 0")
        S.insert(M.tensor_coords(x, v))
    Mv = mv_space(M)
    if S != Mv:
        return Verification(False, f"tensors span dimension {S.dim}, M_V has dimension {Mv.dim}")
    return Verification(True, f"{len(cert)} pairs span M_V (dimension {Mv.dim})")


def verify_witness(obj, wit: Witness, exhaustive: bool = False, cap: int | None = None) -> Verification:
    """Structural replay of a witness; optionally re-scan K' over GF(p)."""
    F = obj.field
    if dot(F, wit.xi, wit.mu) == 0 or dot(F, wit.xi, wit.mu) != F(wit.value):
        return Verification(False, "xi(mu) is zero or does not match the recorded value")
    if isinstance(obj, LieAlgebra):
        w = wedge_index(obj.n)
        total = F.zeros(obj.n)
        mu = F.zeros(w.dim)
        for x, y in wit.terms:
            total = [F.reduce(a + b) for a, b in zip(total, obj.bracket(x, y))]
            mu = [F.reduce(a + b) for a, b in zip(mu, wedge_coords(x, y, w, F))]
    else:
        total = F.zeros(obj.dim)
        mu = F.zeros(obj.parent.n * obj.dim)
        for x, v in wit.terms:
            total = [F.reduce(a + b) for a, b in zip(total, obj.act(x, v))]
            mu = [F.reduce(a + b) for a, b in zip(mu, obj.tensor_coords(x, v))]
    if not is_zero(total):
        return Verification(False, "terms of mu do not bracket to zero")
    if mu != [F(a) for a in wit.mu]:
        return Verification(False, "terms do not sum to mu")
    if exhaustive:
        if F.char == 0:
            return Verification(False, "exhaustive replay needs a prime field")
        bad = _first_violation(obj, wit.xi, cap or SamplerConfig().cap)
        if bad is not None:
            return Verification(False, f"xi does not vanish on the wedge of {bad}")
    return Verification(True, "witness replays")


def _first_violation(obj, xi, cap):
    """Scan every projective x for a pair on which xi is nonzero."""
    F = obj.field
    if isinstance(obj, LieAlgebra):
        p, n = F.char, obj.n
        check_budget(p, n, cap)
        if n < 2:
            return None
        w = wedge_index(n)
        g = _gfscan.scan_wedges(
            structure_tensor(obj), p, _inverse_table(p), np.array([xi], dtype=np.int64),
            np.array([i for i, _ in w.pairs], dtype=np.int64), np.array([j for _, j in w.pairs], dtype=np.int64),
            _gfscan.point_offsets(n, p), 0, projective_count(p, n),
        )
        return None if g < 0 else _gfscan.decode_point(int(g), n, p)
    for x in projective_points(F, obj.parent.n, cap):
        for v in kernel_of_action(obj, x).basis:
            if dot(F, xi, obj.tensor_coords(x, v)) != 0:
                return x
    return None


# -- proportional commuting and preservers -----------------------------------

def _independent(F, x, y) -> bool:
    n = len(x)
    return not is_zero(wedge_coords(x, y, wedge_index(n), F))


def is_proportional_commuting(L: LieAlgebra, mode: str = "exhaustive", cfg: SamplerConfig | None = None):
    """Whether commuting elements are always linearly dependent."""
    cfg = cfg or SamplerConfig()
    F = L.field
    if mode == "exhaustive":
        x = first_large_centralizer(L, cfg.cap)
        if x is None:
            return ProportionalResult(TRUE_EXHAUSTIVE, None)
        y = next(b for b in centralizer(L, x).basis if _independent(F, x, b))
        return ProportionalResult(FALSE, CommutingPair.checked(L, x, y))
    if mode != "probabilistic":
        raise InputError(f"unknown mode {mode!r}")
    for r, pair in generate_pairs(L, cfg):
        if r > cfg.rounds:
            break
        if _independent(F, pair.x, pair.y):
            return ProportionalResult(FALSE, pair)
    return ProportionalResult(TRUE_PROBABILISTIC, None)


def check_comm_preserving(phi: Matrix, L: LieAlgebra, L2: LieAlgebra, cfg: SamplerConfig | None = None):
    """Sample commuting pairs of L and test that phi keeps them commuting in L2."""
    cfg = cfg or SamplerConfig()
    if phi.shape != (L2.n, L.n):
        raise DimensionError(f"phi has shape {phi.shape}, expected {(L2.n, L.n)}")
    checked = 0
    for r, pair in generate_pairs(L, cfg):
        if r > cfg.rounds:
            break
        checked += 1
        if not is_zero(L2.bracket(phi.apply(pair.x), phi.apply(pair.y))):
            return PreserveResult(VIOLATION, pair, checked)
    return PreserveResult(PRESERVES_SAMPLED, None, checked)
