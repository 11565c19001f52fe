"""Builtin algebras and modules, with the verdicts known for them.

Every constructor takes an optional ``field`` (default Q) and returns a
validated object.  :func:`from_ref` parses the string references used on
the command line, e.g. ``"galilei:3"`` or ``"current:sl2:2"``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, UnknownBuiltinError, UnsupportedFieldError
from .exactla import QQ, Field, Matrix
from .liealg import CommAlgebra, LieAlgebra, abelian, semidirect, tensor_with_comm, validated
from .repmod import LieModule, restrict_module, validated_module

# sl2 basis order (E, H, F); Borel basis order (H, E)
E, H, F_ = 0, 1, 2


def sl2(field: Field = QQ) -> LieAlgebra:
    """[H,E] = 2E, [H,F] = -2F, [E,F] = H on the basis (E, H, F)."""
    br = {(E, H): {E: -2}, (E, F_): {H: 1}, (H, F_): {F_: -2}}
    return validated(LieAlgebra(field, 3, br, ["E", "H", "F"], ("sl2",), "sl2"))


def heisenberg(k: int, field: Field = QQ) -> LieAlgebra:
    """Basis (c, x_1..x_k, x_-1..x_-k) with [x_i, x_-i] = c."""
    if k < 1:
        raise InputError("heisenberg(k) needs k >= 1")
    br = {(i, k + i): {0: 1} for i in range(1, k + 1)}
    names = ["c"] + [f"x{i}" for i in range(1, k + 1)] + [f"x-{i}" for i in range(1, k + 1)]
    return validated(LieAlgebra(field, 2 * k + 1, br, names, ("heisenberg", k), f"heisenberg:{k}"))


def borel(field: Field = QQ) -> LieAlgebra:
    """Two-dimensional nonabelian algebra, basis (H, E) with [H, E] = 2E."""
    return validated(LieAlgebra(field, 2, {(0, 1): {1: 2}}, ["H", "E"], ("borel",), "borel"))


def vm_module(m: int, field: Field = QQ) -> LieModule:
    """The (m+1)-dimensional sl2-module.

    F v_i = v_{i+1}, E v_i = i(m+1-i) v_{i-1}, H v_i = (m-2i) v_i, with
    v_i = 0 outside 0..m.
    """
    if m < 0:
        raise InputError("vm(m) needs m >= 0")
    d = m + 1
    e = [[0] * d for _ in range(d)]
    h = [[0] * d for _ in range(d)]
    f = [[0] * d for _ in range(d)]
    for i in range(d):
        h[i][i] = m - 2 * i
        if i >= 1:
            e[i - 1][i] = i * (m + 1 - i)
        if i + 1 < d:
            f[i + 1][i] = 1
    L = sl2(field)
    rho = [Matrix.from_values(field, e, d), Matrix.from_values(field, h, d), Matrix.from_values(field, f, d)]
    names = [f"v{i}" for i in range(d)]
    return validated_module(LieModule(L, d, rho, names, ("vm", m), f"vm:{m}"))


def galilei(m: int, field: Field = QQ) -> LieAlgebra:
    """sl2 |x V(m), dimension m + 4."""
    M = vm_module(m, field)
    G = semidirect(M.parent, M)
    G.tag = f"galilei:{m}"
    return G


def bm_module(m: int, field: Field = QQ) -> LieModule:
    """V(m) restricted to the Borel subalgebra span{H, E}."""
    V = vm_module(m, field)
    R = restrict_module(V, [field.unit(3, H), field.unit(3, E)])
    b = borel(field)
    return validated_module(LieModule(b, R.dim, R.rho, R.names, R.origin, f"bm-module:{m}"))


def bm_algebra(m: int, field: Field = QQ) -> LieAlgebra:
    """b |x V(m), dimension m + 3."""
    M = bm_module(m, field)
    G = semidirect(M.parent, M)
    G.tag = f"bm:{m}"
    return G


def age1_module(field: Field = QQ) -> LieModule:
    """Two-dimensional Borel module on (u, v): Hu = u, Hv = -v, Ev = u, Eu = 0."""
    b = borel(field)
    rho_h = Matrix.from_values(field, [[1, 0], [0, -1]])
    rho_e = Matrix.from_values(field, [[0, 1], [0, 0]])
    return validated_module(LieModule(b, 2, [rho_h, rho_e], ["u", "v"], ("age1-module",), "age1-module"))


def age1(field: Field = QQ) -> LieAlgebra:
    """Centerless aging algebra on (H, E, u, v)."""
    br = {(0, 1): {1: 2}, (0, 2): {2: 1}, (0, 3): {3: -1}, (1, 3): {2: 1}}
    M = age1_module(field)
    return validated(LieAlgebra(field, 4, br, ["H", "E", "u", "v"], ("semidirect", M.parent, M), "age1"))


def dim3_family(case: int, params=(), field: Field = QQ) -> LieAlgebra:
    """Three-dimensional normal forms.

    case 1: no params gives sl2; params (a, b) give [e1,e2] = e3,
        [e2,e3] = a e1, [e3,e1] = b e2 (a, b nonzero).
    case 2: params (a, b) on (x, y, z): [x,y] = 0, [z,x] = y, [z,y] = a x + b y.
    case 3: params (a, b, c) on (u, v, w): [u,v] = a w, [u,w] = b w, [v,w] = c w.
    """
    params = tuple(field(p) for p in params)
    tag = "dim3:" + ":".join([str(case)] + ([",".join(field.format(p) for p in params)] if params else []))
    if case == 1:
        if not params:
            L = sl2(field)
            return LieAlgebra(field, 3, L.structure_constants(), L.names, ("sl2",), tag)
        if len(params) != 2 or 0 in params:
            raise InputError("dim3 case 1 takes two nonzero params")
        a, b = params
        br = {(0, 1): {2: 1}, (1, 2): {0: a}, (0, 2): {1: field.reduce(-b)}}
        names = ["e1", "e2", "e3"]
    elif case == 2:
        if len(params) != 2:
            raise InputError("dim3 case 2 takes params (a, b)")
        a, b = params
        br = {(0, 2): {1: -1}, (1, 2): {0: field.reduce(-a), 1: field.reduce(-b)}}
        names = ["x", "y", "z"]
    elif case == 3:
        if len(params) != 3:
            raise InputError("dim3 case 3 takes params (a, b, c)")
        a, b, c = params
        br = {(0, 1): {2: a}, (0, 2): {2: b}, (1, 2): {2: c}}
        names = ["u", "v", "w"]
    else:
        raise InputError(f"dim3 case must be 1, 2 or 3, got {case}")
    return validated(LieAlgebra(field, 3, br, names, ("dim3", case, params), tag))


def truncated_polynomials(N: int, field: Field = QQ) -> CommAlgebra:
    """F[t]/(t^N) on the basis 1, t, ..., t^(N-1)."""
    if N < 1:
        raise InputError("truncation order must be >= 1")
    mult = {}
    for i in range(N):
        for j in range(i, N):
            vec = [0] * N
            if i + j < N:
                vec[i + j] = 1
            mult[(i, j)] = vec
    names = ["1"] + [f"t^{i}" if i > 1 else "t" for i in range(1, N)]
    return CommAlgebra(field, N, 0, mult, names)


def truncated_current(L: LieAlgebra, N: int) -> LieAlgebra:
    """L (x) F[t]/(t^N)."""
    G = tensor_with_comm(L, truncated_polynomials(N, L.field))
    G.tag = f"current:{L.tag}:{N}" if L.tag else None
    return G


def truncated_quantum_plane(q, N: int, field: Field = QQ) -> LieAlgebra:
    """Span of t^(a,b), a + b <= N, with [t^m, t^n] = (q^(m2 n1) - q^(n2 m1)) t^(m+n).

    Brackets landing in total degree above N are dropped; that span is an
    ideal because brackets add exponents.
    """
    if field.char != 0:
        raise UnsupportedFieldError("every nonzero element of a prime field is a root of unity")
    q = Fraction(q)
    if q in (0, 1, -1):
        raise InputError("q must avoid 0 and +-1")
    if N < 1:
        raise InputError("truncation degree must be >= 1")
    mons = [(d - b, b) for d in range(N + 1) for b in range(d + 1)]
    index = {m: i for i, m in enumerate(mons)}
    br = {}
    for i, m in enumerate(mons):
        for j in range(i + 1, len(mons)):
            n = mons[j]
            s = (m[0] + n[0], m[1] + n[1])
            if s not in index:
                continue
            c = q ** (m[1] * n[0]) - q ** (n[1] * m[0])
            if c != 0:
                br[(i, j)] = {index[s]: c}
    names = [f"t({a},{b})" for a, b in mons]
    return validated(LieAlgebra(field, len(mons), br, names, ("qplane", q, N), f"qplane:{q}:{N}"))


# -- references and expectations -------------------------------------------

BUILTIN_REFS = [
    ("sl2", "sl2 on (E, H, F)"),
    ("borel", "2-dim nonabelian algebra (H, E), [H,E] = 2E"),
    ("abelian:n", "n-dim abelian algebra"),
    ("heisenberg:k", "Heisenberg algebra of dimension 2k+1"),
    ("vm:m", "(m+1)-dim simple sl2-module (module)"),
    ("bm-module:m", "V(m) restricted to the Borel subalgebra (module)"),
    ("galilei:m", "sl2 |x V(m)"),
    ("bm:m", "b |x V(m)"),
    ("age1", "centerless aging algebra age(1)"),
    ("dim3:case[:params]", "3-dim normal forms, e.g. dim3:3:1,0,0"),
    ("current:<ref>:N", "truncated current algebra L (x) F[t]/(t^N)"),
    ("qplane:q:N", "truncated quantum plane (exploratory, no expected verdict)"),
]


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UnknownBuiltinError(f"{what} must be an integer, got {text!r}") from None


def from_ref(ref: str, field: Field = QQ):
    """Build the builtin named by ``ref`` (a LieAlgebra or LieModule)."""
    parts = ref.strip().split(":")
    head = parts[0]
    if head == "sl2" and len(parts) == 1:
        return sl2(field)
    if head == "borel" and len(parts) == 1:
        return borel(field)
    if head == "age1" and len(parts) == 1:
        return age1(field)
    if head == "abelian" and len(parts) == 2:
        return abelian(_int(parts[1], "dimension"), field)
    if head == "heisenberg" and len(parts) == 2:
        return heisenberg(_int(parts[1], "k"), field)
    if head == "vm" and len(parts) == 2:
        return vm_module(_int(parts[1], "m"), field)
    if head == "bm-module" and len(parts) == 2:
        return bm_module(_int(parts[1], "m"), field)
    if head == "galilei" and len(parts) == 2:
        return galilei(_int(parts[1], "m"), field)
    if head == "bm" and len(parts) == 2:
        return bm_algebra(_int(parts[1], "m"), field)
    if head == "dim3" and len(parts) in (2, 3):
        params = [p for p in parts[2].split(",") if p] if len(parts) == 3 else []
        return dim3_family(_int(parts[1], "case"), params, field)
    if head == "current" and len(parts) >= 3:
        inner = from_ref(":".join(parts[1:-1]), field)
        if not isinstance(inner, LieAlgebra):
            raise UnknownBuiltinError("current:<ref>:N needs an algebra reference")
        return truncated_current(inner, _int(parts[-1], "N"))
    if head == "qplane" and len(parts) == 3:
        return truncated_quantum_plane(Fraction(parts[1]), _int(parts[2], "N"), field)
    raise UnknownBuiltinError(f"unknown builtin {ref!r}")


def expected_verdict(ref: str) -> bool | None:
    """True for zpd/zad, False for not, None when no verdict is known."""
    parts = ref.strip().split(":")
    head = parts[0]
    if head in ("sl2", "borel", "abelian", "heisenberg", "dim3"):
        return True
    if head == "age1":
        return False
    if head in ("vm", "galilei"):
        m = int(parts[1])
        return m == 1 or m % 2 == 0
    if head in ("bm", "bm-module"):
        return int(parts[1]) == 2
    if head == "current":
        return True if expected_verdict(":".join(parts[1:-1])) else None
    return None
