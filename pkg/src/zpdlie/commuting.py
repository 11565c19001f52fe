"""Verified commuting pairs.

Pairs come from deterministic strategies (basis vectors, line sweeps,
structured polynomial families) followed by seeded random rounds.  Every
pair is re-checked exactly when it is built; a failure raises instead of
being skipped.  Over GF(p) the span of all commuting wedges can also be
computed exactly by scanning every projective point.
"""

from __future__ import annotations

import itertools
import random
from collections import namedtuple
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from . import _gfscan
from .errors import BudgetExceededError, FamilyInvalidError, PairVerificationError, UnsupportedFieldError
from .exactla import Field, Subspace, is_zero, kernel_basis, solve, Matrix, wedge_coords, wedge_index
from .liealg import LieAlgebra, ad_matrix, derived_subalgebra
from .repmod import LieModule, annihilator_of_vector, kernel_of_action

DEFAULT_CAP = 10**7
DEFAULT_GRID = (0, 1, -1, 2, -2, 3, -3, 4, -4)

ExhaustiveSpan = namedtuple("ExhaustiveSpan", "span pairs scanned total")


@dataclass(frozen=True)
class CommutingPair:
    x: tuple
    y: tuple

    @classmethod
    def checked(cls, L: LieAlgebra, x: Sequence, y: Sequence) -> "CommutingPair":
        if not is_zero(L.bracket(x, y)):
            raise PairVerificationError(f"pair does not commute: {list(x)}, {list(y)}")
        return cls(tuple(x), tuple(y))


@dataclass(frozen=True)
class ModulePair:
    """x in L and v in V with x v = 0."""

    x: tuple
    v: tuple

    @classmethod
    def checked(cls, M: LieModule, x: Sequence, v: Sequence) -> "ModulePair":
        if not is_zero(M.act(x, v)):
            raise PairVerificationError(f"x v != 0 for x={list(x)}, v={list(v)}")
        return cls(tuple(x), tuple(v))


@dataclass
class SamplerConfig:
    strategies: tuple = ("basis", "line", "family", "random")
    seed: int = 0
    rounds: int = 400
    box: int = 3
    grid: tuple = DEFAULT_GRID
    window: int = 8
    validation: int = 200
    families: bool = True
    exhaustive: bool = False
    cap: int = DEFAULT_CAP

    def uses(self, strategy: str) -> bool:
        if strategy == "family" and not self.families:
            return False
        return strategy in self.strategies


# -- polynomial families ---------------------------------------------------

def _poly_eval(F: Field, coeffs: Sequence, lam):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * lam + c
    return F.reduce(acc)


def polyvec(F: Field, n: int, entries: dict) -> list[list]:
    """Vector of polynomials from ``{coordinate: [c0, c1, ...]}``."""
    out = [[] for _ in range(n)]
    for k, coeffs in entries.items():
        out[k] = [F(c) for c in coeffs]
    return out


@dataclass
class PairFamily:
    """x(lam), y(lam) with [x, y] = 0 (or x y = 0 for module families) identically."""

    name: str
    x: list
    y: list
    kind: str = "algebra"
    param: str = "lam"

    @property
    def degree(self) -> int:
        return max([len(c) - 1 for c in self.x + self.y] + [0])

    def at(self, F: Field, lam) -> tuple[list, list]:
        lam = F(lam)
        return [_poly_eval(F, c, lam) for c in self.x], [_poly_eval(F, c, lam) for c in self.y]

    def certification_points(self, F: Field) -> list:
        need = 2 * self.degree + 1
        pts = []
        for a in itertools.count():
            for cand in ((a,) if a == 0 else (a, -a)):
                v = F(cand)
                if v not in pts:
                    pts.append(v)
            if len(pts) >= need or (F.char and len(pts) >= F.char):
                break
        return pts[:need]

    def certify(self, target) -> None:
        """Exact check at 2D+1 points; over a small GF(p), at every element."""
        F = target.field
        for lam in self.certification_points(F):
            x, y = self.at(F, lam)
            res = target.bracket(x, y) if self.kind == "algebra" else target.act(x, y)
            if not is_zero(res):
                raise FamilyInvalidError(f"family {self.name} fails at lam={F.format(lam)}")


def _vm_families(m: int, F: Field) -> list[PairFamily]:
    """The sl2 families on V(m) (basis E, H, F of sl2)."""
    E, H, Fi = 0, 1, 2
    d = m + 1
    fams = []
    # nilpotent F + lam H - lam^2 E with v = sum m!/i! lam^(m-i) v_i
    x = polyvec(F, 3, {Fi: [1], H: [0, 1], E: [0, 0, -1]})
    v = polyvec(F, d, {i: [0] * (m - i) + [factorial(m) // factorial(i)] for i in range(d)})
    fams.append(PairFamily(f"vm{m}:nilpotent", x, v, "module"))
    if m % 2 == 0 and m > 0:
        k = m // 2
        # H + 2 lam F, v = sum k!/i! lam^i v_(k+i)
        x = polyvec(F, 3, {H: [1], Fi: [0, 2]})
        v = polyvec(F, d, {k + i: [0] * i + [factorial(k) // factorial(i)] for i in range(k + 1)})
        fams.append(PairFamily(f"vm{m}:lower", x, v, "module"))
        # H - 2 lam E, v = sum (k+i)!/(i!(k-i)!) lam^i v_(k-i)
        x = polyvec(F, 3, {H: [1], E: [0, -2]})
        v = polyvec(
            F, d, {k - i: [0] * i + [factorial(k + i) // (factorial(i) * factorial(k - i))] for i in range(k + 1)}
        )
        fams.append(PairFamily(f"vm{m}:upper", x, v, "module"))
    return fams


def _coords_in(F: Field, basis: Sequence[Sequence], v: Sequence):
    colmat = Matrix(F, [[b[k] for b in basis] for k in range(len(v))], len(basis))
    return solve(colmat, v)


def module_families(M: LieModule) -> list[PairFamily]:
    origin = M.origin or ()
    F = M.field
    if not origin:
        return []
    if origin[0] == "vm":
        return _vm_families(origin[1], F)
    if origin[0] == "restrict":
        parent, basis = origin[1], origin[3]
        out = []
        for fam in module_families(parent):
            deg = max(len(c) for c in fam.x)
            newx = [[F.zero] * deg for _ in basis]
            ok = True
            for t in range(deg):
                vec = [c[t] if t < len(c) else F.zero for c in fam.x]
                coords = _coords_in(F, basis, vec)
                if coords is None:
                    ok = False
                    break
                for a, c in enumerate(coords):
                    newx[a][t] = c
            if ok:
                out.append(PairFamily(fam.name + ":restricted", newx, fam.y, "module"))
        return out
    if origin[0] == "age1-module":
        # H - 2 lam E kills nothing here; E kills u
        return []
    if origin[0] == "direct_sum":
        M1, M2 = origin[1], origin[2]
        out = []
        for fam in module_families(M1):
            out.append(PairFamily(fam.name + ":1", fam.x, fam.y + [[] for _ in range(M2.dim)], "module"))
        for fam in module_families(M2):
            out.append(PairFamily(fam.name + ":2", fam.x, [[] for _ in range(M1.dim)] + fam.y, "module"))
        return out
    return []


def builtin_families(L: LieAlgebra) -> list[PairFamily]:
    """Structured commuting families chosen from how L was constructed."""
    origin = L.origin or ()
    F = L.field
    if not origin:
        return []
    kind = origin[0]
    n = L.n
    if kind == "heisenberg":
        k = origin[1]
        out = []
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                # [x_i + lam x_j, lam x_-i - x_-j] = lam c - lam c = 0
                x = polyvec(F, n, {i: [1], j: [0, 1]})
                y = polyvec(F, n, {k + i: [0, 1], k + j: [-1]})
                out.append(PairFamily(f"heisenberg:{i},{j}", x, y))
        return out
    if kind == "semidirect":
        base, M = origin[1], origin[2]
        nb, d = base.n, M.dim
        out = []
        for fam in builtin_families(base):
            out.append(PairFamily(fam.name + ":base", fam.x + [[]] * d, fam.y + [[]] * d))
        for fam in module_families(M):
            x = fam.x + [[]] * d
            y = [[]] * nb + fam.y
            out.append(PairFamily(fam.name + ":lifted", x, y))
        return out
    if kind == "direct_sum":
        L1, L2 = origin[1], origin[2]
        out = []
        for fam in builtin_families(L1):
            out.append(PairFamily(fam.name + ":1", fam.x + [[]] * L2.n, fam.y + [[]] * L2.n))
        for fam in builtin_families(L2):
            out.append(PairFamily(fam.name + ":2", [[]] * L1.n + fam.x, [[]] * L1.n + fam.y))
        return out
    if kind == "tensor":
        base, A = origin[1], origin[2]
        d = A.d
        out = []
        one = A.unit_index
        for i in range(base.n):
            for j in range(base.n):
                for a1 in range(d):
                    for a2 in range(d):
                        # (x(x)1 + lam y(x)a2) and (x(x)a1 + lam y(x)a1a2)
                        x = {i * d + one: [1]}
                        x[j * d + a2] = _padd(x.get(j * d + a2, []), [0, 1])
                        y = {i * d + a1: [1]}
                        for b, c in enumerate(A.basis_product(a1, a2)):
                            if c:
                                y[j * d + b] = _padd(y.get(j * d + b, []), [0, c])
                        out.append(PairFamily(f"shear:{i},{j},{a1},{a2}", polyvec(F, n, x), polyvec(F, n, y)))
        for fam in builtin_families(base):
            for a1 in range(d):
                for a2 in range(d):
                    x = [[] for _ in range(n)]
                    y = [[] for _ in range(n)]
                    for i in range(base.n):
                        x[i * d + a1] = fam.x[i]
                        y[i * d + a2] = fam.y[i]
                    out.append(PairFamily(f"{fam.name}:{a1},{a2}", x, y))
        return out
    return []


def _padd(a: list, b: list) -> list:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _eval_points(F: Field, grid, fam: PairFamily) -> list:
    pts = []
    for lam in list(grid) + fam.certification_points(F):
        v = F(lam)
        if v not in pts:
            pts.append(v)
    return pts


# -- pair streams ----------------------------------------------------------

def centralizer(L: LieAlgebra, x: Sequence) -> Subspace:
    return kernel_basis(ad_matrix(L, x))


def random_vector(F: Field, n: int, rng: random.Random, box: int) -> list:
    if F.char == 0:
        return [F(rng.randint(-box, box)) for _ in range(n)]
    return [rng.randrange(F.char) for _ in range(n)]


def _random_nonzero(F, n, rng, box):
    while True:
        v = random_vector(F, n, rng, box)
        if not is_zero(v):
            return v


def random_scalar(F: Field, rng: random.Random, box: int):
    if F.char == 0:
        return F(rng.randint(-4 * box, 4 * box))
    return rng.randrange(F.char)


def _with_centralizer(L, x):
    for y in centralizer(L, x).basis:
        yield CommutingPair.checked(L, x, y)


def _structured_random(L: LieAlgebra, rng, box) -> Iterator[CommutingPair]:
    """Random pairs of the special shapes that a construction guarantees."""
    origin = L.origin or ()
    F = L.field
    if not origin:
        return
    if origin[0] == "semidirect":
        base, M = origin[1], origin[2]
        nb = base.n
        for mp in _module_random_round(M, rng, box):
            yield CommutingPair.checked(L, list(mp.x) + [F.zero] * M.dim, [F.zero] * nb + list(mp.v))
    elif origin[0] == "tensor":
        base, A = origin[1], origin[2]
        d = A.d
        x = random_vector(F, base.n, rng, box)
        y = random_vector(F, base.n, rng, box)
        a1 = random_vector(F, d, rng, box)
        a2 = random_vector(F, d, rng, box)
        a12 = A.product(a1, a2)
        one = A.unit(A.unit_index)

        def tens(u, a):
            return [F.reduce(ui * aj) for ui in u for aj in a]

        X = [F.reduce(s + t) for s, t in zip(tens(x, one), tens(y, a2))]
        Y = [F.reduce(s + t) for s, t in zip(tens(x, a1), tens(y, a12))]
        yield CommutingPair.checked(L, X, Y)


def generate_pairs(L: LieAlgebra, cfg: SamplerConfig, rng: random.Random | None = None):
    """Yield ``(round, CommutingPair)``; round 0 is the deterministic phase.

    Random rounds continue indefinitely; callers decide when to stop.
    """
    rng = rng if rng is not None else random.Random(cfg.seed)
    F = L.field
    n = L.n
    fams = builtin_families(L) if cfg.uses("family") else []
    for fam in fams:
        fam.certify(L)
    if cfg.uses("basis"):
        for i in range(n):
            yield from ((0, p) for p in _with_centralizer(L, L.unit(i)))
    if cfg.uses("line"):
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for lam in cfg.grid:
                    lam = F(lam)
                    if lam == 0:
                        continue
                    x = L.unit(i)
                    x[j] = lam
                    yield from ((0, p) for p in _with_centralizer(L, x))
    for fam in fams:
        for lam in _eval_points(F, cfg.grid, fam):
            x, y = fam.at(F, lam)
            yield 0, CommutingPair.checked(L, x, y)
    if not cfg.uses("random") or n == 0:
        return
    for r in itertools.count(1):
        x = _random_nonzero(F, n, rng, cfg.box)
        for p in _with_centralizer(L, x):
            yield r, p
        for p in _structured_random(L, rng, cfg.box):
            yield r, p
        for fam in fams:
            x, y = fam.at(F, random_scalar(F, rng, cfg.box))
            yield r, CommutingPair.checked(L, x, y)


def _module_random_round(M: LieModule, rng, box) -> Iterator[ModulePair]:
    F = M.field
    L = M.parent
    if L.n == 0 or M.dim == 0:
        return
    x = _random_nonzero(F, L.n, rng, box)
    for v in kernel_of_action(M, x).basis:
        yield ModulePair.checked(M, x, v)
    v = _random_nonzero(F, M.dim, rng, box)
    for x in annihilator_of_vector(M, v).basis:
        yield ModulePair.checked(M, x, v)


def module_pairs(M: LieModule, cfg: SamplerConfig, rng: random.Random | None = None):
    """Yield ``(round, ModulePair)`` with x v = 0; round 0 is deterministic."""
    rng = rng if rng is not None else random.Random(cfg.seed)
    F = M.field
    L = M.parent
    fams = module_families(M) if cfg.uses("family") else []
    for fam in fams:
        fam.certify(M)
    if cfg.uses("basis"):
        for i in range(L.n):
            for v in kernel_of_action(M, L.unit(i)).basis:
                yield 0, ModulePair.checked(M, L.unit(i), v)
        for a in range(M.dim):
            for x in annihilator_of_vector(M, M.unit(a)).basis:
                yield 0, ModulePair.checked(M, x, M.unit(a))
    if cfg.uses("line"):
        for i in range(L.n):
            for j in range(L.n):
                if i == j:
                    continue
                for lam in cfg.grid:
                    lam = F(lam)
                    if lam == 0:
                        continue
                    x = L.unit(i)
                    x[j] = lam
                    for v in kernel_of_action(M, x).basis:
                        yield 0, ModulePair.checked(M, x, v)
    for fam in fams:
        for lam in _eval_points(F, cfg.grid, fam):
            x, v = fam.at(F, lam)
            yield 0, ModulePair.checked(M, x, v)
    if not cfg.uses("random"):
        return
    for r in itertools.count(1):
        for p in _module_random_round(M, rng, cfg.box):
            yield r, p
        for fam in fams:
            x, v = fam.at(F, random_scalar(F, rng, cfg.box))
            yield r, ModulePair.checked(M, x, v)


# -- exhaustive enumeration over GF(p) ---------------------------------------

def _require_prime_field(F: Field) -> int:
    if F.char == 0:
        raise UnsupportedFieldError("exhaustive enumeration needs a prime field")
    return F.char


def projective_count(p: int, n: int) -> int:
    return (p**n - 1) // (p - 1) if n else 0


def check_budget(p: int, n: int, cap: int) -> None:
    if n and p ** (n - 1) > cap:
        raise BudgetExceededError(f"enumeration of {p}^{n - 1} points exceeds the cap {cap}")


def projective_points(F: Field, n: int, cap: int = DEFAULT_CAP) -> Iterator[list]:
    """One representative per line, first nonzero coordinate 1."""
    p = _require_prime_field(F)
    check_budget(p, n, cap)
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield [0] * lead + [1] + list(tail)


def structure_tensor(L: LieAlgebra) -> np.ndarray:
    C = np.zeros((L.n, L.n, L.n), dtype=np.int64)
    for i in range(L.n):
        for j in range(L.n):
            for k, c in L._sparse[i][j]:
                C[i, j, k] = int(c)
    return C


def _inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def _ann_array(S: Subspace, w) -> np.ndarray:
    A = S.annihilator()
    if A.dim == 0:
        return np.zeros((0, w.dim), dtype=np.int64)
    return np.array(A.basis, dtype=np.int64)


def exhaustive_kprime_gfp(L: LieAlgebra, cap: int = DEFAULT_CAP, target: int | None = None) -> ExhaustiveSpan:
    """span{x ^ y : [x, y] = 0} exactly, by scanning every projective point.

    The span only grows at points found by the compiled scan; those points
    are handled with exact arithmetic here and the scan resumes after them.
    Stops early once ``target`` (default dim M') is reached, since the span
    can never exceed M'.
    """
    p = _require_prime_field(L.field)
    n = L.n
    check_budget(p, n, cap)
    w = wedge_index(n)
    if target is None:
        target = w.dim - derived_subalgebra(L).dim
    S = Subspace(L.field, w.dim)
    pairs: list[CommutingPair] = []
    total = projective_count(p, n)
    if target == 0 or n < 2:
        return ExhaustiveSpan(S, pairs, 0, total)
    C = structure_tensor(L)
    inv = _inverse_table(p)
    offs = _gfscan.point_offsets(n, p)
    pi = np.array([i for i, _ in w.pairs], dtype=np.int64)
    pj = np.array([j for _, j in w.pairs], dtype=np.int64)
    g = 0
    while g < total:
        found = _gfscan.scan_wedges(C, p, inv, _ann_array(S, w), pi, pj, offs, g, total)
        if found < 0:
            g = total
            break
        x = _gfscan.decode_point(int(found), n, p)
        for pair in _with_centralizer(L, x):
            if S.insert(wedge_coords(pair.x, pair.y, w, L.field)):
                pairs.append(pair)
        g = int(found) + 1
        if S.dim >= target:
            break
    return ExhaustiveSpan(S, pairs, g, total)


def exhaustive_kv_gfp(M: LieModule, cap: int = DEFAULT_CAP, target: int | None = None) -> ExhaustiveSpan:
    """span{x (x) v : x v = 0} exactly, scanning projective x in L."""
    F = M.field
    _require_prime_field(F)
    L = M.parent
    N = L.n * M.dim
    S = Subspace(F, N)
    pairs: list[ModulePair] = []
    total = projective_count(F.char, L.n)
    scanned = 0
    for x in projective_points(F, L.n, cap):
        scanned += 1
        for v in kernel_of_action(M, x).basis:
            if S.insert(M.tensor_coords(x, v)):
                pairs.append(ModulePair.checked(M, x, v))
        if target is not None and S.dim >= target:
            break
    return ExhaustiveSpan(S, pairs, scanned, total)


def first_large_centralizer(L: LieAlgebra, cap: int = DEFAULT_CAP):
    """First projective x (scan order) whose centralizer exceeds span{x}, else None."""
    p = _require_prime_field(L.field)
    n = L.n
    check_budget(p, n, cap)
    if n < 2:
        return None
    g = _gfscan.scan_large_centralizer(
        structure_tensor(L), p, _inverse_table(p), _gfscan.point_offsets(n, p), 0, projective_count(p, n)
    )
    return None if g < 0 else _gfscan.decode_point(int(g), n, p)
