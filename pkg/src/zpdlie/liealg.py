"""Lie algebras given by structure constants.

Only brackets ``[e_i, e_j]`` with ``i < j`` are stored; the opposite order
is read off by antisymmetry, so antisymmetry never needs checking.  The
Jacobi identity is checked by :func:`validate`, and every constructor in
this package returns an algebra that has passed it.
"""

from __future__ import annotations

from collections import namedtuple
from typing import Mapping, Sequence

from .errors import (
    DimensionError,
    InputError,
    InvalidAlgebraError,
    InvalidModuleError,
    NotAnIdealError,
    NotASubalgebraError,
    UnsupportedFieldError,
)
from .exactla import (
    Field,
    Matrix,
    Subspace,
    WedgeIndex,
    axpy,
    is_zero,
    kernel_basis,
    rank,
    same_field,
    solve,
    wedge_index,
)

JacobiFailure = namedtuple("JacobiFailure", "i j k residual")
H2Dimensions = namedtuple("H2Dimensions", "z2 b2 h2")


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q or GF(p).

    ``brackets`` maps ``(i, j)`` with ``i < j`` to either a dense coefficient
    list or a sparse ``{k: coefficient}`` mapping.  Missing pairs bracket to
    zero.  ``origin`` records how the algebra was built (used to pick
    structured commuting families) and ``tag`` is its builtin reference.
    """

    def __init__(
        self,
        field: Field,
        n: int,
        brackets: Mapping | None = None,
        names: Sequence[str] | None = None,
        origin: tuple | None = None,
        tag: str | None = None,
    ):
        if n < 0:
            raise DimensionError("negative dimension")
        self.field = field
        self.n = n
        self.names = list(names) if names is not None else [f"e{i}" for i in range(n)]
        if len(self.names) != n:
            raise DimensionError("names do not match the dimension")
        self.origin = origin
        self.tag = tag
        zero = field.zero
        self._table = [[None] * n for _ in range(n)]
        self._sparse = [[()] * n for _ in range(n)]
        for (i, j), value in (brackets or {}).items():
            if not (0 <= i < j < n):
                raise InputError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < {n}")
            if isinstance(value, Mapping):
                vec = [zero] * n
                for k, c in value.items():
                    if not 0 <= int(k) < n:
                        raise DimensionError(f"bracket coefficient index {k} out of range")
                    vec[int(k)] = field(c)
            else:
                if len(value) != n:
                    raise DimensionError(f"bracket ({i}, {j}) has {len(value)} coefficients, expected {n}")
                vec = [field(c) for c in value]
            self._table[i][j] = vec
        for i in range(n):
            self._table[i][i] = [zero] * n
            for j in range(i + 1, n):
                if self._table[i][j] is None:
                    self._table[i][j] = [zero] * n
                self._table[j][i] = [field.reduce(-c) for c in self._table[i][j]]
        for i in range(n):
            for j in range(n):
                self._sparse[i][j] = tuple((k, c) for k, c in enumerate(self._table[i][j]) if c != 0)

    # -- basic access ------------------------------------------------------

    def basis_bracket(self, i: int, j: int) -> list:
        return list(self._table[i][j])

    def structure_constants(self) -> dict:
        """Nonzero brackets ``{(i, j): {k: c}}`` for i < j."""
        out = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self._sparse[i][j]:
                    out[(i, j)] = dict(self._sparse[i][j])
        return out

    def bracket(self, x: Sequence, y: Sequence) -> list:
        n = self.n
        if len(x) != n or len(y) != n:
            raise DimensionError(f"bracket of vectors of length {len(x)}, {len(y)} in dimension {n}")
        F = self.field
        acc = [0] * n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self._sparse[i]
            for j, yj in enumerate(y):
                if yj == 0 or not row[j]:
                    continue
                c = xi * yj
                for k, s in row[j]:
                    acc[k] += c * s
        return [F.reduce(a) for a in acc]

    def unit(self, i: int) -> list:
        return self.field.unit(self.n, i)

    def zero(self) -> list:
        return self.field.zeros(self.n)

    def vector(self, coeffs: Mapping) -> list:
        """Vector from ``{basis name or index: coefficient}``."""
        v = self.zero()
        for key, c in coeffs.items():
            idx = self.names.index(key) if isinstance(key, str) else key
            v[idx] = self.field.reduce(v[idx] + self.field(c))
        return v

    def with_field(self, field: Field) -> "LieAlgebra":
        """Same integer/rational structure constants read in another field."""
        br = {k: {kk: field(c) for kk, c in v.items()} for k, v in self.structure_constants().items()}
        return LieAlgebra(field, self.n, br, self.names, None, self.tag)

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.field == other.field
            and self.n == other.n
            and self.structure_constants() == other.structure_constants()
        )

    def __hash__(self):
        return hash((self.field, self.n))

    def __repr__(self):
        label = self.tag or "LieAlgebra"
        return f"<{label} dim={self.n} over {self.field}>"


def validate(L: LieAlgebra) -> list[JacobiFailure]:
    """All basis triples i < j < k on which the Jacobi identity fails."""
    failures = []
    F = L.field
    n = L.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a = L.bracket(L.unit(i), L._table[j][k])
                b = L.bracket(L.unit(j), L._table[k][i])
                c = L.bracket(L.unit(k), L._table[i][j])
                res = [F.reduce(u + v + w) for u, v, w in zip(a, b, c)]
                if not is_zero(res):
                    failures.append(JacobiFailure(i, j, k, res))
    return failures


def validated(L: LieAlgebra) -> LieAlgebra:
    failures = validate(L)
    if failures:
        f = failures[0]
        raise InvalidAlgebraError(
            f"Jacobi identity fails on ({L.names[f.i]}, {L.names[f.j]}, {L.names[f.k]})"
            f" with residual {[L.field.format(a) for a in f.residual]}"
        )
    return L


def ad_matrix(L: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y]."""
    if len(x) != L.n:
        raise DimensionError(f"vector of length {len(x)} in dimension {L.n}")
    cols = [L.bracket(x, L.unit(j)) for j in range(L.n)]
    return Matrix(L.field, [[c[k] for c in cols] for k in range(L.n)], L.n)


def bracket_span(L: LieAlgebra, A: Sequence[Sequence], B: Sequence[Sequence]) -> Subspace:
    """span{[a, b] : a in A, b in B} for generating sets A, B."""
    return Subspace(L.field, L.n, (L.bracket(a, b) for a in A for b in B))


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    return Subspace(L.field, L.n, (L._table[i][j] for i in range(L.n) for j in range(i + 1, L.n)))


def center(L: LieAlgebra) -> Subspace:
    rows = [r for i in range(L.n) for r in ad_matrix(L, L.unit(i)).data]
    if not rows:
        return Subspace(L.field, 0)
    return kernel_basis(Matrix(L.field, rows, L.n))


def bracket_map_matrix(L: LieAlgebra, w: WedgeIndex | None = None) -> Matrix:
    """n x n(n-1)/2 matrix of the map x^y -> [x, y] on wedge coordinates."""
    w = w or wedge_index(L.n)
    if w.n != L.n:
        raise DimensionError("wedge index dimension differs from the algebra")
    cols = [L._table[i][j] for i, j in w.pairs]
    return Matrix(L.field, [[c[k] for c in cols] for k in range(L.n)], w.dim)


def is_subalgebra(L: LieAlgebra, vectors: Sequence[Sequence]) -> bool:
    S = Subspace(L.field, L.n, vectors)
    return all(L.bracket(a, b) in S for a in S.basis for b in S.basis)


def subalgebra(L: LieAlgebra, basis: Sequence[Sequence], names: Sequence[str] | None = None) -> LieAlgebra:
    """The subalgebra spanned by ``basis``, written in that (ordered) basis."""
    F = L.field
    basis = [[F(a) for a in b] for b in basis]
    if Subspace(F, L.n, basis).dim != len(basis):
        raise NotASubalgebraError("subalgebra basis is linearly dependent")
    colmat = Matrix(F, [[b[k] for b in basis] for k in range(L.n)], len(basis))
    brackets = {}
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            coords = solve(colmat, L.bracket(basis[a], basis[b]))
            if coords is None:
                raise NotASubalgebraError("span is not closed under the bracket")
            brackets[(a, b)] = coords
    if names is None:
        names = [f"s{a}" for a in range(len(basis))]
    return validated(LieAlgebra(F, len(basis), brackets, names, ("subalgebra", L, basis)))


# -- commutative algebras and ideals ----------------------------------------

class CommAlgebra:
    """Commutative associative unital algebra by multiplication constants.

    ``mult`` maps ``(i, j)`` with ``i <= j`` to the product ``a_i a_j``.
    """

    def __init__(self, field: Field, d: int, unit: int, mult: Mapping, names=None):
        self.field = field
        self.d = d
        self.unit_index = unit
        self.names = list(names) if names is not None else [f"a{i}" for i in range(d)]
        zero = field.zero
        self._table = [[None] * d for _ in range(d)]
        for (i, j), value in mult.items():
            if isinstance(value, Mapping):
                vec = [zero] * d
                for k, c in value.items():
                    vec[int(k)] = field(c)
            else:
                vec = [field(c) for c in value]
            if len(vec) != d:
                raise DimensionError("product vector has the wrong length")
            if self._table[i][j] is not None and self._table[i][j] != vec:
                raise InvalidAlgebraError(f"conflicting products for ({i}, {j})")
            self._table[i][j] = vec
            if self._table[j][i] is None:
                self._table[j][i] = vec
        for i in range(d):
            for j in range(d):
                if self._table[i][j] is None:
                    self._table[i][j] = [zero] * d

    def product(self, x: Sequence, y: Sequence) -> list:
        F = self.field
        acc = [0] * self.d
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, s in enumerate(self._table[i][j]):
                    if s:
                        acc[k] += c * s
        return [F.reduce(a) for a in acc]

    def basis_product(self, i: int, j: int) -> list:
        return list(self._table[i][j])

    def unit(self, i: int) -> list:
        return self.field.unit(self.d, i)

    def validate(self) -> list[str]:
        problems = []
        d = self.d
        if not 0 <= self.unit_index < d:
            return [f"unit index {self.unit_index} out of range"]
        one = self.unit(self.unit_index)
        for i in range(d):
            if self.product(one, self.unit(i)) != self.unit(i):
                problems.append(f"unit law fails on a{i}")
            for j in range(d):
                if self._table[i][j] != self._table[j][i]:
                    problems.append(f"commutativity fails on (a{i}, a{j})")
                for k in range(d):
                    lhs = self.product(self._table[i][j], self.unit(k))
                    rhs = self.product(self.unit(i), self._table[j][k])
                    if lhs != rhs:
                        problems.append(f"associativity fails on (a{i}, a{j}, a{k})")
        return problems


def validated_comm(A: CommAlgebra) -> CommAlgebra:
    problems = A.validate()
    if problems:
        raise InvalidAlgebraError("; ".join(problems[:3]))
    return A


class Ideal:
    """A subspace I of L with [L, I] contained in I (checked on creation)."""

    def __init__(self, L: LieAlgebra, vectors: Sequence[Sequence] | Subspace):
        space = vectors if isinstance(vectors, Subspace) else Subspace(L.field, L.n, vectors)
        if space.ambient != L.n:
            raise DimensionError("ideal lives in the wrong ambient space")
        same_field(L.field, space.field)
        for i in range(L.n):
            for b in space.basis:
                if L.bracket(L.unit(i), b) not in space:
                    raise NotAnIdealError(f"[{L.names[i]}, I] is not contained in I")
        self.algebra = L
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim


# -- constructions ---------------------------------------------------------

def abelian(n: int, field: Field) -> LieAlgebra:
    return LieAlgebra(field, n, {}, origin=("abelian", n), tag=f"abelian:{n}")


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    F = same_field(L1.field, L2.field)
    n1, n = L1.n, L1.n + L2.n
    br = {}
    for (i, j), v in L1.structure_constants().items():
        br[(i, j)] = v
    for (i, j), v in L2.structure_constants().items():
        br[(i + n1, j + n1)] = {k + n1: c for k, c in v.items()}
    names = L1.names + L2.names
    if len(set(names)) != n:
        names = [f"{a}_1" for a in L1.names] + [f"{a}_2" for a in L2.names]
    return validated(LieAlgebra(F, n, br, names, ("direct_sum", L1, L2)))


def tensor_with_comm(L: LieAlgebra, A: CommAlgebra) -> LieAlgebra:
    """L (x) A with basis e_i (x) a_j at index i*d + j."""
    F = same_field(L.field, A.field)
    validated_comm(A)
    d = A.d
    N = L.n * d
    br = {}
    for i in range(L.n):
        for k in range(L.n):
            lk = L._sparse[i][k]
            if not lk:
                continue
            for j in range(d):
                for l in range(d):
                    p, q = i * d + j, k * d + l
                    if p >= q:
                        continue
                    prod = A._table[j][l]
                    vec = {}
                    for m, c in lk:
                        for b, s in enumerate(prod):
                            if s:
                                vec[m * d + b] = F.reduce(vec.get(m * d + b, 0) + c * s)
                    vec = {key: c for key, c in vec.items() if c != 0}
                    if vec:
                        br[(p, q)] = vec
    names = [f"{L.names[i]}*{A.names[j]}" for i in range(L.n) for j in range(d)]
    return validated(LieAlgebra(F, N, br, names, ("tensor", L, A)))


def semidirect(L: LieAlgebra, M) -> LieAlgebra:
    """L |x V with [x+u, y+v] = [x,y] + xv - yu; V occupies the last d slots."""
    from .repmod import validate_module  # circular at import time

    F = same_field(L.field, M.field)
    if M.parent is not L and M.parent != L:
        raise InvalidModuleError("module is over a different algebra")
    if validate_module(M):
        raise InvalidModuleError("module fails the representation identity")
    n, d = L.n, M.dim
    br = dict(L.structure_constants())
    for i in range(n):
        rho = M.rho[i]
        for a in range(d):
            vec = {n + b: rho.data[b][a] for b in range(d) if rho.data[b][a] != 0}
            if vec:
                br[(i, n + a)] = vec
    names = L.names + list(M.names)
    return validated(LieAlgebra(F, n + d, br, names, ("semidirect", L, M)))


def quotient(L: LieAlgebra, I: Ideal) -> tuple[LieAlgebra, Matrix]:
    """L/I on the non-pivot coordinates of I's echelon basis, with projection."""
    if not isinstance(I, Ideal):
        I = Ideal(L, I)
    F = L.field
    piv = set(I.space.pivots)
    keep = [c for c in range(L.n) if c not in piv]

    def project(v):
        r = I.space.reduce(v)
        return [r[c] for c in keep]

    q = len(keep)
    br = {}
    for a in range(q):
        for b in range(a + 1, q):
            v = project(L._table[keep[a]][keep[b]])
            if not is_zero(v):
                br[(a, b)] = v
    Q = validated(LieAlgebra(F, q, br, [L.names[c] for c in keep], ("quotient", L, I)))
    cols = [project(L.unit(j)) for j in range(L.n)]
    P = Matrix(F, [[c[r] for c in cols] for r in range(q)], L.n)
    return Q, P


def ideal_bracket_condition(L: LieAlgebra, I: Ideal) -> bool:
    """Whether [L, I] equals [L, L] intersected with I."""
    if not isinstance(I, Ideal):
        I = Ideal(L, I)
    LI = bracket_span(L, [L.unit(i) for i in range(L.n)], I.space.basis)
    return LI == derived_subalgebra(L).intersection(I.space)


# -- second cohomology with trivial coefficients ----------------------------

def cocycle_space(L: LieAlgebra) -> Subspace:
    """Skew forms f on L^L with f([x,y],z) + f([z,x],y) + f([y,z],x) = 0."""
    F = L.field
    if F.char == 2:
        raise UnsupportedFieldError("skew-form cohomology is not computed in characteristic 2")
    n = L.n
    w = wedge_index(n)

    def add_form(row, u, k, sign):
        # row += sign * f(u, e_k) in wedge coordinates
        for a, ua in enumerate(u):
            if ua == 0 or a == k:
                continue
            if a < k:
                idx, s = w.flat(a, k), 1
            else:
                idx, s = w.flat(k, a), -1
            row[idx] += sign * s * ua

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                row = [0] * w.dim
                add_form(row, L._table[i][j], k, 1)
                add_form(row, L._table[k][i], j, 1)
                add_form(row, L._table[j][k], i, 1)
                row = [F.reduce(a) for a in row]
                if not is_zero(row):
                    rows.append(row)
    if not rows:
        return Subspace.full(F, w.dim)
    return kernel_basis(Matrix(F, rows, w.dim))


def coboundary_space(L: LieAlgebra) -> Subspace:
    """Forms Phi o bracket, i.e. the row space of the bracket map."""
    pi = bracket_map_matrix(L)
    return Subspace(L.field, pi.ncols, pi.data)


def h2_dimensions(L: LieAlgebra) -> H2Dimensions:
    z = cocycle_space(L).dim
    b = coboundary_space(L).dim
    return H2Dimensions(z, b, z - b)


def is_centrally_closed(L: LieAlgebra) -> bool:
    return h2_dimensions(L).h2 == 0


def derived_dimension(L: LieAlgebra) -> int:
    return rank(bracket_map_matrix(L)) if L.n > 1 else 0


def linear_combination(F: Field, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> list:
    out = F.zeros(n)
    for c, v in zip(coeffs, vectors):
        out = axpy(F, c, v, out)
    return out
