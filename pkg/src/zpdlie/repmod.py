"""Finite-dimensional modules over a Lie algebra."""

from __future__ import annotations

from collections import namedtuple
from typing import Sequence

from .errors import DimensionError, InvalidModuleError
from .exactla import Matrix, Subspace, column_space, is_zero, kernel_basis, same_field
from .liealg import LieAlgebra, subalgebra

ModuleFailure = namedtuple("ModuleFailure", "i j residual")


class LieModule:
    """A representation x -> rho(x) given on the basis of ``parent``.

    ``rho[i]`` is the d x d matrix of the action of e_i.  Tensor coordinates
    on L (x) V use the algebra-major flat index ``i * d + j``.
    """

    def __init__(self, parent: LieAlgebra, dim: int, rho: Sequence, names=None, origin=None, tag=None):
        F = parent.field
        if len(rho) != parent.n:
            raise DimensionError(f"{len(rho)} action matrices for an algebra of dimension {parent.n}")
        mats = []
        for r in rho:
            m = r if isinstance(r, Matrix) else Matrix.from_values(F, r, dim)
            same_field(F, m.field)
            if m.shape != (dim, dim):
                raise DimensionError(f"action matrix of shape {m.shape}, expected {(dim, dim)}")
            mats.append(m)
        self.parent = parent
        self.field = F
        self.dim = dim
        self.rho = mats
        self.names = list(names) if names is not None else [f"v{a}" for a in range(dim)]
        self.origin = origin
        self.tag = tag

    def action(self, x: Sequence) -> Matrix:
        """rho(x) for an arbitrary algebra element."""
        if len(x) != self.parent.n:
            raise DimensionError("algebra element has the wrong length")
        F = self.field
        acc = [[0] * self.dim for _ in range(self.dim)]
        for xi, m in zip(x, self.rho):
            if xi == 0:
                continue
            for r in range(self.dim):
                row = m.data[r]
                out = acc[r]
                for c in range(self.dim):
                    if row[c]:
                        out[c] += xi * row[c]
        return Matrix(F, [[F.reduce(a) for a in r] for r in acc], self.dim)

    def act(self, x: Sequence, v: Sequence) -> list:
        if len(v) != self.dim:
            raise DimensionError("module vector has the wrong length")
        return self.action(x).apply(v)

    def annihilating_map(self, v: Sequence) -> Matrix:
        """d x n matrix of x -> x v (column i is rho_i v)."""
        cols = [m.apply(v) for m in self.rho]
        return Matrix(self.field, [[c[a] for c in cols] for a in range(self.dim)], self.parent.n)

    def tensor_index(self, i: int, j: int) -> int:
        return i * self.dim + j

    def tensor_coords(self, x: Sequence, v: Sequence) -> list:
        F = self.field
        return [F.reduce(a * b) for a in x for b in v]

    def unit(self, a: int) -> list:
        return self.field.unit(self.dim, a)

    def __repr__(self):
        return f"<{self.tag or 'LieModule'} dim={self.dim} over {self.parent!r}>"


def validate_module(M: LieModule) -> list[ModuleFailure]:
    """Pairs i < j where rho([e_i, e_j]) != rho_i rho_j - rho_j rho_i."""
    L = M.parent
    out = []
    for i in range(L.n):
        for j in range(i + 1, L.n):
            lhs = M.action(L.basis_bracket(i, j))
            rhs = M.rho[i] @ M.rho[j] - M.rho[j] @ M.rho[i]
            res = lhs - rhs
            if not res.is_zero():
                out.append(ModuleFailure(i, j, res))
    return out


def validated_module(M: LieModule) -> LieModule:
    failures = validate_module(M)
    if failures:
        f = failures[0]
        L = M.parent
        raise InvalidModuleError(f"representation identity fails on ({L.names[f.i]}, {L.names[f.j]})")
    return M


def trivial_module(L: LieAlgebra, d: int) -> LieModule:
    return LieModule(L, d, [Matrix.zeros(L.field, d, d) for _ in range(L.n)], origin=("trivial", d))


def adjoint_module(L: LieAlgebra) -> LieModule:
    from .liealg import ad_matrix

    return LieModule(L, L.n, [ad_matrix(L, L.unit(i)) for i in range(L.n)], list(L.names), ("adjoint", L))


def action_map_matrix(M: LieModule) -> Matrix:
    """d x (n d) matrix of L (x) V -> V, column i*d + j is rho_i v_j."""
    d = M.dim
    cols = [M.rho[i].col(j) for i in range(M.parent.n) for j in range(d)]
    return Matrix(M.field, [[c[a] for c in cols] for a in range(d)], len(cols))


def lv_subspace(M: LieModule) -> Subspace:
    return column_space(action_map_matrix(M))


def mv_space(M: LieModule) -> Subspace:
    """Kernel of the action map inside L (x) V."""
    return kernel_basis(action_map_matrix(M))


def restrict_module(M: LieModule, S) -> LieModule:
    """Restriction to the subalgebra spanned by S (a Subspace or ordered basis).

    The returned module's parent is that subalgebra, written in the given
    basis (or in S's echelon basis when a Subspace is passed).
    """
    L = M.parent
    basis = S.basis if isinstance(S, Subspace) else [list(b) for b in S]
    sub = subalgebra(L, basis, _subnames(L, basis))
    rho = [M.action(b) for b in basis]
    return validated_module(LieModule(sub, M.dim, rho, M.names, ("restrict", M, sub, basis)))


def _subnames(L: LieAlgebra, basis) -> list[str]:
    names = []
    for b in basis:
        nz = [k for k, a in enumerate(b) if a != 0]
        if len(nz) == 1 and b[nz[0]] == 1:
            names.append(L.names[nz[0]])
        else:
            names.append("+".join(f"{L.field.format(b[k])}{L.names[k]}" for k in nz))
    return names


def direct_sum_modules(M1: LieModule, M2: LieModule) -> LieModule:
    if M1.parent is not M2.parent and M1.parent != M2.parent:
        raise InvalidModuleError("modules over different algebras")
    F = M1.field
    d1, d = M1.dim, M1.dim + M2.dim
    rho = []
    for a, b in zip(M1.rho, M2.rho):
        rows = [list(r) + [F.zero] * M2.dim for r in a.data]
        rows += [[F.zero] * d1 + list(r) for r in b.data]
        rho.append(Matrix(F, rows, d))
    names = [f"{x}_1" for x in M1.names] + [f"{x}_2" for x in M2.names]
    return validated_module(LieModule(M1.parent, d, rho, names, ("direct_sum", M1, M2)))


def kernel_of_action(M: LieModule, x: Sequence) -> Subspace:
    return kernel_basis(M.action(x))


def annihilator_of_vector(M: LieModule, v: Sequence) -> Subspace:
    """{x in L : x v = 0}."""
    if is_zero(v):
        return Subspace.full(M.field, M.parent.n)
    return kernel_basis(M.annihilating_map(v))
