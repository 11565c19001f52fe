import pytest

from zpdlie.catalog import borel, sl2, vm_module
from zpdlie.errors import InvalidModuleError, NotASubalgebraError
from zpdlie.exactla import QQ, Matrix, Subspace, rank
from zpdlie.repmod import (
    LieModule,
    action_map_matrix,
    direct_sum_modules,
    lv_subspace,
    mv_space,
    restrict_module,
    trivial_module,
    validate_module,
    validated_module,
)

E, H, F = 0, 1, 2


def test_validate_examples():
    assert validate_module(trivial_module(sl2(), 3)) == []
    for m in range(6):
        assert validate_module(vm_module(m)) == []
    V = vm_module(1)
    broken = LieModule(V.parent, 2, [Matrix.zeros(QQ, 2, 2), V.rho[H], V.rho[F]])
    pairs = [(f.i, f.j) for f in validate_module(broken)]
    assert (E, F) in pairs
    with pytest.raises(InvalidModuleError):
        validated_module(broken)


def test_vm_action_entries():
    V = vm_module(3)
    v = [V.unit(i) for i in range(4)]
    L = V.parent
    assert V.act(L.unit(F), v[0]) == v[1]
    assert V.act(L.unit(E), v[2]) == [0, 4, 0, 0]  # 2 * (3 + 1 - 2) v_1
    assert V.act(L.unit(H), v[3]) == [0, 0, 0, -3]
    assert V.act(L.unit(F), v[3]) == [0, 0, 0, 0]


def test_action_map():
    assert action_map_matrix(trivial_module(sl2(), 2)).is_zero()
    assert rank(action_map_matrix(vm_module(1))) == 2
    assert mv_space(vm_module(1)).dim == 4
    assert mv_space(vm_module(3)).dim == 8
    # column i*d + j is rho_i v_j
    V = vm_module(2)
    A = action_map_matrix(V)
    assert A.col(F * 3 + 0) == [0, 1, 0]


def test_lv():
    assert lv_subspace(trivial_module(sl2(), 2)).dim == 0
    for m in range(1, 6):
        assert lv_subspace(vm_module(m)).dim == m + 1
        R = restrict_module(vm_module(m), [sl2().unit(H), sl2().unit(E)])
        assert lv_subspace(R).dim == m + 1
        assert mv_space(R).dim == m + 1


def test_mv_rank_nullity():
    for m in range(5):
        V = vm_module(m)
        assert mv_space(V).dim == 3 * V.dim - lv_subspace(V).dim


def test_restrict():
    V = vm_module(2)
    L = V.parent
    full = restrict_module(V, [L.unit(i) for i in range(3)])
    assert [r == s for r, s in zip(full.rho, V.rho)] == [True] * 3
    R = restrict_module(V, [L.unit(H), L.unit(E)])
    assert R.dim == 3 and R.parent.n == 2 and validate_module(R) == []
    assert R.parent.structure_constants() == borel().structure_constants()
    Esub = restrict_module(V, Subspace(QQ, 3, [L.unit(E)]))
    assert Esub.parent.n == 1
    with pytest.raises(NotASubalgebraError):
        restrict_module(V, [L.unit(E), L.unit(F)])


def test_direct_sums():
    V = vm_module(1)
    assert direct_sum_modules(V, trivial_module(V.parent, 0)).rho == V.rho
    W = direct_sum_modules(V, V)
    assert mv_space(W).dim == 8
    assert rank(action_map_matrix(W)) == 2 * rank(action_map_matrix(V))
    S = direct_sum_modules(vm_module(1), vm_module(2))
    assert S.dim == 5 and validate_module(S) == []
    with pytest.raises(InvalidModuleError):
        direct_sum_modules(V, trivial_module(borel(), 1))
