import random

import pytest
from hypothesis import given, settings, strategies as st

from zpdlie.catalog import age1, bm_module, borel, heisenberg, sl2, truncated_polynomials, vm_module
from zpdlie.errors import InvalidAlgebraError, NotAnIdealError, UnsupportedFieldError
from zpdlie.exactla import GF, QQ, Matrix, Subspace, rank, wedge_index
from zpdlie.liealg import (
    CommAlgebra,
    Ideal,
    LieAlgebra,
    abelian,
    ad_matrix,
    bracket_map_matrix,
    center,
    derived_subalgebra,
    direct_sum,
    h2_dimensions,
    ideal_bracket_condition,
    is_centrally_closed,
    quotient,
    semidirect,
    subalgebra,
    tensor_with_comm,
    validate,
    validated,
)
from zpdlie.repmod import trivial_module

from oracles import h2_by_counting, structure_array

E, H, F = 0, 1, 2


def test_validate_examples():
    assert validate(abelian(4, QQ)) == []
    assert validate(sl2()) == []
    bad = LieAlgebra(QQ, 3, {(E, H): {E: -2}, (E, F): {H: 2, E: -1}, (H, F): {F: -2}}, ["E", "H", "F"])
    failures = validate(bad)
    assert [(f.i, f.j, f.k) for f in failures] == [(E, H, F)]
    assert any(a != 0 for a in failures[0].residual)
    with pytest.raises(InvalidAlgebraError):
        validated(bad)


def test_ad_matrix():
    L = sl2()
    assert ad_matrix(L, L.zero()).is_zero()
    adH = ad_matrix(L, L.unit(H))
    assert adH == Matrix.from_values(QQ, [[2, 0, 0], [0, 0, 0], [0, 0, -2]])
    x = [QQ(1), QQ(-2), QQ(3)]
    assert ad_matrix(L, x).apply(x) == [0, 0, 0]


def test_derived_and_center():
    assert derived_subalgebra(abelian(3, QQ)).dim == 0
    h3 = heisenberg(1)
    assert derived_subalgebra(h3) == Subspace(QQ, 3, [h3.unit(0)])
    assert derived_subalgebra(sl2()).dim == 3
    assert center(abelian(3, QQ)).dim == 3
    assert center(h3) == Subspace(QQ, 3, [h3.unit(0)])
    assert center(age1()).dim == 0


def test_bracket_map_ranks():
    assert bracket_map_matrix(abelian(3, QQ)).is_zero()
    assert rank(bracket_map_matrix(sl2())) == 3
    M = bracket_map_matrix(heisenberg(1))
    w = wedge_index(3)
    assert rank(M) == 1 and M.col(w.flat(1, 2)) == [1, 0, 0]


def test_direct_sum():
    L = heisenberg(1)
    assert direct_sum(L, abelian(0, QQ)).structure_constants() == L.structure_constants()
    S = direct_sum(heisenberg(1), sl2())
    assert derived_subalgebra(S).dim == 4
    assert direct_sum(abelian(2, QQ), abelian(3, QQ)).structure_constants() == {}


def test_tensor_with_comm():
    one = truncated_polynomials(1)
    L = sl2()
    T = tensor_with_comm(L, one)
    assert T.structure_constants() == L.structure_constants()
    S2 = tensor_with_comm(sl2(), truncated_polynomials(2))
    assert S2.n == 6 and derived_subalgebra(S2).dim == 6
    B2 = tensor_with_comm(borel(), truncated_polynomials(2))
    assert B2.n == 4 and derived_subalgebra(B2).dim == 2


def test_comm_algebra_validation():
    golden = CommAlgebra(QQ, 2, 0, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 1): [1, 1]})
    assert golden.validate() == []
    # a1 a1 = a2, a1 a2 = 0, a2 a2 = a2: (a1 a1) a2 != a1 (a1 a2)
    broken = CommAlgebra(
        QQ, 3, 0, {(0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (0, 2): [0, 0, 1], (1, 1): [0, 0, 1], (1, 2): [0, 0, 0], (2, 2): [0, 0, 1]}
    )
    assert broken.validate()
    with pytest.raises(InvalidAlgebraError):
        tensor_with_comm(sl2(), broken)


def test_semidirect():
    L = sl2()
    T = semidirect(L, trivial_module(L, 2))
    assert T.structure_constants() == direct_sum(L, abelian(2, QQ)).structure_constants()
    G = semidirect(L, vm_module(1))
    assert G.n == 5 and derived_subalgebra(G).dim == 5
    # L-coordinates reproduce L; V-V brackets vanish
    for (i, j), v in G.structure_constants().items():
        if j < 3:
            assert v == L.structure_constants()[(i, j)]
        assert i < 3
    assert semidirect(borel(), bm_module(2)).n == 5


def test_quotient():
    h3 = heisenberg(1)
    Q0, P0 = quotient(h3, Ideal(h3, []))
    assert Q0.structure_constants() == h3.structure_constants() and P0 == Matrix.identity(QQ, 3)
    Qall, _ = quotient(h3, Ideal(h3, Subspace.full(QQ, 3)))
    assert Qall.n == 0
    Qc, P = quotient(h3, Ideal(h3, [h3.unit(0)]))
    assert Qc.n == 2 and Qc.structure_constants() == {}
    assert P.shape == (2, 3)
    with pytest.raises(NotAnIdealError):
        Ideal(sl2(), [sl2().unit(H)])


def test_ideal_bracket_condition():
    h3 = heisenberg(1)
    assert ideal_bracket_condition(h3, Ideal(h3, Subspace.full(QQ, 3)))
    assert not ideal_bracket_condition(h3, Ideal(h3, [h3.unit(0)]))
    G = semidirect(sl2(), vm_module(1))
    assert ideal_bracket_condition(G, Ideal(G, [G.unit(3), G.unit(4)]))


def test_h2_examples():
    assert h2_dimensions(sl2()).h2 == 0
    assert is_centrally_closed(sl2())
    for n in (2, 3, 4):
        z = h2_dimensions(abelian(n, QQ))
        assert (z.z2, z.b2) == (n * (n - 1) // 2, 0)
        assert not is_centrally_closed(abelian(n, QQ))
    z = h2_dimensions(heisenberg(1))
    assert z.h2 == 2 and not is_centrally_closed(heisenberg(1))


def test_h2_matches_counting_oracle():
    for L in (sl2(GF(5)), heisenberg(1, GF(5)), borel(GF(5)), abelian(3, GF(5))):
        assert h2_dimensions(L).h2 == h2_by_counting(structure_array(L), 5)


def test_h2_refused_in_characteristic_two():
    with pytest.raises(UnsupportedFieldError):
        h2_dimensions(abelian(2, GF(2)))


@st.composite
def random_linear_change(draw):
    """sl2, h3 or age1 written in a random basis over GF(7)."""
    F = GF(7)
    base = draw(st.sampled_from([sl2(F), heisenberg(1, F), age1(F)]))
    rng = random.Random(draw(st.integers(0, 10**6)))
    n = base.n
    while True:
        rows = [[rng.randrange(7) for _ in range(n)] for _ in range(n)]
        if rank(Matrix(F, rows, n)) == n:
            return base, subalgebra(base, rows)


@given(random_linear_change())
@settings(max_examples=25, deadline=None)
def test_invariants_survive_basis_change(pair):
    L, L2 = pair
    assert validate(L2) == []
    assert derived_subalgebra(L2).dim == derived_subalgebra(L).dim == rank(bracket_map_matrix(L2))
    assert center(L2).dim == center(L).dim
    assert h2_dimensions(L2) == h2_dimensions(L)
