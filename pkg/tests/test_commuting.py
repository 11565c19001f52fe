import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zpdlie.catalog import age1, galilei, heisenberg, sl2, truncated_current, vm_module
from zpdlie.commuting import (
    CommutingPair,
    ModulePair,
    PairFamily,
    SamplerConfig,
    builtin_families,
    centralizer,
    exhaustive_kprime_gfp,
    exhaustive_kv_gfp,
    generate_pairs,
    module_families,
    module_pairs,
    polyvec,
    projective_count,
    projective_points,
)
from zpdlie.decide import mprime
from zpdlie.errors import BudgetExceededError, FamilyInvalidError, PairVerificationError
from zpdlie.exactla import GF, QQ, Subspace, is_zero, wedge_coords, wedge_index
from zpdlie.liealg import abelian
from zpdlie.repmod import trivial_module

from oracles import kprime_dim, kv_dim, structure_array


def take(stream, k):
    out = []
    for item in stream:
        out.append(item)
        if len(out) == k:
            break
    return out


def test_centralizer_examples():
    L = sl2()
    assert centralizer(L, L.zero()).dim == 3
    assert centralizer(L, L.unit(1)) == Subspace(QQ, 3, [L.unit(1)])
    h = heisenberg(1)
    rng = random.Random(1)
    for _ in range(20):
        x = [QQ(rng.randint(-3, 3)) for _ in range(3)]
        C = centralizer(h, x)
        assert h.unit(0) in C and C.dim >= 2


def test_pairs_are_checked():
    L = sl2()
    with pytest.raises(PairVerificationError):
        CommutingPair.checked(L, L.unit(0), L.unit(2))
    V = vm_module(1)
    with pytest.raises(PairVerificationError):
        ModulePair.checked(V, V.parent.unit(2), V.unit(0))


def test_abelian_stream_nonempty():
    pairs = take(generate_pairs(abelian(3, QQ), SamplerConfig()), 50)
    assert pairs and all(is_zero(abelian(3, QQ).bracket(p.x, p.y)) for _, p in pairs)


def test_heisenberg_basis_strategy():
    h = heisenberg(1)
    cfg = SamplerConfig(strategies=("basis",))
    w = wedge_index(3)
    got = Subspace(QQ, 3)
    for _, p in generate_pairs(h, cfg):
        got.insert(wedge_coords(p.x, p.y, w))
    expected = Subspace(QQ, 3, [wedge_coords(h.unit(1), h.unit(0), w), wedge_coords(h.unit(2), h.unit(0), w)])
    assert got == expected


def test_sl2_pairs_are_proportional():
    L = sl2()
    w = wedge_index(3)
    for _, p in take(generate_pairs(L, SamplerConfig(seed=3)), 300):
        assert is_zero(wedge_coords(p.x, p.y, w))


def test_every_streamed_pair_commutes():
    for L in (galilei(3), truncated_current(sl2(), 2), heisenberg(2)):
        for _, p in take(generate_pairs(L, SamplerConfig(seed=5)), 400):
            assert is_zero(L.bracket(p.x, p.y))
    M = vm_module(4)
    for _, p in take(module_pairs(M, SamplerConfig(seed=5)), 400):
        assert is_zero(M.act(p.x, p.v))


def test_stream_is_deterministic():
    L = galilei(3)
    a = take(generate_pairs(L, SamplerConfig(seed=9)), 500)
    b = take(generate_pairs(L, SamplerConfig(seed=9)), 500)
    assert a == b


def test_vm_nilpotent_family():
    fam = next(f for f in module_families(vm_module(3)) if "nilpotent" in f.name)
    M = vm_module(3)
    for lam in (0, 1, 2):
        x, v = fam.at(QQ, lam)
        assert is_zero(M.act(x, v)) and not is_zero(v)


def test_heisenberg_difference_family():
    h = heisenberg(2)
    fam = builtin_families(h)[0]
    x, y = fam.at(QQ, 1)
    assert x == [0, 1, 1, 0, 0] and y == [0, 0, 0, 1, -1]
    assert is_zero(h.bracket(x, y))


def test_vm2_upper_family():
    M = vm_module(2)
    fams = module_families(M)
    assert len(fams) >= 2
    for fam in fams:
        for lam in range(-4, 5):
            x, v = fam.at(QQ, lam)
            assert is_zero(M.act(x, v))


def test_current_shear_family_degenerate_point():
    L = truncated_current(sl2(), 2)
    fams = builtin_families(L)
    assert fams
    for fam in fams:
        x, y = fam.at(QQ, 0)
        assert is_zero(L.bracket(x, y))


def test_bad_family_rejected():
    L = sl2()
    fam = PairFamily("bogus", polyvec(QQ, 3, {0: [1]}), polyvec(QQ, 3, {2: [0, 1]}))
    with pytest.raises(FamilyInvalidError):
        fam.certify(L)


def test_projective_points():
    F = GF(3)
    pts = list(projective_points(F, 3))
    assert len(pts) == projective_count(3, 3) == 13
    assert all(next(c for c in p if c) == 1 for p in pts)
    with pytest.raises(BudgetExceededError):
        list(projective_points(GF(5), 5, cap=100))
    with pytest.raises(BudgetExceededError):
        exhaustive_kprime_gfp(galilei(5, GF(7)), cap=1000)


def test_exhaustive_examples():
    F = GF(5)
    assert exhaustive_kprime_gfp(abelian(4, F)).span.dim == 6
    assert exhaustive_kprime_gfp(sl2(F)).span.dim == 0
    res = exhaustive_kprime_gfp(age1(F))
    assert res.span.dim == 2 < mprime(age1(F)).dim
    assert res.span.dim == kprime_dim(structure_array(age1(F)), 5)
    M = trivial_module(sl2(F), 2)
    assert exhaustive_kv_gfp(M).span.dim == 6


def _shuffled_span(L, seed):
    """Python re-run of the exhaustive scan in a shuffled point order."""
    w = wedge_index(L.n)
    pts = list(projective_points(L.field, L.n))
    random.Random(seed).shuffle(pts)
    S = Subspace(L.field, w.dim)
    for x in pts:
        for y in centralizer(L, x).basis:
            S.insert(wedge_coords(x, y, w, L.field))
    return S


@given(st.sampled_from(["age1", "h3", "galilei1", "current"]), st.integers(0, 1000))
@settings(max_examples=8, deadline=None)
def test_exhaustive_span_ignores_order(name, seed):
    F = GF(5)
    L = {
        "age1": age1(F),
        "h3": heisenberg(1, F),
        "galilei1": galilei(1, F),
        "current": truncated_current(abelian(1, F), 2),
    }[name]
    assert exhaustive_kprime_gfp(L, target=10**6).span == _shuffled_span(L, seed)


def test_vm_kv_in_small_characteristic():
    # in characteristic 5, H v_0 = 5 v_0 = 0 for V(5), so V(5) and V(6) stop being simple
    for m, kv in ((5, 6), (6, 11)):
        M = vm_module(m, GF(5))
        rho = np.array([[[int(a) for a in row] for row in r.data] for r in M.rho], dtype=np.int64)
        assert exhaustive_kv_gfp(M).span.dim == kv_dim(rho, 5) == kv
    assert [exhaustive_kv_gfp(vm_module(m, GF(7))).span.dim for m in range(1, 7)] == [4, 6, 6, 10, 8, 14]
