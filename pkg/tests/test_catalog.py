from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from _support import GF, Q, iso_exists_3dim
from liechains import catalog as cat, core, gfplattice as gl
from liechains.catalog import CatalogSpec
from liechains.errors import BadParameters
from liechains.fields import FieldSpec


def test_L1_gamma0_products():
    a = cat.L1_gamma(GF[2], 0)
    one = GF[2](1)
    assert a.names == ("u-1", "u0", "u1")
    assert a.structure() == {(0, 1): {0: one}, (0, 2): {1: one}, (1, 2): {2: one}}


def test_witt5_products():
    w = cat.witt(GF[5])
    assert w.dim == 5
    assert w.bracket(w.basis_vector(0), w.basis_vector(2)) == [0, 2, 0, 0, 0]


def test_cross_product_split_classes():
    assert core.classify_3dim(cat.cross_product(Q, -1, -1)).kind == "nonsplit_simple"
    assert core.classify_3dim(cat.cross_product(Q, 1, 1)).kind == "split_simple"


SPECS = [
    ("abelian", "Q", ["3"]), ("almost_abelian", "GF(3)", ["3"]), ("heisenberg", "Q", ["2"]),
    ("sl2", "Q(sqrt,2)", []), ("cross_product", "Q", ["-1", "-3"]), ("L1_gamma", "GF(2)", ["1"]),
    ("Lm_gamma", "GF(5)", ["3"]), ("Lm_gamma", "GF(2)", ["2"]), ("witt", "GF(7)", []),
    ("semidirect_adjoint", "Q", ["sl2"]), ("direct_power", "Q", ["2", "cross_product", "-1", "-1"]),
    ("diagonal_tower", "Q", ["2", "sl2"]), ("random_solvable", "GF(7)", ["5", "11"]), ("rotation", "Q", []),
]


@pytest.mark.parametrize("family, field, params", SPECS, ids=[f"{s[0]}{s[2]}" for s in SPECS])
def test_every_family_validates(family, field, params):
    alg = cat.make(CatalogSpec(family, FieldSpec.from_literal(field), params))
    core.validate(alg)
    assert family in cat.FAMILIES


@pytest.mark.parametrize("family, field, params", [
    ("Lm_gamma", "GF(5)", ["2"]), ("witt", "GF(3)", []), ("abelian", "Q", ["0"]),
    ("nope", "Q", []), ("cross_product", "Q", ["0", "1"]), ("random_solvable", "Q", ["3", "1"]),
])
def test_bad_parameters(family, field, params):
    with pytest.raises(BadParameters):
        cat.make(CatalogSpec(family, FieldSpec.from_literal(field), params))


def test_witt5_is_simple_by_brute_force():
    lat = gl.enumerate_lattice(cat.witt(GF[5]))
    assert int(lat.ideal_mask.sum()) == 2


@pytest.mark.parametrize("p", [3, 5, 7])
def test_L1_gamma0_is_sl2_in_odd_characteristic(p):
    assert iso_exists_3dim(cat.sl2(GF[p]), cat.L1_gamma(GF[p], 0))


def test_L1_gamma0_is_not_sl2_like_in_char2():
    # in characteristic 2 sl2 is nilpotent while L1(0) is simple
    assert not iso_exists_3dim(cat.L1_gamma(GF[2], 0), cat.sl2(GF[2]))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_diagonal_chain_shape(k):
    base = cat.cross_product(Q, -1, -1)
    chain = cat.diagonal_chain(base, k)
    assert chain.length == k + 1
    assert [m.dim for m in chain.members] == [0, 1] + [3 * i for i in range(1, k + 1)]
    L = cat.direct_power(base, k)
    assert all(core.is_subalgebra(L, m) for m in chain.members)


def test_diagonal_tower_matches_direct_power():
    base = cat.sl2(Q)
    assert cat.diagonal_tower(base, 2).structure() == cat.direct_power(base, 2).structure()


def test_random_solvable_line():
    alg = cat.random_solvable(GF[3], 1, 0)
    assert alg.dim == 1 and core.is_abelian(alg)


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 6), st.integers(0, 10**6))
def test_random_solvable_is_solvable_and_deterministic(p, n, seed):
    a = cat.random_solvable(GF[p], n, seed)
    b = cat.random_solvable(GF[p], n, seed)
    assert a.structure() == b.structure()
    assert a.dim == n and core.is_solvable(a)


def test_noniso_nonsplit_pair():
    a, b = cat.noniso_nonsplit_pair()
    assert core.classify_3dim(a).kind == core.classify_3dim(b).kind == "nonsplit_simple"


def test_list_families_mentions_each_family():
    text = "\n".join(cat.list_families())
    for usage, _ in cat.FAMILIES.values():
        assert usage in text
