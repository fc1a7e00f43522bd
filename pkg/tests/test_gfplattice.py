from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from _support import GF, all_subspaces_gf, brute_subalgebras
from liechains import catalog as cat, core, gfplattice as gl
from liechains.cli import corpus
from liechains.errors import BudgetExceeded, UnsupportedField
from liechains.fields import FieldSpec
from liechains.gfplattice import LatticeBudget

small_solvables = st.tuples(st.sampled_from([2, 3]), st.integers(2, 3), st.integers(0, 10**5)).map(
    lambda t: cat.random_solvable(GF[t[0]], t[1], t[2]))


def _join(alg, A, B):
    return core.closure(alg, A + B)


def _modular_by_definition(alg, U, subs) -> bool:
    for B in subs:
        for C in subs:
            if B <= C and _join(alg, U, B) & C != _join(alg, B, U & C):
                return False
            if U <= C and _join(alg, U, B) & C != _join(alg, B & C, U):
                return False
    return True


def _quasi_ideal_by_definition(alg, U) -> bool:
    for V in all_subspaces_gf(alg.field.p, alg.dim):
        if not core.bracket_space(alg, U, V) <= U + V:
            return False
    return True


# -- contract examples ---------------------------------------------------------


def test_abelian_gf2_cubed():
    lat = gl.enumerate_lattice(cat.abelian(GF[2], 3))
    assert lat.N == 16
    assert gl.ell_brute(lat) == 3 and gl.minmax_brute(lat)[0] == 3
    assert lat.quasiideal_mask.all() and gl.qil_brute(lat)[0] == 3
    assert gl.frattini_brute(lat).dim == 0


def test_heisenberg_gf2():
    h = cat.heisenberg(GF[2])
    lat = gl.enumerate_lattice(h)
    assert lat.N == 12
    assert gl.modl_brute(lat)[0] == 3
    assert gl.frattini_brute(lat) == h.span(h.basis_vector(2))


def test_sl2_gf3_pinned():
    sl = cat.sl2(GF[3])
    lat = gl.enumerate_lattice(sl)
    assert lat.N == 19  # regression pin from the first enumeration
    assert gl.minmax_brute(lat)[0] >= gl.ell_brute(lat)
    e, h = sl.basis_vector(0), sl.basis_vector(1)
    assert lat.quasiideal_mask[lat.index_of(sl.span(e, h))]
    assert not lat.quasiideal_mask[lat.index_of(sl.span(e))]


def test_L1_gamma0_gf2():
    lat = gl.enumerate_lattice(cat.L1_gamma(GF[2], 0))
    ell, chief = gl.chief_series_brute(lat)
    assert ell == 1 and chief.length == 1
    assert gl.qil_brute(lat)[0] - ell == 2


def test_L2_gamma0_gf2_chief_length():
    lat = gl.enumerate_lattice(cat.Lm_gamma(GF[2], 2))
    assert gl.ell_brute(lat) == 2


def test_L3_gamma0_gf5_one_codim_one():
    alg = cat.Lm_gamma(GF[5], 3)
    lat = gl.enumerate_lattice(alg)
    codim1 = [m for m in lat.coatoms() if lat.dims[m] == alg.dim - 1]
    assert len(codim1) == 1


def test_budget():
    with pytest.raises(BudgetExceeded):
        gl.enumerate_lattice(cat.abelian(GF[7], 5), LatticeBudget(max_subspace_count=1000))
    with pytest.raises(BudgetExceeded):
        gl.enumerate_lattice(cat.abelian(GF[3], 4), LatticeBudget(max_node_count=50))
    with pytest.raises(UnsupportedField):
        gl.enumerate_lattice(cat.abelian(FieldSpec.rationals(), 2))


def test_budget_environment_override(monkeypatch):
    monkeypatch.setenv("LIECHAINS_BUDGET", "subspaces=10,nodes=5")
    with pytest.raises(BudgetExceeded):
        gl.enumerate_lattice(cat.abelian(GF[2], 3))
    monkeypatch.setenv("LIECHAINS_BUDGET", "nodes=100")
    assert LatticeBudget.from_env().max_node_count == 100


def test_gaussian_counts():
    assert [gl.gaussian_binomial(3, k, 2) for k in range(4)] == [1, 7, 7, 1]
    assert gl.subspace_count(4, 3) == 212


def test_dot_output():
    lat = gl.enumerate_lattice(cat.heisenberg(GF[2]))
    dot = gl.to_dot(lat, ("ideal", "modular", "quasiideal"))
    assert dot.startswith("digraph lattice {")
    assert dot.count("label=") == lat.N
    assert dot.count("->") == int(lat.cover_matrix.sum())


# -- properties ------------------------------------------------------------------


@given(small_solvables)
def test_nodes_are_exactly_the_subalgebras(alg):
    lat = gl.enumerate_lattice(alg)
    assert {lat.subspace(i) for i in range(lat.N)} == set(brute_subalgebras(alg))


@given(small_solvables)
def test_meets_and_joins_stay_in_lattice(alg):
    lat = gl.enumerate_lattice(alg)
    for i in range(lat.N):
        for j in range(lat.N):
            A, B = lat.subspace(i), lat.subspace(j)
            assert lat.subspace(lat.meet(i, j)) == A & B
            assert lat.subspace(lat.join(i, j)) == core.closure(alg, A + B)


@settings(max_examples=25)
@given(small_solvables)
def test_modular_mask_matches_definition(alg):
    lat = gl.enumerate_lattice(alg)
    subs = [lat.subspace(i) for i in range(lat.N)]
    for i, U in enumerate(subs):
        assert bool(lat.modular_mask[i]) == _modular_by_definition(alg, U, subs)


@settings(max_examples=25)
@given(small_solvables)
def test_quasiideal_mask_matches_definition(alg):
    lat = gl.enumerate_lattice(alg)
    for i in range(lat.N):
        assert bool(lat.quasiideal_mask[i]) == _quasi_ideal_by_definition(alg, lat.subspace(i))


@pytest.mark.parametrize("name, builder", [
    ("sl2/GF(3)", lambda: cat.sl2(GF[3])), ("L1(0)/GF(2)", lambda: cat.L1_gamma(GF[2], 0)),
    ("rotation/GF(3)", lambda: cat.rotation_extension(GF[3])), ("cross/GF(3)", lambda: cat.cross_product(GF[3], -1, -1)),
])
def test_modular_definition_on_simple_examples(name, builder):
    alg = builder()
    lat = gl.enumerate_lattice(alg)
    subs = [lat.subspace(i) for i in range(lat.N)]
    for i, U in enumerate(subs):
        assert bool(lat.modular_mask[i]) == _modular_by_definition(alg, U, subs)


@given(st.tuples(st.sampled_from([2, 3]), st.integers(2, 4), st.integers(0, 10**5)))
def test_invariant_relations(t):
    p, n, seed = t
    alg = cat.random_solvable(GF[p], n, seed)
    lat = gl.enumerate_lattice(alg)
    ell, chief = gl.chief_series_brute(lat)
    ell_rev, _ = gl.chief_series_brute(lat, reverse_ties=True)
    assert ell == ell_rev == gl.ell_brute(lat) == core.ell(alg)
    mm, chain = gl.minmax_brute(lat)
    assert mm == ell  # solvable
    assert sorted(chain.codimensions()) == sorted(chief.codimensions())
    assert ell <= gl.qil_brute(lat)[0] <= ell + 2
    assert lat.ideal_mask.sum() <= lat.modular_mask.sum()
    assert not (lat.ideal_mask & ~lat.modular_mask).any()
    assert not (lat.ideal_mask & ~lat.quasiideal_mask).any()
    assert not (lat.quasiideal_mask & ~lat.modular_mask).any()


@given(small_solvables)
def test_frattini_is_core_of_intersection(alg):
    lat = gl.enumerate_lattice(alg)
    inter = alg.full()
    for M in gl.maximal_subalgebras(lat):
        inter = inter & M
    assert gl.frattini_brute(lat) == core.core(alg, inter)


@pytest.mark.parametrize("name", sorted(corpus.BRUTE))
def test_quasi_ideals_are_modular_on_corpus(name):
    lat = corpus.brute(name).lat
    assert not (lat.quasiideal_mask & ~lat.modular_mask).any()


def test_determinism():
    alg = cat.random_solvable(GF[3], 4, 9)
    a, b = gl.enumerate_lattice(alg), gl.enumerate_lattice(alg)
    assert [a.subspace(i) for i in range(a.N)] == [b.subspace(i) for i in range(b.N)]
    assert gl.to_dot(a, ("ideal", "modular")) == gl.to_dot(b, ("ideal", "modular"))
