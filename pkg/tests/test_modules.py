from __future__ import annotations

from fractions import Fraction as Fr

import pytest
import sympy
from hypothesis import given, strategies as st

from _support import GF, Q, all_subspaces_gf
from liechains import catalog as cat, chainzero as cz, linalg as la, modules
from liechains.errors import WrongDimension
from liechains.fields import FieldSpec


def _invariant(F, ops, U) -> bool:
    return all(la.mat_vec(op, v) in U for op in ops for v in U.rows)


def _brute_invariants(F, ops, k):
    return [U for U in all_subspaces_gf(F.p, k) if _invariant(F, ops, U)]


def _longest_chain(subs) -> int:
    subs = sorted(subs, key=lambda U: U.dim)
    best = {}
    for U in subs:
        below = [best[V] for V in best if V < U]
        best[U] = 1 + max(below) if below else 0
    return max(best.values())


def op_lists(p: int, k: int):
    mat = st.lists(st.lists(st.integers(0, p - 1), min_size=k, max_size=k), min_size=k, max_size=k)
    F = GF[p]
    return st.lists(mat.map(lambda m: [[F(x) for x in r] for r in m]), min_size=1, max_size=2)


# -- contract examples ---------------------------------------------------------


def test_adjoint_so3_irreducible():
    so3 = cat.cross_product(Q, -1, -1)
    assert cz.irreducible_module(Q, so3.ad_basis(), 3)
    assert modules.is_irreducible(Q, so3.ad_basis(), 3)[0]


def test_identity_reducible():
    assert not cz.irreducible_module(Q, [la.identity(Q, 2)], 2)
    assert not modules.is_irreducible(Q, [la.identity(Q, 2)], 2)[0]


def test_rotation_of_e_minus_f_irreducible():
    sl = cat.sl2(Q)
    x = [Fr(1), Fr(0), Fr(-1)]
    k, mats, _ = la.quotient_and_induced(sl.full(), sl.span(x), [sl.ad(x)])
    assert k == 2 and cz.irreducible_module(Q, mats, 2)


def test_eigen_method_refuses_dim4():
    with pytest.raises(WrongDimension):
        cz.irreducible_module(Q, [la.identity(Q, 4)], 4)


def test_adjoint_so3_over_gaussian_field():
    F = FieldSpec.quadratic(-1)
    so3 = cat.cross_product(F, -1, -1)
    # simple, so still irreducible after the form splits
    assert cz.irreducible_module(F, so3.ad_basis(), 3)


# -- oracles and properties ------------------------------------------------------


@pytest.mark.parametrize("p, k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
@given(data=st.data())
def test_irreducible_matches_brute(p, k, data):
    F = GF[p]
    ops = data.draw(op_lists(p, k))
    inv = _brute_invariants(F, ops, k)
    ok, _ = modules.is_irreducible(F, ops, k)
    assert ok == (len(inv) == 2)
    sub, _ = modules.minimal_submodule(F, ops, k)
    assert sub in inv and sub.dim > 0
    assert not any(0 < V.dim < sub.dim and V < sub for V in inv)


@pytest.mark.parametrize("p, k", [(2, 3), (3, 3), (2, 4)])
@given(data=st.data())
def test_composition_length_matches_brute(p, k, data):
    F = GF[p]
    ops = data.draw(op_lists(p, k))
    members, _ = modules.composition_series(F, ops, la.Subspace.full(F, k), la.Subspace.zero(F, k))
    assert len(members) - 1 == _longest_chain(_brute_invariants(F, ops, k))
    assert all(_invariant(F, ops, U) for U in members)


@given(st.integers(1, 4).flatmap(
    lambda k: st.lists(st.lists(st.integers(-3, 3), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_single_operator_matches_charpoly_factorization(rows):
    k = len(rows)
    x = sympy.Symbol("x")
    factors = sympy.factor_list(sympy.Matrix(rows).charpoly(x).as_expr(), x)[1]
    irreducible = len(factors) == 1 and factors[0][1] == 1
    op = [[Fr(v) for v in r] for r in rows]
    assert modules.is_irreducible(Q, [op], k)[0] == irreducible
    if k <= 3:
        assert cz.irreducible_module(Q, [op], k) == irreducible


@given(st.integers(2, 3).flatmap(
    lambda k: st.lists(st.lists(st.lists(st.integers(-2, 2), min_size=k, max_size=k), min_size=k, max_size=k),
                       min_size=2, max_size=2)))
def test_eigen_and_module_engines_agree(op_rows):
    k = len(op_rows[0])
    ops = [[[Fr(v) for v in r] for r in m] for m in op_rows]
    assert cz.irreducible_module(Q, ops, k) == modules.is_irreducible(Q, ops, k)[0]


@given(st.lists(st.integers(0, 2), min_size=36, max_size=36))
def test_batched_rank_matches_scalar_rank(entries):
    import numpy as np
    X = np.array(entries, dtype=np.int64).reshape(4, 3, 3)
    ranks = modules.batch_rank_mod_p(X, 3)
    F = GF[3]
    for M, r in zip(X, ranks):
        assert r == la.rank([[F(int(v)) for v in row] for row in M])
