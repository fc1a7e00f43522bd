from __future__ import annotations

import itertools
from fractions import Fraction as Fr

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.polys.domains import GF as SymGF, QQ
from sympy.polys.matrices import DomainMatrix

from liechains import linalg as la
from liechains.errors import AmbientMismatch, NotInvariant
from liechains.fields import FieldSpec
from liechains.linalg import Subspace

Q = FieldSpec.rationals()
GF2, GF3 = FieldSpec.prime(2), FieldSpec.prime(3)


def matrices(F: FieldSpec, max_rows=4, max_cols=4):
    entry = st.integers(-3, 3)
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entry.map(F), min_size=c, max_size=c), min_size=r, max_size=r)))


def _sympy_rank(F: FieldSpec, m) -> int:
    if F.characteristic() == 0:
        return DomainMatrix([[QQ(int(x.numerator), int(x.denominator)) for x in row] for row in m],
                            (len(m), len(m[0])), QQ).rank()
    dom = SymGF(F.p)
    return DomainMatrix([[dom(x.v) for x in row] for row in m], (len(m), len(m[0])), dom).rank()


def _vectors(F, n):
    return [[F(x) for x in v] for v in itertools.product(range(F.p), repeat=n)]


# -- contract examples ---------------------------------------------------------


def test_identity_rank():
    red, rank, ker = la.echelonize(la.identity(Q, 3))
    assert rank == 3 and ker == []


def test_rank_one_rational():
    red, rank, ker = la.echelonize([[Fr(1), Fr(2)], [Fr(2), Fr(4)]])
    assert rank == 1
    assert Subspace(Q, 2, ker) == Subspace(Q, 2, [[Fr(-2), Fr(1)]])


def test_rank_one_gf2():
    one = GF2(1)
    red, rank, ker = la.echelonize([[one, one], [one, one]])
    assert rank == 1
    assert Subspace(GF2, 2, ker) == Subspace(GF2, 2, [[one, one]])


def test_sum_and_intersection_of_axes():
    e1 = Subspace(Q, 3, [[1, 0, 0]])
    e2 = Subspace(Q, 3, [[0, 1, 0]])
    assert e1 + e2 == Subspace(Q, 3, [[1, 0, 0], [0, 1, 0]])
    assert (e1 & e2).dim == 0
    assert e1 & e1 == e1 + e1 == e1


def test_modular_dimension_gf2_example():
    A = Subspace(GF2, 4, [[1, 1, 0, 0], [0, 0, 1, 0]])
    B = Subspace(GF2, 4, [[0, 1, 1, 0], [1, 0, 0, 0]])
    assert (A + B).dim + (A & B).dim == A.dim + B.dim


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Subspace(Q, 2, [[1, 0]]) + Subspace(Q, 3, [[1, 0, 0]])


def test_induced_on_line_quotient():
    V = Subspace.full(Q, 2)
    W = Subspace(Q, 2, [[1, 0]])
    k, mats, q = la.quotient_and_induced(V, W, [[[Fr(1), Fr(1)], [Fr(0), Fr(1)]]])
    assert k == 1 and mats == [[[Fr(1)]]]


def test_induced_over_zero_is_original():
    op = [[Fr(1), Fr(2)], [Fr(3), Fr(4)]]
    k, mats, q = la.quotient_and_induced(Subspace.full(Q, 2), Subspace.zero(Q, 2), [op])
    assert k == 2 and mats == [op]


def test_induced_not_invariant():
    W = Subspace(Q, 2, [[1, 0]])
    with pytest.raises(NotInvariant):
        la.quotient_and_induced(Subspace.full(Q, 2), W, [[[Fr(0), Fr(0)], [Fr(1), Fr(0)]]])


def test_charpoly_and_determinant():
    m = [[Fr(2), Fr(1)], [Fr(0), Fr(3)]]
    assert la.determinant(Q, m) == 6
    assert la.charpoly(Q, m) == [Fr(6), Fr(-5), Fr(1)]


# -- oracles and properties ------------------------------------------------------


@pytest.mark.parametrize("F", [Q, GF2, GF3], ids=str)
@given(data=st.data())
def test_rank_and_kernel_match_sympy(F, data):
    m = data.draw(matrices(F))
    red, rank, ker = la.echelonize(m)
    assert rank == _sympy_rank(F, m)
    assert rank + len(ker) == len(m[0])
    for v in ker:
        assert not any(la.mat_vec(m, v))


@pytest.mark.parametrize("F", [Q, GF2, GF3], ids=str)
@given(data=st.data())
def test_rref_is_canonical(F, data):
    m = data.draw(matrices(F))
    mixed = [list(r) for r in m]
    if len(mixed) > 1:
        mixed[0] = [a + b for a, b in zip(mixed[0], mixed[1])]
        mixed = mixed[::-1]
    assert Subspace(F, len(m[0]), m) == Subspace(F, len(m[0]), mixed)


@pytest.mark.parametrize("F", [Q, GF2, GF3], ids=str)
@given(data=st.data())
def test_modular_dimension_law(F, data):
    n = data.draw(st.integers(1, 5))
    vec = st.lists(st.integers(-2, 2).map(F), min_size=n, max_size=n)
    A = Subspace(F, n, data.draw(st.lists(vec, max_size=4)))
    B = Subspace(F, n, data.draw(st.lists(vec, max_size=4)))
    assert (A + B).dim + (A & B).dim == A.dim + B.dim
    assert A & B <= A <= A + B


def test_zassenhaus_matches_brute_force_gf2():
    n = 4
    vecs = _vectors(GF2, n)
    subspaces = {Subspace(GF2, n, list(c)) for k in range(5) for c in itertools.combinations(vecs, k)}
    subspaces = sorted(subspaces, key=lambda U: str(U.key()))
    assert len(subspaces) == 67
    for A in subspaces:
        members_A = {tuple(v) for v in vecs if v in A}
        for B in subspaces:
            common = [list(v) for v in members_A if list(v) in B]
            assert A & B == Subspace(GF2, n, common)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_charpoly_matches_sympy(rows):
    m = [[Fr(x) for x in r] for r in rows]
    x = sympy.Symbol("x")
    expected = sympy.Matrix(rows).charpoly(x).all_coeffs()[::-1]
    assert la.charpoly(Q, m) == [Fr(int(c)) for c in expected]
    assert la.determinant(Q, m) == sympy.Matrix(rows).det()


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=2, max_size=2))
def test_quotient_lift_project(rows):
    V = Subspace.full(Q, 3)
    W = Subspace(Q, 3, rows)
    q = la.make_quotient(V, W)
    for i in range(q.dim):
        unit = [Fr(int(i == j)) for j in range(q.dim)]
        assert q.project(q.lift(unit)) == unit
    for w in W.rows:
        assert not any(q.project(w))
