from __future__ import annotations

from fractions import Fraction as Fr

import pytest
import sympy
from hypothesis import given, strategies as st

from liechains.errors import DegreeOutOfRange, DivisionByZero, ParseError, UnsupportedField
from liechains.fields import (FieldSpec, Mod, arith, hilbert_symbol, is_square, poly_eval,
                              quadratic_form_invariants, roots_in_field, ternary_isotropic)

Q = FieldSpec.rationals()
GF5 = FieldSpec.prime(5)
QI = FieldSpec.quadratic(-1)
SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
nonzero_rationals = rationals.filter(lambda x: x != 0)


# -- contract examples ---------------------------------------------------------


def test_rational_addition():
    assert arith(Fr(2, 3), Fr(1, 6), "add") == Fr(5, 6)


def test_gf5_inverse():
    assert arith(GF5(3), None, "inv") == GF5(2)


def test_gaussian_norm():
    i = QI.sqrt_d()
    assert arith(1 + i, 1 - i, "mul") == QI(2)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        arith(Fr(1), Fr(0), "div")
    with pytest.raises(DivisionByZero):
        arith(GF5(0), None, "inv")


@pytest.mark.parametrize("a, expected", [(Fr(4, 9), (True, Fr(2, 3))), (Fr(-1), (False, None))])
def test_is_square_rationals(a, expected):
    assert is_square(a) == expected


def test_is_square_gf5():
    assert is_square(GF5(2)) == (False, None)


def test_roots_examples():
    assert roots_in_field(Q, [1, 0, 1]) == []
    assert sorted(roots_in_field(GF5, [1, 0, 1]), key=int) == [GF5(2), GF5(3)]
    roots = roots_in_field(QI, [1, 0, 1])
    i = QI.sqrt_d()
    assert set(roots) == {i, -i}


def test_roots_degree_bound():
    with pytest.raises(DegreeOutOfRange):
        roots_in_field(Q, [1, 0, 0, 0, 1])


@pytest.mark.parametrize("diag, expected", [((1, 1, -1), True), ((1, 1, 1), False), ((-1, -1, -1), False)])
def test_ternary_examples(diag, expected):
    assert ternary_isotropic(diag) is expected


def test_ternary_other_fields():
    assert ternary_isotropic((1, 1, 1), GF5) is True
    with pytest.raises(UnsupportedField):
        ternary_isotropic((1, 1, 1), QI)


def test_field_literals_roundtrip():
    for F in (Q, GF5, QI, FieldSpec.quadratic(2)):
        assert FieldSpec.from_literal(F.literal()) == F
    with pytest.raises(ParseError):
        FieldSpec.from_literal("R")
    with pytest.raises(ParseError):
        FieldSpec.from_literal("GF(4)")


def test_scalar_text_forms():
    assert Q.format(Fr(-6, 4)) == "-3/2"
    assert Q.parse("-3/2") == Fr(-3, 2)
    F = FieldSpec.quadratic(2)
    x = F(Fr(1, 2)) + F(3) * F.sqrt_d()
    assert F.parse(F.format(x)) == x
    assert GF5.format(GF5(-1)) == "4"


# -- oracles and properties ------------------------------------------------------


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_is_square_matches_exhaustive(p):
    F = FieldSpec.prime(p)
    squares = {(x * x) % p for x in range(p)}
    for a in range(p):
        flag, root = is_square(F(a))
        assert flag == (a in squares)
        if flag:
            assert root * root == F(a)


@given(rationals)
def test_is_square_root_is_correct(a):
    flag, root = is_square(a)
    if flag:
        assert root * root == a
    assert flag == (a >= 0 and sympy.sqrt(sympy.Rational(a.numerator, a.denominator)).is_rational)


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4).filter(lambda c: c[-1] != 0))
def test_rational_roots_match_sympy(coeffs):
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x)
    expected = {Fr(int(r.p), int(r.q)) for r in poly.ground_roots() if r.is_rational}
    got = roots_in_field(Q, [Fr(c) for c in coeffs])
    assert set(got) == expected
    assert all(poly_eval([Fr(c) for c in coeffs], r) == 0 for r in got)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
@given(data=st.data())
def test_finite_roots_exhaustive(p, data):
    coeffs = data.draw(st.lists(st.integers(0, p - 1), min_size=2, max_size=4).filter(lambda c: c[-1] % p))
    F = FieldSpec.prime(p)
    expected = {F(x) for x in range(p) if poly_eval([F(c) for c in coeffs], F(x)) == F(0)}
    assert set(roots_in_field(F, [F(c) for c in coeffs])) == expected


def _isotropic_by_search(a: int, b: int, c: int, bound: int = 90) -> bool:
    # Holzer's bound keeps a minimal zero well inside this box for |coefficients| <= 9
    for x in range(bound + 1):
        for y in range(-bound, bound + 1):
            if x == 0 and y == 0:
                continue
            t = -(a * x * x + b * y * y)
            if t % c == 0 and t // c >= 0:
                z2 = t // c
                if sympy.integer_nthroot(z2, 2)[1]:
                    return True
    return False


@given(st.lists(st.integers(-9, 9).filter(bool), min_size=3, max_size=3))
def test_ternary_matches_exhaustive_search(diag):
    assert ternary_isotropic(diag) is _isotropic_by_search(*diag)


@given(st.lists(nonzero_rationals, min_size=3, max_size=3), nonzero_rationals, st.integers(0, 2))
def test_ternary_square_scaling(diag, r, idx):
    scaled = list(diag)
    scaled[idx] = scaled[idx] * r * r
    assert ternary_isotropic(diag) == ternary_isotropic(scaled)


@given(nonzero_rationals, nonzero_rationals)
def test_hilbert_product_formula(a, b):
    places = [None] + list(sympy.primefactors(int(a.numerator * a.denominator * b.numerator * b.denominator) or 1))
    places = sorted(set(places) | {2}, key=lambda p: -1 if p is None else p)
    prod = 1
    for p in places:
        prod *= hilbert_symbol(a, b, p)
    assert prod == 1


@given(st.lists(nonzero_rationals, min_size=3, max_size=3), st.permutations([0, 1, 2]))
def test_form_invariants_permutation_stable(diag, perm):
    assert quadratic_form_invariants(diag) == quadratic_form_invariants([diag[i] for i in perm])


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    if b:
        assert arith(arith(a, b, "div"), b, "mul") == a


@given(st.integers(0, 96), st.integers(0, 96), st.sampled_from([2, 3, 5, 7, 97]))
def test_mod_canonical(a, b, p):
    x, y = Mod(a, p), Mod(b, p)
    assert 0 <= (x + y).v < p and 0 <= (x * y).v < p
    assert Mod((x * y).v, p) == x * y
    if y:
        assert (x / y) * y == x


@given(rationals, rationals, rationals, rationals, st.sampled_from([-1, 2, -3, 5]))
def test_quadratic_field_axioms(a, b, c, d, D):
    F = FieldSpec.quadratic(D)
    s = F.sqrt_d()
    x, y = a + b * s, c + d * s
    assert x * y == y * x
    assert F.parse(F.format(x)) == x
    if y:
        assert (x / y) * y == x
        assert y * y.inverse() == F(1)
