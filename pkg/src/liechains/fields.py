"""Exact scalar fields: the rationals, quadratic extensions Q(sqrt d), and GF(p).

Rational scalars are plain :class:`fractions.Fraction` values.  Elements of
Q(sqrt d) are :class:`QuadNumber` and elements of GF(p) are :class:`Mod`; both
support the usual arithmetic operators, so the linear algebra above this
module is written once against operator syntax.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterator, Sequence, Union

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    ParseError,
    UnsupportedField,
)

MAX_PRIME = 97

RATIONALS = "Q"
QUADEXT = "QuadExt"
PRIME = "GF"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    q = 2
    while q * q <= n:
        if n % (q * q) == 0:
            return False
        q += 1
    return True


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# element types
# ---------------------------------------------------------------------------


class Mod:
    """Residue class modulo a prime ``p``, always stored in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction) and other.denominator == 1:
            return other.numerator
        raise FieldMismatch(f"cannot combine GF({self.p}) with {type(other).__name__}")

    def __add__(self, o):
        return Mod(self.v + self._coerce(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Mod(self.v - self._coerce(o), self.p)

    def __rsub__(self, o):
        return Mod(self._coerce(o) - self.v, self.p)

    def __mul__(self, o):
        return Mod(self.v * self._coerce(o), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        return self * Mod(self._coerce(o), self.p).inverse()

    def __rtruediv__(self, o):
        return Mod(self._coerce(o), self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Mod(pow(self.v, k, self.p), self.p)

    def __eq__(self, o):
        if isinstance(o, Mod):
            return self.p == o.p and self.v == o.v
        if isinstance(o, int):
            return self.v == o % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@total_ordering
class QuadNumber:
    """``a + b*sqrt(d)`` with rational ``a`` and ``b``; ``d`` is square-free."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other) -> "QuadNumber":
        if isinstance(other, QuadNumber):
            if other.d != self.d:
                raise FieldMismatch(f"Q(sqrt {self.d}) vs Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNumber(other, 0, self.d)
        raise FieldMismatch(f"cannot combine Q(sqrt {self.d}) with {type(other).__name__}")

    def __add__(self, o):
        o = self._coerce(o)
        return QuadNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._coerce(o)
        return QuadNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        return QuadNumber(
            self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d
        )

    __rmul__ = __mul__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.d)

    def conjugate(self) -> "QuadNumber":
        return QuadNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadNumber":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("0 has no inverse")
        return QuadNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, o):
        return self * self._coerce(o).inverse()

    def __rtruediv__(self, o):
        return self._coerce(o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadNumber(1, 0, self.d)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, QuadNumber):
            return self.d == o.d and self.a == o.a and self.b == o.b
        if isinstance(o, (int, Fraction)):
            return self.b == 0 and self.a == o
        return NotImplemented

    def __lt__(self, o):
        # only used for deterministic sorting of root sets
        o = self._coerce(o)
        return (self.a, self.b) < (o.a, o.b)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QuadNumber({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        return f"{_fmt_fraction(self.a)}+{_fmt_fraction(self.b)}*s"


Scalar = Union[Fraction, QuadNumber, Mod]


def _fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def _parse_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.match(text)
    if not m:
        raise ParseError(f"not a rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


# ---------------------------------------------------------------------------
# field descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """Which field the scalars live in.

    Build one with :meth:`rationals`, :meth:`quadratic` or :meth:`prime`.
    """

    kind: str
    d: int | None = None
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.d is not None or self.p is not None:
                raise ValueError("Q takes no parameters")
        elif self.kind == QUADEXT:
            if self.d is None or self.d == 1 or not is_squarefree(self.d):
                raise ValueError(f"d must be square-free and != 1, got {self.d}")
        elif self.kind == PRIME:
            if self.p is None or not is_prime(self.p) or self.p > MAX_PRIME:
                raise ValueError(f"p must be a prime <= {MAX_PRIME}, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def quadratic(cls, d: int) -> "FieldSpec":
        return cls(QUADEXT, d=d)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p=p)

    # -- basic properties ---------------------------------------------------

    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    @property
    def is_finite(self) -> bool:
        return self.kind == PRIME

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction, string or field element into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == RATIONALS:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            if isinstance(x, QuadNumber) or isinstance(x, Mod):
                raise FieldMismatch(f"{x!r} is not in Q")
        elif self.kind == QUADEXT:
            if isinstance(x, QuadNumber):
                if x.d != self.d:
                    raise FieldMismatch(f"{x!r} is not in Q(sqrt {self.d})")
                return x
            if isinstance(x, (int, Fraction)):
                return QuadNumber(x, 0, self.d)
        else:
            if isinstance(x, Mod):
                if x.p != self.p:
                    raise FieldMismatch(f"{x!r} is not in GF({self.p})")
                return x
            if isinstance(x, int):
                return Mod(x, self.p)
            if isinstance(x, Fraction):
                return Mod(x.numerator, self.p) / Mod(x.denominator, self.p)
        raise FieldMismatch(f"cannot coerce {x!r} into {self.literal()}")

    def sqrt_d(self) -> QuadNumber:
        if self.kind != QUADEXT:
            raise UnsupportedField("sqrt(d) exists only in a quadratic extension")
        return QuadNumber(0, 1, self.d)

    def elements(self) -> Iterator[Mod]:
        if not self.is_finite:
            raise UnsupportedField("only finite fields can be enumerated")
        return (Mod(v, self.p) for v in range(self.p))

    def belongs(self, x) -> bool:
        if self.kind == RATIONALS:
            return isinstance(x, Fraction)
        if self.kind == QUADEXT:
            return isinstance(x, QuadNumber) and x.d == self.d
        return isinstance(x, Mod) and x.p == self.p

    # -- text forms ---------------------------------------------------------

    def literal(self) -> str:
        if self.kind == RATIONALS:
            return "Q"
        if self.kind == QUADEXT:
            return f"Q(sqrt,{self.d})"
        return f"GF({self.p})"

    def __str__(self):
        return self.literal()

    @classmethod
    def from_literal(cls, text: str) -> "FieldSpec":
        t = text.replace(" ", "")
        if t == "Q":
            return cls.rationals()
        m = re.fullmatch(r"Q\(sqrt,(-?\d+)\)", t)
        if m:
            try:
                return cls.quadratic(int(m.group(1)))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        m = re.fullmatch(r"GF\((\d+)\)", t)
        if m:
            try:
                return cls.prime(int(m.group(1)))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"unknown field literal {text!r}")

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        if self.kind == RATIONALS:
            return _parse_fraction(text)
        if self.kind == PRIME:
            if not re.fullmatch(r"[+-]?\d+", text):
                raise ParseError(f"not a GF({self.p}) literal: {text!r}")
            return Mod(int(text), self.p)
        m = re.fullmatch(r"\s*([^*]+?)\s*\+\s*([^*+]+(?:/\d+)?)\s*\*\s*s\s*", text)
        if m:
            return QuadNumber(_parse_fraction(m.group(1)), _parse_fraction(m.group(2)), self.d)
        return QuadNumber(_parse_fraction(text), 0, self.d)

    def format(self, x: Scalar) -> str:
        x = self(x)
        if self.kind == RATIONALS:
            return _fmt_fraction(x)
        if self.kind == PRIME:
            return str(x.v)
        return str(x)

    # -- decision procedures ------------------------------------------------

    def is_square(self, a) -> tuple[bool, Scalar | None]:
        """Return ``(True, r)`` with ``r*r == a`` if ``a`` is a square, else ``(False, None)``."""
        a = self(a)
        if self.kind == RATIONALS:
            r = _rational_sqrt(a)
            return (r is not None, r)
        if self.kind == PRIME:
            for r in range(self.p):
                if (r * r - a.v) % self.p == 0:
                    return True, Mod(r, self.p)
            return False, None
        return _quad_sqrt(a)

    def roots(self, coeffs: Sequence) -> list[Scalar]:
        return roots_in_field(self, coeffs)


def _quad_sqrt(a: QuadNumber) -> tuple[bool, QuadNumber | None]:
    d = a.d
    if a.b == 0:
        r = _rational_sqrt(a.a)
        if r is not None:
            return True, QuadNumber(r, 0, d)
        r = _rational_sqrt(a.a / d)
        if r is not None:
            return True, QuadNumber(0, r, d)
        return False, None
    n = _rational_sqrt(a.norm())
    if n is None:
        return False, None
    for cand in ((a.a + n) / 2, (a.a - n) / 2):
        u = _rational_sqrt(cand)
        if u:
            root = QuadNumber(u, a.b / (2 * u), d)
            if root * root == a:
                return True, root
    return False, None


def arith(a, b, op: str):
    """Binary/unary field operation by name; ``b`` is ignored for ``neg``/``inv``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        if not a:
            raise DivisionByZero("0 has no inverse")
        return 1 / a
    raise ValueError(f"unknown op {op!r}")


def is_square(a) -> tuple[bool, Scalar | None]:
    return field_of(a).is_square(a)


def field_of(a) -> FieldSpec:
    if isinstance(a, Mod):
        return FieldSpec.prime(a.p)
    if isinstance(a, QuadNumber):
        return FieldSpec.quadratic(a.d)
    if isinstance(a, (int, Fraction)):
        return FieldSpec.rationals()
    raise FieldMismatch(f"{a!r} is not a scalar")


# ---------------------------------------------------------------------------
# polynomial roots (degree <= 3)
# ---------------------------------------------------------------------------


def poly_eval(coeffs: Sequence, x):
    """Evaluate ``sum coeffs[i] * x**i`` by Horner's rule."""
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    q = 1
    while q * q <= n:
        if n % q == 0:
            small.append(q)
            if q * q != n:
                large.append(n // q)
        q += 1
    return small + large[::-1]


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    coeffs = _trim([Fraction(c) for c in coeffs])
    roots = []
    while len(coeffs) > 1 and coeffs[0] == 0:
        roots.append(Fraction(0))
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return sorted(set(roots))
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if poly_eval(coeffs, r) == 0:
                    roots.append(r)
    return sorted(set(roots))


def _deflate(coeffs: list, r) -> list:
    """Divide by ``(x - r)`` assuming ``r`` is a root."""
    n = len(coeffs) - 1
    out = [None] * n
    carry = coeffs[n]
    for i in range(n - 1, -1, -1):
        out[i] = carry
        carry = coeffs[i] + carry * r
    return out


def _quadratic_roots(field: FieldSpec, c0, c1, c2) -> list:
    disc = c1 * c1 - 4 * c0 * c2
    ok, root = field.is_square(disc)
    if not ok:
        return []
    return sorted({(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)}, key=_sort_key)


def _sort_key(x):
    if isinstance(x, Mod):
        return x.v
    if isinstance(x, QuadNumber):
        return (x.a, x.b)
    return x


def roots_in_field(field: FieldSpec, coeffs: Sequence) -> list[Scalar]:
    """All roots lying in ``field`` of the polynomial ``sum coeffs[i] x^i``.

    Coefficients are listed constant term first.  The leading coefficient must
    be nonzero and the degree at most 3.
    """
    cs = [field(c) for c in coeffs]
    if not cs or not cs[-1]:
        raise ValueError("leading coefficient must be nonzero")
    deg = len(cs) - 1
    if deg > 3:
        raise DegreeOutOfRange(f"degree {deg} > 3")
    if deg == 0:
        return []
    if field.kind == PRIME:
        return [x for x in field.elements() if not poly_eval(cs, x)]
    if field.kind == RATIONALS:
        return _rational_roots(cs)
    # Q(sqrt d)
    if deg == 1:
        return [-cs[0] / cs[1]]
    if deg == 2:
        return _quadratic_roots(field, *cs)
    if all(c.is_rational() for c in cs):
        rational = _rational_roots([c.a for c in cs])
        if rational:
            r = field(rational[0])
            rest = _deflate(cs, r)
            found = {r, *_quadratic_roots(field, *rest)}
            return sorted(found, key=_sort_key)
        # an irreducible rational cubic stays irreducible over a quadratic extension
        return []
    return _quad_cubic_roots(field, cs)


def _quad_cubic_roots(field: FieldSpec, cs: list[QuadNumber]) -> list[QuadNumber]:
    # cubic with genuinely irrational coefficients: factor over Q(sqrt d) with sympy
    import sympy

    x = sympy.Symbol("x")
    sd = sympy.sqrt(field.d)

    def to_sympy(c: QuadNumber):
        return sympy.Rational(c.a.numerator, c.a.denominator) + sympy.Rational(
            c.b.numerator, c.b.denominator
        ) * sd

    def from_sympy(e) -> QuadNumber:
        e = sympy.expand(sympy.radsimp(e))
        b = sympy.Rational(e.coeff(sd))
        a = sympy.Rational(sympy.expand(e - b * sd))
        return QuadNumber(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)), field.d)

    poly = sympy.Poly(sum(to_sympy(c) * x**i for i, c in enumerate(cs)), x, extension=sd)
    found = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() == 1:
            lead, const = factor.all_coeffs()
            q = from_sympy(-const / lead)
            if not poly_eval(cs, q):
                found.append(q)
    return sorted(set(found), key=_sort_key)


def factor_poly(field: FieldSpec, coeffs: Sequence) -> list[tuple[list, int]]:
    """Monic irreducible factors of ``sum coeffs[i] x^i`` over ``field`` with multiplicities.

    Factoring of any degree is delegated to sympy.  Factors are returned
    constant term first, sorted by degree.
    """
    import sympy

    cs = _trim([field(c) for c in coeffs])
    if not cs or not cs[-1]:
        raise ValueError("cannot factor the zero polynomial")
    x = sympy.Symbol("x")
    if field.kind == PRIME:
        poly = sympy.Poly([int(c) for c in reversed(cs)], x, modulus=field.p)
        conv = lambda e: field(int(e))
    elif field.kind == RATIONALS:
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(cs)], x)
        conv = lambda e: Fraction(int(sympy.Rational(e).p), int(sympy.Rational(e).q))
    else:
        sd = sympy.sqrt(field.d)
        expr = sum(
            (sympy.Rational(c.a.numerator, c.a.denominator)
             + sympy.Rational(c.b.numerator, c.b.denominator) * sd) * x**i
            for i, c in enumerate(cs)
        )
        poly = sympy.Poly(expr, x, extension=sd)

        def conv(e):
            e = sympy.expand(sympy.radsimp(e))
            b = sympy.Rational(e.coeff(sd))
            a = sympy.Rational(sympy.expand(e - b * sd))
            return QuadNumber(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)), field.d)

    out = []
    for factor, mult in poly.factor_list()[1]:
        raw = [conv(c) for c in reversed(factor.all_coeffs())]
        lead = raw[-1]
        out.append(([c / lead for c in raw], mult))
    out.sort(key=lambda fm: len(fm[0]))
    return out


# ---------------------------------------------------------------------------
# Hilbert symbols and ternary isotropy over Q
# ---------------------------------------------------------------------------


def _squarefree_part(n: int) -> int:
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    q = 2
    while q * q <= n:
        while n % (q * q) == 0:
            n //= q * q
        if n % q == 0:
            out *= q
            n //= q
        q += 1
    return sign * out * n


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _split_valuation(a: int, p: int) -> tuple[int, int]:
    k = 0
    while a % p == 0:
        a //= p
        k += 1
    return k, a


def hilbert_symbol(a, b, p: int | None) -> int:
    """Hilbert symbol ``(a, b)_p`` for nonzero rationals; ``p=None`` is the real place."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    # multiply by squares of denominators to reach integers
    a = int(a * a.denominator**2)
    b = int(b * b.denominator**2)
    if p is None:
        return -1 if (a < 0 and b < 0) else 1
    alpha, u = _split_valuation(a, p)
    beta, v = _split_valuation(b, p)
    if p != 2:
        eps = (p - 1) // 2
        sign = (-1) ** (alpha * beta * eps)
        return sign * _legendre(u, p) ** beta * _legendre(v, p) ** alpha
    e = lambda t: ((t - 1) // 2) % 2  # noqa: E731
    w = lambda t: ((t * t - 1) // 8) % 2  # noqa: E731
    return (-1) ** ((e(u) * e(v) + alpha * w(v) + beta * w(u)) % 2)


def _relevant_primes(*values: Fraction) -> list[int]:
    primes = {2}
    for x in values:
        x = Fraction(x)
        primes.update(_prime_factors(x.numerator))
        primes.update(_prime_factors(x.denominator))
    return sorted(primes)


def ternary_isotropic(diag: Sequence, field: FieldSpec | None = None) -> bool:
    """Does ``a x^2 + b y^2 + c z^2`` have a nontrivial zero?

    Over Q this is decided through Hilbert symbols (Hasse-Minkowski).  Every
    nondegenerate ternary form over a finite field is isotropic.
    """
    field = field or FieldSpec.rationals()
    if field.kind == PRIME:
        return True
    if field.kind != RATIONALS:
        raise UnsupportedField("ternary isotropy is decided over Q only")
    a, b, c = (Fraction(x) for x in diag)
    if not (a and b and c):
        raise ValueError("coefficients must be nonzero")
    a, b, c = (Fraction(_squarefree_part(int(x * x.denominator**2))) for x in (a, b, c))
    alpha, beta = -a * c, -b * c
    for p in [None, *_relevant_primes(alpha, beta)]:
        if hilbert_symbol(alpha, beta, p) != 1:
            return False
    return True


def quadratic_form_invariants(diag: Sequence) -> dict:
    """Isometry invariants of a diagonal rational form.

    Returns the square class of the discriminant, the signature, and the Hasse
    invariants at every prime where one can be nontrivial.  Two nondegenerate
    rational forms are isometric exactly when these agree.
    """
    entries = [Fraction(x) for x in diag]
    if any(x == 0 for x in entries):
        raise ValueError("form must be nondegenerate")
    ints = [_squarefree_part(int(x * x.denominator**2)) for x in entries]
    disc = 1
    for x in ints:
        disc *= x
    disc = _squarefree_part(disc)
    positive = sum(1 for x in ints if x > 0)
    primes = _relevant_primes(*ints)
    hasse = {}
    for p in primes:
        h = 1
        for i in range(len(ints)):
            for j in range(i + 1, len(ints)):
                h *= hilbert_symbol(ints[i], ints[j], p)
        hasse[p] = h
    return {
        "discriminant": disc,
        "signature": (positive, len(ints) - positive),
        "hasse": {p: h for p, h in hasse.items() if h != 1},
    }
