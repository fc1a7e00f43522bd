"""Exact dense linear algebra over a :class:`~liechains.fields.FieldSpec`.

Matrices are plain lists of row lists.  Operators act on column vectors, so
``mat_vec(A, v)[r] = sum_c A[r][c] * v[c]``.  Subspaces are stored by their
unique reduced row-echelon basis, which doubles as a hash key.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch, NotInvariant
from .fields import FieldSpec

Matrix = list


def zeros(field: FieldSpec, rows: int, cols: int) -> Matrix:
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(field: FieldSpec, n: int) -> Matrix:
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[_dot(row, col) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Sequence) -> list:
    return [_dot(row, v) for row in a]


def _dot(u: Sequence, v: Sequence):
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = x * y + acc
    if isinstance(acc, int) and u:
        acc = u[0] * 0
    return acc


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def trace(m: Matrix):
    acc = m[0][0] * 0
    for i in range(len(m)):
        acc = acc + m[i][i]
    return acc


def is_scalar_matrix(m: Matrix) -> bool:
    n = len(m)
    return all(
        (m[i][j] == m[0][0]) if i == j else not m[i][j] for i in range(n) for j in range(n)
    )


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------


def _bitsize(x) -> int:
    if isinstance(x, Fraction):
        return x.numerator.bit_length() + x.denominator.bit_length()
    a = getattr(x, "a", None)
    if isinstance(a, Fraction):
        return _bitsize(a) + _bitsize(x.b)
    return 0


def rref(rows: Iterable[Sequence], ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form (zero rows dropped) and the pivot columns.

    Among the rows eligible for a pivot, the one with the smallest entry
    bit-size is chosen; the result is the unique RREF regardless.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        best, best_size = None, None
        for i in range(r, len(m)):
            if m[i][c]:
                size = _bitsize(m[i][c])
                if best is None or size < best_size:
                    best, best_size = i, size
                    if size == 0:
                        break
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def echelonize(m: Matrix) -> tuple[list[list], int, list[list]]:
    """Return ``(rref, rank, kernel_basis)`` of ``m``; the kernel is ``{x : m x = 0}``."""
    ncols = len(m[0]) if m else 0
    red, pivots = rref(m, ncols)
    zero = m[0][0] * 0 if ncols else None
    return red, len(pivots), _kernel_from_rref(red, pivots, ncols, zero)


def _kernel_from_rref(red: list[list], pivots: list[int], ncols: int, zero=None) -> list[list]:
    if ncols == 0:
        return []
    if red:
        zero = red[0][0] * 0
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        if zero is None:
            raise ValueError("kernel of an empty matrix needs a field; use kernel()")
        v = [zero] * ncols
        v[f] = zero + 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def kernel(field: FieldSpec, m: Matrix, ncols: int | None = None) -> list[list]:
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red, pivots = rref(m, ncols)
    if not red:
        return identity(field, ncols)
    return _kernel_from_rref(red, pivots, ncols)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def solve(field: FieldSpec, a: Matrix, b: Sequence, ncols: int | None = None) -> list | None:
    """A particular solution of ``a x = b``, or ``None`` if inconsistent."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def inverse(field: FieldSpec, m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + idrow for row, idrow in zip(m, identity(field, n))]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def determinant(field: FieldSpec, m: Matrix):
    n = len(m)
    a = [list(r) for r in m]
    det = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


# ---------------------------------------------------------------------------
# polynomials of matrices
# ---------------------------------------------------------------------------


def charpoly(field: FieldSpec, m: Matrix) -> list:
    """Characteristic polynomial ``det(xI - m)``, constant term first (monic).

    Uses the division-free Berkowitz recursion so it is valid in every
    characteristic.
    """
    n = len(m)
    if n == 0:
        return [field.one]
    # Berkowitz: build Toeplitz vectors from the trailing principal submatrices
    vect = [field.one, -m[0][0]]
    for k in range(1, n):
        a_kk = m[k][k]
        row = m[k][:k]
        col = [m[i][k] for i in range(k)]
        sub = [r[:k] for r in m[:k]]
        # entries: 1, -a_kk, -R C, -R A C, -R A^2 C, ...
        coeffs = [field.one, -a_kk]
        vec = col
        for _ in range(k):
            coeffs.append(-_dot(row, vec))
            vec = mat_vec(sub, vec)
        new = []
        for i in range(k + 2):
            acc = field.zero
            for j in range(max(0, i - len(coeffs) + 1), min(i, len(vect) - 1) + 1):
                acc = acc + coeffs[i - j] * vect[j]
            new.append(acc)
        vect = new
    # vect is highest-degree first
    return list(reversed(vect))


def minimal_polynomial(field: FieldSpec, m: Matrix) -> list:
    """Monic minimal polynomial of ``m``, constant term first."""
    n = len(m)
    powers = [identity(field, n)]
    flat = [_flatten(powers[0])]
    while True:
        nxt = matmul(powers[-1], m)
        target = _flatten(nxt)
        sol = solve(field, transpose(flat), target, len(flat))
        if sol is not None:
            return [-c for c in sol] + [field.one]
        powers.append(nxt)
        flat.append(target)


def _flatten(m: Matrix) -> list:
    return [x for row in m for x in row]


def poly_of_matrix(field: FieldSpec, coeffs: Sequence, m: Matrix) -> Matrix:
    n = len(m)
    out = zeros(field, n, n)
    for c in reversed(coeffs):
        out = matmul(out, m)
        for i in range(n):
            out[i][i] = out[i][i] + c
    return out


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


class Subspace:
    """A subspace of ``field^ambient`` held by its reduced row-echelon basis."""

    __slots__ = ("field", "ambient", "rows", "pivots", "_hash")

    def __init__(self, field: FieldSpec, ambient: int, vectors: Iterable[Sequence] = ()):
        vectors = [[field(x) for x in v] for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient {ambient}")
        red, pivots = rref(vectors, ambient)
        self.field = field
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in red)
        self.pivots = tuple(pivots)
        self._hash = hash((ambient, self.rows))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, [])

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, identity(field, n))

    @classmethod
    def span(cls, field: FieldSpec, n: int, *vectors) -> "Subspace":
        return cls(field, n, vectors)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> list[list]:
        return [list(r) for r in self.rows]

    def key(self) -> tuple:
        return self.rows

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join("(" + ",".join(str(x) for x in r) + ")" for r in self.rows)
        return f"Subspace(dim={self.dim}/{self.ambient}: {body})"

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise AmbientMismatch("subspaces live in different spaces")

    def reduce(self, v: Sequence) -> list:
        """Remainder of ``v`` after eliminating the pivot coordinates."""
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def contains_vector(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains_vector(v)

    def coordinates(self, v: Sequence) -> list:
        """Coordinates of a member vector with respect to ``basis``."""
        return [v[pc] for pc in self.pivots]

    def from_coordinates(self, coords: Sequence) -> list:
        out = [self.field.zero] * self.ambient
        for c, row in zip(coords, self.rows):
            if c:
                out = [x + c * y for x, y in zip(out, row)]
        return out

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return self.dim <= other.dim and all(other.contains_vector(r) for r in self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient, list(self.rows) + list(other.rows))

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection via the Zassenhaus block construction."""
        self._check(other)
        n = self.ambient
        zero = [self.field.zero] * n
        block = [list(r) + list(r) for r in self.rows] + [list(r) + zero for r in other.rows]
        red, pivots = rref(block, 2 * n)
        inter = [row[n:] for row, pc in zip(red, pivots) if pc >= n]
        return Subspace(self.field, n, inter)

    def add_vectors(self, vectors: Iterable[Sequence]) -> "Subspace":
        return Subspace(self.field, self.ambient, list(self.rows) + [list(v) for v in vectors])

    def complement_columns(self) -> list[int]:
        ps = set(self.pivots)
        return [c for c in range(self.ambient) if c not in ps]


def subspace_ops(a: Subspace, b: Subspace, op: str):
    if op == "sum":
        return a + b
    if op == "intersect":
        return a & b
    if op == "contains":
        return b <= a
    if op == "member":
        return a <= b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------


@dataclass
class Quotient:
    """Coordinates on ``V / W`` using the non-pivot columns of ``W`` (in ``V``-coordinates)."""

    V: Subspace
    W: Subspace
    w_in_v: Subspace  # W written in coordinates of V's basis
    columns: list[int]  # complement columns of w_in_v

    @property
    def dim(self) -> int:
        return len(self.columns)

    def project(self, v: Sequence) -> list:
        coords = self.V.coordinates(v)
        red = self.w_in_v.reduce(coords)
        return [red[c] for c in self.columns]

    def lift(self, q: Sequence) -> list:
        field = self.V.field
        coords = [field.zero] * self.V.dim
        for c, x in zip(self.columns, q):
            coords[c] = x
        return self.V.from_coordinates(coords)

    def preimage(self, sub: Subspace) -> Subspace:
        """Preimage in the ambient space of a subspace of the quotient."""
        return self.W.add_vectors(self.lift(r) for r in sub.rows)

    def image(self, sub: Subspace) -> Subspace:
        return Subspace(self.V.field, self.dim, [self.project(r) for r in sub.rows])


def make_quotient(V: Subspace, W: Subspace) -> Quotient:
    if not W <= V:
        raise AmbientMismatch("W must lie inside V")
    w_in_v = Subspace(V.field, V.dim, [V.coordinates(r) for r in W.rows])
    return Quotient(V, W, w_in_v, w_in_v.complement_columns())


def quotient_and_induced(V: Subspace, W: Subspace, ops: Sequence[Matrix]) -> tuple[int, list[Matrix], Quotient]:
    """Induced action of ``ops`` on ``V / W``.

    Each operator (an ambient square matrix) must map ``V`` into ``V`` and
    ``W`` into ``W``; otherwise :class:`NotInvariant` is raised.
    """
    q = make_quotient(V, W)
    induced = []
    for op in ops:
        for r in V.rows:
            if not V.contains_vector(mat_vec(op, r)):
                raise NotInvariant("operator does not preserve V")
        for r in W.rows:
            if not W.contains_vector(mat_vec(op, r)):
                raise NotInvariant("operator does not preserve W")
        cols = []
        for c in q.columns:
            coords = [V.field.zero] * V.dim
            coords[c] = V.field.one
            cols.append(q.project(mat_vec(op, V.from_coordinates(coords))))
        induced.append(transpose(cols) if cols else [])
    return q.dim, induced, q


def restrict_operator(V: Subspace, op: Matrix) -> Matrix:
    """Matrix of ``op`` on an invariant subspace ``V`` in the basis ``V.basis``."""
    cols = []
    for r in V.rows:
        image = mat_vec(op, r)
        if not V.contains_vector(image):
            raise NotInvariant("operator does not preserve the subspace")
        cols.append(V.coordinates(image))
    return transpose(cols) if cols else []
