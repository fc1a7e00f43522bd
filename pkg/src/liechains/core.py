"""Lie algebras given by structure constants, and their basic structure theory.

A :class:`LieAlgebra` stores the full antisymmetric bracket table of its
basis.  Subalgebras, ideals and chain members are :class:`Subspace` values
in coordinates of that basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import linalg as la
from . import modules
from .errors import (
    Indeterminate,
    JacobiViolation,
    LiftFailed,
    NotAnIdeal,
    NotARepresentation,
    UnsupportedField,
    VerificationFailed,
    WrongCharacteristic,
    WrongDimension,
)
from .fields import QUADEXT, RATIONALS, FieldSpec, roots_in_field, ternary_isotropic
from .linalg import Subspace

MAX_DIM = 12


class LieAlgebra:
    """Finite-dimensional Lie algebra over a :class:`FieldSpec`.

    ``brackets`` maps basis index pairs ``(i, j)`` with ``i < j`` to the
    coefficients of ``[e_i, e_j]``, either as ``{k: c}`` or as a full list.
    Antisymmetry is built in; Jacobi is checked unless ``check=False``.
    """

    def __init__(
        self,
        field: FieldSpec,
        dim: int,
        brackets: Mapping | None = None,
        names: Sequence[str] | None = None,
        meta: dict | None = None,
        check: bool = True,
    ):
        if not 0 <= dim <= MAX_DIM:
            raise WrongDimension(f"dimension {dim} outside 0..{MAX_DIM}")
        self.field = field
        self.dim = dim
        self.names = tuple(names) if names is not None else tuple(f"e{i}" for i in range(dim))
        if len(self.names) != dim:
            raise ValueError("one name per basis vector is required")
        self.meta = dict(meta or {})
        zero = field.zero
        table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket entries need 0 <= i < j < dim, got ({i}, {j})")
            items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
            for k, c in items:
                c = field(c)
                table[i][j][k] = c
                table[j][i][k] = -c
        self._table = tuple(tuple(tuple(v) for v in row) for row in table)
        self._cache: dict = {}
        if check:
            validate(self)

    # -- raw access ---------------------------------------------------------

    def product(self, i: int, j: int) -> tuple:
        return self._table[i][j]

    def structure(self) -> dict:
        """Nonzero constants ``{(i, j): {k: c}}`` for ``i < j``."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                coeffs = {k: c for k, c in enumerate(self._table[i][j]) if c}
                if coeffs:
                    out[(i, j)] = coeffs
        return out

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.field, self.dim, self._table) == (other.field, other.dim, other._table)

    def __hash__(self):
        return hash((self.field, self.dim, self._table))

    def __repr__(self):
        return f"LieAlgebra({self.field.literal()}, dim={self.dim}, names={list(self.names)})"

    # -- vectors ------------------------------------------------------------

    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def vec(self, coeffs: Iterable) -> list:
        return [self.field(c) for c in coeffs]

    def bracket(self, x: Sequence, y: Sequence) -> list:
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._table[i]
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                c = xi * yj
                out = [o + c * t for o, t in zip(out, row[j])] if any(row[j]) else out
        return out

    def ad(self, x: Sequence) -> list:
        """Matrix of ``ad x``: column ``c`` holds ``[x, e_c]``."""
        cols = [self.bracket(x, self.basis_vector(c)) for c in range(self.dim)]
        return la.transpose(cols) if cols else []

    def ad_basis(self) -> list:
        if "ad" not in self._cache:
            self._cache["ad"] = [self.ad(self.basis_vector(i)) for i in range(self.dim)]
        return self._cache["ad"]

    def ad_of_space(self, U: Subspace) -> list:
        return [self.ad(r) for r in U.rows]

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, *vectors) -> Subspace:
        return Subspace(self.field, self.dim, [self.vec(v) for v in vectors])

    def int_table(self) -> np.ndarray:
        """``T[i, j, k]`` as residues, for vectorized GF(p) work."""
        if not self.field.is_finite:
            raise UnsupportedField("integer tables exist only over GF(p)")
        if "int" not in self._cache:
            n = self.dim
            t = np.zeros((n, n, n), dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    for k, c in enumerate(self._table[i][j]):
                        t[i, j, k] = int(c)
            self._cache["int"] = t
        return self._cache["int"]


# ---------------------------------------------------------------------------
# result containers
# ---------------------------------------------------------------------------


@dataclass
class SubalgebraHandle:
    """A subalgebra with write-once cached predicate results and their provenance."""

    space: Subspace
    flags: dict = dc_field(default_factory=dict)

    def set_flag(self, name: str, value: bool, provenance: str) -> None:
        if name in self.flags and self.flags[name][0] != value:
            raise VerificationFailed(f"conflicting results for {name}")
        self.flags[name] = (value, provenance)

    def flag(self, name: str):
        return self.flags.get(name, (None, None))[0]


CHAIN_KINDS = ("maximal", "chief", "modular", "quasiideal", "ideal")


@dataclass
class ChainRecord:
    """Strictly increasing chain ``members[0] < ... < members[-1]`` with one certificate per step."""

    members: list
    certificates: list
    kind: str

    def __post_init__(self):
        if self.kind not in CHAIN_KINDS:
            raise ValueError(f"unknown chain kind {self.kind!r}")
        if len(self.certificates) != len(self.members) - 1:
            raise ValueError("one certificate per step is required")
        for a, b in zip(self.members, self.members[1:]):
            if not a < b:
                raise ValueError("chain members must be strictly increasing")

    @property
    def length(self) -> int:
        return len(self.members) - 1

    def codimensions(self) -> list[int]:
        return [b.dim - a.dim for a, b in zip(self.members, self.members[1:])]


@dataclass
class IdealChainLength:
    value: int
    witness: list
    methods: list


# ---------------------------------------------------------------------------
# validation and basic predicates
# ---------------------------------------------------------------------------


def validate(alg: LieAlgebra) -> None:
    """Raise :class:`JacobiViolation` on the first basis triple that fails Jacobi."""
    n = alg.dim
    e = [alg.basis_vector(i) for i in range(n)]
    for i, j, k in itertools.combinations(range(n), 3):
        a = alg.bracket(e[i], alg.bracket(e[j], e[k]))
        b = alg.bracket(e[j], alg.bracket(e[k], e[i]))
        c = alg.bracket(e[k], alg.bracket(e[i], e[j]))
        if any(x + y + z for x, y, z in zip(a, b, c)):
            raise JacobiViolation((i, j, k))


def bracket_space(alg: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    return Subspace(alg.field, alg.dim, [alg.bracket(a, b) for a in A.rows for b in B.rows])


def closure(alg: LieAlgebra, S: Subspace) -> Subspace:
    """Subalgebra generated by ``S``."""
    current = S
    while True:
        nxt = current + bracket_space(alg, current, current)
        if nxt.dim == current.dim:
            return current
        current = nxt


def is_subalgebra(alg: LieAlgebra, U: Subspace) -> bool:
    rows = U.rows
    return all(
        U.contains_vector(alg.bracket(rows[a], rows[b]))
        for a in range(len(rows))
        for b in range(a + 1, len(rows))
    )


def is_ideal(alg: LieAlgebra, I: Subspace, within: Subspace | None = None) -> bool:
    """``[within, I] ⊆ I`` (``within`` defaults to the whole algebra)."""
    W = within if within is not None else alg.full()
    return all(I.contains_vector(alg.bracket(w, x)) for w in W.rows for x in I.rows)


def centralizer(alg: LieAlgebra, S: Subspace, modulo: Subspace | None = None,
                within: Subspace | None = None) -> Subspace:
    """``{x in within : [x, S] ⊆ modulo}``; ``modulo`` defaults to 0."""
    W = within if within is not None else alg.full()
    M = modulo if modulo is not None else alg.zero()
    if not S.rows or not W.rows:
        return W
    # linear conditions on the coordinates of x in W's basis
    rows = []
    for s in S.rows:
        imgs = [M.reduce(alg.bracket(w, s)) for w in W.rows]
        for k in range(alg.dim):
            rows.append([img[k] for img in imgs])
    coords = la.kernel(alg.field, rows, W.dim)
    return Subspace(alg.field, alg.dim, [W.from_coordinates(c) for c in coords])


def center(alg: LieAlgebra) -> Subspace:
    return centralizer(alg, alg.full())


def derived_series(alg: LieAlgebra, U: Subspace | None = None) -> list:
    U = U if U is not None else alg.full()
    out = [U]
    while True:
        nxt = bracket_space(alg, out[-1], out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


def lower_central_series(alg: LieAlgebra, U: Subspace | None = None) -> list:
    U = U if U is not None else alg.full()
    out = [U]
    while True:
        nxt = bracket_space(alg, U, out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


def series(alg: LieAlgebra, kind: str) -> list:
    if kind == "derived":
        return derived_series(alg)
    if kind == "lower_central":
        return lower_central_series(alg)
    raise ValueError(f"unknown series {kind!r}")


def is_solvable(alg: LieAlgebra, U: Subspace | None = None) -> bool:
    return derived_series(alg, U)[-1].dim == 0


def is_nilpotent(alg: LieAlgebra, U: Subspace | None = None) -> bool:
    return lower_central_series(alg, U)[-1].dim == 0


def is_abelian(alg: LieAlgebra, U: Subspace | None = None) -> bool:
    U = U if U is not None else alg.full()
    return bracket_space(alg, U, U).dim == 0


def killing(alg: LieAlgebra) -> list:
    ads = alg.ad_basis()
    n = alg.dim
    return [[la.trace(la.matmul(ads[i], ads[j])) for j in range(n)] for i in range(n)]


def _require_char0(alg: LieAlgebra) -> None:
    if alg.field.characteristic() != 0:
        raise WrongCharacteristic("this procedure needs characteristic 0")


def radical0(alg: LieAlgebra) -> Subspace:
    """Solvable radical, as the Killing-orthogonal of ``[L, L]``."""
    _require_char0(alg)
    if "radical" in alg._cache:
        return alg._cache["radical"]
    derived = bracket_space(alg, alg.full(), alg.full())
    if derived.dim == 0:
        R = alg.full()
    else:
        K = killing(alg)
        R = Subspace(alg.field, alg.dim, la.kernel(alg.field, [la.mat_vec(K, d) for d in derived.rows], alg.dim))
    if not (is_ideal(alg, R) and is_solvable(alg, R)):
        raise VerificationFailed("radical candidate is not a solvable ideal")
    alg._cache["radical"] = R
    return R


def nilradical0(alg: LieAlgebra) -> Subspace:
    """Largest nilpotent ideal: the ``x`` in the radical whose ``ad x`` is trace-orthogonal
    to the associative algebra generated by ``ad R``."""
    _require_char0(alg)
    if "nilradical" in alg._cache:
        return alg._cache["nilradical"]
    R = radical0(alg)
    if R.dim == 0:
        N = R
    else:
        ad_r = alg.ad_of_space(R)
        env = modules.enveloping_algebra(alg.field, ad_r, alg.dim)
        rows = [[la.trace(la.matmul(a, b)) for a in ad_r] for b in env]
        coords = la.kernel(alg.field, rows, R.dim)
        N = Subspace(alg.field, alg.dim, [R.from_coordinates(c) for c in coords])
    if not (is_ideal(alg, N) and is_nilpotent(alg, N)):
        raise VerificationFailed("nilradical candidate is not a nilpotent ideal")
    if not bracket_space(alg, alg.full(), R) <= N:
        raise VerificationFailed("nilradical does not contain [L, R]")
    alg._cache["nilradical"] = N
    return N


def core(alg: LieAlgebra, U: Subspace, within: Subspace | None = None) -> Subspace:
    """Largest ideal of ``within`` (default ``L``) contained in ``U``."""
    W = within if within is not None else alg.full()
    V = U
    while True:
        # {v in V : [W, v] ⊆ V}
        nxt = centralizer(alg, W, modulo=V, within=V) if V.dim else V
        if nxt == V:
            return V
        V = nxt


def il(alg: LieAlgebra, B: Subspace, within: Subspace | None = None,
       bottom: Subspace | None = None) -> IdealChainLength:
    """Length of a longest chain of ideals of ``within`` from ``bottom`` (default 0) up to ``B``.

    Ideals of ``within`` between ``bottom`` and ``B`` are the ``ad within``
    submodules, so this is a composition length (Jordan-Hölder).
    """
    W = within if within is not None else alg.full()
    C = bottom if bottom is not None else alg.zero()
    ops = alg.ad_of_space(W)
    members, methods = modules.composition_series(alg.field, ops, B, C)
    return IdealChainLength(len(members) - 1, members, methods)


def chief_series(alg: LieAlgebra) -> ChainRecord:
    res = il(alg, alg.full())
    return ChainRecord(res.witness, ["ideal_step"] * res.value, "chief")


def ell(alg: LieAlgebra) -> int:
    if "ell" not in alg._cache:
        alg._cache["ell"] = il(alg, alg.full()).value
    return alg._cache["ell"]


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def quotient(alg: LieAlgebra, I: Subspace) -> tuple[LieAlgebra, la.Quotient]:
    if not is_ideal(alg, I):
        raise NotAnIdeal("quotient needs an ideal")
    q = la.make_quotient(alg.full(), I)
    m = q.dim
    lifts = [q.lift(_unit(alg.field, m, a)) for a in range(m)]
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            img = q.project(alg.bracket(lifts[a], lifts[b]))
            if any(img):
                brackets[(a, b)] = img
    names = [alg.names[c] for c in q.columns]
    return LieAlgebra(alg.field, m, brackets, names, check=False), q


def _unit(field: FieldSpec, n: int, i: int) -> list:
    v = [field.zero] * n
    v[i] = field.one
    return v


def subalgebra_restrict(alg: LieAlgebra, U: Subspace) -> LieAlgebra:
    """The subalgebra ``U`` as an algebra in the basis ``U.rows``."""
    if not is_subalgebra(alg, U):
        raise ValueError("not a subalgebra")
    rows = U.rows
    brackets = {}
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            img = U.coordinates(alg.bracket(rows[a], rows[b]))
            if any(img):
                brackets[(a, b)] = img
    return LieAlgebra(alg.field, U.dim, brackets, [f"u{i}" for i in range(U.dim)], check=False)


def direct_sum(A: LieAlgebra, B: LieAlgebra) -> LieAlgebra:
    if A.field != B.field:
        raise ValueError("summands live over different fields")
    n = A.dim
    brackets = {}
    for (i, j), c in A.structure().items():
        brackets[(i, j)] = dict(c)
    for (i, j), c in B.structure().items():
        brackets[(n + i, n + j)] = {n + k: v for k, v in c.items()}
    names = _dedupe(list(A.names) + list(B.names))
    return LieAlgebra(A.field, n + B.dim, brackets, names)


def _dedupe(names: list) -> list:
    seen: dict = {}
    out = []
    for nm in names:
        if nm in seen:
            seen[nm] += 1
            out.append(f"{nm}_{seen[nm]}")
        else:
            seen[nm] = 0
            out.append(nm)
    if len(set(out)) != len(out):
        return [f"e{i}" for i in range(len(names))]
    return out


def semidirect(S: LieAlgebra, module_dim: int, action: Sequence, names: Sequence[str] | None = None) -> LieAlgebra:
    """``A ⋊ S`` with ``A`` abelian of dimension ``module_dim``.

    ``action[i]`` is the matrix of basis element ``i`` of ``S`` on ``A``.  The
    result has ``A``'s basis first, then ``S``'s.
    """
    F = S.field
    m = module_dim
    if len(action) != S.dim:
        raise NotARepresentation("one matrix per basis element of S is required")
    mats = [[[F(x) for x in row] for row in a] for a in action]
    for i, j in itertools.combinations(range(S.dim), 2):
        lhs = la.zeros(F, m, m)
        for k, c in enumerate(S.product(i, j)):
            if c:
                lhs = la.mat_add(lhs, la.mat_scale(c, mats[k]))
        rhs = la.mat_add(la.matmul(mats[i], mats[j]), la.mat_scale(F(-1), la.matmul(mats[j], mats[i])))
        if lhs != rhs:
            raise NotARepresentation(f"action fails on the pair ({i}, {j})")
    brackets = {}
    for i, j in itertools.combinations(range(S.dim), 2):
        c = S.product(i, j)
        if any(c):
            brackets[(m + i, m + j)] = {m + k: v for k, v in enumerate(c) if v}
    for a in range(m):
        for s in range(S.dim):
            col = [mats[s][r][a] for r in range(m)]
            # [a, s] = -[s, a] = -action(s) a
            coeffs = {r: -v for r, v in enumerate(col) if v}
            if coeffs:
                brackets[(a, m + s)] = coeffs
    if names is None:
        names = [f"a{i}" for i in range(m)] + list(S.names)
    return LieAlgebra(F, m + S.dim, brackets, _dedupe(list(names)))


# ---------------------------------------------------------------------------
# Levi decomposition and simple ideals
# ---------------------------------------------------------------------------


def complement_abelian_factor(alg: LieAlgebra, P: Subspace, A: Subspace, K: Subspace) -> Subspace | None:
    """Subalgebra ``P'`` with ``K ⊆ P'``, ``P' + A = P`` and ``P' ∩ A = K``.

    Needs ``K ⊆ A ⊆ P`` with ``A`` and ``K`` ideals of ``P`` and ``[A, A] ⊆ K``.
    Solves the linear correction system ``[t_a, v_b] - [t_b, v_a] - sum c v_c = -w``
    modulo ``K``; returns ``None`` when it has no solution.
    """
    F = alg.field
    qPA = la.make_quotient(P, A)
    qAK = la.make_quotient(A, K)
    m, r = qPA.dim, qAK.dim
    if m == 0:
        return K
    if r == 0:
        return P
    t = [qPA.lift(_unit(F, m, a)) for a in range(m)]
    av = [qAK.lift(_unit(F, r, j)) for j in range(r)]
    rows, rhs = [], []
    for a, b in itertools.combinations(range(m), 2):
        br = alg.bracket(t[a], t[b])
        c = qPA.project(br)
        w = list(br)
        for cc, tc in zip(c, t):
            if cc:
                w = [x - cc * y for x, y in zip(w, tc)]
        w_coords = qAK.project(w)
        ta_a = [qAK.project(alg.bracket(t[a], av[j])) for j in range(r)]
        tb_a = [qAK.project(alg.bracket(t[b], av[j])) for j in range(r)]
        for coord in range(r):
            row = [F.zero] * (m * r)
            for j in range(r):
                row[b * r + j] = row[b * r + j] + ta_a[j][coord]
                row[a * r + j] = row[a * r + j] - tb_a[j][coord]
            for cidx, cc in enumerate(c):
                if cc:
                    row[cidx * r + coord] = row[cidx * r + coord] - cc
            rows.append(row)
            rhs.append(-w_coords[coord])
    if rows:
        sol = la.solve(F, rows, rhs, m * r)
        if sol is None:
            return None
    else:
        sol = [F.zero] * (m * r)
    gens = []
    for a in range(m):
        v = list(t[a])
        for j in range(r):
            x = sol[a * r + j]
            if x:
                v = [p + x * q for p, q in zip(v, av[j])]
        gens.append(v)
    out = K.add_vectors(gens)
    if not is_subalgebra(alg, out):
        raise LiftFailed("correction system produced a non-subalgebra")
    return out


def levi0(alg: LieAlgebra) -> tuple[Subspace, Subspace]:
    """``(R, S)`` with ``L = R ∔ S``, ``S`` a semisimple subalgebra."""
    _require_char0(alg)
    R = radical0(alg)
    if R.dim == 0:
        return R, alg.full()
    if R.dim == alg.dim:
        return R, alg.zero()
    chain = derived_series(alg, R) + [alg.zero()]
    P = alg.full()
    for A, K in zip(chain, chain[1:]):
        if A == K:
            continue
        nxt = complement_abelian_factor(alg, P, A, K)
        if nxt is None:
            raise LiftFailed("cocycle correction system has no solution")
        P = nxt
    S = P
    if (S & R).dim or (S + R).dim != alg.dim:
        raise LiftFailed("Levi candidate is not a complement of the radical")
    if bracket_space(alg, S, S) != S:
        raise LiftFailed("Levi candidate is not perfect")
    return R, S


def simple_ideals(alg: LieAlgebra, U: Subspace | None = None) -> list:
    """Simple ideals of the semisimple ideal ``U`` (default ``L``), in discovery order.

    Each is a minimal ideal found by module methods; the rest of ``U`` is its
    centralizer in ``U``.
    """
    rem = U if U is not None else alg.full()
    out = []
    ops = alg.ad_basis()
    while rem.dim:
        sub, _ = modules.minimal_submodule(alg.field, modules.restrict(alg.field, ops, rem), rem.dim)
        S = Subspace(alg.field, alg.dim, [rem.from_coordinates(r) for r in sub.rows])
        out.append(S)
        rest = centralizer(alg, S, within=rem)
        if rest.dim + S.dim != rem.dim:
            raise VerificationFailed("ideal is not semisimple")
        rem = rest
    return out


# ---------------------------------------------------------------------------
# quasi-ideals
# ---------------------------------------------------------------------------


def _grid(n: int):
    return itertools.product((0, 1, 2), repeat=n)


def quasi_ideal_test(alg: LieAlgebra, Q: Subspace, method: str = "auto") -> bool:
    """``[Q, V] ⊆ Q + V`` for every subspace ``V``.

    ``lines`` checks every line over GF(p); ``grid`` checks the equivalent
    polynomial identity on ``{0,1,2}^n`` (exact when the field has at least
    three elements).
    """
    if method == "auto":
        method = "lines" if alg.field.is_finite else "grid"
    if not is_subalgebra(alg, Q):
        raise ValueError("quasi-ideal test needs a subalgebra")
    if Q.dim in (0, alg.dim) or Q.dim == alg.dim - 1:
        return True
    if alg.field.is_finite:
        return _quasi_ideal_np(alg, Q, method)
    if method != "grid":
        raise UnsupportedField("line enumeration needs a finite field")
    ads = [alg.ad(q) for q in Q.rows]
    for point in _grid(alg.dim):
        v = [alg.field(x) for x in point]
        rv = Q.reduce(v)
        if not any(rv):
            continue
        for ad_q in ads:
            rw = Q.reduce(la.mat_vec(ad_q, v))
            if not _parallel(rv, rw):
                return False
    return True


def _parallel(u, w) -> bool:
    n = len(u)
    for a in range(n):
        if not u[a] and not w[a]:
            continue
        for b in range(a + 1, n):
            if u[a] * w[b] - u[b] * w[a]:
                return False
    return True


def line_array(p: int, n: int) -> np.ndarray:
    """All normalized nonzero vectors of GF(p)^n (leading entry 1)."""
    blocks = []
    for lead in range(n):
        tail = n - lead - 1
        count = p**tail
        block = np.zeros((count, n), dtype=np.int64)
        block[:, lead] = 1
        if tail:
            idx = np.arange(count)
            for c in range(tail):
                block[:, n - 1 - c] = (idx // p**c) % p
        blocks.append(block)
    return np.concatenate(blocks) if blocks else np.zeros((0, n), dtype=np.int64)


def grid_array(n: int) -> np.ndarray:
    return np.array(list(_grid(n)), dtype=np.int64).reshape(-1, n)


def _reduce_mod(rows: np.ndarray, pivots: list, X: np.ndarray, p: int) -> np.ndarray:
    if not len(pivots):
        return X % p
    return (X - X[:, pivots] @ rows) % p


def _quasi_ideal_np(alg: LieAlgebra, Q: Subspace, method: str) -> bool:
    p = alg.field.p
    n = alg.dim
    V = line_array(p, n) if method == "lines" else grid_array(n)
    T = alg.int_table()
    rows = np.array([[int(x) for x in r] for r in Q.rows], dtype=np.int64)
    piv = list(Q.pivots)
    Vr = _reduce_mod(rows, piv, V, p)
    for q in rows:
        adq = np.einsum("i,ijk->jk", q, T) % p  # adq[j, k] = [q, e_j]_k
        W = (V @ adq) % p
        Wr = _reduce_mod(rows, piv, W, p)
        for a in range(n):
            for b in range(a + 1, n):
                if np.any((Vr[:, a] * Wr[:, b] - Vr[:, b] * Wr[:, a]) % p):
                    return False
    return True


# ---------------------------------------------------------------------------
# three-dimensional algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThreeDimClass:
    kind: str  # not_simple | split_simple | nonsplit_simple
    special: bool | None
    witness: tuple | None = None  # x spanning a maximal line, when special


def induced_line_charpoly(alg: LieAlgebra, x: Sequence) -> list:
    """Characteristic polynomial of ``ad x`` on ``L / Fx``."""
    line = Subspace(alg.field, alg.dim, [x])
    _, mats, _ = la.quotient_and_induced(alg.full(), line, [alg.ad(x)])
    return la.charpoly(alg.field, mats[0])


def line_is_maximal_3dim(alg: LieAlgebra, x: Sequence) -> bool:
    """In a 3-dimensional algebra, ``Fx`` is maximal iff ``ad x`` on ``L/Fx`` has no eigenvalue in F."""
    if alg.dim != 3:
        raise WrongDimension("needs a 3-dimensional algebra")
    if not any(x):
        return False
    return not roots_in_field(alg.field, induced_line_charpoly(alg, x))


def _candidate_vectors(alg: LieAlgebra):
    F, n = alg.field, alg.dim
    if F.is_finite:
        for v in line_array(F.p, n):
            yield [F(int(c)) for c in v]
        return
    seen = set()
    basic = []
    for i in range(n):
        basic.append(_unit(F, n, i))
    for i, j in itertools.combinations(range(n), 2):
        v = [F.zero] * n
        v[i], v[j] = F.one, F(-1)
        basic.append(v)
    for i, j in itertools.combinations(range(n), 2):
        v = [F.zero] * n
        v[i], v[j] = F.one, F.one
        basic.append(v)
    for v in basic:
        seen.add(tuple(v))
        yield v
    for pt in itertools.product(range(-2, 3), repeat=n):
        v = [F(c) for c in pt]
        if any(v) and tuple(v) not in seen:
            yield v
    if F.kind == QUADEXT:
        s = F.sqrt_d()
        for pt in itertools.product(range(-1, 2), repeat=n):
            for qt in itertools.product(range(-1, 2), repeat=n):
                v = [F(a) + F(b) * s for a, b in zip(pt, qt)]
                if any(v):
                    yield v


def diagonalize_form(field: FieldSpec, K: Sequence) -> list:
    """Diagonal entries of a congruent diagonalization of a symmetric matrix (char != 2)."""
    n = len(K)
    M = [list(row) for row in K]
    diag = []
    basis = la.identity(field, n)
    for _ in range(n):
        # find a vector in the remaining span with nonzero norm
        pick = None
        for i, u in enumerate(basis):
            if _form(M, u, u):
                pick = u
                break
        if pick is None:
            for u, w in itertools.combinations(basis, 2):
                s = [a + b for a, b in zip(u, w)]
                if _form(M, s, s):
                    pick = s
                    break
        if pick is None:
            diag.extend([field.zero] * len(basis))
            return diag
        q = _form(M, pick, pick)
        diag.append(q)
        # project the rest onto the orthogonal complement of pick
        new = []
        for u in basis:
            c = _form(M, u, pick) / q
            new.append([a - c * b for a, b in zip(u, pick)])
        basis = la.rref(new, n)[0]
    return diag


def _form(M, u, w):
    return la._dot(u, la.mat_vec(M, w))


def classify_3dim(alg: LieAlgebra) -> ThreeDimClass:
    if alg.dim != 3:
        raise WrongDimension("classify_3dim needs dimension 3")
    full = alg.full()
    # a 3-dimensional algebra with [L, L] = L is simple in every characteristic
    if bracket_space(alg, full, full) != full:
        return ThreeDimClass("not_simple", False)
    F = alg.field
    witness = None
    for x in _candidate_vectors(alg):
        if line_is_maximal_3dim(alg, x):
            witness = tuple(x)
            break
    special = witness is not None if (F.is_finite or witness is not None) else None
    if F.is_finite:
        return ThreeDimClass("split_simple", special, witness)
    if F.kind == RATIONALS:
        diag = diagonalize_form(F, killing(alg))
        split = ternary_isotropic(diag)
        return ThreeDimClass("split_simple" if split else "nonsplit_simple", special, witness)
    # Q(sqrt d): split iff some ad x has a nonzero eigenvalue in the field
    for x in _candidate_vectors(alg):
        roots = roots_in_field(F, la.charpoly(F, alg.ad(x)))
        if any(roots):
            return ThreeDimClass("split_simple", special, witness)
    raise Indeterminate("split test over a quadratic extension found no eigenvalue witness")
