"""Constructors for the algebra families used throughout the library.

Every constructor validates its parameters and returns a Jacobi-checked
:class:`LieAlgebra`.  Where a radical, nilradical or Frattini ideal is
forced by the construction it is recorded in ``alg.meta`` as a list of
spanning vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Sequence

from . import core
from . import linalg as la
from .core import ChainRecord, LieAlgebra
from .errors import BadParameters, NotSpecialWitness, WrongDimension
from .fields import FieldSpec


def _unit(F: FieldSpec, n: int, i: int) -> list:
    v = [F.zero] * n
    v[i] = F.one
    return v


def _rows(F: FieldSpec, n: int, idx) -> list:
    return [_unit(F, n, i) for i in idx]


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


def abelian(F: FieldSpec, n: int) -> LieAlgebra:
    if n < 1:
        raise BadParameters("abelian algebras need n >= 1")
    meta = {"radical": _rows(F, n, range(n)), "nilradical": _rows(F, n, range(n)), "frattini": []}
    return LieAlgebra(F, n, {}, meta=meta)


def almost_abelian(F: FieldSpec, n: int) -> LieAlgebra:
    """``Fx ∔ A`` with ``A`` abelian of dimension ``n - 1`` and ``[x, a] = a``."""
    if n < 1:
        raise BadParameters("almost abelian algebras need n >= 1")
    brackets = {(0, i): {i: 1} for i in range(1, n)}
    names = ["x"] + [f"a{i}" for i in range(1, n)]
    meta = {"radical": _rows(F, n, range(n)), "frattini": []}
    if n > 1:
        meta["nilradical"] = _rows(F, n, range(1, n))
    return LieAlgebra(F, n, brackets, names, meta=meta)


def heisenberg(F: FieldSpec, k: int = 1) -> LieAlgebra:
    """Heisenberg algebra of dimension ``2k + 1``: ``[x_i, y_i] = z``."""
    if k < 1:
        raise BadParameters("heisenberg needs k >= 1")
    n = 2 * k + 1
    brackets = {(i, k + i): {n - 1: 1} for i in range(k)}
    names = [f"x{i}" for i in range(1, k + 1)] + [f"y{i}" for i in range(1, k + 1)] + ["z"]
    if k == 1:
        names = ["x", "y", "z"]
    z = [_unit(F, n, n - 1)]
    meta = {"radical": _rows(F, n, range(n)), "nilradical": _rows(F, n, range(n)), "frattini": z}
    return LieAlgebra(F, n, brackets, names, meta=meta)


def sl2(F: FieldSpec) -> LieAlgebra:
    """Basis ``(e, h, f)`` with ``[h, e] = 2e``, ``[h, f] = -2f``, ``[e, f] = h``."""
    meta = {"radical": [], "nilradical": [], "frattini": []}
    return LieAlgebra(F, 3, {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}}, ["e", "h", "f"], meta=meta)


def cross_product(F: FieldSpec, a, b) -> LieAlgebra:
    """Trace-zero quaternions of the algebra ``(a, b)``.

    ``[e1, e2] = e3``, ``[e2, e3] = -b e1``, ``[e3, e1] = -a e2``.  The Killing
    form is ``diag(2a, 2b, -2ab)``, so the algebra is split exactly when the
    quaternion algebra ``(a, b)`` is; ``(-1, -1)`` gives the real rotation algebra.
    """
    a, b = F(a), F(b)
    if not a or not b:
        raise BadParameters("cross_product needs nonzero a and b")
    brackets = {(0, 1): {2: 1}, (1, 2): {0: -b}, (0, 2): {1: a}}
    meta = {"radical": [], "nilradical": [], "frattini": [], "params": [str(a), str(b)]}
    return LieAlgebra(F, 3, brackets, ["e1", "e2", "e3"], meta=meta)


def L1_gamma(F: FieldSpec, gamma0=0) -> LieAlgebra:
    """Basis ``(u-1, u0, u1)``: ``[u-1, u0] = u-1 + γ0 u1``, ``[u-1, u1] = u0``, ``[u0, u1] = u1``."""
    g = F(gamma0)
    first = {0: 1}
    if g:
        first[2] = g
    return LieAlgebra(F, 3, {(0, 1): first, (0, 2): {1: 1}, (1, 2): {2: 1}}, ["u-1", "u0", "u1"])


def lm_lambda(i: int, j: int) -> int:
    """Divided-power Witt coefficient ``C(i+j+1, j) - C(i+j+1, i)``; equals ``j - i`` for ``i + j <= 1``."""
    return comb(i + j + 1, j) - comb(i + j + 1, i)


def allowed_m(F: FieldSpec, m: int) -> bool:
    if m == 1:
        return True
    p = F.characteristic()
    if p == 0:
        return False
    r = 1
    while p**r - 2 <= m + 1:
        if p % 2 == 1 and m == p**r - 2:
            return True
        if p == 2 and r >= 2 and m in (2**r - 2, 2**r - 3):
            return True
        r += 1
    return False


def Lm_gamma(F: FieldSpec, m: int, gammas: Sequence = ()) -> LieAlgebra:
    """Basis ``v-1, v0, ..., vm`` with ``[v-1, vi] = v(i-1) + γi vm`` and ``[vi, vj] = λij v(i+j)``."""
    if m < 1 or not allowed_m(F, m):
        raise BadParameters(f"m = {m} is not allowed in characteristic {F.characteristic()}")
    g = [F(x) for x in gammas] + [F.zero] * (m + 2)
    for i in range(1, m + 1):
        if F(m + 1 - i) * g[i]:
            raise BadParameters(f"(m + 1 - i) γ_i must vanish for i = {i}")
    for i in range(1, len(gammas)):
        if i >= m and g[i]:
            raise BadParameters(f"γ_{i} must vanish")
    for k in range(1, m + 1):
        for i in range(1, k + 1):
            if F(lm_lambda(i, k + 1 - i)) * g[k + 1]:
                raise BadParameters(f"λ_({i},{k + 1 - i}) γ_{k + 1} must vanish")
    n = m + 2
    idx = lambda i: i + 1  # v_i -> basis position
    brackets: dict = {}
    for i in range(0, m + 1):
        coeffs = {idx(i - 1): F.one}
        if g[i]:
            coeffs[idx(m)] = coeffs.get(idx(m), F.zero) + g[i]
        brackets[(0, idx(i))] = {k: c for k, c in coeffs.items() if c}
    for i in range(0, m + 1):
        for j in range(i + 1, m + 1):
            lam = F(lm_lambda(i, j))
            if i + j <= m and lam:
                brackets[(idx(i), idx(j))] = {idx(i + j): lam}
    names = [f"v{i}" for i in range(-1, m + 1)]
    return LieAlgebra(F, n, {k: v for k, v in brackets.items() if v}, names)


def witt(F: FieldSpec) -> LieAlgebra:
    """``W(1:1)`` over GF(p): basis ``e-1 .. e(p-2)``, ``[ei, ej] = (j - i) e(i+j)``."""
    p = F.characteristic()
    if not F.is_finite or p < 5:
        raise BadParameters("witt needs GF(p) with p >= 5")
    lo, hi = -1, p - 2
    brackets = {}
    for i in range(lo, hi + 1):
        for j in range(i + 1, hi + 1):
            if lo <= i + j <= hi and (j - i) % p:
                brackets[(i - lo, j - lo)] = {i + j - lo: F(j - i)}
    names = [f"e{i}" for i in range(lo, hi + 1)]
    meta = {"radical": [], "nilradical": [], "frattini": []}
    return LieAlgebra(F, p, brackets, names, meta=meta)


def semidirect_adjoint(base: LieAlgebra) -> LieAlgebra:
    """``A ⋊ S`` with ``A`` a copy of ``S`` acted on by the adjoint representation."""
    names = [f"a{i}" for i in range(1, base.dim + 1)] + list(base.names)
    alg = core.semidirect(base, base.dim, base.ad_basis(), names)
    A = _rows(base.field, alg.dim, range(base.dim))
    if base.meta.get("radical") == []:
        alg.meta.update({"radical": A, "nilradical": A})
    return alg


def direct_power(base: LieAlgebra, k: int) -> LieAlgebra:
    if k < 1:
        raise BadParameters("direct_power needs k >= 1")
    F = base.field
    n = base.dim
    brackets = {}
    for c in range(k):
        for (i, j), coeffs in base.structure().items():
            brackets[(c * n + i, c * n + j)] = {c * n + t: v for t, v in coeffs.items()}
    names = [f"{nm}_{c + 1}" for c in range(k) for nm in base.names] if k > 1 else list(base.names)
    meta = {}
    if base.meta.get("radical") == []:
        meta = {"radical": [], "nilradical": []}
    return LieAlgebra(F, n * k, brackets, names, meta=meta)


def diagonal_tower(base: LieAlgebra, k: int) -> LieAlgebra:
    """``S ⊕ ... ⊕ S`` (``k`` copies of a 3-dimensional simple ``S``), the home of the diagonal chain."""
    if base.dim != 3 or core.classify_3dim(base).kind == "not_simple":
        raise BadParameters("diagonal_tower needs a 3-dimensional simple base")
    return direct_power(base, k)


def rotation_extension(F: FieldSpec) -> LieAlgebra:
    """``A ⋊ Fx`` with ``A`` two-dimensional and ``x`` acting by ``[[0, -1], [1, 0]]``."""
    x = LieAlgebra(F, 1, {}, ["x"])
    return core.semidirect(x, 2, [[[0, -1], [1, 0]]], ["a1", "a2", "x"])


# ---------------------------------------------------------------------------
# random solvable algebras
# ---------------------------------------------------------------------------


def derivations(alg: LieAlgebra) -> list:
    """Basis of ``Der(L)`` as matrices (columns are images of basis vectors)."""
    F, n = alg.field, alg.dim
    rows = []
    # D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, unknowns D[r][c] at r * n + c
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                row = [F.zero] * (n * n)
                for t, c in enumerate(alg.product(i, j)):
                    if c:
                        row[k * n + t] = row[k * n + t] + c
                for r in range(n):
                    c1 = alg.product(r, j)[k]
                    if c1:
                        row[r * n + i] = row[r * n + i] - c1
                    c2 = alg.product(i, r)[k]
                    if c2:
                        row[r * n + j] = row[r * n + j] - c2
                if any(row):
                    rows.append(row)
    vecs = la.kernel(F, rows, n * n) if rows else la.identity(F, n * n)
    return [[v[r * n:(r + 1) * n] for r in range(n)] for v in vecs]


def random_solvable(F: FieldSpec, n: int, seed: int) -> LieAlgebra:
    """Solvable algebra built as a tower of one-dimensional extensions by random derivations."""
    if not F.is_finite or F.p > 7:
        raise BadParameters("random_solvable needs GF(p) with p <= 7")
    if not 1 <= n <= 8:
        raise BadParameters("random_solvable needs 1 <= n <= 8")
    rng = random.Random(seed)
    alg = LieAlgebra(F, 1, {})
    for d in range(1, n):
        ders = derivations(alg)
        D = la.zeros(F, d, d)
        for basis_der in ders:
            c = F(rng.randrange(F.p))
            if c:
                D = la.mat_add(D, la.mat_scale(c, basis_der))
        brackets = {key: dict(v) for key, v in alg.structure().items()}
        # new element t = e_d with [e_i, t] = -D e_i
        for i in range(d):
            coeffs = {r: -D[r][i] for r in range(d) if D[r][i]}
            if coeffs:
                brackets[(i, d)] = coeffs
        alg = LieAlgebra(F, d + 1, brackets, check=False)
    core.validate(alg)
    alg.meta["radical"] = _rows(F, n, range(n))
    alg.meta["params"] = [str(n), str(seed)]
    return alg


# ---------------------------------------------------------------------------
# the diagonal chain
# ---------------------------------------------------------------------------


def diagonal_chain(base: LieAlgebra, k: int, s: Sequence | None = None) -> ChainRecord:
    """Maximal chain ``0 < Fs < Δ(k-1) < S1 ⊕ Δ(k-2) < ... < L`` in ``S^k`` of length ``k + 1``.

    ``Δ(i)`` is the diagonal of the last ``i + 1`` copies.  When ``s`` is
    omitted the special witness found by :func:`core.classify_3dim` is used.
    """
    if base.dim != 3:
        raise WrongDimension("diagonal_chain needs a 3-dimensional base")
    cls = core.classify_3dim(base)
    if cls.kind == "not_simple":
        raise BadParameters("diagonal_chain needs a simple base")
    if s is None:
        if cls.witness is None:
            raise NotSpecialWitness("no one-dimensional maximal subalgebra was found")
        s = cls.witness
    s = [base.field(x) for x in s]
    if not core.line_is_maximal_3dim(base, s):
        raise NotSpecialWitness("ad s has an eigenvalue in F on S/Fs")
    F = base.field
    L = direct_power(base, k)
    n = 3 * k

    def diag(first: int, v) -> list:
        out = [F.zero] * n
        for c in range(first, k):
            out[3 * c:3 * c + 3] = list(v)
        return out

    unit3 = [_unit(F, 3, i) for i in range(3)]
    members = [L.zero(), la.Subspace(F, n, [diag(0, s)])]
    certs = ["codim1", "one_dim_in_3simple"]
    for j in range(k):
        # copies 0..j-1 in full, diagonal over copies j..k-1
        vecs = [_unit(F, n, 3 * c + i) for c in range(j) for i in range(3)]
        vecs += [diag(j, u) for u in unit3]
        members.append(la.Subspace(F, n, vecs))
        if j:
            certs.append("theory(diagonal-maximal)")
    for m in members:
        if not core.is_subalgebra(L, m):
            raise BadParameters("diagonal chain member is not a subalgebra")
    return ChainRecord(members, certs, "maximal")


# ---------------------------------------------------------------------------
# specs and the family table
# ---------------------------------------------------------------------------


@dataclass
class CatalogSpec:
    family: str
    field: FieldSpec
    params: list = dc_field(default_factory=list)


FAMILIES = {
    "abelian": ("abelian(n)", "n >= 1"),
    "almost_abelian": ("almost_abelian(n)", "n >= 1; x acts as the identity on an abelian ideal of dim n-1"),
    "heisenberg": ("heisenberg(k)", "k >= 1; dimension 2k+1"),
    "sl2": ("sl2", "basis e, h, f"),
    "cross_product": ("cross_product(a,b)", "a, b nonzero; split iff the quaternion algebra (a,b) splits"),
    "L1_gamma": ("L1_gamma(g0)", "any g0"),
    "Lm_gamma": ("Lm_gamma(m,g0,g1,...)", "m = 1, or m = p^r-2 (p odd), or m in {2^r-2, 2^r-3} (p = 2, r >= 2); gamma constraints"),
    "witt": ("witt", "field GF(p), p >= 5"),
    "semidirect_adjoint": ("semidirect_adjoint(family,...)", "base any catalog family"),
    "direct_power": ("direct_power(k,family,...)", "k >= 1"),
    "diagonal_tower": ("diagonal_tower(k,family,...)", "base 3-dimensional simple"),
    "random_solvable": ("random_solvable(n,seed)", "field GF(p), p <= 7, 1 <= n <= 8"),
    "rotation": ("rotation", "2-dim rotation module extended by its generator"),
}


def make(spec: CatalogSpec) -> LieAlgebra:
    F, fam, ps = spec.field, spec.family, list(spec.params)
    if fam not in FAMILIES:
        raise BadParameters(f"unknown family {fam!r}")
    try:
        if fam == "abelian":
            return abelian(F, int(ps[0]))
        if fam == "almost_abelian":
            return almost_abelian(F, int(ps[0]))
        if fam == "heisenberg":
            return heisenberg(F, int(ps[0]) if ps else 1)
        if fam == "sl2":
            return sl2(F)
        if fam == "cross_product":
            return cross_product(F, F(ps[0]), F(ps[1]))
        if fam == "L1_gamma":
            return L1_gamma(F, F(ps[0]) if ps else 0)
        if fam == "Lm_gamma":
            return Lm_gamma(F, int(ps[0]), [F(x) for x in ps[1:]])
        if fam == "witt":
            return witt(F)
        if fam == "rotation":
            return rotation_extension(F)
        if fam == "random_solvable":
            return random_solvable(F, int(ps[0]), int(ps[1]))
        if fam == "semidirect_adjoint":
            return semidirect_adjoint(make(CatalogSpec(ps[0], F, ps[1:])))
        if fam == "direct_power":
            return direct_power(make(CatalogSpec(ps[1], F, ps[2:])), int(ps[0]))
        if fam == "diagonal_tower":
            return diagonal_tower(make(CatalogSpec(ps[1], F, ps[2:])), int(ps[0]))
    except (IndexError, ValueError) as exc:
        if isinstance(exc, BadParameters):
            raise
        raise BadParameters(f"bad parameters for {fam}: {ps}") from exc
    raise BadParameters(fam)


def list_families() -> list[str]:
    return [f"{usage:32s} {rule}" for usage, rule in FAMILIES.values()]


def noniso_nonsplit_pair() -> tuple[LieAlgebra, LieAlgebra]:
    """Two non-split 3-dim simple algebras over Q with different Killing-form invariants."""
    Q = FieldSpec.rationals()
    return cross_product(Q, -1, -1), cross_product(Q, -1, -3)
