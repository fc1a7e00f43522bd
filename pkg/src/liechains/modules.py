"""Submodules of a vector space under a finite set of linear operators.

Ideals of a Lie algebra ``L`` lying between two ideals ``C < B`` are exactly
the ``ad L``-submodules of ``B / C``, so chief series and ideal-chain lengths
reduce to composition series of modules.  Everything here works in
coordinates: a module is ``F^k`` together with ``k x k`` matrices.

Over GF(p) minimal submodules are found by spinning every line, which is
exact.  In characteristic 0 a proper submodule is searched for through the
common kernel, cyclic spins, the radical of the enveloping associative
algebra, and finally zero divisors in the commutant.  When none of these
settles the question :class:`Indeterminate` is raised instead of guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .errors import Indeterminate
from .fields import FieldSpec, factor_poly

# commutant elements tried before giving up
SWEEP_LIMIT = 400


def _nonzero(ops):
    return [op for op in ops if any(x for row in op for x in row)]


def spin(field: FieldSpec, ops, vectors, k: int) -> la.Subspace:
    """Smallest ``ops``-invariant subspace of ``F^k`` containing ``vectors``."""
    space = la.Subspace(field, k, vectors)
    frontier = list(space.rows)
    while frontier:
        fresh = []
        for v in frontier:
            for op in ops:
                w = la.mat_vec(op, v)
                r = space.reduce(w)
                if any(r):
                    space = space.add_vectors([r])
                    fresh.append(r)
        frontier = fresh
        if space.dim == k:
            break
    return space


def common_kernel(field: FieldSpec, ops, k: int) -> la.Subspace:
    rows = [row for op in ops for row in op]
    if not rows:
        return la.Subspace.full(field, k)
    return la.Subspace(field, k, la.kernel(field, rows, k))


def restrict(field: FieldSpec, ops, sub: la.Subspace):
    """Matrices of ``ops`` on the invariant subspace ``sub`` (in its RREF basis)."""
    return [la.restrict_operator(sub, op) for op in ops]


def induced(field: FieldSpec, ops, sub: la.Subspace):
    """Matrices of ``ops`` on ``F^k / sub`` and the quotient map."""
    full = la.Subspace.full(field, sub.ambient)
    _, mats, q = la.quotient_and_induced(full, sub, ops)
    return mats, q


def enveloping_algebra(field: FieldSpec, ops, k: int) -> list:
    """Basis of the unital associative algebra generated by ``ops``."""
    flat = lambda m: [x for row in m for x in row]
    space = la.Subspace(field, k * k, [flat(la.identity(field, k))])
    basis = [la.identity(field, k)]
    frontier = list(basis)
    while frontier:
        fresh = []
        for a in frontier:
            for g in ops:
                prod = la.matmul(g, a)
                r = space.reduce(flat(prod))
                if any(r):
                    space = space.add_vectors([r])
                    basis.append(prod)
                    fresh.append(prod)
        frontier = fresh
    return basis


def trace_radical(field: FieldSpec, basis: list) -> list:
    """Radical of the trace form on a matrix algebra (its Jacobson radical in char 0)."""
    n = len(basis)
    gram = [[la.trace(la.matmul(basis[i], basis[j])) for j in range(n)] for i in range(n)]
    out = []
    for coeffs in la.kernel(field, gram, n):
        k = len(basis[0])
        m = la.zeros(field, k, k)
        for c, b in zip(coeffs, basis):
            if c:
                m = la.mat_add(m, la.mat_scale(c, b))
        out.append(m)
    return out


def commutant(field: FieldSpec, ops, k: int) -> list:
    """Basis of ``{X : X A = A X for every op A}``."""
    rows = []
    for a in ops:
        # entry (i, j) of XA - AX, as a linear form in the entries of X
        for i in range(k):
            for j in range(k):
                row = [field.zero] * (k * k)
                for t in range(k):
                    row[i * k + t] = row[i * k + t] + a[t][j]
                    row[t * k + j] = row[t * k + j] - a[i][t]
                if any(row):
                    rows.append(row)
    vecs = la.kernel(field, rows, k * k) if rows else la.identity(field, k * k)
    return [[v[i * k:(i + 1) * k] for i in range(k)] for v in vecs]


@dataclass
class Verdict:
    """Outcome of a proper-submodule search.

    ``sub`` is a proper nonzero submodule or ``None`` when the module was
    certified irreducible by the method named in ``method``.
    """

    sub: la.Subspace | None
    method: str


def _line_array(p: int, k: int) -> np.ndarray:
    """Normalized representatives (first nonzero entry 1) of all lines of GF(p)^k."""
    out = []
    for lead in range(k):
        combos = list(itertools.product(range(p), repeat=k - lead - 1))
        tail = np.array(combos, dtype=np.int64).reshape(len(combos), k - lead - 1)
        block = np.zeros((len(tail), k), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = tail
        out.append(block)
    return np.concatenate(out) if out else np.zeros((0, k), dtype=np.int64)


def _lines(field: FieldSpec, k: int):
    p = field.p
    for lead in range(k):
        for tail in itertools.product(range(p), repeat=k - lead - 1):
            yield [field.zero] * lead + [field.one] + [field(t) for t in tail]


def find_proper_submodule(field: FieldSpec, ops, k: int) -> Verdict:
    if k <= 1:
        return Verdict(None, "dim1")
    ops = _nonzero(ops)
    if not ops:
        return Verdict(la.Subspace(field, k, [la.identity(field, k)[0]]), "trivial-action")
    if field.is_finite:
        return _finite_search(field, ops, k)
    return _char0_search(field, ops, k)


def batch_rank_mod_p(X: np.ndarray, p: int) -> np.ndarray:
    """Ranks over GF(p) of a stack of matrices ``X`` with shape ``(batch, m, n)``."""
    X = np.array(X, dtype=np.int64) % p
    B, m, n = X.shape
    inv = np.array([0] + [pow(a, p - 2, p) for a in range(1, p)], dtype=np.int64)
    used = np.zeros((B, m), dtype=bool)
    rank = np.zeros(B, dtype=np.int64)
    for c in range(n):
        cand = (X[:, :, c] != 0) & ~used
        b = np.nonzero(cand.any(axis=1))[0]
        if not len(b):
            continue
        piv = np.argmax(cand[b], axis=1)
        prow = X[b, piv, :] * inv[X[b, piv, c]][:, None] % p
        factors = X[b, :, c]
        X[b] = (X[b] - factors[:, :, None] * prow[:, None, :]) % p
        X[b, piv, :] = prow
        used[b, piv] = True
        rank[b] += 1
    return rank


def _finite_search(field, ops, k) -> Verdict:
    # spin(v) = E v for the enveloping algebra E, so all spin dimensions are batched ranks
    p = field.p
    env = enveloping_algebra(field, ops, k)
    if (p ** k) * k * len(env) ** 2 <= 5 * 10 ** 8:
        E = np.array([[[int(x) for x in row] for row in m] for m in env], dtype=np.int64)
        lines = _line_array(p, k)
        X = np.einsum("rij,nj->nir", E, lines) % p
        dims = batch_rank_mod_p(X, p)
        i = int(np.argmin(dims))
        if dims[i] == k:
            return Verdict(None, "brute-lines")
        v = [field(int(c)) for c in lines[i]]
        return Verdict(spin(field, ops, [v], k), "spin")
    best = None
    for v in _lines(field, k):
        s = spin(field, ops, [v], k)
        if s.dim < k and (best is None or s.dim < best.dim):
            best = s
            if s.dim == 1:
                break
    return Verdict(best, "brute-lines" if best is None else "spin")


def _char0_search(field, ops, k) -> Verdict:
    ker = common_kernel(field, ops, k)
    if ker.dim:
        return Verdict(la.Subspace(field, k, [ker.rows[0]]), "common-kernel")
    image = spin(field, ops, [la.mat_vec(op, e) for op in ops for e in la.identity(field, k)], k)
    if image.dim < k:
        return Verdict(image, "image")
    probes = list(la.identity(field, k)) + [[field.one] * k]
    for v in probes:
        s = spin(field, ops, [v], k)
        if s.dim < k:
            return Verdict(s, "spin")
    env = enveloping_algebra(field, ops, k)
    rad = trace_radical(field, env)
    if rad:
        vecs = [la.mat_vec(a, e) for a in rad for e in la.identity(field, k)]
        s = spin(field, ops, vecs, k)
        if 0 < s.dim < k:
            return Verdict(s, "radical")
    # semisimple module: simple iff the commutant is a division algebra
    comm = commutant(field, ops, k)
    if len(comm) == 1:
        return Verdict(None, "commutant-scalar")
    for phi in _commutant_sweep(field, comm):
        if la.is_scalar_matrix(phi):
            continue
        mp = la.minimal_polynomial(field, phi)
        factors = factor_poly(field, mp)
        if len(factors) == 1 and factors[0][1] == 1:
            if len(mp) - 1 == len(comm):
                return Verdict(None, "commutant-field")
            continue
        f = factors[0][0]
        kern = la.kernel(field, la.poly_of_matrix(field, f, phi), k)
        return Verdict(la.Subspace(field, k, kern), "commutant-zero-divisor")
    raise Indeterminate(f"could not decide irreducibility of a {k}-dimensional module")


def _commutant_sweep(field, comm):
    yield from comm
    count = 0
    for i, j in itertools.combinations(range(len(comm)), 2):
        for sign in (1, -1):
            yield la.mat_add(comm[i], la.mat_scale(field(sign), comm[j]))
            count += 1
            if count > SWEEP_LIMIT:
                return


def minimal_submodule(field: FieldSpec, ops, k: int) -> tuple[la.Subspace, str]:
    """A minimal nonzero submodule of ``F^k`` and the method that certified it."""
    basis = la.identity(field, k)
    cur_ops = ops
    while True:
        verdict = find_proper_submodule(field, cur_ops, len(basis))
        if verdict.sub is None:
            return la.Subspace(field, k, basis), verdict.method
        # re-express the submodule (found in current coordinates) in F^k
        basis = [_combine(field, r, basis, k) for r in verdict.sub.rows]
        cur_ops = restrict(field, cur_ops, verdict.sub)


def _combine(field, coords, basis, k):
    out = [field.zero] * k
    for c, b in zip(coords, basis):
        if c:
            out = [x + c * y for x, y in zip(out, b)]
    return out


def is_irreducible(field: FieldSpec, ops, k: int) -> tuple[bool, str]:
    verdict = find_proper_submodule(field, ops, k)
    return verdict.sub is None, verdict.method


def composition_series(field: FieldSpec, ops, top: la.Subspace, bottom: la.Subspace):
    """Composition series of ``top / bottom`` under ambient operators ``ops``.

    Returns the members (ambient subspaces from ``bottom`` to ``top``) and the
    certification method of each factor.
    """
    members = [bottom]
    methods = []
    current = bottom
    while current.dim < top.dim:
        k, mats, q = la.quotient_and_induced(top, current, ops)
        sub, method = minimal_submodule(field, mats, k)
        current = q.preimage(sub)
        members.append(current)
        methods.append(method)
    return members, methods
