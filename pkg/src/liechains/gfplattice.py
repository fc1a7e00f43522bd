"""Brute-force subalgebra lattices over GF(p).

Every subspace is enumerated by its RREF pivot pattern and free entries,
vectorized with numpy, and kept when it is closed under the bracket.  Nodes
are sorted by ``(dim, RREF rows)``, so index order is a topological order of
the lattice.  Vectors are encoded as integers ``sum v_i p^i``; membership of
a code in a node is a boolean table, from which containment, joins, meets
and covers follow by array operations.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import core
from .core import ChainRecord, LieAlgebra
from .errors import BudgetExceeded, UnsupportedField
from .linalg import Subspace


@dataclass(frozen=True)
class LatticeBudget:
    max_subspace_count: int = 250_000
    max_node_count: int = 6_000
    time_hint: str = "minutes"

    @classmethod
    def from_env(cls, default: "LatticeBudget | None" = None) -> "LatticeBudget":
        """Apply ``LIECHAINS_BUDGET`` (``"subspaces=N,nodes=M"`` or a bare subspace count)."""
        base = default or cls()
        raw = os.environ.get("LIECHAINS_BUDGET", "").strip()
        if not raw:
            return base
        values = {"subspaces": base.max_subspace_count, "nodes": base.max_node_count}
        for part in raw.split(","):
            if "=" in part:
                key, val = part.split("=", 1)
                values[key.strip()] = int(val)
            else:
                values["subspaces"] = int(part)
        return cls(values["subspaces"], values["nodes"], base.time_hint)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspace_count(n: int, p: int) -> int:
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def _candidates(pattern: tuple, n: int, p: int) -> np.ndarray:
    """All RREF matrices with the given pivot columns, shape (count, d, n)."""
    d = len(pattern)
    pivset = set(pattern)
    free = [(r, c) for r, pc in enumerate(pattern) for c in range(pc + 1, n) if c not in pivset]
    count = p ** len(free)
    R = np.zeros((count, d, n), dtype=np.int64)
    for r, pc in enumerate(pattern):
        R[:, r, pc] = 1
    idx = np.arange(count)
    for t, (r, c) in enumerate(free):
        R[:, r, c] = (idx // p**t) % p
    return R


def _closed(R: np.ndarray, pattern: tuple, T: np.ndarray, p: int) -> np.ndarray:
    """Boolean mask of candidate subspaces closed under the bracket."""
    keep = np.ones(len(R), dtype=bool)
    d = len(pattern)
    piv = list(pattern)
    for a, b in itertools.combinations(range(d), 2):
        idx = np.nonzero(keep)[0]
        if not len(idx):
            break
        sub = R[idx]
        tmp = np.einsum("mi,ijk->mjk", sub[:, a], T)
        br = np.einsum("mj,mjk->mk", sub[:, b], tmp) % p
        resid = (br - np.einsum("mr,mrk->mk", br[:, piv], sub)) % p
        keep[idx[np.any(resid, axis=1)]] = False
    return keep


class SubalgebraLattice:
    """All subalgebras of a GF(p) algebra with containment, joins, meets and covers."""

    def __init__(self, alg: LieAlgebra, nodes: list):
        self.alg = alg
        self.p = alg.field.p
        self.n = alg.dim
        self.nodes = nodes  # list of (d, n) int arrays, sorted by (dim, rows)
        self.dims = np.array([len(x) for x in nodes], dtype=np.int64)
        self.N = len(nodes)
        self._weights = self.p ** np.arange(self.n, dtype=np.int64)
        self._index = {self._key(x): i for i, x in enumerate(nodes)}
        self.bottom = 0
        self.top = self.N - 1
        # member[i, code] is true when the vector with that code lies in node i
        member = np.zeros((self.N, self.p**self.n), dtype=bool)
        for i, rows in enumerate(nodes):
            member[i, self._span_codes(rows)] = True
        self.member = member
        # contains[a, b]: node a ⊆ node b
        S = np.ones((self.N, self.N), dtype=bool)
        for a, rows in enumerate(nodes):
            if len(rows):
                S[a] = member[:, self.codes(rows)].all(axis=1)
        self.contains = S

    # -- encoding -----------------------------------------------------------

    @staticmethod
    def _key(rows: np.ndarray) -> tuple:
        return tuple(tuple(int(x) for x in r) for r in rows)

    def codes(self, vectors: np.ndarray) -> np.ndarray:
        return (np.asarray(vectors) % self.p) @ self._weights

    def _span_codes(self, rows: np.ndarray) -> np.ndarray:
        d = len(rows)
        if d == 0:
            return np.zeros(1, dtype=np.int64)
        coeffs = np.array(list(itertools.product(range(self.p), repeat=d)), dtype=np.int64)
        return self.codes(coeffs @ rows)

    def subspace(self, i: int) -> Subspace:
        F = self.alg.field
        return Subspace(F, self.n, [[F(int(x)) for x in r] for r in self.nodes[i]])

    def index_of(self, U: Subspace) -> int:
        key = tuple(tuple(int(x) for x in r) for r in U.rows)
        return self._index[key]

    # -- order structure ----------------------------------------------------

    def below(self, i: int) -> np.ndarray:
        """Indices of nodes contained in node ``i`` (inclusive)."""
        return np.nonzero(self.contains[:, i])[0]

    def above(self, i: int) -> np.ndarray:
        return np.nonzero(self.contains[i])[0]

    @cached_property
    def join_table(self) -> np.ndarray:
        S = self.contains
        J = np.empty((self.N, self.N), dtype=np.int64)
        for i in range(self.N):
            both = S[i][None, :] & S  # row j: nodes above both i and j
            J[i] = np.argmax(both, axis=1)
        return J

    @cached_property
    def meet_table(self) -> np.ndarray:
        S = self.contains
        M = np.empty((self.N, self.N), dtype=np.int64)
        for i in range(self.N):
            both = S[:, i][None, :] & S.T  # row j: nodes below both i and j
            M[i] = self.N - 1 - np.argmax(both[:, ::-1], axis=1)
        return M

    def join(self, i: int, j: int) -> int:
        return int(self.join_table[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        """``cover[a, b]``: ``a`` is maximal in ``b``."""
        S = self.contains.astype(np.float32)
        between = S @ S  # number of c with a ⊆ c ⊆ b (exact in float32 at these sizes)
        return self.contains & (np.rint(between) == 2)

    def coatoms(self) -> list[int]:
        return [int(a) for a in np.nonzero(self.cover_matrix[:, self.top])[0]]

    # -- flags ----------------------------------------------------------------

    def _brackets(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """All ``[x, y]`` for rows ``x`` of X and ``y`` of Y, as codes."""
        if not len(X) or not len(Y):
            return np.zeros(0, dtype=np.int64)
        T = self.alg.int_table()
        br = np.einsum("ai,bj,ijk->abk", X, Y, T) % self.p
        return self.codes(br.reshape(-1, self.n))

    def is_ideal_in(self, x: int, m: int) -> bool:
        """Node ``x`` is an ideal of node ``m`` (``x`` need not lie in ``m``)."""
        return bool(self.member[x, self._brackets(self.nodes[m], self.nodes[x])].all())

    @cached_property
    def ideal_mask(self) -> np.ndarray:
        return np.array([self.is_ideal_in(i, self.top) for i in range(self.N)], dtype=bool)

    def relative_ideal_mask(self, m: int) -> np.ndarray:
        mask = np.zeros(self.N, dtype=bool)
        for x in self.below(m):
            mask[x] = self.is_ideal_in(x, m)
        return mask

    @cached_property
    def quasiideal_mask(self) -> np.ndarray:
        return np.array(
            [core.quasi_ideal_test(self.alg, self.subspace(i), "lines") for i in range(self.N)],
            dtype=bool,
        )

    @cached_property
    def modular_mask(self) -> np.ndarray:
        return np.array([self._is_modular(u) for u in range(self.N)], dtype=bool)

    @cached_property
    def _pairs(self):
        return np.nonzero(self.contains)

    def _is_modular(self, u: int) -> bool:
        if self.ideal_mask[u]:
            return True
        J, M, S = self.join_table, self.meet_table, self.contains
        jU = J[u]  # <U, B> for each B
        mU = M[u]  # U ∩ C for each C
        # <U,B> ∩ C = <B, U ∩ C> for B ⊆ C
        bs, cs = self._pairs
        if np.any(M[jU[bs], cs] != J[bs, mU[cs]]):
            return False
        # <U,B> ∩ C = <B ∩ C, U> for U ⊆ C
        cs = np.nonzero(S[u])[0]
        lhs = M[jU[:, None], cs[None, :]]
        rhs = J[M[:, cs], u]
        return not np.any(lhs != rhs)

    def core_of(self, i: int) -> int:
        """Index of the largest ideal of L inside node ``i``."""
        cands = np.nonzero(self.contains[:, i] & self.ideal_mask)[0]
        return int(cands[-1])

    def relative_core(self, i: int, m: int) -> int:
        """Largest ideal of node ``m`` inside node ``i``."""
        mask = self.relative_ideal_mask(m) & self.contains[:, i]
        return int(np.nonzero(mask)[0][-1])

    # -- chains ---------------------------------------------------------------

    def longest_chain(self, mask: np.ndarray, start: int | None = None, end: int | None = None):
        """Longest strictly increasing chain from ``start`` to ``end`` through nodes in ``mask``."""
        start = self.bottom if start is None else start
        end = self.top if end is None else end
        S = self.contains
        best = np.full(self.N, -1, dtype=np.int64)
        prev = np.full(self.N, -1, dtype=np.int64)
        best[start] = 0
        allowed = np.array(mask, dtype=bool).copy()
        allowed[start] = allowed[end] = True
        for b in range(start + 1, end + 1):
            if not allowed[b] or not S[start, b] or not S[b, end]:
                continue
            preds = np.nonzero(S[:b, b] & allowed[:b] & (best[:b] >= 0))[0]
            preds = preds[preds != b]
            if len(preds):
                k = preds[np.argmax(best[preds])]
                best[b] = best[k] + 1
                prev[b] = k
        if best[end] < 0:
            return None, []
        path = [end]
        while path[-1] != start:
            path.append(int(prev[path[-1]]))
        return int(best[end]), path[::-1]

    def shortest_maximal_chain(self):
        """Breadth-first search from 0 to L along cover edges."""
        C = self.cover_matrix
        prev = {self.bottom: None}
        queue = deque([self.bottom])
        while queue:
            a = queue.popleft()
            if a == self.top:
                break
            for b in np.nonzero(C[a])[0]:
                b = int(b)
                if b not in prev:
                    prev[b] = a
                    queue.append(b)
        path = [self.top]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        return len(path) - 1, path[::-1]

    def chain_record(self, path: list, kind: str, certificate: str) -> ChainRecord:
        return ChainRecord([self.subspace(i) for i in path], [certificate] * (len(path) - 1), kind)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def enumerate_lattice(alg: LieAlgebra, budget: LatticeBudget | None = None) -> SubalgebraLattice:
    if not alg.field.is_finite:
        raise UnsupportedField("lattice enumeration needs GF(p)")
    budget = LatticeBudget.from_env(budget)
    n, p = alg.dim, alg.field.p
    total = subspace_count(n, p)
    if total > budget.max_subspace_count:
        raise BudgetExceeded(f"{total} subspaces of GF({p})^{n} exceed the budget {budget.max_subspace_count}")
    T = alg.int_table()
    nodes = []
    for d in range(n + 1):
        for pattern in itertools.combinations(range(n), d):
            R = _candidates(pattern, n, p)
            if d >= 2:
                R = R[_closed(R, pattern, T, p)]
            nodes.extend(R)
            if len(nodes) > budget.max_node_count:
                raise BudgetExceeded(f"more than {budget.max_node_count} subalgebras")
    nodes.sort(key=lambda x: (len(x), SubalgebraLattice._key(x)))
    return SubalgebraLattice(alg, nodes)


def chief_series_brute(lat: SubalgebraLattice, reverse_ties: bool = False):
    """Greedy ascent through minimal ideals of successive quotients."""
    ideals = np.nonzero(lat.ideal_mask)[0]
    order = ideals[::-1] if reverse_ties else ideals
    path = [lat.bottom]
    while path[-1] != lat.top:
        cur = path[-1]
        above = [int(b) for b in ideals if b != cur and lat.contains[cur, b]]
        dmin = min(lat.dims[b] for b in above)
        # ideals of minimal dimension above cur are minimal over it
        pick = next(int(b) for b in order if b in above and lat.dims[b] == dmin)
        path.append(pick)
    return len(path) - 1, lat.chain_record(path, "chief", "ideal_step")


def ell_brute(lat: SubalgebraLattice) -> int:
    return lat.longest_chain(lat.ideal_mask)[0]


def il_brute(lat: SubalgebraLattice, b: int, within: int | None = None, bottom: int | None = None) -> int:
    """Longest chain of ideals of node ``within`` (default L) from ``bottom`` to ``b``."""
    mask = lat.ideal_mask if within is None else lat.relative_ideal_mask(within)
    return lat.longest_chain(mask, lat.bottom if bottom is None else bottom, b)[0]


def minmax_brute(lat: SubalgebraLattice):
    length, path = lat.shortest_maximal_chain()
    return length, lat.chain_record(path, "maximal", "brute_maximal")


def modular_filter(lat: SubalgebraLattice) -> np.ndarray:
    return lat.modular_mask


def modl_brute(lat: SubalgebraLattice):
    length, path = lat.longest_chain(lat.modular_mask)
    return length, lat.chain_record(path, "modular", "brute")


def quasiideal_filter(lat: SubalgebraLattice) -> np.ndarray:
    return lat.quasiideal_mask


def qil_brute(lat: SubalgebraLattice):
    length, path = lat.longest_chain(lat.quasiideal_mask)
    return length, lat.chain_record(path, "quasiideal", "brute")


def maximal_subalgebras(lat: SubalgebraLattice) -> list[Subspace]:
    return [lat.subspace(i) for i in lat.coatoms()]


def frattini_index(lat: SubalgebraLattice) -> int:
    co = lat.coatoms()
    cur = lat.top
    for m in co:
        cur = lat.meet(cur, m)
    return lat.core_of(cur)


def frattini_brute(lat: SubalgebraLattice) -> Subspace:
    return lat.subspace(frattini_index(lat))


def to_dot(lat: SubalgebraLattice, flags: tuple = ("ideal",)) -> str:
    """Hasse diagram in DOT; nodes are labelled ``dim:index``."""
    styles = {
        "ideal": ("ideal_mask", "shape=box"),
        "modular": ("modular_mask", "style=filled, fillcolor=lightblue"),
        "quasiideal": ("quasiideal_mask", "color=red"),
    }
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i in range(lat.N):
        attrs = [f'label="{lat.dims[i]}:{i}"']
        for f in flags:
            attr, style = styles[f]
            if getattr(lat, attr)[i]:
                attrs.append(style)
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for a, b in zip(*np.nonzero(lat.cover_matrix)):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
