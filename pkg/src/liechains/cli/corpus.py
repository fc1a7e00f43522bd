"""Named instances shared by the suites, the acceptance tests and the CLI."""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .. import catalog as cat
from .. import core, gfplattice as gl
from ..fields import FieldSpec

Q = FieldSpec.rationals()
GF = {p: FieldSpec.prime(p) for p in (2, 3, 5, 7)}


def _brute_builders() -> dict:
    G2, G3, G5, G7 = GF[2], GF[3], GF[5], GF[7]
    out = {
        "abelian(1)/GF(2)": lambda: cat.abelian(G2, 1),
        "abelian(3)/GF(2)": lambda: cat.abelian(G2, 3),
        "abelian(2)/GF(3)": lambda: cat.abelian(G3, 2),
        "heisenberg(1)/GF(2)": lambda: cat.heisenberg(G2),
        "heisenberg(1)/GF(3)": lambda: cat.heisenberg(G3),
        "heisenberg(2)/GF(2)": lambda: cat.heisenberg(G2, 2),
        "almost_abelian(2)/GF(3)": lambda: cat.almost_abelian(G3, 2),
        "almost_abelian(3)/GF(3)": lambda: cat.almost_abelian(G3, 3),
        "almost_abelian(3)/GF(5)": lambda: cat.almost_abelian(G5, 3),
        "sl2/GF(3)": lambda: cat.sl2(G3),
        "sl2/GF(5)": lambda: cat.sl2(G5),
        "sl2/GF(7)": lambda: cat.sl2(G7),
        "L1_gamma(0)/GF(2)": lambda: cat.L1_gamma(G2, 0),
        "L1_gamma(1)/GF(2)": lambda: cat.L1_gamma(G2, 1),
        "Lm_gamma(2)/GF(2)": lambda: cat.Lm_gamma(G2, 2),
        "Lm_gamma(3)/GF(5)": lambda: cat.Lm_gamma(G5, 3),
        "rotation/GF(3)": lambda: cat.rotation_extension(G3),
        "rotation/GF(7)": lambda: cat.rotation_extension(G7),
        "cross_product(-1,-1)/GF(3)": lambda: cat.cross_product(G3, -1, -1),
        "sl2+abelian(1)/GF(3)": lambda: core.direct_sum(cat.sl2(G3), cat.abelian(G3, 1)),
        "L1_gamma(0)+abelian(1)/GF(2)": lambda: core.direct_sum(cat.L1_gamma(G2, 0), cat.abelian(G2, 1)),
        "semidirect_adjoint(sl2)/GF(3)": lambda: cat.semidirect_adjoint(cat.sl2(G3)),
        "semidirect_adjoint(L1_gamma(0))/GF(2)": lambda: cat.semidirect_adjoint(cat.L1_gamma(G2, 0)),
        "direct_power(2,sl2)/GF(3)": lambda: cat.direct_power(cat.sl2(G3), 2),
    }
    for s in range(3):
        out[f"random_solvable(4,{s})/GF(2)"] = functools.partial(cat.random_solvable, G2, 4, s)
        out[f"random_solvable(4,{s})/GF(3)"] = functools.partial(cat.random_solvable, G3, 4, s)
    return out


BRUTE = _brute_builders()


def _char0_builders() -> dict:
    so3 = lambda: cat.cross_product(Q, -1, -1)
    return {
        "abelian(3)/Q": lambda: cat.abelian(Q, 3),
        "heisenberg(1)/Q": lambda: cat.heisenberg(Q),
        "heisenberg(2)/Q": lambda: cat.heisenberg(Q, 2),
        "almost_abelian(3)/Q": lambda: cat.almost_abelian(Q, 3),
        "rotation/Q": lambda: cat.rotation_extension(Q),
        "sl2/Q": lambda: cat.sl2(Q),
        "cross_product(-1,-1)/Q": so3,
        "cross_product(-1,-3)/Q": lambda: cat.cross_product(Q, -1, -3),
        "direct_power(2,cross_product(-1,-1))/Q": lambda: cat.direct_power(so3(), 2),
        "direct_power(2,sl2)/Q": lambda: cat.direct_power(cat.sl2(Q), 2),
        "noniso_nonsplit_pair/Q": lambda: core.direct_sum(*cat.noniso_nonsplit_pair()),
        "semidirect_adjoint(cross_product(-1,-1))/Q": lambda: cat.semidirect_adjoint(so3()),
        "semidirect_adjoint(sl2)/Q": lambda: cat.semidirect_adjoint(cat.sl2(Q)),
        "sl2+abelian(1)/Q": lambda: core.direct_sum(cat.sl2(Q), cat.abelian(Q, 1)),
        "sl2/Q(sqrt,2)": lambda: cat.sl2(FieldSpec.quadratic(2)),
    }


CHAR0 = _char0_builders()

# Frattini ideals forced by construction, as spanning index sets of basis vectors
KNOWN_FRATTINI = {
    "abelian(3)/Q": [],
    "heisenberg(1)/Q": "derived",
    "heisenberg(2)/Q": "derived",
    "almost_abelian(3)/Q": [],
    "rotation/Q": [],
    "sl2/Q": [],
    "cross_product(-1,-1)/Q": [],
    "direct_power(2,cross_product(-1,-1))/Q": [],
    "direct_power(2,sl2)/Q": [],
    "noniso_nonsplit_pair/Q": [],
    "semidirect_adjoint(cross_product(-1,-1))/Q": [],
    "semidirect_adjoint(sl2)/Q": [],
    "sl2+abelian(1)/Q": [],
}


def known_frattini(name: str, alg):
    spec = KNOWN_FRATTINI.get(name)
    if spec is None:
        return None
    if spec == "derived":
        return core.bracket_space(alg, alg.full(), alg.full())
    return alg.span(*[alg.basis_vector(i) for i in spec])


@functools.lru_cache(maxsize=None)
def algebra(name: str):
    if name in BRUTE:
        return BRUTE[name]()
    return CHAR0[name]()


@dataclass
class BruteData:
    name: str
    alg: object
    lat: gl.SubalgebraLattice
    ell: int
    minmax: int
    modl: int
    qil: int


@functools.lru_cache(maxsize=None)
def brute(name: str) -> BruteData:
    alg = algebra(name)
    lat = gl.enumerate_lattice(alg)
    return BruteData(name, alg, lat, gl.ell_brute(lat), gl.minmax_brute(lat)[0],
                     gl.modl_brute(lat)[0], gl.qil_brute(lat)[0])


def random_solvables(count: int, seed: int = 0, max_dim: int = 4) -> list:
    """``count`` seeded random solvable algebras alternating GF(2) and GF(3), dimensions 2..max_dim."""
    out = []
    for i in range(count):
        F = GF[2] if i % 2 == 0 else GF[3]
        n = 2 + (i // 2) % (max_dim - 1)
        s = seed + i
        out.append((f"random_solvable({n},{s})/{F.literal()}", cat.random_solvable(F, n, s)))
    return out


def sample_subalgebras(alg, count: int, seed: int = 0) -> list:
    """Distinct proper nonzero subalgebras generated by one or two small random vectors."""
    rng = random.Random(seed)
    F, n = alg.field, alg.dim
    seen, out = set(), []
    for _ in range(count * 20):
        if len(out) >= count:
            break
        k = rng.choice((1, 1, 2))
        vecs = [[F(rng.randint(-1, 2)) for _ in range(n)] for _ in range(k)]
        if not any(any(v) for v in vecs):
            continue
        U = core.closure(alg, alg.span(*vecs))
        if U.dim in (0, n) or U in seen:
            continue
        seen.add(U)
        out.append(U)
    return out
