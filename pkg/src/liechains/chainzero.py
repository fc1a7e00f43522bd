"""Structural engine for characteristic 0.

Chief series, modular and quasi-ideal decisions, the chain-length invariants
modℓ and qiℓ, and maximal chains are obtained from the structure theory
(radical, Levi factor, simple ideals, three-dimensional classification)
rather than from the subalgebra lattice, which is infinite over ℚ.  Every
chain step carries a :class:`MaximalityCertificate` whose premises are
checked by machine.  Undecidable cases raise :class:`Indeterminate`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from . import core, modules
from . import linalg as la
from .core import ChainRecord, LieAlgebra
from .errors import (
    ConstructionUnavailable,
    Indeterminate,
    VerificationFailed,
    WrongCharacteristic,
    WrongDimension,
)
from .fields import RATIONALS, FieldSpec, quadratic_form_invariants, roots_in_field
from .linalg import Subspace

CERT_KINDS = ("codim1", "one_dim_in_3simple", "brute", "theory", "ideal_step")


@dataclass
class MaximalityCertificate:
    """Why ``lower`` is maximal in ``upper`` (or, for ``ideal_step``, why the factor is chief)."""

    kind: str
    verified: bool
    name: str = ""
    details: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in CERT_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    def label(self) -> str:
        return f"theory({self.name})" if self.kind == "theory" else self.kind


@dataclass
class MinmaxBracket:
    lower: int
    lower_provenance: str
    upper: int | None
    witness: ChainRecord | None
    exact: bool

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise VerificationFailed(f"minmax bracket is empty: {self.lower} > {self.upper}")
        if self.exact and (self.upper != self.lower or self.witness is None
                           or self.witness.length != self.lower):
            raise VerificationFailed("an exact bracket needs a witness of length lower")


@dataclass
class ChainValue:
    """An invariant value together with a chain realizing it."""

    value: int
    chain: ChainRecord
    provenance: str


def _require_char0(field: FieldSpec) -> None:
    if field.characteristic() != 0:
        raise WrongCharacteristic("the structural engine needs characteristic 0")


def _restricted(alg: LieAlgebra, P: Subspace) -> LieAlgebra:
    return alg if P.dim == alg.dim and P == alg.full() else core.subalgebra_restrict(alg, P)


def _to_ambient(P: Subspace, sub: Subspace) -> Subspace:
    """A subspace given in coordinates of ``P``'s basis, as an ambient subspace."""
    return Subspace(P.field, P.ambient, [P.from_coordinates(r) for r in sub.rows])


def _lift_chain(P: Subspace, members: list) -> list:
    return [_to_ambient(P, m) for m in members]


# ---------------------------------------------------------------------------
# irreducibility of small modules
# ---------------------------------------------------------------------------


def _invariant_line(field: FieldSpec, ops, basis: list, k: int):
    """A common eigenvector of ``ops`` inside ``span(basis)``, or ``None``."""
    while basis:
        E = Subspace(field, k, basis)
        # eigenvectors of every op lie in {v in E : op v in E for all op}
        rows = []
        for op in ops:
            imgs = [E.reduce(la.mat_vec(op, b)) for b in E.rows]
            for c in range(k):
                rows.append([img[c] for img in imgs])
        coords = la.kernel(field, rows, E.dim)
        if len(coords) < E.dim:
            basis = [E.from_coordinates(c) for c in coords]
            continue
        mats = [la.restrict_operator(E, op) for op in ops]
        pick = next((i for i, m in enumerate(mats) if not la.is_scalar_matrix(m)), None)
        if pick is None:
            return E.rows[0]
        M = mats[pick]
        for lam in roots_in_field(field, la.charpoly(field, M)):
            shifted = la.mat_add(M, la.mat_scale(-lam, la.identity(field, E.dim)))
            eig = [E.from_coordinates(c) for c in la.kernel(field, shifted, E.dim)]
            if len(eig) < E.dim:
                v = _invariant_line(field, ops, eig, k)
                if v is not None:
                    return v
        return None
    return None


def irreducible_module(field: FieldSpec, action: Sequence, k: int) -> bool:
    """Decide irreducibility of ``F^k`` (``k <= 3``) under the matrices in ``action``.

    Reducible iff there is an invariant line, or (for ``k = 3``) an invariant
    plane, which is an invariant line of the transposed action.
    """
    if k > 3:
        raise WrongDimension("irreducible_module handles dimension at most 3")
    if k <= 1:
        return True
    ops = [list(map(list, a)) for a in action]
    full = la.identity(field, k)
    if _invariant_line(field, ops, full, k) is not None:
        return False
    if k == 3 and _invariant_line(field, [la.transpose(a) for a in ops], full, k) is not None:
        return False
    return True


def certify_factor(field: FieldSpec, ops, k: int) -> tuple[bool, str]:
    """Irreducibility of a factor module with the method used.

    Dimensions up to 3 use :func:`irreducible_module`; larger factors go to the
    general submodule search, which raises :class:`Indeterminate` when stuck.
    """
    if k <= 3 and field.characteristic() == 0:
        return irreducible_module(field, ops, k), "eigenvector"
    return modules.is_irreducible(field, ops, k)


# ---------------------------------------------------------------------------
# maximality certificates
# ---------------------------------------------------------------------------


def _core_quotient(alg: LieAlgebra, A: Subspace, B: Subspace):
    """``(Q, Abar)``: the algebra ``B / core_B(A)`` and the image of ``A`` in it."""
    Balg = _restricted(alg, B)
    A_in_B = Subspace(alg.field, B.dim, [B.coordinates(r) for r in A.rows])
    K = core.core(Balg, A_in_B)
    Q, q = core.quotient(Balg, K)
    return Q, q.image(A_in_B), K


def certify_codim1(alg: LieAlgebra, A: Subspace, B: Subspace) -> MaximalityCertificate | None:
    if A < B and B.dim - A.dim == 1 and core.is_subalgebra(alg, A):
        return MaximalityCertificate("codim1", True)
    return None


def certify_line_in_3simple(alg: LieAlgebra, A: Subspace, B: Subspace) -> MaximalityCertificate | None:
    """``A/K`` is a line with no eigenvalue in the 3-dim simple ``B/K`` (``K`` the core)."""
    if not (A < B and core.is_subalgebra(alg, A) and core.is_subalgebra(alg, B)):
        return None
    Q, Abar, _ = _core_quotient(alg, A, B)
    if Q.dim != 3 or Abar.dim != 1:
        return None
    if core.classify_3dim(Q).kind == "not_simple":
        return None
    x = Abar.rows[0]
    poly = core.induced_line_charpoly(Q, x)
    if roots_in_field(Q.field, poly):
        return None
    return MaximalityCertificate("one_dim_in_3simple", True, details={
        "witness": [Q.field.format(c) for c in x],
        "charpoly": [Q.field.format(c) for c in poly],
    })


def certify_diagonal(alg: LieAlgebra, A: Subspace, B: Subspace) -> MaximalityCertificate | None:
    """``B/K = S1 ⊕ S2`` with simple ``S_i`` and ``A/K`` the graph of an isomorphism ``S1 -> S2``."""
    if not (A < B and core.is_subalgebra(alg, A) and core.is_subalgebra(alg, B)):
        return None
    Q, Abar, _ = _core_quotient(alg, A, B)
    if Q.dim % 2 or Abar.dim * 2 != Q.dim:
        return None
    if core.bracket_space(Q, Q.full(), Q.full()) != Q.full():
        return None
    if Q.field.characteristic() == 0:
        if core.radical0(Q).dim:
            return None
    try:
        ideals = core.simple_ideals(Q)
    except (VerificationFailed, Indeterminate):
        return None
    if len(ideals) != 2 or ideals[0].dim != ideals[1].dim:
        return None
    for S in ideals:
        if (S & Abar).dim:
            return None
    # trivial intersections and equal dimensions make Abar a graph of a bijection;
    # being a subalgebra makes that bijection a homomorphism
    return MaximalityCertificate("theory", True, "diagonal-maximal", {
        "summand_dim": ideals[0].dim,
    })


def certify_complement(alg: LieAlgebra, A: Subspace, B: Subspace) -> MaximalityCertificate | None:
    """``A/K`` complements a minimal abelian ideal of ``B/K``.

    Such a complement is maximal: a subalgebra between them meets the ideal
    in a submodule, which is 0 or everything.
    """
    if not (A < B and core.is_subalgebra(alg, A) and core.is_subalgebra(alg, B)):
        return None
    Q, Abar, K = _core_quotient(alg, A, B)
    F = Q.field
    try:
        D, method = modules.minimal_submodule(F, Q.ad_basis(), Q.dim)
    except Indeterminate:
        return None
    if not core.is_abelian(Q, D):
        return None
    if (D & Abar).dim or D.dim + Abar.dim != Q.dim:
        return None
    return MaximalityCertificate("theory", True, "complement-of-minimal-abelian-ideal", {
        "ideal_dim": D.dim, "method": method, "core_dim": K.dim,
    })


def certify_brute(alg: LieAlgebra, A: Subspace, B: Subspace) -> MaximalityCertificate | None:
    """Over GF(p): every ``v`` in ``B`` outside ``A`` generates ``B`` together with ``A``."""
    F = alg.field
    if not F.is_finite or not (A < B and core.is_subalgebra(alg, A)):
        return None
    q = la.make_quotient(B, A)
    if F.p ** q.dim > 20000:
        return None
    for v in modules._lines(F, q.dim):
        if core.closure(alg, A.add_vectors([q.lift(v)])) != B:
            return None
    return MaximalityCertificate("brute", True, details={"lines": (F.p ** q.dim - 1) // (F.p - 1)})


def intermediate_subalgebra(alg: LieAlgebra, A: Subspace, B: Subspace) -> Subspace | None:
    """A subalgebra strictly between ``A`` and ``B`` generated by ``A`` and one vector, if one is found.

    Over GF(p) within budget every line of ``B/A`` is tried, so ``None`` there
    means ``A`` is maximal.  Otherwise only basis vectors and their pairwise
    sums and differences are tried.
    """
    F = alg.field
    q = la.make_quotient(B, A)
    if F.is_finite and F.p ** q.dim <= 20000:
        cands = list(modules._lines(F, q.dim))
    else:
        units = [[F.one if i == j else F.zero for i in range(q.dim)] for j in range(q.dim)]
        cands = list(units)
        for u, w in itertools.combinations(units, 2):
            cands += [[a + b for a, b in zip(u, w)], [a - b for a, b in zip(u, w)]]
    for v in cands:
        C = core.closure(alg, A.add_vectors([q.lift(v)]))
        if C != B:
            return C
    return None


CERTIFIERS = (certify_codim1, certify_line_in_3simple, certify_diagonal, certify_complement, certify_brute)


def certify_maximal(alg: LieAlgebra, A: Subspace, B: Subspace) -> MaximalityCertificate | None:
    """The first certificate that proves ``A`` maximal in ``B``, or ``None``."""
    for fn in CERTIFIERS:
        try:
            cert = fn(alg, A, B)
        except Indeterminate:
            cert = None
        if cert is not None:
            return cert
    return None


def certify_chief_step(alg: LieAlgebra, A: Subspace, B: Subspace) -> MaximalityCertificate | None:
    """``A < B`` ideals of ``L`` with ``B/A`` an irreducible ``ad L``-module."""
    if not (A < B and core.is_ideal(alg, A) and core.is_ideal(alg, B)):
        return None
    k, mats, _ = la.quotient_and_induced(B, A, alg.ad_basis())
    ok, method = certify_factor(alg.field, mats, k)
    if not ok:
        return None
    return MaximalityCertificate("ideal_step", True, details={"dim": k, "method": method})


def verify_chain(alg: LieAlgebra, chain: ChainRecord) -> list:
    """Re-derive a certificate for every step of ``chain`` from scratch.

    Returns one certificate (or ``None`` for an unproved step) per step.
    """
    out = []
    for A, B in zip(chain.members, chain.members[1:]):
        if chain.kind in ("chief", "ideal"):
            out.append(certify_chief_step(alg, A, B))
        elif chain.kind == "maximal":
            out.append(certify_maximal(alg, A, B))
        elif chain.kind == "modular":
            ok = modular_test0(alg, B)[0] and modular_test0(alg, A)[0]
            out.append(MaximalityCertificate("theory", ok, "modular-member") if ok else None)
        else:
            ok = quasi_ideal_test0(alg, B) and quasi_ideal_test0(alg, A)
            out.append(MaximalityCertificate("theory", ok, "quasi-ideal-member") if ok else None)
    return out


# ---------------------------------------------------------------------------
# chief series
# ---------------------------------------------------------------------------


def _minimal_abelian_ideal(alg: LieAlgebra) -> tuple[Subspace, str]:
    """A minimal ideal inside the centre of the nilradical, certified irreducible."""
    N = core.nilradical0(alg)
    Z = core.centralizer(alg, N, within=N)
    ops = alg.ad_basis()
    best = None
    for v in Z.rows:
        s = modules.spin(alg.field, ops, [v], alg.dim)
        if best is None or s.dim < best.dim:
            best = s
    while True:
        mats = modules.restrict(alg.field, ops, best)
        ok, method = certify_factor(alg.field, mats, best.dim)
        if ok:
            return best, method
        sub, _ = modules.minimal_submodule(alg.field, mats, best.dim)
        best = _to_ambient(best, sub)


def _ascent(alg: LieAlgebra) -> tuple[list, list]:
    if alg.dim == 0:
        return [alg.zero()], []
    R = core.radical0(alg)
    if R.dim:
        A, method = _minimal_abelian_ideal(alg)
        Q, q = core.quotient(alg, A)
        members, certs = _ascent(Q)
        cert = MaximalityCertificate("ideal_step", True, details={"dim": A.dim, "method": method})
        return [alg.zero()] + [q.preimage(m) for m in members], [cert] + certs
    members = [alg.zero()]
    certs = []
    for S in core.simple_ideals(alg):
        members.append(members[-1] + S)
        certs.append(MaximalityCertificate("ideal_step", True, details={"dim": S.dim, "method": "simple-ideal"}))
    return members, certs


def chief_series0(alg: LieAlgebra) -> tuple[int, ChainRecord]:
    """``ℓ(L)`` and a chief series, built bottom-up through minimal abelian ideals and simple ideals.

    The length is cross-checked against the composition length of ``L`` as an
    ``ad L``-module.
    """
    _require_char0(alg.field)
    members, certs = _ascent(alg)
    chain = ChainRecord(members, certs, "chief")
    check = core.il(alg, alg.full()).value
    if check != chain.length:
        raise VerificationFailed(f"chief series length {chain.length} disagrees with composition length {check}")
    return chain.length, chain


def ell_formula(alg: LieAlgebra, phi: Subspace) -> int:
    """``il_L(φ) + il_{L/φ}(N/φ) + dim(R/N) + ℓ(S)`` for a known Frattini ideal ``φ``."""
    _require_char0(alg.field)
    R = core.radical0(alg)
    N = core.nilradical0(alg)
    _, S = core.levi0(alg)
    part1 = core.il(alg, phi).value
    part2 = core.il(alg, N, bottom=phi).value
    part4 = core.ell(_restricted(alg, S)) if S.dim else 0
    return part1 + part2 + (R.dim - N.dim) + part4


# ---------------------------------------------------------------------------
# modular subalgebras and quasi-ideals
# ---------------------------------------------------------------------------


def _almost_abelian_generator(Q: LieAlgebra):
    """``x`` with ``Q = Fx ∔ [Q,Q]``, ``[Q,Q]`` abelian and ``ad x`` the identity on it; else ``None``."""
    D = core.bracket_space(Q, Q.full(), Q.full())
    if D.dim == 0 or Q.dim - D.dim != 1 or not core.is_abelian(Q, D):
        return None
    cols = la.make_quotient(Q.full(), D)
    x = cols.lift([Q.field.one])
    M = la.restrict_operator(D, Q.ad(x))
    if not la.is_scalar_matrix(M) or not M[0][0]:
        return None
    c = M[0][0]
    return [a / c for a in x]


def _is_subalgebra_or_raise(alg: LieAlgebra, U: Subspace) -> None:
    if not core.is_subalgebra(alg, U):
        raise ValueError("not a subalgebra")


def modular_test0(alg: LieAlgebra, U: Subspace, allow_finite: bool = False) -> tuple[bool, str]:
    """Decide modularity of the subalgebra ``U`` by the characteristic-0 classification.

    The tag is ``ideal``, ``almost_abelian_case``, ``split3_case``,
    ``nonsplit3_case`` or ``not_modular``.  ``allow_finite`` runs the same
    case analysis over GF(p), where it is only a heuristic mirror.
    """
    if not allow_finite:
        _require_char0(alg.field)
    _is_subalgebra_or_raise(alg, U)
    C = core.core(alg, U)
    if C == U:
        return True, "ideal"
    Q, q = core.quotient(alg, C)
    Ubar = q.image(U)
    if Ubar.dim == 1:
        x = _almost_abelian_generator(Q)
        if x is not None:
            D = core.bracket_space(Q, Q.full(), Q.full())
            u = Ubar.rows[0]
            M = la.restrict_operator(D, Q.ad(u))
            if u not in D and all(M[i][j] == (Q.field.one if i == j else Q.field.zero)
                                  for i in range(D.dim) for j in range(D.dim)):
                return True, "almost_abelian_case"
    if Q.dim == 3:
        cls = core.classify_3dim(Q)
        if cls.kind == "split_simple" and Ubar.dim == 2:
            return True, "split3_case"
        if cls.kind == "nonsplit_simple" and Ubar.dim == 1 and core.line_is_maximal_3dim(Q, Ubar.rows[0]):
            return True, "nonsplit3_case"
    return False, "not_modular"


def quasi_ideal_test0(alg: LieAlgebra, U: Subspace, allow_finite: bool = False) -> bool:
    """Quasi-ideal test by classification: codimension at most one modulo the core, or an almost abelian quotient."""
    if not allow_finite:
        _require_char0(alg.field)
    _is_subalgebra_or_raise(alg, U)
    C = core.core(alg, U)
    if C == U or alg.dim - U.dim <= 1:
        return True
    Q, _ = core.quotient(alg, C)
    return _almost_abelian_generator(Q) is not None


# ---------------------------------------------------------------------------
# modℓ and qiℓ
# ---------------------------------------------------------------------------


def _semisimple_quotient(alg: LieAlgebra):
    """``(R, Q, q, ideals)``: the radical, ``L/R`` with its quotient map, and simple ideals of ``L/R``."""
    R = core.radical0(alg)
    Q, q = core.quotient(alg, R)
    ideals = core.simple_ideals(Q) if Q.dim else []
    return R, Q, q, ideals


def _two_dim_subalgebra(T: LieAlgebra):
    """A 2-dimensional subalgebra of a 3-dimensional algebra, if one is found."""
    for x in core._candidate_vectors(T):
        line = Subspace(T.field, 3, [x])
        _, mats, qq = la.quotient_and_induced(T.full(), line, [T.ad(x)])
        for lam in roots_in_field(T.field, la.charpoly(T.field, mats[0])):
            M = la.mat_add(mats[0], la.mat_scale(-lam, la.identity(T.field, 2)))
            y = qq.lift(la.kernel(T.field, M, 2)[0])
            return Subspace(T.field, 3, [x, y])
    return None


def _top_chain(alg: LieAlgebra, P: Subspace, extra: Subspace, kind: str, tag: str) -> ChainRecord:
    """Chief series of ``L`` up to the ideal ``P``, then ``P < P + extra < L``."""
    res = core.il(alg, P)
    members = list(res.witness) + [P + extra, alg.full()]
    certs = ["ideal"] * res.value + [tag, "ideal"]
    return ChainRecord(members, certs, kind)


def _chain_through_summand(alg: LieAlgebra, R, Q, q, ideals, idx: int) -> tuple[Subspace, LieAlgebra, la.Quotient]:
    """Preimage ``P`` of the complement of ``ideals[idx]`` in ``L/R``, and ``L/P``."""
    rest = Q.zero()
    for j, S in enumerate(ideals):
        if j != idx:
            rest = rest + S
    P = q.preimage(rest)
    T, tq = core.quotient(alg, P)
    return P, T, tq


def modl0(alg: LieAlgebra) -> ChainValue:
    """modℓ as ℓ plus one exactly when ``L/R`` has a three-dimensional simple ideal."""
    ell, chief = chief_series0(alg)
    R, Q, q, ideals = _semisimple_quotient(alg)
    for idx, S in enumerate(ideals):
        if S.dim != 3:
            continue
        P, T, tq = _chain_through_summand(alg, R, Q, q, ideals, idx)
        cls = core.classify_3dim(T)
        if cls.kind == "split_simple":
            sub = _two_dim_subalgebra(T)
            tag = "split3_case"
        else:
            sub = Subspace(T.field, 3, [cls.witness]) if cls.witness else None
            tag = "nonsplit3_case"
        if sub is None:
            raise Indeterminate("no modular witness found in a three-dimensional simple quotient")
        chain = _top_chain(alg, P, tq.preimage(sub), "modular", tag)
        for m in chain.members:
            ok, _ = modular_test0(alg, m)
            if not ok:
                raise VerificationFailed("modular witness chain has a non-modular member")
        return ChainValue(ell + 1, chain, f"ell+1 ({tag})")
    return ChainValue(ell, ChainRecord(chief.members, ["ideal"] * ell, "modular"), "ell (chief series)")


def qil0(alg: LieAlgebra) -> ChainValue:
    """qiℓ as ℓ plus one exactly when ``L/R`` has a split three-dimensional simple ideal."""
    ell, chief = chief_series0(alg)
    R, Q, q, ideals = _semisimple_quotient(alg)
    for idx, S in enumerate(ideals):
        if S.dim != 3:
            continue
        P, T, tq = _chain_through_summand(alg, R, Q, q, ideals, idx)
        if core.classify_3dim(T).kind != "split_simple":
            continue
        sub = _two_dim_subalgebra(T)
        if sub is None:
            raise Indeterminate("no two-dimensional subalgebra found in a split quotient")
        chain = _top_chain(alg, P, tq.preimage(sub), "quasiideal", "codim1")
        for m in chain.members:
            if not quasi_ideal_test0(alg, m):
                raise VerificationFailed("quasi-ideal witness chain has a bad member")
        return ChainValue(ell + 1, chain, "ell+1 (split summand)")
    return ChainValue(ell, ChainRecord(chief.members, ["ideal"] * ell, "quasiideal"), "ell (chief series)")


# ---------------------------------------------------------------------------
# maximal chains
# ---------------------------------------------------------------------------


def _complement_step(P_alg: LieAlgebra, target: Subspace, prefer_ell: int | None):
    """A maximal subalgebra complementing a chief factor of ``P`` inside ``target``.

    Scans the factors of a composition series of ``target`` and prefers a
    complement whose ℓ drops by exactly one.  Returns ``(M, certificate)``.
    """
    res = core.il(P_alg, target)
    members = res.witness
    fallback = None
    for C, B in reversed(list(zip(members, members[1:]))):
        if not core.bracket_space(P_alg, B, B) <= C:
            continue
        M = core.complement_abelian_factor(P_alg, P_alg.full(), B, C)
        if M is None or M == P_alg.full():
            continue
        if M.dim == P_alg.dim - 1:
            cert = MaximalityCertificate("codim1", True)
        else:
            cert = MaximalityCertificate("theory", True, "complement-of-abelian-chief-factor",
                                         {"factor_dim": B.dim - C.dim})
        if prefer_ell is None or core.ell(_restricted(P_alg, M)) == prefer_ell - 1:
            return M, cert
        if fallback is None:
            fallback = (M, cert)
    if fallback is None:
        raise ConstructionUnavailable("no chief factor of the radical has a subalgebra complement")
    return fallback


def solvable_maxchain0(alg: LieAlgebra) -> ChainRecord:
    """Maximal chain of a solvable algebra whose codimensions are the chief-factor dimensions.

    Each step passes to a complement of an abelian chief factor; the complement
    is chosen so that ℓ drops by one.
    """
    if not core.is_solvable(alg):
        raise ValueError("solvable_maxchain0 needs a solvable algebra")
    members, certs = _descend(alg, alg.full(), solvable=True)
    chain = ChainRecord(members, certs, "maximal")
    chief = sorted(_chief_dims(alg))
    if sorted(chain.codimensions()) != chief:
        raise ConstructionUnavailable(
            f"constructed codimensions {sorted(chain.codimensions())} differ from chief dimensions {chief}")
    return chain


def _chief_dims(alg: LieAlgebra) -> list:
    res = core.il(alg, alg.full())
    return [b.dim - a.dim for a, b in zip(res.witness, res.witness[1:])]


def _descend(alg: LieAlgebra, P: Subspace, solvable: bool) -> tuple[list, list]:
    """Chain from 0 to ``P`` removing radical chief factors one complement at a time.

    When ``solvable`` is false the descent stops at a Levi subalgebra, which is
    returned as the bottom member (the caller fills in a chain below it).
    """
    top_down = [P]
    certs = []
    cur = P
    while cur.dim:
        P_alg = _restricted(alg, cur)
        target = P_alg.full() if solvable else core.radical0(P_alg)
        if target.dim == 0:
            break
        M, cert = _complement_step(P_alg, target, core.ell(P_alg))
        cur = _to_ambient(cur, M)
        top_down.append(cur)
        certs.append(cert)
    top_down.reverse()
    certs.reverse()
    return top_down, certs


def _isomorphism_3dim(alg: LieAlgebra, S1: Subspace, S2: Subspace):
    """An explicit isomorphism ``S1 -> S2`` as a list of images of ``S1.rows``, or ``None``.

    Tries the identity in echelon coordinates, then signed permutations, then
    all coefficient matrices with entries in {-1, 0, 1}.
    """
    F = alg.field
    n = S1.dim
    A1 = core.subalgebra_restrict(alg, S1)
    A2 = core.subalgebra_restrict(alg, S2)

    def is_hom(T):
        for i, j in itertools.combinations(range(n), 2):
            lhs = la.mat_vec(T, A1.product(i, j))
            rhs = A2.bracket([T[r][i] for r in range(n)], [T[r][j] for r in range(n)])
            if lhs != rhs:
                return False
        return la.rank(T) == n

    def as_images(T):
        return [S2.from_coordinates([T[r][i] for r in range(n)]) for i in range(n)]

    ident = la.identity(F, n)
    if is_hom(ident):
        return as_images(ident)
    one = F.one
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((one, -one), repeat=n):
            T = la.zeros(F, n, n)
            for i, p in enumerate(perm):
                T[p][i] = signs[i]
            if is_hom(T):
                return as_images(T)
    if F.kind != RATIONALS:
        return None
    # numeric screen over small integer matrices, then exact confirmation
    t1 = np.array([[[float(c) for c in A1.product(i, j)] for j in range(n)] for i in range(n)])
    t2 = np.array([[[float(c) for c in A2.product(i, j)] for j in range(n)] for i in range(n)])
    for entries in itertools.product((-1, 0, 1), repeat=n * n):
        T = np.array(entries, dtype=float).reshape(n, n)
        if abs(np.linalg.det(T)) < 0.5:
            continue
        lhs = np.einsum("rk,ijk->ijr", T, t1)
        rhs = np.einsum("ai,bj,abk->ijk", T, T, t2)
        if np.allclose(lhs, rhs):
            Tx = [[F(int(x)) for x in row] for row in T]
            if is_hom(Tx):
                return as_images(Tx)
    return None


def killing_invariants(alg: LieAlgebra, S: Subspace) -> dict:
    """Isometry invariants of the Killing form of the subalgebra ``S`` (over ℚ)."""
    A = core.subalgebra_restrict(alg, S)
    diag = core.diagonalize_form(A.field, core.killing(A))
    return quadratic_form_invariants(diag)


def _semisimple_chain(alg: LieAlgebra, Lv: Subspace):
    """Maximal chain from 0 to the semisimple subalgebra ``Lv``.

    Returns ``(members, certs, iso_pair)`` where ``iso_pair`` says whether the
    simple ideals are pairwise isomorphic 3-dimensional ones with a special
    witness, ``False`` when non-isomorphism is certified and ``None`` when
    undecided.
    """
    S_alg = _restricted(alg, Lv)
    F = alg.field
    ideals = [_to_ambient(Lv, T) for T in core.simple_ideals(S_alg)]
    if any(T.dim != 3 for T in ideals):
        # no constructive chain through larger simple ideals
        return None, None, False
    witnesses = []
    for T in ideals:
        cls = core.classify_3dim(core.subalgebra_restrict(alg, T))
        if cls.witness is None:
            return None, None, None
        witnesses.append(T.from_coordinates(list(cls.witness)))
    isos = []
    iso_pair = True
    for T in ideals[1:]:
        # over Q, 3-dim simple algebras are isomorphic iff their Killing forms are isometric
        if F.kind == RATIONALS and killing_invariants(alg, ideals[0]) != killing_invariants(alg, T):
            iso_pair = False
            break
        theta = _isomorphism_3dim(alg, ideals[0], T)
        if theta is None:
            iso_pair = None
            break
        isos.append(theta)
    zero = Subspace(F, alg.dim, [])
    if iso_pair:
        # 0 < Fs < Δ(all) < S1 ⊕ Δ(rest) < ... < Lv
        def diag(start: int, i: int) -> list:
            v = ideals[0].rows[i] if start == 0 else isos[start - 1][i]
            for t in range(start + 1, len(ideals)):
                v = [a + b for a, b in zip(v, isos[t - 1][i])]
            return v

        s_coords = ideals[0].coordinates(witnesses[0])
        s_diag = [F.zero] * alg.dim
        for c, i in zip(s_coords, range(3)):
            if c:
                s_diag = [a + c * b for a, b in zip(s_diag, diag(0, i))]
        members = [zero, Subspace(F, alg.dim, [s_diag])]
        for j in range(len(ideals)):
            vecs = [r for T in ideals[:j] for r in T.rows] + [diag(j, i) for i in range(3)]
            members.append(Subspace(F, alg.dim, vecs))
    else:
        # 0 < Fs1 < S1 < S1 + Fs2 < S1 ⊕ S2 < ...
        members = [zero]
        for T, s in zip(ideals, witnesses):
            members.append(members[-1].add_vectors([s]))
            members.append(members[-1] + T)
    certs = []
    for A, B in zip(members, members[1:]):
        cert = certify_maximal(alg, A, B)
        if cert is None:
            raise VerificationFailed("semisimple chain step could not be certified")
        certs.append(cert)
    return members, certs, iso_pair


def minmax_bracket0(alg: LieAlgebra) -> MinmaxBracket:
    """Lower and upper bounds for minmax with a certified witness chain for the upper bound."""
    _require_char0(alg.field)
    ell, _ = chief_series0(alg)
    if core.is_solvable(alg):
        try:
            chain = solvable_maxchain0(alg)
        except ConstructionUnavailable:
            return MinmaxBracket(ell, "S3.3", None, None, False)
        return MinmaxBracket(ell, "S3.3", chain.length, chain, chain.length == ell)
    members, certs = _descend(alg, alg.full(), solvable=False)
    Lv = members[0]
    ss_members, ss_certs, iso_pair = _semisimple_chain(alg, Lv)
    lower, prov = ell + 1, "S3.5"
    if iso_pair is False:
        lower, prov = ell + 2, "S3.8-only-if"
    if ss_members is None:
        return MinmaxBracket(lower, prov, None, None, False)
    chain = ChainRecord(ss_members + members[1:], ss_certs + certs, "maximal")
    return MinmaxBracket(lower, prov, chain.length, chain, chain.length == lower)
