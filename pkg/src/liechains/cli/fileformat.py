"""JSON algebra files, schema ``liealg/1``.

A file looks like::

    {
      "schema": "liealg/1",
      "field": "Q",
      "dim": 3,
      "basis": ["e", "h", "f"],
      "brackets": [[0, 1, [[0, "-2/1"]]], [0, 2, [[1, "1/1"]]], [1, 2, [[2, "-2/1"]]]],
      "subspaces": {"borel": [["1/1", "0/1", "0/1"], ["0/1", "1/1", "0/1"]]},
      "chains": {"flag": ["0", "borel", "L"]}
    }

Bracket entries list ``[e_i, e_j]`` for ``i < j`` only.  Scalars are strings
in the field's canonical notation.  Chains name declared subspaces, with
``"0"`` and ``"L"`` reserved for the zero subspace and the whole algebra.
Serialization is canonical: sorted keys, sorted entries, zero coefficients
dropped and subspaces stored in reduced echelon form, so parsing and
re-serializing a canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from ..core import LieAlgebra
from ..errors import JacobiViolation, LieChainsError, ParseError, UnknownChain, ValidationError
from ..fields import FieldSpec
from ..linalg import Subspace

SCHEMA = "liealg/1"
RESERVED = ("0", "L")


@dataclass
class AlgebraFile:
    algebra: LieAlgebra
    subspaces: dict = dc_field(default_factory=dict)
    chains: dict = dc_field(default_factory=dict)

    def subspace(self, name: str) -> Subspace:
        if name == "0":
            return self.algebra.zero()
        if name == "L":
            return self.algebra.full()
        if name not in self.subspaces:
            raise UnknownChain(f"no subspace named {name!r}")
        return self.subspaces[name]

    def chain(self, name: str) -> list:
        if name not in self.chains:
            raise UnknownChain(f"no chain named {name!r}")
        return [self.subspace(m) for m in self.chains[name]]


def _expect(cond: bool, where: str, msg: str) -> None:
    if not cond:
        raise ParseError(f"{where}: {msg}")


def _scalar(F: FieldSpec, text, where: str):
    _expect(isinstance(text, str), where, "scalars must be strings")
    try:
        return F.parse(text)
    except (LieChainsError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: {exc}") from exc


def loads(text: str, check: bool = True) -> AlgebraFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from exc
    _expect(isinstance(doc, dict), "document", "top level must be an object")
    _expect(doc.get("schema") == SCHEMA, "schema", f"expected {SCHEMA!r}")
    try:
        F = FieldSpec.from_literal(doc.get("field", ""))
    except (LieChainsError, ValueError) as exc:
        raise ParseError(f"field: {exc}") from exc
    n = doc.get("dim")
    _expect(isinstance(n, int) and n >= 0, "dim", "must be a non-negative integer")
    names = doc.get("basis", [f"e{i}" for i in range(n)])
    _expect(isinstance(names, list) and len(names) == n, "basis", f"needs {n} names")
    brackets = {}
    for idx, entry in enumerate(doc.get("brackets", [])):
        where = f"brackets[{idx}]"
        _expect(isinstance(entry, list) and len(entry) == 3, where, "entries are [i, j, [[k, scalar], ...]]")
        i, j, terms = entry
        _expect(isinstance(i, int) and isinstance(j, int), where, "indices must be integers")
        _expect(0 <= i < n and 0 <= j < n, where, "index out of range")
        _expect(i < j, where, f"needs i < j, got ({i}, {j})")
        _expect((i, j) not in brackets, where, f"duplicate entry ({i}, {j})")
        coeffs = {}
        for t, term in enumerate(terms):
            tw = f"{where}[{t}]"
            _expect(isinstance(term, list) and len(term) == 2, tw, "terms are [k, scalar]")
            k, c = term
            _expect(isinstance(k, int) and 0 <= k < n, tw, "index out of range")
            _expect(k not in coeffs, tw, f"duplicate index {k}")
            coeffs[k] = _scalar(F, c, tw)
        brackets[(i, j)] = coeffs
    try:
        alg = LieAlgebra(F, n, brackets, names, check=check)
    except JacobiViolation as exc:
        raise ValidationError(f"Jacobi identity fails on basis triple {exc.triple}") from exc
    subspaces = {}
    for name, vecs in sorted(doc.get("subspaces", {}).items()):
        where = f"subspaces.{name}"
        _expect(name not in RESERVED, where, "name is reserved")
        _expect(isinstance(vecs, list), where, "must be a list of vectors")
        rows = []
        for v_idx, v in enumerate(vecs):
            _expect(isinstance(v, list) and len(v) == n, f"{where}[{v_idx}]", f"vectors have length {n}")
            rows.append([_scalar(F, c, f"{where}[{v_idx}]") for c in v])
        subspaces[name] = Subspace(F, n, rows)
    chains = {}
    for name, members in sorted(doc.get("chains", {}).items()):
        where = f"chains.{name}"
        _expect(isinstance(members, list) and members, where, "must be a non-empty list of subspace names")
        for m in members:
            _expect(m in RESERVED or m in subspaces, where, f"unknown subspace {m!r}")
        chains[name] = list(members)
    return AlgebraFile(alg, subspaces, chains)


def load(path: str, check: bool = True) -> AlgebraFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8") from exc
    return loads(text, check=check)


def to_document(af: AlgebraFile) -> dict:
    alg = af.algebra
    F = alg.field
    entries = []
    for (i, j), coeffs in sorted(alg.structure().items()):
        terms = [[k, F.format(c)] for k, c in sorted(coeffs.items()) if c]
        if terms:
            entries.append([i, j, terms])
    doc = {
        "schema": SCHEMA,
        "field": F.literal(),
        "dim": alg.dim,
        "basis": list(alg.names),
        "brackets": entries,
    }
    if af.subspaces:
        doc["subspaces"] = {name: [[F.format(c) for c in row] for row in U.rows]
                            for name, U in sorted(af.subspaces.items())}
    if af.chains:
        doc["chains"] = {name: list(m) for name, m in sorted(af.chains.items())}
    return doc


def dumps(af: AlgebraFile | LieAlgebra) -> str:
    if isinstance(af, LieAlgebra):
        af = AlgebraFile(af)
    return json.dumps(to_document(af), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dump(af: AlgebraFile | LieAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(af))
