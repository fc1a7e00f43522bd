"""``liechains`` command line.

Exit codes: 0 success, 1 a check failed, 2 bad input (parse, validation,
unknown names, budget), 3 no failure but some step stayed indeterminate.
"""

from __future__ import annotations

import argparse
import sys

from .. import catalog as cat
from .. import chainzero as cz
from .. import core
from .. import gfplattice as gl
from ..core import ChainRecord
from ..errors import (BadParameters, BudgetExceeded, ConstructionUnavailable, Indeterminate, LieChainsError,
                      ParseError, UnknownChain, UnsupportedField, ValidationError, WrongCharacteristic)
from ..fields import FieldSpec
from . import fileformat, suites
from .report import render_json, render_suites, render_table

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INDETERMINATE = 0, 1, 2, 3
CLAIMS = ("maximal", "chief", "modular", "quasiideal")
FLAGS = ("ideal", "modular", "quasiideal")


def _err(msg: str) -> None:
    print(f"liechains: {msg}", file=sys.stderr)


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _subspace_rows(U) -> list:
    return [[U.field.format(c) for c in row] for row in U.rows]


def _chain_doc(chain: ChainRecord | None) -> dict | None:
    if chain is None:
        return None
    return {
        "kind": chain.kind,
        "dims": [m.dim for m in chain.members],
        "certificates": [c.label() if hasattr(c, "label") else str(c) for c in chain.certificates],
        "members": [_subspace_rows(m) for m in chain.members],
    }


# -- validate ----------------------------------------------------------------


def cmd_validate(args) -> int:
    af = fileformat.load(args.file)
    alg = af.algebra
    print(f"ok: {alg.field.literal()} dim {alg.dim}, "
          f"{len(af.subspaces)} subspace(s), {len(af.chains)} chain(s)")
    return EXIT_OK


# -- invariants --------------------------------------------------------------


def _value(value, status: str, provenance: str, chain=None, **extra) -> dict:
    return {"value": value, "status": status, "provenance": provenance, "witness": _chain_doc(chain), **extra}


def _indeterminate(reason: str) -> dict:
    return {"value": None, "status": "indeterminate", "provenance": reason, "witness": None}


def invariants_brute(alg) -> dict:
    lat = gl.enumerate_lattice(alg)
    ell, chief = gl.chief_series_brute(lat)
    mm, mm_chain = gl.minmax_brute(lat)
    ml, ml_chain = gl.modl_brute(lat)
    ql, ql_chain = gl.qil_brute(lat)
    src = f"brute lattice ({lat.N} subalgebras)"
    return {
        "ell": _value(ell, "exact", src, chief),
        "minmax": _value(mm, "exact", src, mm_chain),
        "modl": _value(ml, "exact", src, ml_chain),
        "qil": _value(ql, "exact", src, ql_chain),
    }


def _guard(fn):
    try:
        return fn()
    except (Indeterminate, ConstructionUnavailable) as exc:
        return _indeterminate(str(exc) or type(exc).__name__)


def invariants_structural(alg) -> dict:
    if alg.field.characteristic() != 0:
        raise WrongCharacteristic("the structural engine needs characteristic 0")

    def ell():
        value, chain = cz.chief_series0(alg)
        return _value(value, "exact", "chief series", chain)

    def minmax():
        b = cz.minmax_bracket0(alg)
        status = "exact" if b.exact else "bounds"
        return _value(b.upper if b.exact else None, status, b.lower_provenance, b.witness,
                      lower=b.lower, upper=b.upper)

    def modl():
        v = cz.modl0(alg)
        return _value(v.value, "exact", v.provenance, v.chain)

    def qil():
        v = cz.qil0(alg)
        return _value(v.value, "exact", v.provenance, v.chain)

    return {"ell": _guard(ell), "minmax": _guard(minmax), "modl": _guard(modl), "qil": _guard(qil)}


def _shown(v: dict) -> str:
    if v["status"] == "indeterminate":
        return "indeterminate"
    if v["status"] == "bounds":
        hi = "?" if v["upper"] is None else v["upper"]
        return f"[{v['lower']}, {hi}]"
    return str(v["value"])


def cmd_invariants(args) -> int:
    alg = fileformat.load(args.file).algebra
    method = args.method
    if method == "auto":
        method = "brute" if alg.field.is_finite else "structural"
    if method == "brute":
        if not alg.field.is_finite:
            raise UnsupportedField("brute force needs GF(p)")
        values = invariants_brute(alg)
    else:
        values = invariants_structural(alg)
    if args.out == "machine":
        sys.stdout.write(render_json({"kind": "invariants", "field": alg.field.literal(), "dim": alg.dim,
                                      "method": method, "values": values}))
    else:
        rows = [("invariant", "value", "provenance", "witness dims")]
        for name in ("ell", "minmax", "modl", "qil"):
            v = values[name]
            dims = "" if v["witness"] is None else ",".join(map(str, v["witness"]["dims"]))
            rows.append((name, _shown(v), v["provenance"], dims))
        sys.stdout.write(render_table(rows))
    return EXIT_INDETERMINATE if any(v["status"] == "indeterminate" for v in values.values()) else EXIT_OK


# -- lattice -----------------------------------------------------------------


def _flag_list(text: str) -> tuple:
    flags = tuple(f.strip() for f in text.split(",") if f.strip())
    bad = [f for f in flags if f not in FLAGS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown flag(s) {bad}; choose from {', '.join(FLAGS)}")
    return flags


def cmd_lattice(args) -> int:
    alg = fileformat.load(args.file).algebra
    lat = gl.enumerate_lattice(alg)
    if args.emit_dot == "-":
        sys.stdout.write(gl.to_dot(lat, args.flags))
        return EXIT_OK
    if args.emit_dot:
        _write(gl.to_dot(lat, args.flags), args.emit_dot)
    masks = {"ideal": lat.ideal_mask, "modular": lat.modular_mask, "quasiideal": lat.quasiideal_mask}
    payload = {
        "kind": "lattice",
        "field": alg.field.literal(),
        "dim": alg.dim,
        "nodes": lat.N,
        "coatoms": len(lat.coatoms()),
        "ell": gl.ell_brute(lat),
        "minmax": gl.minmax_brute(lat)[0],
        "modl": gl.modl_brute(lat)[0],
        "qil": gl.qil_brute(lat)[0],
        "frattini_dim": gl.frattini_brute(lat).dim,
        "flag_counts": {f: int(masks[f].sum()) for f in args.flags},
    }
    sys.stdout.write(render_json(payload))
    return EXIT_OK


# -- chain-check -------------------------------------------------------------


def _member_verdict(alg, U, claim: str, lattice) -> tuple[str, list]:
    """Status and methods for the claim that ``U`` is modular or a quasi-ideal of ``alg``."""
    if not core.is_subalgebra(alg, U):
        return "fail", ["not-a-subalgebra"]
    if alg.field.characteristic() == 0:
        if claim == "modular":
            ok, tag = cz.modular_test0(alg, U)
            return ("pass" if ok else "fail"), [tag]
        ok = core.quasi_ideal_test(alg, U, "grid")
        agree = cz.quasi_ideal_test0(alg, U) == ok
        return ("pass" if ok else "fail"), ["grid", "classification" if agree else "classification-disagrees"]
    if claim == "quasiideal":
        ok = core.quasi_ideal_test(alg, U, "lines")
        return ("pass" if ok else "fail"), ["lines"]
    if lattice is None:
        return "indeterminate", ["lattice-over-budget"]
    ok = bool(lattice.modular_mask[lattice.index_of(U)])
    return ("pass" if ok else "fail"), ["brute"]


def _refute_maximal(alg, A, B) -> tuple[str, list]:
    if not core.is_subalgebra(alg, A):
        return "fail", ["lower-not-a-subalgebra"]
    C = cz.intermediate_subalgebra(alg, A, B)
    if C is not None:
        return "fail", [f"intermediate-subalgebra(dim {C.dim})"]
    if alg.field.is_finite and alg.field.p ** (B.dim - A.dim) <= 20000:
        return "pass", ["brute"]
    return "indeterminate", ["no-certificate"]


def chain_check(af: fileformat.AlgebraFile, chain_name: str, claim: str) -> list[dict]:
    alg = af.algebra
    members = af.chain(chain_name)
    for a, b in zip(members, members[1:]):
        if not a < b:
            raise ValidationError(f"chain {chain_name!r} is not strictly increasing")
    lattice = None
    if claim == "modular" and alg.field.is_finite:
        try:
            lattice = gl.enumerate_lattice(alg)
        except BudgetExceeded:
            lattice = None
    steps = []
    for i, (A, B) in enumerate(zip(members, members[1:]), start=1):
        step = {"step": i, "from": af.chains[chain_name][i - 1], "to": af.chains[chain_name][i],
                "codim": B.dim - A.dim}
        if claim in ("maximal", "chief"):
            if not core.is_subalgebra(alg, B):
                status, methods = "fail", ["not-a-subalgebra"]
            else:
                fn = cz.certify_maximal if claim == "maximal" else cz.certify_chief_step
                try:
                    cert = fn(alg, A, B)
                except (Indeterminate, WrongCharacteristic) as exc:
                    cert, status, methods = None, "indeterminate", [str(exc)]
                else:
                    status = "pass" if cert is not None else "fail"
                    methods = [cert.label()] if cert is not None else ["no-certificate"]
                if cert is None and status == "fail" and claim == "maximal":
                    status, methods = _refute_maximal(alg, A, B)
        else:
            status, methods = _member_verdict(alg, B, claim, lattice)
        step.update(status=status, methods=methods)
        steps.append(step)
    return steps


def cmd_chain_check(args) -> int:
    af = fileformat.load(args.file)
    steps = chain_check(af, args.chain, args.claim)
    if args.out == "machine":
        sys.stdout.write(render_json({"kind": "chain-check", "chain": args.chain, "claim": args.claim,
                                      "steps": steps}))
    else:
        rows = [("step", "from", "to", "status", "methods")]
        rows += [(s["step"], s["from"], s["to"], s["status"], ",".join(s["methods"])) for s in steps]
        sys.stdout.write(render_table(rows))
    statuses = {s["status"] for s in steps}
    if "fail" in statuses:
        return EXIT_FAIL
    return EXIT_INDETERMINATE if "indeterminate" in statuses else EXIT_OK


# -- catalog -----------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        sys.stdout.write("\n".join(cat.list_families()) + "\n")
        return EXIT_OK
    if not args.family:
        raise BadParameters("catalog emit needs a family name")
    alg = cat.make(cat.CatalogSpec(args.family, FieldSpec.from_literal(args.field), list(args.params)))
    _write(fileformat.dumps(alg), args.output)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    names = sorted(suites.SUITES) if args.suite == "all" else [args.suite]
    unknown = [n for n in names if n not in suites.SUITES]
    if unknown:
        raise BadParameters(f"unknown suite {unknown[0]!r}; known: {', '.join(sorted(suites.SUITES))}")
    reports = suites.run(names, args.seed)
    header = [f"seed={args.seed}"]
    header += [f"{n}: {suites.TITLES[n]}" for n in sorted(suites.SUITES)]
    header += [f"out of scope: {note}" for note in suites.OUT_OF_SCOPE]
    text = render_suites(reports, header)
    _write(text, args.output)
    if args.output:
        for r in sorted(reports, key=lambda r: r.suite):
            s = r.summary()
            print(f"{r.suite}: {s['pass']} pass, {s['fail']} fail, "
                  f"{s['indeterminate']} indeterminate, {s['measured']} measured")
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liechains", description="Chain invariants of finite-dimensional Lie algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a liealg/1 file and check the Jacobi identity")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="ell, minmax, modl and qil with witnesses")
    p.add_argument("file")
    p.add_argument("--method", choices=("brute", "structural", "auto"), default="auto")
    p.add_argument("--out", choices=("table", "machine"), default="table")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("lattice", help="enumerate the subalgebra lattice over GF(p)")
    p.add_argument("file")
    p.add_argument("--emit-dot", metavar="PATH", help="write the Hasse diagram in DOT ('-' for stdout)")
    p.add_argument("--flags", type=_flag_list, default=("ideal",), help="comma list of ideal,modular,quasiideal")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("chain-check", help="check a declared chain step by step")
    p.add_argument("file")
    p.add_argument("--chain", required=True)
    p.add_argument("--claim", choices=CLAIMS, required=True)
    p.add_argument("--out", choices=("table", "machine"), default="table")
    p.set_defaults(func=cmd_chain_check)

    p = sub.add_parser("catalog", help="list families or emit one as a liealg/1 file")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("family", nargs="?")
    p.add_argument("params", nargs="*")
    p.add_argument("--field", default="Q", help="Q, Q(sqrt,d) or GF(p)")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help="suite id such as S3.2, or 'all'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", metavar="PATH", help="write the JSON report here and print a summary")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        _err(f"{exc.filename}: no such file")
    except (ParseError, ValidationError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
    except UnknownChain as exc:
        _err(f"UnknownChain: {exc.args[0] if exc.args else exc}")
    except (BudgetExceeded, UnsupportedField, WrongCharacteristic, BadParameters) as exc:
        _err(f"{type(exc).__name__}: {exc}")
    except LieChainsError as exc:
        _err(f"{type(exc).__name__}: {exc}")
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
