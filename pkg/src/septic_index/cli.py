"""Command-line front end: ``classify``, ``engine``, ``verify`` and ``batch``.

Exit codes: 0 ok, 1 usage or parse error, 2 reducible input, 3 unproven
irreducibility, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import is_prime
from .fppoly import factor_fp, reduce_mod_p
from .intpoly import IntPoly, PolyParseError
from .ore import ore_shape
from .septic import IrreducibilityUnknownError, ReducibleError, SepticReport, septic_index
from .verify import SUITES

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_USAGE, EXIT_REDUCIBLE, EXIT_UNKNOWN, EXIT_VERIFY = 0, 1, 2, 3, 4


def default_seed() -> int:
    raw = os.environ.get("SEPTIC_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"SEPTIC_SEED must be an integer, got {raw!r}")


def _int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --------------------------------------------------------------------------
# report documents


def report_document(rep: SepticReport) -> dict:
    primes = []
    for blk in rep.primes:
        eng = blk.engine
        table = blk.case.row.shapes if blk.case.row else ()
        primes.append({
            "p": blk.p,
            "case_label": blk.case.label,
            "table_shape": [str(s) for s in table],
            "engine_shape": eng.shape.as_json() if eng.shape else None,
            "regular": eng.regular,
            "index_valuation": eng.index_valuation,
            "common_index_divisor": eng.common_divisor,
            "agrees": blk.agrees,
        })
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"a": rep.a, "b": rep.b},
        "normalized": {"a": rep.normalized[0], "b": rep.normalized[1]},
        "irreducibility": {"status": rep.irreducibility.status,
                           "witness": rep.irreducibility.witness},
        "primes": primes,
        "i_K": {"kind": "exact" if rep.exact else "set", "values": list(rep.iK)},
        "verdict": rep.monogenic_verdict,
    }


def _iK_text(rep: SepticReport) -> str:
    if rep.exact:
        value = f"i(K) = {rep.iK[0]}"
    else:
        value = "i(K) in {" + ", ".join(map(str, rep.iK)) + "}"
    if rep.monogenic_verdict == "not_monogenic":
        return f"{value}, K is not monogenic"
    return f"{value}, monogenity not decided"


def report_text(rep: SepticReport) -> str:
    na, nb = rep.normalized
    lines = [f"F = {IntPoly.trinomial(na, nb)}"]
    if (na, nb) != (rep.a, rep.b):
        lines.append(f"normalized from (a, b) = ({rep.a}, {rep.b})")
    lines.append(f"irreducibility: {rep.irreducibility.status} ({rep.irreducibility.witness})")
    for blk in rep.primes:
        eng = blk.engine
        table = " or ".join(str(s) for s in blk.case.shapes) or "-"
        shape = str(eng.shape) if eng.shape else eng.status
        flag = {True: "agree", False: "DISAGREE", None: "-"}[blk.agrees]
        lines.append(
            f"p = {blk.p}: case {blk.case.label}, table {table}, engine {shape}, "
            f"ind {eng.index_valuation}, {flag}"
        )
    lines.append(_iK_text(rep))
    return "\n".join(lines)


# --------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> int:
    try:
        rep = septic_index(args.a, args.b, assume_irreducible=args.assume_irreducible,
                           seed=args.seed)
    except ReducibleError as exc:
        print(exc, file=sys.stderr)
        return EXIT_REDUCIBLE
    except IrreducibilityUnknownError as exc:
        print(f"{exc}; pass --assume-irreducible to continue", file=sys.stderr)
        return EXIT_UNKNOWN
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report_document(rep), sort_keys=True))
    else:
        print(report_text(rep))
    return EXIT_OK


def engine_text(F: IntPoly, p: int, seed=None) -> str:
    rep = ore_shape(F, p, seed=seed)
    facs = factor_fp(reduce_mod_p(F, p), seed)
    out = [f"F = {F}", f"p = {p}",
           "F mod p = " + " * ".join(f"({g})^{m}" if m > 1 else f"({g})" for g, m in facs)]
    for fa in rep.factors:
        out.append(f"factor {fa.factor} (multiplicity {fa.multiplicity}), lift {fa.lift}")
        if fa.shift is not None:
            out.append(f"  shifted lift x - {fa.shift.s} (precision p^{fa.shift.precision})")
        if fa.expansion is None:
            continue
        consts = [str(c) if c.degree > 0 else str(c[0]) for c in fa.expansion.coeffs]
        out.append("  development: [" + ", ".join(consts) + "]")
        out.append("  valuations: " + str([v if v != float("inf") else "inf"
                                          for v in fa.expansion.vals]))
        out.append("  vertices: " + ", ".join(str(v) for v in fa.polygon.vertices))
        out.append("  slopes: " + ", ".join(str(s.slope) for s in fa.polygon))
        for res, rfacs in zip(fa.residuals, fa.residual_factors):
            out.append(f"  side {res.side}: residual {res.poly.format('y')}, "
                       f"factors {[(g.format('y'), m) for g, m in rfacs]}")
        out.append(f"  ind = {fa.index}, regular = {fa.regular}")
    out.append(f"ind = {rep.index_valuation}")
    if rep.regular:
        out.append(f"shape {rep.shape}")
        out.append(f"common index divisor: {rep.common_divisor}")
    else:
        out.append("shape irregular-unresolved")
    return "\n".join(out)


def cmd_engine(args) -> int:
    try:
        F = IntPoly.parse(args.poly)
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not F.is_monic() or F.degree < 1:
        print("polynomial must be monic of positive degree", file=sys.stderr)
        return EXIT_USAGE
    if not is_prime(args.prime):
        print(f"{args.prime} is not prime", file=sys.stderr)
        return EXIT_USAGE
    print(engine_text(F, args.prime, args.seed))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = args.suite or ["tables", "discriminant", "dedekind", "npf", "shifts"]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        print(f"unknown suite(s): {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    ok = True
    for name in names:
        fn = SUITES[name]
        params = inspect.signature(fn).parameters
        kwargs = {}
        if "seed" in params:
            kwargs["seed"] = args.seed
        if args.samples is not None and "samples" in params:
            kwargs["samples"] = args.samples
        res = fn(**kwargs)
        ok &= res.ok
        print(json.dumps(res.as_json(), sort_keys=True))
    return EXIT_OK if ok else EXIT_VERIFY


def batch_record(line_no: int, row: dict, seed: int) -> dict:
    """One JSON-lines record; never raises."""
    try:
        if None in row:
            raise ValueError("too many fields")
        a, b = int(row["a"]), int(row["b"])
    except (KeyError, TypeError, ValueError):
        return {"schema_version": SCHEMA_VERSION, "line": line_no,
                "error": {"kind": "parse", "message": f"malformed row {row!r}"}}
    try:
        rep = septic_index(a, b, seed=seed)
    except ReducibleError as exc:
        err = {"kind": "reducible", "message": str(exc)}
    except IrreducibilityUnknownError as exc:
        err = {"kind": "unknown_irreducibility", "message": str(exc)}
    except ValueError as exc:
        err = {"kind": "invalid", "message": str(exc)}
    else:
        doc = report_document(rep)
        doc["line"] = line_no
        return doc
    return {"schema_version": SCHEMA_VERSION, "line": line_no,
            "input": {"a": a, "b": b}, "error": err}


def _batch_task(job):
    return batch_record(*job)


def cmd_batch(args) -> int:
    try:
        with open(args.path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["a", "b"]:
                print("CSV header must be 'a,b'", file=sys.stderr)
                return EXIT_USAGE
            # extra fields land under the key None and make the row malformed
            jobs = [(i + 2, {(k.strip() if k else k): v for k, v in r.items()}, args.seed)
                    for i, r in enumerate(reader)]
    except OSError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            records = list(pool.map(_batch_task, jobs, chunksize=8))
    else:
        records = [_batch_task(j) for j in jobs]
    failed = False
    for rec in records:
        failed |= "error" in rec
        print(json.dumps(rec, sort_keys=True, ensure_ascii=False))
    return EXIT_VERIFY if failed and args.strict else EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="septic-index", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="shapes at 2, 3, 5 and i(K) for x^7 + a x^5 + b")
    c.add_argument("--a", type=_int, required=True)
    c.add_argument("--b", type=_int, required=True)
    c.add_argument("--json", action="store_true")
    c.add_argument("--assume-irreducible", action="store_true")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("engine", help="Newton polygon dump for a monic polynomial at p")
    e.add_argument("--poly", required=True)
    e.add_argument("--prime", type=_int, required=True)
    e.set_defaults(func=cmd_engine)

    v = sub.add_parser("verify", help="run self-check suites")
    v.add_argument("--suite", action="append", metavar="NAME",
                   help=f"one of {', '.join(SUITES)} (repeatable; default all but fuzz)")
    v.add_argument("--samples", type=_int)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("batch", help="classify every (a, b) of a CSV file")
    b.add_argument("path")
    b.add_argument("--workers", type=_int, default=1)
    b.add_argument("--strict", action="store_true", help="exit 4 if any record failed")
    b.set_defaults(func=cmd_batch)

    for p in (c, e, v, b):
        p.add_argument("--seed", type=_int, default=None,
                       help="RNG seed (default: $SEPTIC_SEED or 0)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is None:
        args.seed = default_seed()
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
