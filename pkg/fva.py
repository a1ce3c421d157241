#!/usr/bin/env python3
import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv
from sympy import isprime

from database import VerificationDatabase
from geometry.gp_geometry import (
    ParabolicFunction, anticanonical, bundle_from_coefficients, divisibility, format_f_value,
    gp_dimension, is_ample, is_fano, parse_f_values, parse_weight, picard_basis, picard_number,
)
from geometry.report import TOOL_VERSION, to_jsonable
from geometry.schur_calculus import euler_char, gt_pattern_count, weyl_dim
from geometry.weight_lattice import RootSystemA
from processors.exporter import FORMATS, ReportExporter
from processors.sweeper import PrimeSweeper
from processors.verifier import TARGETS, ConstructionVerifier
from show_status import get_stats, print_status

logger = logging.getLogger("fva")

load_dotenv()

DEFAULT_DB_URL = os.environ.get("FVA_DB_URL")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# options whose values may start with '-' (negative weight coefficients)
VALUE_OPTIONS = ("--weight", "--bundle", "--f")


def join_negative_values(argv: List[str]) -> List[str]:
    """Rewrite '--weight -2,1,0' as '--weight=-2,1,0' so argparse does not read it as a flag."""
    out = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="md", help="Output format (default: md)")
    common.add_argument("--out", help="Write output to this file instead of stdout")
    common.add_argument("--seedless", action="store_true", help="Omit timing so output is byte-identical across runs")
    common.add_argument("--db", default=DEFAULT_DB_URL,
                        help="Archive results in this database (SQLite path or URL). Defaults to FVA_DB_URL in .env")

    parser = argparse.ArgumentParser(description="Exact verification of Fano vanishing counterexamples in characteristic p")
    subparsers = parser.add_subparsers(dest="command", help="Task to perform", required=True)

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Verify one construction")
    verify_parser.add_argument("target", choices=TARGETS, help="Construction to verify")
    verify_parser.add_argument("--p", type=int, help="Prime (default depends on the target)")
    verify_parser.add_argument("--n", type=int, help="Group rank parameter (yasuda only)")
    verify_parser.add_argument("--all-charts", action="store_true",
                               help="dim3: recompute all seven exceptional points instead of using symmetry")

    sweep_parser = subparsers.add_parser("sweep", parents=[common], help="Verify thm21 and thm31 for every prime up to --max-p")
    sweep_parser.add_argument("--max-p", type=int, required=True, help="Largest prime to include")
    sweep_parser.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")

    weyl_parser = subparsers.add_parser("weyl-dim", parents=[common], help="Dimension of a Schur module")
    weyl_parser.add_argument("--n", type=int, required=True, help="SL(n)")
    weyl_parser.add_argument("--weight", required=True, help="Dominant weight in the omega-basis, e.g. 3,1,0,0")
    weyl_parser.add_argument("--check", action="store_true", help="Cross-check against a Gelfand-Tsetlin pattern count")

    euler_parser = subparsers.add_parser("euler", parents=[common], help="Euler characteristic on G/B")
    euler_parser.add_argument("--n", type=int, required=True, help="SL(n)")
    euler_parser.add_argument("--p", type=int, help="Characteristic (recorded only; chi does not depend on it)")
    euler_parser.add_argument("--weight", required=True, help="Weight in the omega-basis, e.g. -2,1,0")

    gp_parser = subparsers.add_parser("gp-info", parents=[common], help="Invariants of G/P for a parabolic function f")
    gp_parser.add_argument("--n", type=int, required=True, help="SL(n)")
    gp_parser.add_argument("--p", type=int, required=True, help="Characteristic")
    gp_parser.add_argument("--f", required=True, help="Values of f on the simple roots, e.g. 1,0,inf,inf")
    gp_parser.add_argument("--bundle", help="Also describe this line bundle (omega-coefficients)")

    subparsers.add_parser("status", parents=[common], help="Show archive statistics")
    return parser


def render_value(fmt: str, payload: Dict[str, Any], text: str) -> str:
    if fmt == "json":
        return json.dumps(to_jsonable(payload), indent=2) + "\n"
    if fmt == "dot":
        raise ValueError("Only dim3 reports have a DOT form")
    return text + "\n"


def cmd_verify(args) -> int:
    verifier = ConstructionVerifier(args.target, p=args.p, n=args.n, all_charts=args.all_charts)
    exporter = ReportExporter(args.format, seedless=args.seedless)
    db = VerificationDatabase(args.db) if args.db else None
    report = verifier.process(db)
    exporter.write(exporter.render(report), args.out)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_sweep(args) -> int:
    sweeper = PrimeSweeper(args.max_p, workers=args.workers)
    exporter = ReportExporter(args.format, seedless=args.seedless)
    db = VerificationDatabase(args.db) if args.db else None
    result = sweeper.process(db)
    exporter.write(exporter.render_sweep(result.rows, result.notes), args.out)
    return EXIT_PASS if result.passed else EXIT_FAIL


def cmd_weyl_dim(args) -> int:
    rs = RootSystemA(args.n)
    mu = parse_weight(args.weight, rs)
    value = weyl_dim(rs, mu)
    payload = {"n": args.n, "weight": list(mu.coeffs), "weyl_dim": value}
    lines = [str(value)]
    code = EXIT_PASS
    if args.check:
        count = gt_pattern_count(rs, mu)
        payload["gt_pattern_count"] = count
        payload["agree"] = count == value
        lines.append(f"Gelfand-Tsetlin patterns: {count} ({'agree' if count == value else 'MISMATCH'})")
        if count != value:
            logger.error(f"weyl_dim({mu}) = {value} but {count} Gelfand-Tsetlin patterns")
            code = EXIT_FAIL
    ReportExporter.write(render_value(args.format, payload, "\n".join(lines)), args.out)
    return code


def cmd_euler(args) -> int:
    if args.p is not None and not isprime(args.p):
        raise ValueError(f"p must be prime, got {args.p}")
    rs = RootSystemA(args.n)
    mu = parse_weight(args.weight, rs)
    value = euler_char(rs, mu)
    payload = {"n": args.n, "p": args.p, "weight": list(mu.coeffs), "euler_char": value}
    ReportExporter.write(render_value(args.format, payload, str(value)), args.out)
    return EXIT_PASS


def gp_info(f: ParabolicFunction, bundle: Optional[List[int]] = None) -> Dict[str, Any]:
    minus_k = anticanonical(f)
    info = {
        "n": f.n,
        "p": f.p,
        "f": [format_f_value(v) for v in f.values],
        "dimension": gp_dimension(f),
        "picard_number": picard_number(f),
        "picard_basis": {f"w{k}": str(w) for k, w in picard_basis(f).items()},
        "minus_K": str(minus_k.weight),
        "fano": is_fano(f),
        "minus_K_divisibility": divisibility(minus_k),
    }
    if bundle is not None:
        L = bundle_from_coefficients(f, bundle)
        info["bundle"] = str(L.weight)
        info["bundle_ample"] = is_ample(L)
        info["bundle_divisibility"] = None if L.weight.is_zero() else divisibility(L)
    return info


def cmd_gp_info(args) -> int:
    f_values = parse_f_values(args.f)
    f = ParabolicFunction(tuple(f_values), args.p)
    if f.n != args.n:
        raise ValueError(f"--f has {len(f_values)} values but SL({args.n}) has {args.n - 1} simple roots")
    bundle = list(parse_weight(args.bundle, f.root_system).coeffs) if args.bundle else None
    info = gp_info(f, bundle)
    text = "\n".join(f"{key}: {value}" for key, value in to_jsonable(info).items())
    ReportExporter.write(render_value(args.format, info, text), args.out)
    return EXIT_PASS


def cmd_status(args) -> int:
    if not args.db:
        print("Error: Database URL must be provided via --db or FVA_DB_URL environment variable (.env)")
        return EXIT_USAGE
    print_status(get_stats(VerificationDatabase(args.db)))
    return EXIT_PASS


COMMANDS = {
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "weyl-dim": cmd_weyl_dim,
    "euler": cmd_euler,
    "gp-info": cmd_gp_info,
    "status": cmd_status,
}


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(join_negative_values(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logger.debug(f"fva {TOOL_VERSION}: {args.command}")
    try:
        return COMMANDS[args.command](args)
    except ValueError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    sys.exit(main())
