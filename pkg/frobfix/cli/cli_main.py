import argparse
import json
import logging
import os
import sys
from typing import List, Optional, Tuple

from frobfix.cli import service
from frobfix.cli.service import Report
from frobfix.config.env_check import check_polynomial_backend, resolve_fixtures_dir
from frobfix.config.loader import DEFAULT_CONFIG, Settings, load_settings, resolve_paths
from frobfix.errors import FrobfixError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=DEFAULT_CONFIG, help="Path to settings.yaml")
    common.add_argument("--json", action="store_true", help="Print the report as JSON.")

    parser = argparse.ArgumentParser(
        prog="frobfix",
        description="Exact checks for Frobenius algebras, Morita contexts, fixed points and Calabi-Yau categories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-frobenius", parents=[common], help="Check algebra axioms, the form and semisimplicity.")
    p.add_argument("path")

    p = sub.add_parser("decompose", parents=[common], help="Decompose into blocks and Frobenius scalars.")
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=None, help="Seed for the central sample (default from settings).")
    p.add_argument("--out", default=None, help="Also write the skeleton document here.")

    p = sub.add_parser("check-morita", parents=[common], help="Check a Morita context and its compatibility.")
    p.add_argument("path")
    p.add_argument("--mode", choices=["1", "2", "3", "all"], default="all")

    fp = sub.add_parser("fixed-point", help="Homotopy fixed points of the trivial SO(2)-action.")
    fp_sub = fp.add_subparsers(dest="action", required=True)
    p = fp_sub.add_parser("expand", parents=[common], help="Expand (c, lambda) to full fixed-point data.")
    p.add_argument("path")
    p.add_argument("--out", default=None, help="Also write the expanded data document here.")
    p = fp_sub.add_parser("verify", parents=[common], help="Verify the coherence equations.")
    p.add_argument("path")
    p = fp_sub.add_parser("morphism", parents=[common], help="Check a fixed-point morphism.")
    p.add_argument("paths", nargs="+", metavar="PATH", help="A morphism file, or SRC DST CONTEXT.")

    p = sub.add_parser("rep", parents=[common], help="Calabi-Yau category or functor of Rep.")
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=None, help="Seed used when an algebra is decomposed first.")

    sub.add_parser("self-test", parents=[common], help="Run every case of the fixture manifest.")
    return parser


def _command_name(args: argparse.Namespace) -> str:
    if args.command == "fixed-point":
        return f"fixed-point {args.action}"
    return args.command


def _dispatch(args: argparse.Namespace, settings: Settings) -> Report:
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = settings.get("decompose.seed")
    if args.command == "check-frobenius":
        return service.run_check_frobenius(args.path)
    if args.command == "decompose":
        check_polynomial_backend()
        return service.run_decompose(args.path, settings, seed, args.out)
    if args.command == "check-morita":
        return service.run_check_morita(args.path, args.mode)
    if args.command == "fixed-point":
        if args.action == "expand":
            return service.run_fixed_point_expand(args.path, args.out)
        if args.action == "verify":
            return service.run_fixed_point_verify(args.path)
        return service.run_fixed_point_morphism(args.paths)
    if args.command == "rep":
        return service.run_rep(args.path, settings, seed)
    paths = resolve_paths(settings, os.path.abspath(args.config))
    fixtures_dir = resolve_fixtures_dir(paths)
    extra = ["--config", args.config]
    return service.run_self_test(fixtures_dir, lambda argv: run(argv + extra)[0])


def run(argv: List[str]) -> Tuple[Report, Settings]:
    args = build_parser().parse_args(argv)
    settings = load_settings(os.path.abspath(args.config))
    command = _command_name(args)
    logger.info("running %s", command)
    try:
        report = _dispatch(args, settings)
    except (FrobfixError, ValueError, RuntimeError, OSError) as exc:
        logger.debug("%s failed", command, exc_info=True)
        report = service.error_report(command, exc)
    return report, settings


def _print_human(report: Report) -> None:
    print(f"{report.command}: {report.status}")
    for f in report.findings:
        print(f"  [{f.location}] {f.message}")
        hint = f.data.get("hint")
        if hint:
            print(f"    hint: {hint}")
    for key, value in report.to_dict()["artifacts"].items():
        print(f"  {key}: {json.dumps(value, sort_keys=True)}")


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args, _ = build_parser().parse_known_args(argv)
    try:
        level = load_settings(os.path.abspath(args.config)).get("app.log_level", "WARNING")
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    logging.basicConfig(level=getattr(logging, str(level).upper(), logging.WARNING), stream=sys.stderr)

    report, settings = run(argv)
    if args.json:
        print(json.dumps(report.to_dict(), indent=settings.get("output.json_indent", 2), sort_keys=True))
    else:
        _print_human(report)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
