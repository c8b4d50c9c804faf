"""Command-line entry point: build, check, identity, export.

Exit codes: 0 when every requested check passes, 1 when a check fails with
a certificate, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from core.config import get_settings
from core.constructions import ConstructionError, NamedConstruction, get_construction, list_constructions
from core.constructions.registry import parse_reference
from core.decomp.decomposition import Decomposition, ThetaDetectionError, ThetaTable, detect_theta
from core.identities.multilinear import (
    DegreeCapExceeded,
    MultilinearPoly,
    solve_identities,
    verify_identity,
)
from core.pipeline.checks import STEP_ORDER, parse_steps, run_pipeline
from core.reporters.csv_export import theta_to_csv
from core.reporters.summary import render_summary
from core.schema.payloads import (
    AlgebraPayload,
    DecompositionPayload,
    MultilinearPolyPayload,
    ThetaTablePayload,
    dumps,
    load_decomposition,
    read_json,
    write_json,
)
from infra.monitoring import configure_logging, init_error_reporting, write_metrics

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_INPUT = 2

CONSTRUCTION_PARAMS = ("n", "n1", "n2", "p", "k")


class InputError(Exception):
    """Bad arguments or unreadable inputs."""


def _construction_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("construction parameters")
    for name in CONSTRUCTION_PARAMS:
        group.add_argument(f"--{name}", type=int, default=None)
    group.add_argument("--exponents", default=None, help="p-power exponents, e.g. 1,2")
    group.add_argument("--group", default=None, help="klein, quaternion, s3, cyclic:N, abelian:d1,d2")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcreg", description=__doc__.splitlines()[0])
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest="command", required=True)
    params = _construction_parent()

    build = sub.add_parser("build", parents=[params], help="write a named construction to JSON")
    build.add_argument("name", nargs="?")
    build.add_argument("--list", action="store_true", help="list known constructions")
    build.add_argument("--out", default=".", help="output directory")
    build.add_argument("--stem", default=None, help="file name stem (default: construction name)")

    check = sub.add_parser("check", parents=[params], help="run the check pipeline")
    check.add_argument("decomposition", nargs="?", help="decomposition JSON file")
    check.add_argument("--construction", default=None)
    check.add_argument("--all", action="store_true", dest="all_steps")
    check.add_argument("--steps", default=None, help=f"comma list from {','.join(STEP_ORDER)}")
    check.add_argument("--skip", default=None)
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--budget", type=int, default=None, help="sampled witness attempts")
    check.add_argument("--definitive", action="store_true", help="fall back to the symbolic search")
    check.add_argument("--report", default=None, help="write the JSON report here")
    check.add_argument("--summary", action="store_true", help="print a text summary")
    check.add_argument("--metrics-file", default=None)

    identity = sub.add_parser("identity", help="find a multilinear identity from a theta table")
    source = identity.add_mutually_exclusive_group(required=True)
    source.add_argument("--m", type=int, help="1: theta = (1); 2: the supercommutative table")
    source.add_argument("--theta", help="grassmann | pauli:N | construction:NAME[:VALUE] | FILE")
    identity.add_argument("--n", type=int, required=True, help="degree")
    identity.add_argument("--large", action="store_true", help="raise the degree cap")
    identity.add_argument("--verify", default=None, help="NAME[:VALUE] of a construction")
    identity.add_argument("--trials", type=int, default=None)
    identity.add_argument("--seed", type=int, default=None)
    identity.add_argument("--out", default=None)

    export = sub.add_parser("export", parents=[params], help="export the theta table")
    export.add_argument("decomposition", nargs="?")
    export.add_argument("--construction", default=None)
    export.add_argument("--csv", action="store_true")
    export.add_argument("--out", default=None)
    return parser


def _construction_kwargs(args: argparse.Namespace) -> Dict[str, Any]:
    keys = CONSTRUCTION_PARAMS + ("exponents", "group")
    return {key: getattr(args, key) for key in keys if getattr(args, key, None) is not None}


def _load_input(args: argparse.Namespace) -> tuple[Decomposition, str]:
    if args.construction:
        construction = get_construction(args.construction, **_construction_kwargs(args))
        return construction.decomposition, construction.slug
    if not args.decomposition:
        raise InputError("a decomposition file or --construction is required")
    return load_decomposition(args.decomposition), args.decomposition


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_build(args: argparse.Namespace) -> int:
    if args.list:
        for name, params, description in list_constructions():
            flags = " ".join(f"--{p}" for p in params)
            print(f"{name:28s} {flags:18s} {description}")
        return EXIT_OK
    if not args.name:
        raise InputError("build needs a construction name (or --list)")
    construction = get_construction(args.name, **_construction_kwargs(args))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = args.stem or args.name
    algebra_file = f"{stem}.algebra.json"
    write_json(out / algebra_file, AlgebraPayload.from_domain(construction.algebra))
    payload = DecompositionPayload.from_domain(construction.decomposition, algebra_ref=algebra_file)
    write_json(out / f"{stem}.decomposition.json", payload)
    logger.info("wrote %s (%s components)", stem, construction.decomposition.m)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    decomposition, source = _load_input(args)
    steps = parse_steps(args.all_steps, args.steps, args.skip)
    report = run_pipeline(
        decomposition,
        steps=steps,
        seed=args.seed,
        source=source,
        budget=args.budget,
        definitive=args.definitive,
    )
    text = dumps(report.to_json_dict())
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    elif not args.summary:
        sys.stdout.write(text)
    if args.summary:
        sys.stdout.write(render_summary(report))
    if args.metrics_file:
        if get_settings().metrics_enabled:
            write_metrics(args.metrics_file)
        else:
            logger.warning("metrics disabled; not writing %s", args.metrics_file)
    return report.exit_code


def _theta_from_construction(construction: NamedConstruction) -> ThetaTable:
    if construction.expected_theta is not None:
        return construction.expected_theta
    return detect_theta(construction.decomposition)


def resolve_theta(m: Optional[int], theta: Optional[str]) -> ThetaTable:
    if m is not None:
        if m == 1:
            return ThetaTable.from_entries([[1]])
        if m == 2:
            return ThetaTable.from_entries([[1, 1], [1, -1]], ["even", "odd"])
        raise InputError("--m accepts 1 or 2; pass other tables with --theta")
    assert theta is not None
    if theta == "grassmann":
        return ThetaTable.from_entries([[1, 1], [1, -1]], ["even", "odd"])
    kind, _, rest = theta.partition(":")
    if kind == "pauli" and rest:
        return _theta_from_construction(parse_reference(f"pauli:{rest}"))
    if kind == "construction" and rest:
        return _theta_from_construction(parse_reference(rest))
    path = Path(theta)
    if not path.exists():
        raise InputError(f"Unknown theta source '{theta}'")
    return ThetaTablePayload.model_validate(read_json(path)).to_domain()


def cmd_identity(args: argparse.Namespace) -> int:
    table = resolve_theta(args.m, args.theta)
    solution = solve_identities(table, args.n, large=args.large)
    result: Dict[str, Any] = {
        "m": table.m,
        "n": args.n,
        "kernel_dimension": solution.kernel_dimension,
        "guaranteed_dimension": solution.guaranteed_dimension,
        "identity": None,
    }
    poly: Optional[MultilinearPoly] = solution.identity
    if poly is not None:
        result["identity"] = MultilinearPolyPayload.from_domain(poly).model_dump(mode="json")
        result["display"] = str(poly)
    exit_code = EXIT_OK
    if args.verify:
        construction = parse_reference(args.verify)
        if poly is None:
            result["verification"] = None
        else:
            report = verify_identity(poly, construction.decomposition, trials=args.trials, seed=args.seed)
            result["verification"] = report.to_json_dict()
            if not report.passed:
                exit_code = EXIT_FINDING
    _emit(dumps(result), args.out)
    return exit_code


def cmd_export(args: argparse.Namespace) -> int:
    decomposition, _ = _load_input(args)
    try:
        table = detect_theta(decomposition)
    except ThetaDetectionError as exc:
        print(f"theta detection failed: {exc}", file=sys.stderr)
        return EXIT_FINDING
    text = theta_to_csv(table) if args.csv else dumps(ThetaTablePayload.from_domain(table))
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {"build": cmd_build, "check": cmd_check, "identity": cmd_identity, "export": cmd_export}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.log_level)
    init_error_reporting()
    logger.debug("seed default %s", get_settings().seed)
    try:
        return COMMANDS[args.command](args)
    except (InputError, ConstructionError, DegreeCapExceeded, KeyError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValidationError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
