"""Command-line interface.

Four subcommands: analyze (strata and connectivity for a family), check
(stability of one instance file), homotopy (group tables, requires the
free-action attestation), and verify (the randomized harness).  Text goes
to stdout; --json writes the same payload as canonical JSON.  Exit
status: 0 on success, 1 when a verify counter fails, 2 on any validation
or schema error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from git_topo.errors import GitTopoError, SchemaError
from git_topo.families import (
    ControlFamily,
    DagFamily,
    DagInstance,
    QuiverSpec,
    dag_solve_mle,
    dag_stabilize,
    family_name,
    family_of,
    kronecker_spec,
    stability_status,
)
from git_topo.groups import OrbitConvention
from git_topo.harness import (
    TrialConfig,
    detect_constructed_degenerates,
    kronecker_oracle_check,
    sample_generic_points,
    sample_path_stability,
)
from git_topo.reports import (
    build_connectivity_report,
    render_connectivity_text,
    render_harness_text,
    render_homotopy_text,
    render_status_text,
)
from git_topo.serialize import (
    canonical_dumps,
    harness_report_to_json,
    instance_from_json,
    instance_to_json,
    rational_to_str,
    report_to_json,
    status_to_json,
)

_ARROW_RE = re.compile(r"^(\d+)->(\d+)$")


def _parse_arrows(text: str) -> tuple[tuple[int, int], ...]:
    arrows = []
    for token in text.split(","):
        token = token.strip()
        match = _ARROW_RE.match(token)
        if not match:
            raise SchemaError(
                f"--arrows: {token!r} is not of the form 's->t' (1-indexed)"
            )
        s, t = int(match.group(1)), int(match.group(2))
        if s < 1 or t < 1:
            raise SchemaError("--arrows: vertices are 1-indexed")
        arrows.append((s - 1, t - 1))
    return tuple(arrows)


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok.strip()) for tok in text.split(","))
    except ValueError:
        raise SchemaError(f"{flag}: expected comma-separated integers") from None


def _parse_rational(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"{flag}: {text!r} is not a rational p/q") from None


def _quiver_from_args(args: argparse.Namespace) -> QuiverSpec:
    dim = _parse_int_list(args.dim, "--dim")
    theta = _parse_int_list(args.theta, "--theta")
    arrows = _parse_arrows(args.arrows)
    vertices = len(dim)
    for s, t in arrows:
        if s >= vertices or t >= vertices:
            raise SchemaError(
                f"--arrows: vertex {max(s, t) + 1} exceeds the vertex count "
                f"{vertices} implied by --dim"
            )
    return QuiverSpec(vertices, arrows, dim, theta)


def _family_from_args(args: argparse.Namespace):
    if args.family == "quiver":
        return _quiver_from_args(args)
    if args.family == "control":
        return ControlFamily(args.n, args.m)
    if args.family == "dag":
        return DagFamily(args.samples, args.parents)
    raise SchemaError(f"unknown family {args.family!r}")


def _convention_from_args(args: argparse.Namespace) -> OrbitConvention | None:
    if args.orbit_convention is None:
        return None
    return OrbitConvention(args.orbit_convention)


def _seed_from_args(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    raw = os.environ.get("GIT_TOPO_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(f"GIT_TOPO_SEED: {raw!r} is not an integer") from None


def _emit(payload: dict, lines: list[str], args: argparse.Namespace) -> None:
    for line in lines:
        print(line)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(canonical_dumps(payload))
            fh.write("\n")


def _add_family_subparsers(parser: argparse.ArgumentParser, families: list[str]) -> None:
    parser.add_argument("family", choices=families, help="model family")


def _add_quiver_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--arrows", help='arrow list "s->t,s->t" (1-indexed)')
    parser.add_argument("--dim", help="comma-separated dimension vector")
    parser.add_argument("--theta", help="comma-separated stability parameter")


def _add_control_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="state dimension")
    parser.add_argument("--m", type=int, help="input dimension")


def _add_dag_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, help="sample count n")
    parser.add_argument("--parents", type=int, help="parent count k")


def _add_common_family_args(parser: argparse.ArgumentParser) -> None:
    _add_quiver_args(parser)
    _add_control_args(parser)
    _add_dag_args(parser)


def _require_family_args(args: argparse.Namespace) -> None:
    needed = {
        "quiver": ("arrows", "dim", "theta"),
        "control": ("n", "m"),
        "dag": ("samples", "parents"),
    }[args.family]
    missing = [f"--{name}" for name in needed if getattr(args, name) is None]
    if missing:
        raise SchemaError(
            f"{args.family} needs {', '.join(missing)}"
        )


def cmd_analyze(args: argparse.Namespace) -> int:
    _require_family_args(args)
    spec = _family_from_args(args)
    report = build_connectivity_report(
        spec, _convention_from_args(args), max_q=args.max_q
    )
    _emit(report_to_json(report), render_connectivity_text(report), args)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {args.file}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{args.file} is not valid JSON: {exc}") from None
    instance = instance_from_json(data)
    family = family_name(family_of(instance))
    status = stability_status(instance)
    payload: dict = {"family": family, "status": status_to_json(status)}
    lines = render_status_text(family, status)
    working = instance
    if args.stabilize:
        if not isinstance(instance, DagInstance):
            raise SchemaError("--stabilize applies to DAG instance files")
        eps = _parse_rational(args.epsilon, "--epsilon")
        working = dag_stabilize(instance, eps)
        payload["stabilized"] = instance_to_json(working)
        payload["epsilon"] = rational_to_str(eps)
        lines.append(f"stabilized with epsilon = {rational_to_str(eps)}")
        after = stability_status(working)
        lines.append(f"stabilized verdict: {after.verdict.value}")
        payload["stabilized_status"] = status_to_json(after)
    if args.mle:
        if not isinstance(working, DagInstance):
            raise SchemaError("--mle applies to DAG instance files")
        beta = dag_solve_mle(working)
        payload["mle"] = [rational_to_str(b) for b in beta]
        lines.append("mle: (" + ", ".join(rational_to_str(b) for b in beta) + ")")
    _emit(payload, lines, args)
    return 0


def cmd_homotopy(args: argparse.Namespace) -> int:
    if not args.assume_free_action:
        raise SchemaError(
            "homotopy tables assume the group acts freely on the stable "
            "locus, which this tool cannot verify; pass --assume-free-action "
            "to attest it"
        )
    _require_family_args(args)
    spec = _family_from_args(args)
    report = build_connectivity_report(
        spec, _convention_from_args(args), max_q=args.max_q
    )
    payload = {
        "family": report.family,
        "convention": report.convention.value,
        "d_min": report.d_min,
        "homotopy": [
            {"q": q, "group": group.descriptor()} for q, group in report.homotopy
        ],
        "notes": list(report.notes),
    }
    _emit(payload, render_homotopy_text(report), args)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    seed = _seed_from_args(args)
    reports = []
    if args.family == "kronecker":
        theta = (
            tuple(_parse_int_list(args.theta, "--theta"))
            if args.theta
            else (1, -1)
        )
        if len(theta) != 2:
            raise SchemaError("--theta: the Kronecker quiver has two vertices")
        reports.append(kronecker_oracle_check(args.grid, theta))
    else:
        _require_family_args(args)
        spec = _family_from_args(args)
        cfg = TrialConfig(
            family_spec=spec,
            trials=args.trials,
            seed=seed,
            entry_bound=args.bound,
            paths=args.paths,
            path_samples=args.path_samples,
            convention=_convention_from_args(args),
        )
        reports.append(sample_generic_points(cfg))
        if args.paths > 0:
            reports.append(sample_path_stability(cfg))
        if args.degenerate_trials > 0:
            if not isinstance(spec, DagFamily):
                raise SchemaError("--degenerate-trials applies to the dag family")
            degen_cfg = TrialConfig(
                family_spec=spec,
                trials=args.degenerate_trials,
                seed=seed,
                entry_bound=args.bound,
            )
            reports.append(detect_constructed_degenerates(degen_cfg))
    ok = not any(r.failed(args.expect_degenerate) for r in reports)
    lines: list[str] = []
    for r in reports:
        lines.extend(render_harness_text(r))
    lines.append("ok" if ok else "FAILED")
    payload = {
        "ok": ok,
        "reports": [harness_report_to_json(r) for r in reports],
    }
    _emit(payload, lines, args)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="git-topo",
        description=(
            "Exact GIT stability checks, destabilizing strata, connectivity "
            "bounds, and homotopy tables for quiver, control, and star-DAG "
            "families"
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    analyze = sub.add_parser("analyze", help="strata, d_min, connectivity")
    _add_family_subparsers(analyze, ["quiver", "control", "dag"])
    _add_common_family_args(analyze)
    analyze.add_argument(
        "--orbit-convention",
        choices=["parabolic", "centralizer"],
        help="override the family's default orbit convention",
    )
    analyze.add_argument(
        "--max-q", type=int, default=None, help="include a homotopy table up to q"
    )
    analyze.add_argument("--json", metavar="PATH", help="write canonical JSON here")
    analyze.set_defaults(handler=cmd_analyze)

    check = sub.add_parser("check", help="stability status of an instance file")
    check.add_argument("file", help="JSON instance file")
    check.add_argument("--mle", action="store_true", help="solve the DAG MLE")
    check.add_argument(
        "--stabilize", action="store_true", help="emit an eps-stabilized DAG sample"
    )
    check.add_argument(
        "--epsilon", default="1/1000", help="perturbation size p/q for --stabilize"
    )
    check.add_argument("--json", metavar="PATH", help="write canonical JSON here")
    check.set_defaults(handler=cmd_check)

    homotopy = sub.add_parser("homotopy", help="homotopy-group table")
    _add_family_subparsers(homotopy, ["quiver", "control", "dag"])
    _add_common_family_args(homotopy)
    homotopy.add_argument("--max-q", type=int, required=True, help="table up to q")
    homotopy.add_argument(
        "--assume-free-action",
        action="store_true",
        help="attest the free-action hypothesis (required)",
    )
    homotopy.add_argument(
        "--orbit-convention",
        choices=["parabolic", "centralizer"],
        help="override the family's default orbit convention",
    )
    homotopy.add_argument("--json", metavar="PATH", help="write canonical JSON here")
    homotopy.set_defaults(handler=cmd_homotopy)

    verify = sub.add_parser("verify", help="seeded verification harness")
    _add_family_subparsers(verify, ["quiver", "control", "dag", "kronecker"])
    _add_common_family_args(verify)
    verify.add_argument("--trials", type=int, default=1000, help="generic-point trials")
    verify.add_argument("--seed", type=int, default=None, help="64-bit seed")
    verify.add_argument(
        "--bound", type=int, default=9, help="entries drawn from [-bound, bound]"
    )
    verify.add_argument("--paths", type=int, default=0, help="quadratic path trials")
    verify.add_argument(
        "--path-samples", type=int, default=256, help="evaluations per path"
    )
    verify.add_argument(
        "--grid", type=int, default=2, help="Kronecker oracle grid radius"
    )
    verify.add_argument(
        "--degenerate-trials",
        type=int,
        default=0,
        help="constructed rank-deficient DAG trials",
    )
    verify.add_argument(
        "--expect-degenerate",
        action="store_true",
        help="unstable generic hits are expected (e.g. DAG with n < k)",
    )
    verify.add_argument(
        "--orbit-convention",
        choices=["parabolic", "centralizer"],
        help="convention for the path test's d_min gate",
    )
    verify.add_argument("--json", metavar="PATH", help="write canonical JSON here")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GitTopoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if getattr(args, "json", None):
            payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(canonical_dumps(payload))
                fh.write("\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
