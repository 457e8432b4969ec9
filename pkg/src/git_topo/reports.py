"""Report assembly and human-readable rendering.

Bridges the family layer and the connectivity engine: builds a
ConnectivityReport for a family spec (strata, d_min, bound, optional
homotopy table, family-specific thresholds) and renders reports as plain
text for the terminal.  JSON shapes live in serialize.
"""

from __future__ import annotations

from git_topo.connectivity import (
    CONTRACTIBLE,
    NO_INFORMATION,
    ConnectivityReport,
    summarize_strata,
)
from git_topo.families import (
    DagFamily,
    FamilySpec,
    StabilityStatus,
    default_convention,
    enumerate_strata,
    family_name,
)
from git_topo.groups import OrbitConvention
from git_topo.harness import HarnessReport


def dag_thresholds(fam: DagFamily) -> tuple[tuple[str, int], ...]:
    """Sample counts where connectivity statements start to hold.

    d_min = 2n - 4k + 4 under the centralizer convention, so the stable
    locus is path-connected once n >= 2k - 1 and simply connected once
    n >= 2k.  Keys are kept sorted for canonical serialization.
    """
    return (
        ("path_connected_from_n", 2 * fam.k - 1),
        ("simply_connected_from_n", 2 * fam.k),
    )


def build_connectivity_report(
    spec: FamilySpec,
    convention: OrbitConvention | None = None,
    max_q: int | None = None,
) -> ConnectivityReport:
    """Full analyze pipeline for one family spec."""
    if convention is None:
        convention = default_convention(spec)
    strata = enumerate_strata(spec, convention)
    thresholds: tuple[tuple[str, int], ...] = ()
    if isinstance(spec, DagFamily):
        thresholds = dag_thresholds(spec)
    return summarize_strata(
        family=family_name(spec),
        convention=convention,
        strata=strata,
        group=spec.group(),
        max_q=max_q,
        thresholds=thresholds,
    )


def _format_value(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


def _descriptor_line(descriptor) -> str:
    return ", ".join(f"{k}={_format_value(v)}" for k, v in descriptor.items())


def render_connectivity_text(report: ConnectivityReport) -> list[str]:
    lines = [
        f"family: {report.family}",
        f"convention: {report.convention.value}",
    ]
    if report.strata:
        lines.append("strata:")
        for s in report.strata:
            lines.append(
                f"  {_descriptor_line(s.descriptor)}: "
                f"m={s.m}, orbit_dim={s.orbit_dim}, value={s.value}"
            )
    else:
        lines.append("strata: none")
    if report.d_min is None:
        lines.append("d_min: none (no destabilizing classes: V^st = V)")
    else:
        lines.append(f"d_min = {report.d_min}")
    if report.connectivity == CONTRACTIBLE:
        lines.append("connectivity: contractible (V^st is all of V)")
    elif report.connectivity == NO_INFORMATION:
        lines.append("connectivity: no information (d_min <= 1)")
    else:
        c = report.connectivity
        lines.append(f"connectivity: {c} (π_q(V^st)=0 for q ≤ {c})")
    if report.thresholds:
        by_key = dict(report.thresholds)
        pc = by_key.get("path_connected_from_n")
        sc = by_key.get("simply_connected_from_n")
        if pc is not None and sc is not None:
            lines.append(
                f"thresholds: path-connected for n ≥ {pc}, "
                f"simply connected for n ≥ {sc}"
            )
    if report.homotopy:
        lines.append("homotopy:")
        for q, group in report.homotopy:
            lines.append(f"  q={q}: {group.descriptor()}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return lines


def render_homotopy_text(report: ConnectivityReport) -> list[str]:
    lines = [
        f"family: {report.family}",
        f"convention: {report.convention.value}",
        "d_min: none" if report.d_min is None else f"d_min = {report.d_min}",
        "homotopy:",
    ]
    for q, group in report.homotopy:
        lines.append(f"  q={q}: {group.descriptor()}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return lines


def render_status_text(family: str, status: StabilityStatus) -> list[str]:
    lines = [f"family: {family}", f"verdict: {status.verdict.value}"]
    if status.reason:
        lines.append(f"reason: {status.reason}")
    for key in sorted(status.evidence):
        lines.append(f"{key} = {_format_value(status.evidence[key])}")
    return lines


def render_harness_text(report: HarnessReport) -> list[str]:
    lines = [f"op: {report.op}"]
    if report.skipped:
        lines.append("skipped: true")
    for key, value in report.counters().items():
        lines.append(f"{key} = {value}")
    lines.append(f"elapsed_ms = {report.elapsed_ms}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return lines
