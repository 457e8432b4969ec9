"""Canonical JSON codecs for instances, statuses, and reports.

All persisted numbers that are not integers travel as lowest-terms
rational strings ("5", "-7/3"); Gaussian rationals as two-element
["re", "im"] arrays when the imaginary part is nonzero.  Canonical form
is sorted keys, compact separators, no floating point anywhere.  Every
reader validates shape and names the offending field in its SchemaError.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from git_topo.connectivity import AbelianGroup, ConnectivityReport
from git_topo.errors import GitTopoError, SchemaError
from git_topo.families import (
    ControlFamily,
    ControlInstance,
    DagFamily,
    DagInstance,
    FamilySpec,
    Instance,
    QuiverSpec,
    StabilityStatus,
    StratumClass,
    ThinQuiverRep,
    Verdict,
)
from git_topo.groups import OnePSClass, OrbitConvention
from git_topo.harness import HarnessReport, TrialConfig
from git_topo.linalg import ComplexRational, Matrix

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

CONVENTION_DEPENDENT_FIELDS = (
    "connectivity",
    "d_min",
    "homotopy",
    "strata[].orbit_dim",
    "strata[].value",
)


def canonical_dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def rational_to_str(value: int | Fraction) -> str:
    return str(Fraction(value))


def rational_from_json(value: Any, field: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(f"{field}: rationals must be strings or integers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise SchemaError(f"{field}: malformed rational string {value!r}")
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise SchemaError(f"{field}: zero denominator in {value!r}") from None
    raise SchemaError(f"{field}: expected a rational string, got {type(value).__name__}")


def complex_to_json(value: ComplexRational) -> str | list[str]:
    if not value.im:
        return rational_to_str(value.re)
    return [rational_to_str(value.re), rational_to_str(value.im)]


def complex_from_json(value: Any, field: str) -> ComplexRational:
    if isinstance(value, list):
        if len(value) != 2:
            raise SchemaError(f"{field}: complex values are [re, im] pairs")
        return ComplexRational(
            rational_from_json(value[0], f"{field}[0]"),
            rational_from_json(value[1], f"{field}[1]"),
        )
    return ComplexRational(rational_from_json(value, field), Fraction(0))


def matrix_to_json(matrix: Matrix) -> list[list[str]]:
    return [
        [rational_to_str(matrix.at(i, j)) for j in range(matrix.cols)]
        for i in range(matrix.rows)
    ]


def matrix_from_json(value: Any, rows: int, cols: int, field: str) -> Matrix:
    if not isinstance(value, list) or len(value) != rows:
        raise SchemaError(f"{field}: expected {rows} rows")
    data = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError(f"{field}[{i}]: expected {cols} entries")
        data.append(
            [rational_from_json(e, f"{field}[{i}][{j}]") for j, e in enumerate(row)]
        )
    return Matrix.from_rows(data)


def _require_int(value: Any, field: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{field}: expected an integer")
    if minimum is not None and value < minimum:
        raise SchemaError(f"{field}: must be at least {minimum}")
    return value


def _require_list(value: Any, field: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{field}: expected a list")
    return value


def _int_list(value: Any, field: str) -> tuple[int, ...]:
    return tuple(
        _require_int(e, f"{field}[{i}]") for i, e in enumerate(_require_list(value, field))
    )


# Family specs (shapes without point data).


def family_spec_to_json(spec: FamilySpec) -> dict:
    if isinstance(spec, ControlFamily):
        return {"family": "control", "n": spec.n, "m": spec.m}
    if isinstance(spec, DagFamily):
        return {"family": "dag", "n": spec.n, "k": spec.k}
    if isinstance(spec, QuiverSpec):
        return {
            "family": "quiver",
            "vertices": spec.vertex_count,
            "arrows": [[s + 1, t + 1] for s, t in spec.arrows],
            "dim": list(spec.dim_vector),
            "theta": list(spec.theta),
        }
    raise SchemaError(f"not a family spec: {type(spec).__name__}")


def _quiver_shape_from_json(data: dict) -> QuiverSpec:
    vertices = _require_int(data.get("vertices"), "vertices", 1)
    arrows = []
    for i, pair in enumerate(_require_list(data.get("arrows"), "arrows")):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"arrows[{i}]: expected a [source, target] pair")
        s = _require_int(pair[0], f"arrows[{i}][0]", 1)
        t = _require_int(pair[1], f"arrows[{i}][1]", 1)
        if s > vertices or t > vertices:
            raise SchemaError(f"arrows[{i}]: vertex out of range 1..{vertices}")
        arrows.append((s - 1, t - 1))
    dim = _int_list(data.get("dim"), "dim")
    theta = _int_list(data.get("theta"), "theta")
    if len(dim) != vertices:
        raise SchemaError("dim: length must equal the vertex count")
    if len(theta) != vertices:
        raise SchemaError("theta: length must equal the vertex count")
    try:
        return QuiverSpec(vertices, tuple(arrows), dim, theta)
    except GitTopoError as exc:
        raise SchemaError(str(exc)) from None


def family_spec_from_json(data: Any) -> FamilySpec:
    if not isinstance(data, dict):
        raise SchemaError("family spec: expected an object")
    family = data.get("family")
    if family == "control":
        return ControlFamily(
            _require_int(data.get("n"), "n", 1), _require_int(data.get("m"), "m", 1)
        )
    if family == "dag":
        return DagFamily(
            _require_int(data.get("n"), "n", 1), _require_int(data.get("k"), "k", 1)
        )
    if family == "quiver":
        return _quiver_shape_from_json(data)
    raise SchemaError(f"family: unknown family {family!r}")


# Instances (points).


def instance_to_json(instance: Instance) -> dict:
    if isinstance(instance, ControlInstance):
        return {
            "family": "control",
            "n": instance.n,
            "m": instance.m,
            "A": matrix_to_json(instance.a),
            "B": matrix_to_json(instance.b),
        }
    if isinstance(instance, DagInstance):
        return {
            "family": "dag",
            "n": instance.n,
            "k": instance.k,
            "Y": matrix_to_json(instance.y),
        }
    if isinstance(instance, ThinQuiverRep):
        payload = family_spec_to_json(instance.spec)
        payload["values"] = [complex_to_json(v) for v in instance.values]
        return payload
    raise SchemaError(f"not a family instance: {type(instance).__name__}")


def instance_from_json(data: Any) -> Instance:
    if not isinstance(data, dict):
        raise SchemaError("instance: expected an object")
    family = data.get("family")
    if family == "control":
        n = _require_int(data.get("n"), "n", 1)
        m = _require_int(data.get("m"), "m", 1)
        return ControlInstance(
            n,
            m,
            matrix_from_json(data.get("A"), n, n, "A"),
            matrix_from_json(data.get("B"), n, m, "B"),
        )
    if family == "dag":
        n = _require_int(data.get("n"), "n", 1)
        k = _require_int(data.get("k"), "k", 1)
        return DagInstance(n, k, matrix_from_json(data.get("Y"), n, k + 1, "Y"))
    if family == "quiver":
        spec = _quiver_shape_from_json(data)
        raw = _require_list(data.get("values"), "values")
        if len(raw) != len(spec.arrows):
            raise SchemaError("values: need exactly one value per arrow")
        values = tuple(
            complex_from_json(v, f"values[{i}]") for i, v in enumerate(raw)
        )
        try:
            return ThinQuiverRep(spec, values)
        except GitTopoError as exc:
            raise SchemaError(str(exc)) from None
    raise SchemaError(f"family: unknown family {family!r}")


# Statuses.


def status_to_json(status: StabilityStatus) -> dict:
    evidence = {}
    for key, value in status.evidence.items():
        evidence[key] = list(value) if isinstance(value, tuple) else value
    return {
        "verdict": status.verdict.value,
        "reason": status.reason,
        "evidence": evidence,
    }


def status_from_json(data: Any) -> StabilityStatus:
    if not isinstance(data, dict):
        raise SchemaError("status: expected an object")
    try:
        verdict = Verdict(data.get("verdict"))
    except ValueError:
        raise SchemaError(f"verdict: unknown verdict {data.get('verdict')!r}") from None
    reason = data.get("reason")
    if reason is not None and not isinstance(reason, str):
        raise SchemaError("reason: expected a string or null")
    raw = data.get("evidence", {})
    if not isinstance(raw, dict):
        raise SchemaError("evidence: expected an object")
    evidence = {
        key: tuple(value) if isinstance(value, list) else value
        for key, value in raw.items()
    }
    return StabilityStatus(verdict, reason, evidence)


# 1-PS classes and strata.


def one_ps_to_json(lam: OnePSClass) -> dict:
    return {
        "gl_weights": [list(ws) for ws in lam.gl_weights],
        "torus_weights": list(lam.torus_weights),
    }


def one_ps_from_json(data: Any) -> OnePSClass:
    if not isinstance(data, dict):
        raise SchemaError("one_ps: expected an object")
    factors = tuple(
        _int_list(ws, f"gl_weights[{i}]")
        for i, ws in enumerate(_require_list(data.get("gl_weights"), "gl_weights"))
    )
    return OnePSClass(factors, _int_list(data.get("torus_weights"), "torus_weights"))


def _descriptor_to_json(descriptor) -> dict:
    out = {}
    for key, value in descriptor.items():
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def _descriptor_from_json(data: Any) -> dict:
    if not isinstance(data, dict):
        raise SchemaError("descriptor: expected an object")
    return {
        key: tuple(value) if isinstance(value, list) else value
        for key, value in data.items()
    }


def _convention_from_json(value: Any) -> OrbitConvention:
    try:
        return OrbitConvention(value)
    except ValueError:
        raise SchemaError(f"convention: unknown convention {value!r}") from None


def stratum_to_json(stratum: StratumClass) -> dict:
    return {
        "family": stratum.family,
        "descriptor": _descriptor_to_json(stratum.descriptor),
        "representative": one_ps_to_json(stratum.representative),
        "m": stratum.m,
        "orbit_dim": stratum.orbit_dim,
        "value": stratum.value,
        "convention": stratum.convention.value,
    }


def stratum_from_json(data: Any) -> StratumClass:
    if not isinstance(data, dict):
        raise SchemaError("stratum: expected an object")
    family = data.get("family")
    if not isinstance(family, str):
        raise SchemaError("stratum.family: expected a string")
    return StratumClass(
        family=family,
        descriptor=_descriptor_from_json(data.get("descriptor")),
        representative=one_ps_from_json(data.get("representative")),
        m=_require_int(data.get("m"), "m", 0),
        orbit_dim=_require_int(data.get("orbit_dim"), "orbit_dim", 0),
        value=_require_int(data.get("value"), "value"),
        convention=_convention_from_json(data.get("convention")),
    )


# Connectivity reports.


def report_to_json(report: ConnectivityReport) -> dict:
    payload: dict[str, Any] = {
        "family": report.family,
        "convention": report.convention.value,
        "d_min": report.d_min,
        "connectivity": report.connectivity,
        "strata": [stratum_to_json(s) for s in report.strata],
        "homotopy": [
            {"q": q, "group": group.descriptor()} for q, group in report.homotopy
        ],
        "notes": list(report.notes),
        "convention_dependent_fields": list(CONVENTION_DEPENDENT_FIELDS),
    }
    if report.thresholds:
        payload["thresholds"] = dict(report.thresholds)
    return payload


def report_from_json(data: Any) -> ConnectivityReport:
    if not isinstance(data, dict):
        raise SchemaError("report: expected an object")
    family = data.get("family")
    if not isinstance(family, str):
        raise SchemaError("report.family: expected a string")
    d_min = data.get("d_min")
    if d_min is not None:
        d_min = _require_int(d_min, "d_min")
    connectivity = data.get("connectivity")
    if not isinstance(connectivity, (int, str)) or isinstance(connectivity, bool):
        raise SchemaError("connectivity: expected an integer or marker string")
    homotopy = []
    for i, row in enumerate(_require_list(data.get("homotopy", []), "homotopy")):
        if not isinstance(row, dict):
            raise SchemaError(f"homotopy[{i}]: expected an object")
        q = _require_int(row.get("q"), f"homotopy[{i}].q", 0)
        group = row.get("group")
        if not isinstance(group, str):
            raise SchemaError(f"homotopy[{i}].group: expected a string")
        homotopy.append((q, AbelianGroup.parse(group)))
    thresholds = data.get("thresholds", {})
    if not isinstance(thresholds, dict):
        raise SchemaError("thresholds: expected an object")
    notes = data.get("notes", [])
    if not isinstance(notes, list) or any(not isinstance(n, str) for n in notes):
        raise SchemaError("notes: expected a list of strings")
    return ConnectivityReport(
        family=family,
        convention=_convention_from_json(data.get("convention")),
        strata=tuple(
            stratum_from_json(s)
            for s in _require_list(data.get("strata", []), "strata")
        ),
        d_min=d_min,
        connectivity=connectivity,
        homotopy=tuple(homotopy),
        thresholds=tuple(
            (key, _require_int(value, f"thresholds.{key}"))
            for key, value in sorted(thresholds.items())
        ),
        notes=tuple(notes),
    )


# Harness configs and reports.


def trial_config_to_json(cfg: TrialConfig) -> dict:
    return {
        "family": family_spec_to_json(cfg.family_spec),
        "trials": cfg.trials,
        "seed": cfg.seed,
        "entry_bound": cfg.entry_bound,
        "paths": cfg.paths,
        "path_samples": cfg.path_samples,
        "convention": cfg.convention.value if cfg.convention else None,
    }


def trial_config_from_json(data: Any) -> TrialConfig:
    if not isinstance(data, dict):
        raise SchemaError("config: expected an object")
    convention = data.get("convention")
    return TrialConfig(
        family_spec=family_spec_from_json(data.get("family")),
        trials=_require_int(data.get("trials"), "trials", 1),
        seed=_require_int(data.get("seed"), "seed", 0),
        entry_bound=_require_int(data.get("entry_bound"), "entry_bound", 1),
        paths=_require_int(data.get("paths"), "paths", 0),
        path_samples=_require_int(data.get("path_samples"), "path_samples", 1),
        convention=None if convention is None else _convention_from_json(convention),
    )


def harness_report_to_json(report: HarnessReport) -> dict:
    return {
        "op": report.op,
        "config": None if report.config is None else trial_config_to_json(report.config),
        "trials_run": report.trials_run,
        "unstable_hits": report.unstable_hits,
        "path_failures": report.path_failures,
        "oracle_mismatches": report.oracle_mismatches,
        "elapsed_ms": report.elapsed_ms,
        "notes": list(report.notes),
        "skipped": report.skipped,
    }


def harness_report_from_json(data: Any) -> HarnessReport:
    if not isinstance(data, dict):
        raise SchemaError("harness report: expected an object")
    op = data.get("op")
    if not isinstance(op, str):
        raise SchemaError("op: expected a string")
    raw_cfg = data.get("config")
    notes = data.get("notes", [])
    if not isinstance(notes, list) or any(not isinstance(n, str) for n in notes):
        raise SchemaError("notes: expected a list of strings")
    skipped = data.get("skipped", False)
    if not isinstance(skipped, bool):
        raise SchemaError("skipped: expected a boolean")
    return HarnessReport(
        op=op,
        config=None if raw_cfg is None else trial_config_from_json(raw_cfg),
        trials_run=_require_int(data.get("trials_run"), "trials_run", 0),
        unstable_hits=_require_int(data.get("unstable_hits"), "unstable_hits", 0),
        path_failures=_require_int(data.get("path_failures"), "path_failures", 0),
        oracle_mismatches=_require_int(
            data.get("oracle_mismatches"), "oracle_mismatches", 0
        ),
        elapsed_ms=_require_int(data.get("elapsed_ms"), "elapsed_ms", 0),
        notes=tuple(notes),
        skipped=skipped,
    )
