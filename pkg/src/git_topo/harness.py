"""Seeded randomized and exhaustive consistency checks.

The harness ties the point checkers, the stratum tables, and the
connectivity claims together at desk scale: random integer points should
be stable (unstable loci have positive codimension), random quadratic
paths between stable points should stay stable when d_min >= 2, the
Kronecker checker is compared against its known unstable locus on an
exhaustive grid, and constructed rank-deficient DAG samples must be
caught and then repaired by stabilization.

Every draw comes from a counter-based stream keyed by (seed, op, trial),
so a report is a pure function of its TrialConfig.  Trials are
independent: they could run on a worker pool and merge by summing
counters (see HarnessReport.merge); the implementation runs them
sequentially, which is plenty at the configured scales.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from git_topo.errors import DomainError, PreconditionError, SamplingError
from git_topo.families import (
    ControlFamily,
    ControlInstance,
    DagFamily,
    DagInstance,
    FamilySpec,
    QuiverSpec,
    ThinQuiverRep,
    Verdict,
    controllability_rank_ints,
    dag_stabilize,
    dag_status,
    default_convention,
    enumerate_strata,
    family_name,
    kronecker_spec,
    parent_rank_ints,
    quiver_thin_status,
)
from git_topo.groups import OrbitConvention
from git_topo.linalg import ComplexRational, Matrix
from git_topo.rng import CounterRng

MAX_ENDPOINT_ATTEMPTS = 1000

# Stream tags keep the per-op draws disjoint for a shared seed.
_OP_GENERIC = 0
_OP_PATHS = 1
_OP_DEGENERATE = 2

OP_GENERIC_POINTS = "generic_points"
OP_PATH_STABILITY = "path_stability"
OP_KRONECKER_ORACLE = "kronecker_oracle"
OP_CONSTRUCTED_DEGENERATES = "constructed_degenerates"


@dataclass(frozen=True)
class TrialConfig:
    """One harness run: a family plus sampling knobs.

    Identical configs produce identical reports (modulo elapsed time).
    """

    family_spec: FamilySpec
    trials: int = 1000
    seed: int = 0
    entry_bound: int = 9
    paths: int = 0
    path_samples: int = 256
    convention: OrbitConvention | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise DomainError("trials must be positive")
        if not (0 <= self.seed < 2**64):
            raise DomainError("seed must fit in 64 unsigned bits")
        if self.entry_bound < 1:
            raise DomainError("entry bound must be positive")
        if self.paths < 0:
            raise DomainError("path count cannot be negative")
        if self.path_samples < 1:
            raise DomainError("path sample count must be positive")


@dataclass(frozen=True)
class HarnessReport:
    """Counters from one harness operation, plus the config that made them."""

    op: str
    config: TrialConfig | None
    trials_run: int
    unstable_hits: int = 0
    path_failures: int = 0
    oracle_mismatches: int = 0
    elapsed_ms: int = 0
    notes: tuple[str, ...] = ()
    skipped: bool = False

    def __post_init__(self) -> None:
        counters = (
            self.trials_run,
            self.unstable_hits,
            self.path_failures,
            self.oracle_mismatches,
        )
        if any(c < 0 for c in counters):
            raise DomainError("harness counters cannot be negative")
        if self.unstable_hits > self.trials_run:
            raise DomainError("unstable_hits cannot exceed trials_run")

    def counters(self) -> dict[str, int]:
        return {
            "trials_run": self.trials_run,
            "unstable_hits": self.unstable_hits,
            "path_failures": self.path_failures,
            "oracle_mismatches": self.oracle_mismatches,
        }

    def failed(self, expect_degenerate: bool = False) -> bool:
        """True when this report should fail a verify run.

        unstable_hits only count for generic sampling, and are excused
        there by expect_degenerate (families that can never be stable).
        """
        if self.path_failures or self.oracle_mismatches:
            return True
        return (
            self.op == OP_GENERIC_POINTS
            and self.unstable_hits > 0
            and not expect_degenerate
        )

    def merge(self, other: "HarnessReport") -> "HarnessReport":
        """Sum counters of two shards of the same run (worker-pool join)."""
        if (self.op, self.config) != (other.op, other.config):
            raise DomainError("only shards of the same run can merge")
        return replace(
            self,
            trials_run=self.trials_run + other.trials_run,
            unstable_hits=self.unstable_hits + other.unstable_hits,
            path_failures=self.path_failures + other.path_failures,
            oracle_mismatches=self.oracle_mismatches + other.oracle_mismatches,
            elapsed_ms=self.elapsed_ms + other.elapsed_ms,
            notes=self.notes + tuple(n for n in other.notes if n not in self.notes),
            skipped=self.skipped and other.skipped,
        )


def _elapsed_ms(start: float) -> int:
    return int((time.monotonic() - start) * 1000)


# Flat integer encodings, one per family.  Quiver values are interleaved
# (re, im) pairs; dimension-0 arrows stay pinned at zero.


def _flat_length(spec: FamilySpec) -> int:
    if isinstance(spec, ControlFamily):
        return spec.n * spec.n + spec.n * spec.m
    if isinstance(spec, DagFamily):
        return spec.n * (spec.k + 1)
    if isinstance(spec, QuiverSpec):
        return 2 * len(spec.arrows)
    raise DomainError(f"not a family spec: {type(spec).__name__}")


def _draw_flat(spec: FamilySpec, rng: CounterRng, bound: int) -> list[int]:
    if isinstance(spec, QuiverSpec):
        dims = spec.dim_vector
        flat: list[int] = []
        for s, t in spec.arrows:
            if dims[s] == 1 and dims[t] == 1:
                flat.append(rng.int_between(-bound, bound))
                flat.append(rng.int_between(-bound, bound))
            else:
                flat.extend((0, 0))
        return flat
    return [rng.int_between(-bound, bound) for _ in range(_flat_length(spec))]


def _is_stable_flat(spec: FamilySpec, flat: Sequence[int]) -> bool:
    if isinstance(spec, ControlFamily):
        n, m = spec.n, spec.m
        a_rows = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
        b_rows = [
            list(flat[n * n + i * m : n * n + (i + 1) * m]) for i in range(n)
        ]
        return controllability_rank_ints(n, m, a_rows, b_rows) == n
    if isinstance(spec, DagFamily):
        return parent_rank_ints(spec.n, spec.k, list(flat)) == spec.k
    if isinstance(spec, QuiverSpec):
        return quiver_thin_status(_quiver_from_flat(spec, flat)).is_stable
    raise DomainError(f"not a family spec: {type(spec).__name__}")


def _quiver_from_flat(spec: QuiverSpec, flat: Sequence[int]) -> ThinQuiverRep:
    values = tuple(
        ComplexRational.of(flat[2 * i], flat[2 * i + 1])
        for i in range(len(spec.arrows))
    )
    return ThinQuiverRep(spec, values)


def instance_from_flat(spec: FamilySpec, flat: Sequence[int]):
    """Rebuild the instance a flat draw encodes (for reproducing a trial)."""
    if isinstance(spec, ControlFamily):
        n, m = spec.n, spec.m
        return ControlInstance(
            n,
            m,
            Matrix(n, n, tuple(flat[: n * n])),
            Matrix(n, m, tuple(flat[n * n :])),
        )
    if isinstance(spec, DagFamily):
        return DagInstance(spec.n, spec.k, Matrix(spec.n, spec.k + 1, tuple(flat)))
    if isinstance(spec, QuiverSpec):
        return _quiver_from_flat(spec, flat)
    raise DomainError(f"not a family spec: {type(spec).__name__}")


def draw_instance(cfg: TrialConfig, index: int):
    """The exact instance generic-point trial `index` examines."""
    rng = CounterRng(cfg.seed, _OP_GENERIC, index)
    return instance_from_flat(cfg.family_spec, _draw_generic(cfg, rng))


def _draw_generic(cfg: TrialConfig, rng: CounterRng) -> list[int]:
    spec = cfg.family_spec
    flat = _draw_flat(spec, rng, cfg.entry_bound)
    if isinstance(spec, QuiverSpec):
        # The origin is excluded by construction for quiver sampling; it
        # is the known non-stable point and would otherwise pollute the
        # counts.  A quiver with no live arrow only has the origin, so
        # there is nothing to exclude.
        dims = spec.dim_vector
        has_live = any(dims[s] == 1 and dims[t] == 1 for s, t in spec.arrows)
        while has_live and all(x == 0 for x in flat):
            flat = _draw_flat(spec, rng, cfg.entry_bound)
    return flat


def sample_generic_points(cfg: TrialConfig) -> HarnessReport:
    """Draw random integer instances and count non-Stable verdicts."""
    start = time.monotonic()
    spec = cfg.family_spec
    notes: list[str] = []
    if isinstance(spec, DagFamily) and spec.n < spec.k:
        notes.append(
            f"n = {spec.n} < k = {spec.k}: the parent block can never reach "
            "full column rank, so every trial is a hit"
        )
    unstable = 0
    for i in range(cfg.trials):
        rng = CounterRng(cfg.seed, _OP_GENERIC, i)
        if not _is_stable_flat(spec, _draw_generic(cfg, rng)):
            unstable += 1
    return HarnessReport(
        op=OP_GENERIC_POINTS,
        config=cfg,
        trials_run=cfg.trials,
        unstable_hits=unstable,
        elapsed_ms=_elapsed_ms(start),
        notes=tuple(notes),
    )


def _draw_stable(cfg: TrialConfig, rng: CounterRng) -> list[int]:
    for _ in range(MAX_ENDPOINT_ATTEMPTS):
        flat = _draw_flat(cfg.family_spec, rng, cfg.entry_bound)
        if _is_stable_flat(cfg.family_spec, flat):
            return flat
    raise SamplingError(
        f"no Stable endpoint found in {MAX_ENDPOINT_ATTEMPTS} attempts for "
        f"{family_name(cfg.family_spec)}; the family looks degenerate"
    )


def sample_path_stability(cfg: TrialConfig) -> HarnessReport:
    """Quadratic paths between stable endpoints, checked pointwise.

    Each path interpolates two rejection-sampled Stable endpoints through
    one unconditioned random midpoint and is evaluated at the rational
    parameters t = i/path_samples, i = 0..path_samples-1.  The evaluation
    uses the integer rescaling N^2 q(i/N) (N = path_samples); all three
    families' verdicts are invariant under nonzero scaling, so every
    check stays in integer arithmetic.  Skipped (not failed) when the
    family's d_min under the active convention is below 2, since the
    claim being tested needs that bound.
    """
    start = time.monotonic()
    spec = cfg.family_spec
    convention = cfg.convention or default_convention(spec)
    strata = enumerate_strata(spec, convention)
    if strata:
        d_min = min(s.value for s in strata)
        if d_min < 2:
            return HarnessReport(
                op=OP_PATH_STABILITY,
                config=cfg,
                trials_run=0,
                elapsed_ms=_elapsed_ms(start),
                notes=(
                    f"skipped: d_min = {d_min} < 2 under the "
                    f"{convention.value} convention",
                ),
                skipped=True,
            )
    n_samples = cfg.path_samples
    failures = 0
    for p in range(cfg.paths):
        rng = CounterRng(cfg.seed, _OP_PATHS, p)
        left = _draw_stable(cfg, rng)
        right = _draw_stable(cfg, rng)
        mid = _draw_flat(spec, rng, cfg.entry_bound)
        for i in range(n_samples):
            c_left = (n_samples - i) * (n_samples - 2 * i)
            c_mid = 4 * i * (n_samples - i)
            c_right = i * (2 * i - n_samples)
            point = [
                c_left * a + c_mid * b + c_right * c
                for a, b, c in zip(left, mid, right)
            ]
            if not _is_stable_flat(spec, point):
                failures += 1
    return HarnessReport(
        op=OP_PATH_STABILITY,
        config=cfg,
        trials_run=cfg.paths,
        path_failures=failures,
        elapsed_ms=_elapsed_ms(start),
        notes=(
            "finite sampling of quadratic paths: evidence, not proof",
        ),
    )


def kronecker_oracle_check(
    grid_radius: int, theta: tuple[int, int] = (1, -1)
) -> HarnessReport:
    """Exhaustive Kronecker grid against the known unstable locus.

    The reference truth is fixed: Unstable exactly at the origin, Stable
    everywhere else.  Feeding a different theta (the flipped (-1, 1) is
    the documented self-test) exercises the mismatch counting.
    """
    if grid_radius < 0:
        raise DomainError("grid radius must be a natural number")
    start = time.monotonic()
    spec = kronecker_spec(theta)
    axis = range(-grid_radius, grid_radius + 1)
    checked = 0
    mismatches = 0
    for a_re in axis:
        for a_im in axis:
            for b_re in axis:
                for b_im in axis:
                    rep = ThinQuiverRep(
                        spec,
                        (
                            ComplexRational.of(a_re, a_im),
                            ComplexRational.of(b_re, b_im),
                        ),
                    )
                    is_origin = not (a_re or a_im or b_re or b_im)
                    expected = Verdict.UNSTABLE if is_origin else Verdict.STABLE
                    if quiver_thin_status(rep).verdict is not expected:
                        mismatches += 1
                    checked += 1
    return HarnessReport(
        op=OP_KRONECKER_ORACLE,
        config=None,
        trials_run=checked,
        oracle_mismatches=mismatches,
        elapsed_ms=_elapsed_ms(start),
        notes=(
            f"exhaustive grid, radius {grid_radius}, theta = {theta}",
        ),
    )


def detect_constructed_degenerates(cfg: TrialConfig) -> HarnessReport:
    """Rank-deficient DAG samples must be flagged, then repaired.

    Builds X = U V with inner dimension k-1 (so rank X < k), checks the
    status call flags every sample NotStable, stabilizes with eps =
    1/1000, and checks the outputs are Stable.  Violations of either
    assertion count as oracle mismatches.
    """
    spec = cfg.family_spec
    if not isinstance(spec, DagFamily):
        raise PreconditionError("constructed degenerates are a DAG-family check")
    if spec.k < 2:
        raise PreconditionError(
            "rank-(k-1) construction needs k >= 2 parent columns"
        )
    if spec.n < spec.k:
        raise PreconditionError("need n >= k so that stabilization can succeed")
    start = time.monotonic()
    n, k = spec.n, spec.k
    eps = Fraction(1, 1000)
    mismatches = 0
    for i in range(cfg.trials):
        rng = CounterRng(cfg.seed, _OP_DEGENERATE, i)
        u = [
            [rng.int_between(-cfg.entry_bound, cfg.entry_bound) for _ in range(k - 1)]
            for _ in range(n)
        ]
        v = [
            [rng.int_between(-cfg.entry_bound, cfg.entry_bound) for _ in range(k)]
            for _ in range(k - 1)
        ]
        child = [rng.int_between(-cfg.entry_bound, cfg.entry_bound) for _ in range(n)]
        rows = []
        for r in range(n):
            row = [
                sum(u[r][s] * v[s][c] for s in range(k - 1)) for c in range(k)
            ]
            row.append(child[r])
            rows.append(row)
        inst = DagInstance(n, k, Matrix.from_rows(rows))
        if dag_status(inst).is_stable:
            mismatches += 1
            continue
        if not dag_status(dag_stabilize(inst, eps)).is_stable:
            mismatches += 1
    return HarnessReport(
        op=OP_CONSTRUCTED_DEGENERATES,
        config=cfg,
        trials_run=cfg.trials,
        oracle_mismatches=mismatches,
        elapsed_ms=_elapsed_ms(start),
        notes=("X = U V with inner dimension k-1; eps = 1/1000",),
    )
