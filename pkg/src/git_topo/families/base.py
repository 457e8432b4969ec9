"""Shared value types for the model families.

Each family contributes three things downstream: a stability verdict for a
point, a table of destabilizing strata (one per 1-PS class that can occur
as a worst destabilizer), and a weight decomposition of points under a
given 1-PS.  The types here are family-agnostic; the per-family modules
fill them in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Mapping, Sequence

from git_topo.errors import DomainError
from git_topo.groups import OnePSClass, OrbitConvention


class Verdict(Enum):
    STABLE = "stable"
    NOT_STABLE = "not_stable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityStatus:
    """Outcome of a stability check, with machine-checkable evidence.

    evidence is a small dict of ints and tuples; keys are family-specific
    (rank for control and DAG, support and theta_sum for quiver).
    """

    verdict: Verdict
    reason: str | None = None
    evidence: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def stable(cls, **evidence: Any) -> "StabilityStatus":
        return cls(Verdict.STABLE, None, dict(evidence))

    @classmethod
    def not_stable(cls, reason: str, **evidence: Any) -> "StabilityStatus":
        return cls(Verdict.NOT_STABLE, reason, dict(evidence))

    @classmethod
    def unstable(cls, reason: str | None = None, **evidence: Any) -> "StabilityStatus":
        return cls(Verdict.UNSTABLE, reason, dict(evidence))

    @property
    def is_stable(self) -> bool:
        return self.verdict is Verdict.STABLE


@dataclass(frozen=True)
class StratumClass:
    """One destabilizing 1-PS class with its numerical data.

    m is the dimension of the negative-weight subspace at the class's
    representative; value = 2*m - 2*orbit_dim is the contribution the
    class makes to connectivity counting, and is even by construction.
    """

    family: str
    descriptor: Mapping[str, Any]
    representative: OnePSClass
    m: int
    orbit_dim: int
    value: int
    convention: OrbitConvention

    def __post_init__(self) -> None:
        if self.value != 2 * self.m - 2 * self.orbit_dim:
            raise DomainError("stratum value must equal 2*m - 2*orbit_dim")

    @classmethod
    def build(
        cls,
        family: str,
        descriptor: Mapping[str, Any],
        representative: OnePSClass,
        m: int,
        orbit_dim: int,
        convention: OrbitConvention,
    ) -> "StratumClass":
        return cls(
            family=family,
            descriptor=dict(descriptor),
            representative=representative,
            m=m,
            orbit_dim=orbit_dim,
            value=2 * m - 2 * orbit_dim,
            convention=convention,
        )


@dataclass(frozen=True)
class WeightDecomposition:
    """Splitting of a point by 1-PS weight, plus its two derived views.

    components holds (weight, instance) pairs in increasing weight order;
    the component instances sum coordinatewise to the original point.
    negative_part collects all strictly negative weights, nonnegative_part
    the rest.
    """

    components: tuple[tuple[int, Any], ...]
    negative_part: Any
    nonnegative_part: Any

    def weights(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.components)

    def component(self, weight: int) -> Any | None:
        for w, inst in self.components:
            if w == weight:
                return inst
        return None

    def negative_is_zero(self) -> bool:
        return self.negative_part.is_zero()


def assemble_decomposition(
    coords: Sequence[Any],
    weights: Sequence[int],
    rebuild: Callable[[list[Any]], Any],
    zero: Any,
) -> WeightDecomposition:
    """Build a WeightDecomposition from flat coordinates and their weights."""
    if len(coords) != len(weights):
        raise DomainError("coordinate and weight lists must have equal length")

    def masked(keep: Callable[[int], bool]) -> Any:
        return rebuild([c if keep(w) else zero for c, w in zip(coords, weights)])

    parts = []
    for w in sorted(set(weights)):
        parts.append((w, masked(lambda x, w=w: x == w)))
    return WeightDecomposition(
        components=tuple(parts),
        negative_part=masked(lambda w: w < 0),
        nonnegative_part=masked(lambda w: w >= 0),
    )


def limit_exists_from_weights(coords: Sequence[Any], weights: Sequence[int]) -> bool:
    """True when every strictly negative weight carries a zero coordinate.

    This is the Hilbert-Mumford limit test: lim t->0 exists exactly when
    the point has no component in the negative weight space.  Scans the
    raw coordinates directly, independent of assemble_decomposition.
    """
    if len(coords) != len(weights):
        raise DomainError("coordinate and weight lists must have equal length")
    for c, w in zip(coords, weights):
        if w < 0 and c:
            return False
    return True
