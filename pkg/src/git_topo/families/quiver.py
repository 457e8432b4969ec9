"""Quiver representations with a King-style stability parameter.

A quiver here is a finite directed multigraph with a dimension vector and
an integer stability parameter theta satisfying the admissibility relation
sum_i theta_i * dim_i = 0.  The group is the product of GL(dim_i) over
vertices of positive dimension; points live in the direct sum of
Hom(C^dim_source, C^dim_target) over arrows.

Point-level checks are implemented for thin representations (all
dimensions 0 or 1), where subrepresentations correspond to arrow-closed
vertex subsets and the stability test is a finite subset scan.  The
stratum enumeration works for arbitrary dimension vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from git_topo.errors import DomainError, ShapeError, SizeLimitError
from git_topo.families.base import (
    StabilityStatus,
    StratumClass,
    WeightDecomposition,
    assemble_decomposition,
    limit_exists_from_weights,
)
from git_topo.groups import GroupSpec, OnePSClass, OrbitConvention, orbit_dim
from git_topo.linalg import CZERO, ComplexRational

MAX_VERTICES_FOR_SUBSET_SCAN = 20

DEFAULT_CONVENTION = OrbitConvention.PARABOLIC


@dataclass(frozen=True)
class QuiverSpec:
    """A quiver with dimension vector and admissible stability parameter.

    Arrows are stored 0-based as (source, target) pairs; parallel arrows
    and loops are allowed.
    """

    vertex_count: int
    arrows: tuple[tuple[int, int], ...]
    dim_vector: tuple[int, ...]
    theta: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows)
        )
        object.__setattr__(self, "dim_vector", tuple(int(d) for d in self.dim_vector))
        object.__setattr__(self, "theta", tuple(int(a) for a in self.theta))
        if self.vertex_count < 1:
            raise DomainError("quiver needs at least one vertex")
        for s, t in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise DomainError(f"arrow ({s}, {t}) leaves the vertex range")
        if len(self.dim_vector) != self.vertex_count:
            raise ShapeError("dimension vector length must equal vertex count")
        if len(self.theta) != self.vertex_count:
            raise ShapeError("stability parameter length must equal vertex count")
        if any(d < 0 for d in self.dim_vector):
            raise DomainError("dimensions must be non-negative")
        pairing = sum(a * d for a, d in zip(self.theta, self.dim_vector))
        if pairing != 0:
            raise DomainError(
                f"stability parameter is not admissible: theta . dim = {pairing} != 0"
            )

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Arrow-count matrix: entry (i, j) counts arrows from i to j."""
        counts = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for s, t in self.arrows:
            counts[s][t] += 1
        return tuple(tuple(row) for row in counts)

    def positive_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.dim_vector) if d >= 1)

    def support(self) -> tuple[int, ...]:
        """Vertices of dimension exactly 1 (the thin support)."""
        return tuple(i for i, d in enumerate(self.dim_vector) if d == 1)

    def is_thin(self) -> bool:
        return all(d <= 1 for d in self.dim_vector)

    def group(self) -> GroupSpec:
        return GroupSpec(tuple(self.dim_vector[i] for i in self.positive_vertices()))


def kronecker_spec(theta: Sequence[int] = (1, -1)) -> QuiverSpec:
    """Two vertices, two parallel arrows 1->2, thin dimensions."""
    return QuiverSpec(2, ((0, 1), (0, 1)), (1, 1), tuple(theta))


def euler_form(spec: QuiverSpec, d: Sequence[int], e: Sequence[int]) -> int:
    """Euler form <d, e> = sum_i d_i e_i - sum_arrows d_source e_target."""
    if len(d) != spec.vertex_count or len(e) != spec.vertex_count:
        raise ShapeError("dimension vectors must match the vertex count")
    total = sum(di * ei for di, ei in zip(d, e))
    for s, t in spec.arrows:
        total -= d[s] * e[t]
    return total


def _vertex_weights(spec: QuiverSpec, lam: OnePSClass) -> list[tuple[int, ...]]:
    """Per-vertex weight tuples for lam, empty at dimension-0 vertices."""
    positive = spec.positive_vertices()
    if len(lam.gl_weights) != len(positive):
        raise ShapeError(
            f"1-PS has {len(lam.gl_weights)} factors, quiver group has {len(positive)}"
        )
    if lam.torus_weights:
        raise ShapeError("quiver groups carry no torus factor")
    out: list[tuple[int, ...]] = [() for _ in range(spec.vertex_count)]
    for factor, vertex in enumerate(positive):
        ws = lam.gl_weights[factor]
        if len(ws) != spec.dim_vector[vertex]:
            raise ShapeError(
                f"factor at vertex {vertex + 1} needs {spec.dim_vector[vertex]} "
                f"weights, got {len(ws)}"
            )
        out[vertex] = ws
    return out


def negative_weight_dim(spec: QuiverSpec, lam: OnePSClass) -> int:
    """Dimension of the strictly negative weight space of lam on V.

    An arrow coordinate from basis slot q at the source to slot p at the
    target carries weight w_target[p] - w_source[q].
    """
    weights = _vertex_weights(spec, lam)
    total = 0
    for s, t in spec.arrows:
        for wp in weights[t]:
            for wq in weights[s]:
                if wp - wq < 0:
                    total += 1
    return total


def sub_dimension_vectors(spec: QuiverSpec) -> Iterator[tuple[int, ...]]:
    """All d' with 0 <= d'_i <= dim_i, excluding 0 and dim, in lex order."""
    full = spec.dim_vector
    for candidate in itertools.product(*(range(d + 1) for d in full)):
        if any(candidate) and candidate != full:
            yield candidate


def one_ps_for_subdim(spec: QuiverSpec, sub: Sequence[int]) -> OnePSClass:
    """Representative 1-PS fixing a subrepresentation of dimension d'.

    At each positive vertex the first d'_i basis slots (the subspace)
    get weight 0 and the remaining ones weight -1, so arrows out of the
    subrepresentation into the quotient are exactly the negative weights.
    """
    factors = []
    for vertex in spec.positive_vertices():
        keep = sub[vertex]
        total = spec.dim_vector[vertex]
        if not (0 <= keep <= total):
            raise DomainError(f"subdimension at vertex {vertex + 1} out of range")
        factors.append((0,) * keep + (-1,) * (total - keep))
    return OnePSClass(tuple(factors), ())


def enumerate_strata(
    spec: QuiverSpec, convention: OrbitConvention = DEFAULT_CONVENTION
) -> list[StratumClass]:
    """Destabilizing classes, one per admissible subdimension vector.

    A subdimension d' destabilizes when theta . d' >= 0.  m is the count
    of Hom coordinates from the subspace into the quotient complement,
    sum over arrows of d'_source * (dim - d')_target.
    """
    if all(d == 0 for d in spec.dim_vector):
        raise DomainError("the zero dimension vector has no strata")
    strata: list[StratumClass] = []
    for sub in sub_dimension_vectors(spec):
        if sum(a * d for a, d in zip(spec.theta, sub)) < 0:
            continue
        rep = one_ps_for_subdim(spec, sub)
        m = sum(
            sub[s] * (spec.dim_vector[t] - sub[t]) for s, t in spec.arrows
        )
        orbit = orbit_dim(spec.group(), rep, convention)
        strata.append(
            StratumClass.build(
                family="quiver",
                descriptor={"sub_dim": tuple(sub)},
                representative=rep,
                m=m,
                orbit_dim=orbit,
                convention=convention,
            )
        )
    return strata


@dataclass(frozen=True)
class ThinQuiverRep:
    """A representation of a thin quiver: one Gaussian rational per arrow.

    Arrows touching a dimension-0 vertex span a zero Hom space, so their
    values must be zero.
    """

    spec: QuiverSpec
    values: tuple[ComplexRational, ...]

    def __post_init__(self) -> None:
        if not self.spec.is_thin():
            raise DomainError("point-level checks require a thin dimension vector")
        object.__setattr__(
            self, "values", tuple(ComplexRational.of(v) for v in self.values)
        )
        if len(self.values) != len(self.spec.arrows):
            raise ShapeError("need exactly one value per arrow")
        for (s, t), v in zip(self.spec.arrows, self.values):
            if v and (self.spec.dim_vector[s] == 0 or self.spec.dim_vector[t] == 0):
                raise DomainError(
                    f"arrow ({s + 1}, {t + 1}) touches a dimension-0 vertex; "
                    "its value must be zero"
                )

    def effective_arrows(self) -> tuple[int, ...]:
        """Indices of arrows whose Hom space is nonzero."""
        dims = self.spec.dim_vector
        return tuple(
            idx
            for idx, (s, t) in enumerate(self.spec.arrows)
            if dims[s] == 1 and dims[t] == 1
        )

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)


def _coordinate_weights(rep: ThinQuiverRep, lam: OnePSClass) -> list[int]:
    weights = _vertex_weights(rep.spec, lam)
    out = []
    for idx in rep.effective_arrows():
        s, t = rep.spec.arrows[idx]
        out.append(weights[t][0] - weights[s][0])
    return out


def weight_decompose(rep: ThinQuiverRep, lam: OnePSClass) -> WeightDecomposition:
    """Split a thin representation by lam-weight, arrow by arrow."""
    effective = rep.effective_arrows()
    coords = [rep.values[idx] for idx in effective]

    def rebuild(masked: list[ComplexRational]) -> ThinQuiverRep:
        values = [CZERO] * len(rep.spec.arrows)
        for slot, idx in enumerate(effective):
            values[idx] = masked[slot]
        return ThinQuiverRep(rep.spec, tuple(values))

    return assemble_decomposition(coords, _coordinate_weights(rep, lam), rebuild, CZERO)


def limit_exists(rep: ThinQuiverRep, lam: OnePSClass) -> bool:
    coords = [rep.values[idx] for idx in rep.effective_arrows()]
    return limit_exists_from_weights(coords, _coordinate_weights(rep, lam))


def quiver_thin_status(rep: ThinQuiverRep) -> StabilityStatus:
    """King stability for a thin representation by scanning vertex subsets.

    A proper nonempty subset S of the support spans a subrepresentation
    exactly when no nonzero arrow leaves S.  The point is unstable when
    some such S has theta(S) > 0, strictly semistable when the best S
    has theta(S) = 0, and stable otherwise.  Evidence reports the first
    witness subset in mask order, 1-based.
    """
    spec = rep.spec
    if spec.vertex_count > MAX_VERTICES_FOR_SUBSET_SCAN:
        raise SizeLimitError(
            f"subset scan refused beyond {MAX_VERTICES_FOR_SUBSET_SCAN} vertices"
        )
    support = spec.support()
    if not support:
        raise DomainError("representation has empty support")
    slot = {v: i for i, v in enumerate(support)}
    live_arrows = [
        (s, t)
        for (s, t), v in zip(spec.arrows, rep.values)
        if v and spec.dim_vector[s] == 1 and spec.dim_vector[t] == 1
    ]
    best_mask = None
    best_sum = None
    for mask in range(1, (1 << len(support)) - 1):
        closed = True
        for s, t in live_arrows:
            if (mask >> slot[s]) & 1 and not (mask >> slot[t]) & 1:
                closed = False
                break
        if not closed:
            continue
        theta_sum = sum(
            spec.theta[v] for i, v in enumerate(support) if (mask >> i) & 1
        )
        if best_sum is None or theta_sum > best_sum:
            best_sum = theta_sum
            best_mask = mask
    if best_sum is None or best_sum < 0:
        return StabilityStatus.stable()
    witness = tuple(v + 1 for i, v in enumerate(support) if (best_mask >> i) & 1)
    if best_sum > 0:
        return StabilityStatus.unstable(
            reason="a destabilizing subrepresentation has positive weight",
            support=witness,
            theta_sum=best_sum,
        )
    return StabilityStatus.not_stable(
        reason="strictly semistable: a proper subrepresentation has weight zero",
        support=witness,
        theta_sum=0,
    )
