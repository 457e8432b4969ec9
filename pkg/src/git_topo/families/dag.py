"""Star-shaped Gaussian DAG models: k parent columns, one child column.

A point is an n x (k+1) data matrix Y = [X | y] with X the parent block.
The group GL(k) x C* changes parent coordinates and scales the child.
The MLE for the child regression is unique exactly when X has full column
rank k, which is also GIT stability here; rank-deficient X gives a
NotStable verdict (the normal equations stay solvable but stop being
unique, so nothing is ever reported Unstable at the point level).

Destabilizing classes are indexed by the number j of redundant parent
columns; the representative puts weight -1 on those columns and -j on the
torus, leaving the child in non-negative weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from git_topo.errors import DomainError, PreconditionError, ShapeError
from git_topo.families.base import (
    StabilityStatus,
    StratumClass,
    WeightDecomposition,
    assemble_decomposition,
    limit_exists_from_weights,
)
from git_topo.groups import Character, GroupSpec, OnePSClass, OrbitConvention, orbit_dim
from git_topo.linalg import Matrix, column_pivots, int_rank, nullspace, solve_square

DEFAULT_CONVENTION = OrbitConvention.CENTRALIZER


@dataclass(frozen=True)
class DagFamily:
    """Shape of the family: n samples, k parent variables."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise DomainError("sample count and parent count must be positive")

    def group(self) -> GroupSpec:
        return GroupSpec((self.k,), torus_rank=1)

    def character(self) -> Character:
        return Character(det_powers=(0,), torus_exponents=(1,))


@dataclass(frozen=True)
class DagInstance:
    """One data matrix Y, n x (k+1), last column the child."""

    n: int
    k: int
    y: Matrix

    def __post_init__(self) -> None:
        if (self.y.rows, self.y.cols) != (self.n, self.k + 1):
            raise ShapeError(f"Y must be {self.n}x{self.k + 1}")
        if self.y.has_complex_entries():
            raise DomainError("DAG instances are rational, not complex")

    def family(self) -> DagFamily:
        return DagFamily(self.n, self.k)

    def parent_block(self) -> Matrix:
        return Matrix(
            self.n,
            self.k,
            tuple(
                self.y.at(i, j) for i in range(self.n) for j in range(self.k)
            ),
        )

    def child_column(self) -> tuple:
        return self.y.col(self.k)

    def is_zero(self) -> bool:
        return self.y.is_zero()


def parent_rank_ints(n: int, k: int, y_flat: list[int]) -> int:
    """Rank of the parent block from flat integer Y entries (fast path)."""
    rows = [[y_flat[i * (k + 1) + j] for j in range(k)] for i in range(n)]
    return int_rank(rows)


def dag_status(inst: DagInstance) -> StabilityStatus:
    """Stable exactly when the parent block has full column rank."""
    x = inst.parent_block()
    r = int_rank(_integer_rows(x))
    if r == inst.k:
        return StabilityStatus.stable(rank=r)
    return StabilityStatus.not_stable(
        reason=(
            f"parent block has rank {r} < {inst.k}; the normal equations "
            "admit infinitely many solutions"
        ),
        rank=r,
    )


def _integer_rows(matrix: Matrix) -> list[list[int]]:
    out = []
    for i in range(matrix.rows):
        row = list(matrix.row(i))
        scale = 1
        for e in row:
            d = e.denominator
            if d != 1:
                g = _gcd(scale, d)
                scale = scale // g * d
        out.append([int(e * scale) for e in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def dag_solve_mle(inst: DagInstance) -> tuple[Fraction, ...]:
    """Solve the normal equations X^T X beta = X^T y exactly.

    Requires a Stable instance; the Gram matrix is then nonsingular and
    the regression coefficients are unique.
    """
    if not dag_status(inst).is_stable:
        raise PreconditionError(
            "MLE solve requires a full-rank parent block; stabilize first"
        )
    x = inst.parent_block()
    gram = x.transpose() @ x
    child = inst.child_column()
    rhs = [
        sum((Fraction(x.at(i, j)) * Fraction(child[i]) for i in range(inst.n)),
            Fraction(0))
        for j in range(inst.k)
    ]
    return solve_square(gram, rhs)


def dag_stabilize(inst: DagInstance, eps: Fraction | int) -> DagInstance:
    """Restore full column rank by an eps-perturbation of redundant columns.

    Each non-pivot parent column gets eps times a fresh left-null vector
    of X added to it.  Those directions are orthogonal to the column
    space, so the pivot columns still span the old space and each
    perturbed column contributes a new independent direction; the result
    is Stable for every nonzero eps.  Stable inputs come back unchanged.
    """
    eps = Fraction(eps)
    if eps == 0:
        raise DomainError("perturbation size must be nonzero")
    if inst.n < inst.k:
        raise DomainError(
            f"no {inst.n}x{inst.k} matrix has column rank {inst.k}; "
            "stabilization is impossible with fewer samples than parents"
        )
    x = inst.parent_block()
    pivots = set(column_pivots(x))
    deficient = [c for c in range(inst.k) if c not in pivots]
    if not deficient:
        return inst
    directions = nullspace(x.transpose())
    rows = inst.y.to_rows()
    for slot, col in enumerate(deficient):
        direction = directions[slot]
        for i in range(inst.n):
            rows[i][col] = Fraction(rows[i][col]) + eps * direction[i]
    return DagInstance(inst.n, inst.k, Matrix.from_rows(rows))


def one_ps_redundant(fam: DagFamily, j: int) -> OnePSClass:
    """Representative with j redundant parent columns in weight -1."""
    if not (1 <= j <= fam.k):
        raise DomainError(f"redundant-column count must lie in [1, {fam.k}]")
    return OnePSClass(((-1,) * j + (0,) * (fam.k - j),), (-j,))


def enumerate_strata(
    fam: DagFamily, convention: OrbitConvention = DEFAULT_CONVENTION
) -> list[StratumClass]:
    """One destabilizing class per redundant-column count j, m = j*n."""
    strata: list[StratumClass] = []
    for j in range(1, fam.k + 1):
        rep = one_ps_redundant(fam, j)
        orbit = orbit_dim(fam.group(), rep, convention)
        strata.append(
            StratumClass.build(
                family="dag",
                descriptor={"redundant_columns": j},
                representative=rep,
                m=j * fam.n,
                orbit_dim=orbit,
                convention=convention,
            )
        )
    return strata


def _weights_for_coords(fam: DagFamily, lam: OnePSClass) -> list[int]:
    """Weights for row-major Y coordinates.

    Parent column c carries its GL weight, the child column carries minus
    the torus weight.
    """
    if len(lam.gl_weights) != 1 or len(lam.torus_weights) != 1:
        raise ShapeError("DAG groups have one GL factor and a rank-1 torus")
    w = lam.gl_weights[0]
    if len(w) != fam.k:
        raise ShapeError(f"1-PS needs {fam.k} parent weights, got {len(w)}")
    child_weight = -lam.torus_weights[0]
    per_row = list(w) + [child_weight]
    return per_row * fam.n


def negative_weight_dim(fam: DagFamily, lam: OnePSClass) -> int:
    return sum(1 for w in _weights_for_coords(fam, lam) if w < 0)


def weight_decompose(inst: DagInstance, lam: OnePSClass) -> WeightDecomposition:
    coords = list(inst.y.entries)

    def rebuild(masked: list) -> DagInstance:
        return DagInstance(inst.n, inst.k, Matrix(inst.n, inst.k + 1, tuple(masked)))

    return assemble_decomposition(
        coords, _weights_for_coords(inst.family(), lam), rebuild, 0
    )


def limit_exists(inst: DagInstance, lam: OnePSClass) -> bool:
    return limit_exists_from_weights(
        list(inst.y.entries), _weights_for_coords(inst.family(), lam)
    )
