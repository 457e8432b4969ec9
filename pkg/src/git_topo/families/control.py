"""Linear control systems (A, B) under the change-of-basis GL(n) action.

A point is a pair of an n x n state matrix A and an n x m input matrix B.
Stability for the determinant character is exactly controllability: the
Krylov columns B, AB, ..., A^(n-1)B must span the state space.  The
destabilizing classes are indexed by the dimension r of a proper nonzero
A-invariant subspace containing the image of B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from git_topo.errors import DomainError, ShapeError
from git_topo.families.base import (
    StabilityStatus,
    StratumClass,
    WeightDecomposition,
    assemble_decomposition,
    limit_exists_from_weights,
)
from git_topo.groups import Character, GroupSpec, OnePSClass, OrbitConvention, orbit_dim
from git_topo.linalg import Matrix, int_rank

DEFAULT_CONVENTION = OrbitConvention.PARABOLIC


@dataclass(frozen=True)
class ControlFamily:
    """Shape of the family: state dimension n, input dimension m."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise DomainError("state and input dimensions must be positive")

    def group(self) -> GroupSpec:
        return GroupSpec((self.n,))

    def character(self) -> Character:
        return Character(det_powers=(1,))


@dataclass(frozen=True)
class ControlInstance:
    """One system: A is n x n, B is n x m, entries exact rationals."""

    n: int
    m: int
    a: Matrix
    b: Matrix

    def __post_init__(self) -> None:
        if (self.a.rows, self.a.cols) != (self.n, self.n):
            raise ShapeError(f"A must be {self.n}x{self.n}")
        if (self.b.rows, self.b.cols) != (self.n, self.m):
            raise ShapeError(f"B must be {self.n}x{self.m}")
        if self.a.has_complex_entries() or self.b.has_complex_entries():
            raise DomainError("control instances are rational, not complex")

    def family(self) -> ControlFamily:
        return ControlFamily(self.n, self.m)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()


def controllability_matrix(inst: ControlInstance) -> Matrix:
    """The n x (n*m) block matrix [B, AB, ..., A^(n-1)B], computed exactly."""
    out = inst.b
    block = inst.b
    for _ in range(inst.n - 1):
        block = inst.a @ block
        out = out.hstack(block)
    return out


def controllability_rank_ints(
    n: int, m: int, a_rows: list[list[int]], b_rows: list[list[int]]
) -> int:
    """Rank of the controllability matrix for integer A, B (fast path)."""
    current = [[b_rows[i][j] for i in range(n)] for j in range(m)]
    krylov = [list(c) for c in current]
    for _ in range(n - 1):
        nxt = []
        for col in current:
            nxt.append([sum(a_rows[i][k] * col[k] for k in range(n)) for i in range(n)])
        krylov.extend(nxt)
        current = nxt
    return int_rank(krylov)


def _integerized(matrix: Matrix) -> list[list[int]]:
    """Clear denominators with one global scale (keeps Krylov structure)."""
    scale = 1
    for e in matrix.entries:
        d = e.denominator
        if d != 1:
            g = _gcd(scale, d)
            scale = scale // g * d
    return [[int(e * scale) for e in matrix.row(i)] for i in range(matrix.rows)]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def control_status(inst: ControlInstance) -> StabilityStatus:
    """Stable exactly when (A, B) is controllable.

    The rank of the controllability matrix is invariant under scaling A
    and B separately (each Krylov block only picks up a scalar), so both
    are integerized first and the rank runs fraction-free.
    """
    r = controllability_rank_ints(
        inst.n, inst.m, _integerized(inst.a), _integerized(inst.b)
    )
    if r == inst.n:
        return StabilityStatus.stable(rank=r)
    return StabilityStatus.unstable(
        reason=f"reachable subspace has dimension {r} < {inst.n}",
        rank=r,
    )


def invariant_subspace_dim(inst: ControlInstance) -> int:
    """Dimension of the smallest A-invariant subspace containing Im B.

    Independent oracle for control_status: saturates Im B under A with
    exact row-reduced bookkeeping instead of building Krylov blocks.
    """
    n = inst.n
    basis: dict[int, list[Fraction]] = {}

    def reduced(vec: list[Fraction]) -> list[Fraction]:
        out = list(vec)
        for piv, bv in basis.items():
            factor = out[piv]
            if factor:
                out = [x - factor * y for x, y in zip(out, bv)]
        return out

    def insert(vec: list[Fraction]) -> list[Fraction] | None:
        vec = reduced(vec)
        pivot = next((i for i, x in enumerate(vec) if x), None)
        if pivot is None:
            return None
        lead = vec[pivot]
        normal = [x / lead for x in vec]
        for bv in basis.values():
            factor = bv[pivot]
            if factor:
                bv[:] = [x - factor * y for x, y in zip(bv, normal)]
        basis[pivot] = normal
        return normal

    queue = [[Fraction(x) for x in inst.b.col(j)] for j in range(inst.m)]
    while queue:
        added = insert(queue.pop(0))
        if added is not None:
            image = [
                sum((Fraction(inst.a.at(i, k)) * added[k] for k in range(n)), Fraction(0))
                for i in range(n)
            ]
            queue.append(image)
    return len(basis)


def one_ps_for_subspace(fam: ControlFamily, r: int) -> OnePSClass:
    """Representative fixing an r-dimensional invariant subspace.

    The first r basis slots (the subspace) get weight 0, the quotient
    slots weight -1.
    """
    if not (1 <= r <= fam.n - 1):
        raise DomainError(f"subspace dimension must lie in [1, {fam.n - 1}]")
    return OnePSClass(((0,) * r + (-1,) * (fam.n - r),), ())


def enumerate_strata(
    fam: ControlFamily, convention: OrbitConvention = DEFAULT_CONVENTION
) -> list[StratumClass]:
    """One destabilizing class per invariant-subspace dimension r.

    m counts the coordinates mapping the subspace out of itself plus the
    B entries landing in the quotient: r*(n-r) + (n-r)*m_in.
    """
    strata: list[StratumClass] = []
    for r in range(1, fam.n):
        rep = one_ps_for_subspace(fam, r)
        m = r * (fam.n - r) + (fam.n - r) * fam.m
        orbit = orbit_dim(fam.group(), rep, convention)
        strata.append(
            StratumClass.build(
                family="control",
                descriptor={"invariant_subspace_dim": r},
                representative=rep,
                m=m,
                orbit_dim=orbit,
                convention=convention,
            )
        )
    return strata


def _weights_for_coords(fam: ControlFamily, lam: OnePSClass) -> list[int]:
    """Weights for the flattened (A, B) coordinates, A row-major first.

    A entry (i, j) carries w_i - w_j, B entry (i, j) carries w_i.
    """
    if len(lam.gl_weights) != 1 or lam.torus_weights:
        raise ShapeError("control systems carry a single GL factor and no torus")
    w = lam.gl_weights[0]
    if len(w) != fam.n:
        raise ShapeError(f"1-PS needs {fam.n} weights, got {len(w)}")
    weights = [w[i] - w[j] for i in range(fam.n) for j in range(fam.n)]
    weights.extend(w[i] for i in range(fam.n) for _ in range(fam.m))
    return weights


def negative_weight_dim(fam: ControlFamily, lam: OnePSClass) -> int:
    return sum(1 for w in _weights_for_coords(fam, lam) if w < 0)


def weight_decompose(inst: ControlInstance, lam: OnePSClass) -> WeightDecomposition:
    fam = inst.family()
    coords = list(inst.a.entries) + list(inst.b.entries)
    split = inst.n * inst.n

    def rebuild(masked: list) -> ControlInstance:
        return ControlInstance(
            inst.n,
            inst.m,
            Matrix(inst.n, inst.n, tuple(masked[:split])),
            Matrix(inst.n, inst.m, tuple(masked[split:])),
        )

    return assemble_decomposition(coords, _weights_for_coords(fam, lam), rebuild, 0)


def limit_exists(inst: ControlInstance, lam: OnePSClass) -> bool:
    coords = list(inst.a.entries) + list(inst.b.entries)
    return limit_exists_from_weights(coords, _weights_for_coords(inst.family(), lam))
