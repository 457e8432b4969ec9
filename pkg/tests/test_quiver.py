from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from git_topo.errors import DomainError, ShapeError, SizeLimitError
from git_topo.families.base import Verdict
from git_topo.families.quiver import (
    QuiverSpec,
    ThinQuiverRep,
    enumerate_strata,
    euler_form,
    kronecker_spec,
    limit_exists,
    negative_weight_dim,
    one_ps_for_subdim,
    quiver_thin_status,
    sub_dimension_vectors,
    weight_decompose,
)
from git_topo.groups import OrbitConvention, orbit_dim

status = quiver_thin_status


def brute_force_thin_verdict(rep: ThinQuiverRep) -> Verdict:
    """Reference verdict by direct subset enumeration, written independently:
    scan every proper nonempty subset of the thin support, keep those closed
    under arrows with nonzero value, and look at the largest theta sum."""
    spec = rep.spec
    support = spec.support()
    best = None
    for size in range(1, len(support)):
        for subset in combinations(support, size):
            chosen = set(subset)
            closed = True
            for (s, t), v in zip(spec.arrows, rep.values):
                if v and s in chosen and t not in chosen:
                    closed = False
                    break
            if not closed:
                continue
            total = sum(spec.theta[i] for i in chosen)
            if best is None or total > best:
                best = total
    if best is None or best < 0:
        return Verdict.STABLE
    if best > 0:
        return Verdict.UNSTABLE
    return Verdict.NOT_STABLE


def test_euler_form_kronecker():
    spec = kronecker_spec()
    assert euler_form(spec, (1, 0), (0, 1)) == -2
    assert euler_form(spec, (1, 1), (1, 1)) == 1 + 1 - 2
    assert euler_form(spec, (1, 0), (1, 0)) == 1


def test_kronecker_strata_table():
    spec = kronecker_spec()
    strata = enumerate_strata(spec, OrbitConvention.PARABOLIC)
    assert len(strata) == 1
    (stratum,) = strata
    assert stratum.descriptor == {"sub_dim": (1, 0)}
    assert stratum.m == 2
    assert stratum.orbit_dim == 0
    assert stratum.value == 4


def test_sub_dimension_vectors_enumeration():
    spec = QuiverSpec(2, ((0, 1),), (2, 1), (1, -2))
    subs = list(sub_dimension_vectors(spec))
    assert subs == [(0, 1), (1, 0), (1, 1), (2, 0)]


def test_strata_filter_drops_negative_theta_classes():
    spec = kronecker_spec()
    descriptors = [s.descriptor["sub_dim"] for s in enumerate_strata(spec, OrbitConvention.PARABOLIC)]
    assert (0, 1) not in descriptors


def test_admissibility_check():
    with pytest.raises(DomainError, match="not admissible"):
        QuiverSpec(2, ((0, 1),), (1, 1), (1, 1))
    with pytest.raises(ShapeError):
        QuiverSpec(2, ((0, 1),), (1, 1, 1), (1, -1))


def test_kronecker_status_origin_and_axes():
    spec = kronecker_spec()
    assert status(ThinQuiverRep(spec, (0, 0))).verdict is Verdict.UNSTABLE
    origin = status(ThinQuiverRep(spec, (0, 0)))
    assert origin.evidence["support"] == (1,)
    assert origin.evidence["theta_sum"] == 1
    for values in [(1, 0), (0, 1), (3, -2)]:
        assert status(ThinQuiverRep(spec, values)).is_stable


def test_flipped_theta_everything_unstable():
    spec = kronecker_spec(theta=(-1, 1))
    for values in [(0, 0), (1, 0), (2, 3)]:
        st_result = status(ThinQuiverRep(spec, values))
        assert st_result.verdict is Verdict.UNSTABLE
        assert st_result.evidence["support"] == (2,)


def test_not_stable_boundary_case():
    # theta = 0 everywhere: every closed subset sums to zero
    spec = QuiverSpec(2, ((0, 1),), (1, 1), (0, 0))
    assert status(ThinQuiverRep(spec, (1,))).verdict is Verdict.NOT_STABLE


def test_status_size_and_domain_guards():
    n = 21
    spec = QuiverSpec(n, (), (1,) * n, (0,) * n)
    with pytest.raises(SizeLimitError):
        status(ThinQuiverRep(spec, ()))
    empty = QuiverSpec(2, (), (0, 0), (1, -1))
    with pytest.raises(DomainError):
        status(ThinQuiverRep(empty, ()))


def test_rep_validation_on_dead_arrows():
    spec = QuiverSpec(2, ((0, 1),), (1, 0), (0, 0))
    ThinQuiverRep(spec, (0,))  # fine: dead arrow pinned at zero
    with pytest.raises(DomainError):
        ThinQuiverRep(spec, (1,))


def test_one_ps_skips_dimension_zero_vertices():
    spec = QuiverSpec(3, ((0, 1), (1, 2)), (1, 0, 1), (1, 0, -1))
    lam = one_ps_for_subdim(spec, (1, 0, 0))
    assert lam.gl_weights == ((0,), (-1,))
    assert lam.torus_weights == ()


def test_negative_weight_dim_matches_stratum_m():
    spec = kronecker_spec()
    for stratum in enumerate_strata(spec, OrbitConvention.PARABOLIC):
        lam = one_ps_for_subdim(spec, stratum.descriptor["sub_dim"])
        assert negative_weight_dim(spec, lam) == stratum.m


def test_weight_decompose_kronecker():
    spec = kronecker_spec()
    rep = ThinQuiverRep(spec, (5, 7))
    lam = one_ps_for_subdim(spec, (1, 0))
    dec = weight_decompose(rep, lam)
    assert dec.weights() == (-1,)
    assert not dec.negative_is_zero()
    assert limit_exists(rep, lam) is False
    assert limit_exists(ThinQuiverRep(spec, (0, 0)), lam) is True


small_dims = st.lists(st.integers(0, 1), min_size=2, max_size=4).filter(
    lambda d: sum(d) >= 1
)


@st.composite
def thin_quivers(draw):
    dims = tuple(draw(small_dims))
    v = len(dims)
    arrow_count = draw(st.integers(0, 4))
    arrows = tuple(
        (draw(st.integers(0, v - 1)), draw(st.integers(0, v - 1)))
        for _ in range(arrow_count)
    )
    # admissible theta: sums of d_j e_i - d_i e_j transfers
    theta = [0] * v
    for _ in range(draw(st.integers(0, 3))):
        i = draw(st.integers(0, v - 1))
        j = draw(st.integers(0, v - 1))
        c = draw(st.integers(-2, 2))
        theta[i] += c * dims[j]
        theta[j] -= c * dims[i]
    return QuiverSpec(v, arrows, dims, tuple(theta))


@given(thin_quivers(), st.data())
@settings(max_examples=120, deadline=None)
def test_status_matches_brute_force(spec, data):
    live = [i for i, (s, t) in enumerate(spec.arrows)
            if spec.dim_vector[s] == 1 and spec.dim_vector[t] == 1]
    values = [0] * len(spec.arrows)
    for idx in live:
        values[idx] = data.draw(st.integers(-2, 2))
    rep = ThinQuiverRep(spec, tuple(values))
    if not spec.support():
        with pytest.raises(DomainError):
            quiver_thin_status(rep)
        return
    assert quiver_thin_status(rep).verdict is brute_force_thin_verdict(rep)


@given(thin_quivers(), st.data())
@settings(max_examples=80, deadline=None)
def test_verdict_invariant_under_scaling(spec, data):
    if not spec.support():
        return
    live = [i for i, (s, t) in enumerate(spec.arrows)
            if spec.dim_vector[s] == 1 and spec.dim_vector[t] == 1]
    values = [0] * len(spec.arrows)
    for idx in live:
        values[idx] = data.draw(st.integers(-3, 3))
    scale = data.draw(st.sampled_from([2, -1, 7]))
    rep = ThinQuiverRep(spec, tuple(values))
    scaled = ThinQuiverRep(spec, tuple(v * scale for v in values))
    assert quiver_thin_status(rep).verdict is quiver_thin_status(scaled).verdict


@st.composite
def general_quivers(draw):
    """Dimensions up to 3; only the stratum combinatorics is exercised."""
    dims = tuple(draw(st.lists(st.integers(0, 3), min_size=2, max_size=4)))
    v = len(dims)
    arrow_count = draw(st.integers(0, 4))
    arrows = tuple(
        (draw(st.integers(0, v - 1)), draw(st.integers(0, v - 1)))
        for _ in range(arrow_count)
    )
    theta = [0] * v
    for _ in range(draw(st.integers(0, 3))):
        i = draw(st.integers(0, v - 1))
        j = draw(st.integers(0, v - 1))
        c = draw(st.integers(-2, 2))
        theta[i] += c * dims[j]
        theta[j] -= c * dims[i]
    return QuiverSpec(v, arrows, dims, tuple(theta))


@given(general_quivers())
@settings(max_examples=100, deadline=None)
def test_stratum_value_equals_euler_form(spec):
    """2m - 2 orbit (parabolic) = -2 <d', d - d'> for every sub-dimension."""
    if sum(spec.dim_vector) == 0:
        return
    group = spec.group()
    for sub in sub_dimension_vectors(spec):
        lam = one_ps_for_subdim(spec, sub)
        m = negative_weight_dim(spec, lam)
        orbit = orbit_dim(group, lam, OrbitConvention.PARABOLIC)
        rest = tuple(d - s for d, s in zip(spec.dim_vector, sub))
        assert 2 * m - 2 * orbit == -2 * euler_form(spec, sub, rest)


@given(general_quivers())
@settings(max_examples=60, deadline=None)
def test_strata_m_closed_form_vs_weights(spec):
    if sum(spec.dim_vector) == 0:
        return
    for stratum in enumerate_strata(spec, OrbitConvention.PARABOLIC):
        lam = one_ps_for_subdim(spec, stratum.descriptor["sub_dim"])
        assert negative_weight_dim(spec, lam) == stratum.m
        assert stratum.value == 2 * stratum.m - 2 * stratum.orbit_dim
