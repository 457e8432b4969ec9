from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from git_topo.errors import DomainError, PreconditionError
from git_topo.families.base import Verdict
from git_topo.families.dag import (
    DagFamily,
    DagInstance,
    dag_solve_mle,
    dag_stabilize,
    dag_status,
    enumerate_strata,
    limit_exists,
    negative_weight_dim,
    one_ps_redundant,
    weight_decompose,
)
from git_topo.groups import OrbitConvention
from git_topo.linalg import Matrix


def make_instance(rows):
    n = len(rows)
    k = len(rows[0]) - 1
    return DagInstance(n, k, Matrix.from_rows(rows))


def test_strata_table_centralizer_headline():
    fam = DagFamily(10, 3)
    table = {
        s.descriptor["redundant_columns"]: (s.m, s.orbit_dim, s.value)
        for s in enumerate_strata(fam, OrbitConvention.CENTRALIZER)
    }
    assert table == {1: (10, 4, 12), 2: (20, 4, 32), 3: (30, 0, 60)}


def test_strata_table_parabolic_for_contrast():
    fam = DagFamily(10, 3)
    table = {
        s.descriptor["redundant_columns"]: (s.m, s.orbit_dim, s.value)
        for s in enumerate_strata(fam, OrbitConvention.PARABOLIC)
    }
    assert table == {1: (10, 2, 16), 2: (20, 2, 36), 3: (30, 0, 60)}


def test_stratum_m_is_jn():
    for n in range(1, 6):
        for k in range(1, 4):
            fam = DagFamily(n, k)
            for stratum in enumerate_strata(fam, OrbitConvention.CENTRALIZER):
                j = stratum.descriptor["redundant_columns"]
                assert stratum.m == j * n
                assert negative_weight_dim(fam, stratum.representative) == j * n


def test_one_ps_redundant_shape():
    fam = DagFamily(5, 3)
    lam = one_ps_redundant(fam, 2)
    assert lam.gl_weights == ((-1, -1, 0),)
    assert lam.torus_weights == (-2,)
    with pytest.raises(DomainError):
        one_ps_redundant(fam, 0)
    with pytest.raises(DomainError):
        one_ps_redundant(fam, 4)


def test_status_full_rank():
    inst = make_instance([[1, 0, 5], [0, 1, 7], [1, 1, 0]])
    result = dag_status(inst)
    assert result.verdict is Verdict.STABLE
    assert result.evidence["rank"] == 2


def test_status_rank_deficient_mentions_normal_equations():
    inst = make_instance([[1, 2, 0], [2, 4, 1], [3, 6, 2]])
    result = dag_status(inst)
    assert result.verdict is Verdict.NOT_STABLE
    assert result.evidence["rank"] == 1
    assert "normal equations" in result.reason


def test_child_column_never_affects_verdict():
    base = [[1, 0], [0, 1], [1, 1]]
    for child in [(0, 0, 0), (9, -3, 7)]:
        rows = [row + [c] for row, c in zip(base, child)]
        assert dag_status(make_instance(rows)).verdict is Verdict.STABLE


def test_mle_exact_solution():
    inst = make_instance([[1, 0, 1], [0, 1, 2], [1, 1, 0]])
    beta = dag_solve_mle(inst)
    # normal equations: [[2, 1], [1, 2]] beta = (1, 2)
    assert beta == (Fraction(0), Fraction(1))


def test_mle_with_rational_entries():
    inst = make_instance(
        [
            [Fraction(1, 2), Fraction(0), Fraction(1)],
            [Fraction(0), Fraction(1, 3), Fraction(1)],
        ]
    )
    beta = dag_solve_mle(inst)
    assert beta == (Fraction(2), Fraction(3))


def test_mle_requires_stability():
    inst = make_instance([[1, 2, 0], [2, 4, 0], [0, 0, 1]])
    with pytest.raises(PreconditionError):
        dag_solve_mle(inst)


def test_stabilize_rank_deficient():
    inst = make_instance([[1, 1, 0], [1, 1, 0], [1, 1, 0]])
    fixed = dag_stabilize(inst, Fraction(1, 1000))
    assert dag_status(fixed).verdict is Verdict.STABLE
    # pivot column untouched
    assert fixed.parent_block().col(0) == inst.parent_block().col(0)
    assert fixed.child_column() == inst.child_column()


def test_stabilize_zero_matrix():
    inst = make_instance([[0, 0, 0], [0, 0, 0], [0, 0, 0]])
    fixed = dag_stabilize(inst, Fraction(1, 1000))
    assert dag_status(fixed).verdict is Verdict.STABLE


def test_stabilize_keeps_stable_input():
    inst = make_instance([[1, 0, 2], [0, 1, 3], [0, 0, 4]])
    assert dag_stabilize(inst, Fraction(1, 1000)) is inst


def test_stabilize_guards():
    inst = make_instance([[1, 1, 0], [1, 1, 0], [1, 1, 0]])
    with pytest.raises(DomainError):
        dag_stabilize(inst, 0)
    wide = make_instance([[1, 2, 3, 0]])  # n = 1 < k = 3
    with pytest.raises(DomainError, match="fewer samples than parents"):
        dag_stabilize(wide, Fraction(1, 1000))


def test_weight_decompose_first_column():
    fam = DagFamily(2, 3)
    lam = one_ps_redundant(fam, 1)
    inst = make_instance([[1, 2, 3, 4], [5, 6, 7, 8]])
    dec = weight_decompose(inst, lam)
    assert dec.negative_part.y.to_rows() == [[1, 0, 0, 0], [5, 0, 0, 0]]
    # child column sits in positive weight: torus acts with weight -(-1) = 1
    child_weights = {w for w, part in dec.components if any(part.child_column())}
    assert child_weights == {1}
    assert limit_exists(inst, lam) is False
    zeroed = make_instance([[0, 2, 3, 4], [0, 6, 7, 8]])
    assert limit_exists(zeroed, lam) is True


entry = st.integers(min_value=-5, max_value=5)


@st.composite
def dag_rows(draw):
    n = draw(st.integers(1, 4))
    k = draw(st.integers(1, 3))
    return [[draw(entry) for _ in range(k + 1)] for _ in range(n)]


@given(dag_rows())
@settings(max_examples=100, deadline=None)
def test_stabilized_output_is_always_stable(rows):
    inst = make_instance(rows)
    if inst.n < inst.k:
        return
    fixed = dag_stabilize(inst, Fraction(1, 1000))
    assert dag_status(fixed).verdict is Verdict.STABLE


@given(dag_rows(), st.integers(1, 3))
@settings(max_examples=80, deadline=None)
def test_decomposition_components_sum_back(rows, j):
    inst = make_instance(rows)
    fam = inst.family()
    if j > fam.k:
        return
    dec = weight_decompose(inst, one_ps_redundant(fam, j))
    rebuilt = Matrix.zeros(inst.n, inst.k + 1)
    for _, part in dec.components:
        rebuilt = rebuilt + part.y
    assert rebuilt.to_rows() == inst.y.to_rows()
    assert limit_exists(inst, one_ps_redundant(fam, j)) == dec.negative_is_zero()
