"""Status verdicts must be constant along group orbits."""

from hypothesis import given, settings
from hypothesis import strategies as st

from git_topo.families.control import ControlInstance, control_status
from git_topo.families.dag import DagInstance, dag_status
from git_topo.families.quiver import QuiverSpec, ThinQuiverRep, quiver_thin_status
from git_topo.linalg import Matrix
from git_topo.rng import CounterRng

from group_actions import (
    act_control,
    act_dag,
    act_quiver,
    random_signs,
    unimodular_from_stream,
)

entry = st.integers(min_value=-6, max_value=6)


@st.composite
def control_instances(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(1, 3))
    a = Matrix.from_rows([[draw(entry) for _ in range(n)] for _ in range(n)])
    b = Matrix.from_rows([[draw(entry) for _ in range(m)] for _ in range(n)])
    return ControlInstance(n, m, a, b)


@given(control_instances(), st.integers(0, 2**32))
@settings(max_examples=80, deadline=None)
def test_control_status_is_orbit_constant(inst, seed):
    g, g_inv = unimodular_from_stream(CounterRng(seed, 10), inst.n)
    moved = act_control(inst, g, g_inv)
    before = control_status(inst)
    after = control_status(moved)
    assert before.verdict is after.verdict
    assert before.evidence["rank"] == after.evidence["rank"]


@st.composite
def dag_instances(draw):
    n = draw(st.integers(1, 5))
    k = draw(st.integers(1, 3))
    rows = [[draw(entry) for _ in range(k + 1)] for _ in range(n)]
    return DagInstance(n, k, Matrix.from_rows(rows))


@given(dag_instances(), st.integers(0, 2**32), st.sampled_from([1, -1]))
@settings(max_examples=80, deadline=None)
def test_dag_status_is_orbit_constant(inst, seed, sign):
    h, _ = unimodular_from_stream(CounterRng(seed, 11), inst.k)
    moved = act_dag(inst, h, sign)
    before = dag_status(inst)
    after = dag_status(moved)
    assert before.verdict is after.verdict
    assert before.evidence["rank"] == after.evidence["rank"]


@st.composite
def thin_reps(draw):
    dims = tuple(draw(st.lists(st.integers(0, 1), min_size=2, max_size=4)))
    if sum(dims) == 0:
        dims = (1,) + dims[1:]
    v = len(dims)
    arrows = tuple(
        (draw(st.integers(0, v - 1)), draw(st.integers(0, v - 1)))
        for _ in range(draw(st.integers(0, 4)))
    )
    theta = [0] * v
    for _ in range(draw(st.integers(0, 3))):
        i = draw(st.integers(0, v - 1))
        j = draw(st.integers(0, v - 1))
        c = draw(st.integers(-2, 2))
        theta[i] += c * dims[j]
        theta[j] -= c * dims[i]
    spec = QuiverSpec(v, arrows, dims, tuple(theta))
    values = [
        draw(entry)
        if spec.dim_vector[s] == 1 and spec.dim_vector[t] == 1
        else 0
        for s, t in arrows
    ]
    return ThinQuiverRep(spec, tuple(values))


@given(thin_reps(), st.integers(0, 2**32))
@settings(max_examples=80, deadline=None)
def test_quiver_status_is_orbit_constant(rep, seed):
    signs = random_signs(CounterRng(seed, 12), rep.spec.vertex_count)
    moved = act_quiver(rep, signs)
    if not rep.spec.support():
        return
    assert quiver_thin_status(rep).verdict is quiver_thin_status(moved).verdict
