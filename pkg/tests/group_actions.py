"""Group actions on instances, test-side only.

The package never needs to act on points, but the equivariance suite
does: control transforms by (A, B) -> (g A g^-1, g B), the DAG data
matrix by Y -> Y g for block-diagonal g = (h, t), and thin quiver values
by the vertex scalars.  Integer unimodular elements keep everything
exact; for GL_1 factors and the torus that means signs.
"""

from git_topo.families.control import ControlInstance
from git_topo.families.dag import DagInstance
from git_topo.families.quiver import ThinQuiverRep
from git_topo.linalg import Matrix, unimodular_pair
from git_topo.rng import CounterRng


def act_control(inst: ControlInstance, g: Matrix, g_inv: Matrix) -> ControlInstance:
    return ControlInstance(inst.n, inst.m, g @ inst.a @ g_inv, g @ inst.b)


def act_dag(inst: DagInstance, h: Matrix, torus_sign: int) -> DagInstance:
    mixed = inst.parent_block() @ h
    child = inst.child_column()
    rows = [
        list(mixed.row(i)) + [torus_sign * child[i]] for i in range(inst.n)
    ]
    return DagInstance(inst.n, inst.k, Matrix.from_rows(rows))


def act_quiver(rep: ThinQuiverRep, vertex_signs) -> ThinQuiverRep:
    # value on s -> t maps to t_target * value * t_source^-1; signs are
    # their own inverses
    values = tuple(
        v * (vertex_signs[t] * vertex_signs[s])
        for (s, t), v in zip(rep.spec.arrows, rep.values)
    )
    return ThinQuiverRep(rep.spec, values)


def random_signs(rng: CounterRng, count: int) -> tuple[int, ...]:
    return tuple(1 if rng.int_between(0, 1) else -1 for _ in range(count))


def unimodular_from_stream(rng: CounterRng, n: int):
    return unimodular_pair(rng, n)
