from fractions import Fraction

from hypothesis import given, strategies as st

from conftest import gambles, small_ints
from lexpolar.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, find_feasible, linprog_exact
from lexpolar.polyhedra import canonical_description, double_description


def test_linprog_small_cases():
    res = linprog_exact([-1, -1], A_ub=[[1, 2], [3, 1]], b_ub=[4, 6])
    assert res.status == OPTIMAL
    assert res.value == Fraction(-14, 5)
    assert res.x == (Fraction(8, 5), Fraction(6, 5))

    assert linprog_exact([1], A_eq=[[1]], b_eq=[-1]).status == INFEASIBLE
    assert linprog_exact([-1], A_ub=[[-1]], b_ub=[0]).status == UNBOUNDED
    res = linprog_exact([1], A_eq=[[1]], b_eq=[-2], free=[0])
    assert res.status == OPTIMAL and res.x == (-2,)


def test_linprog_redundant_equalities():
    res = linprog_exact([1, 2], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert res.status == OPTIMAL and res.x == (1, 0) and res.value == 1


def test_find_feasible_returns_a_point():
    x = find_feasible([[1, 1]], [1], [[1, -1]], [0], nvar=2)
    assert x is not None and x[0] == x[1] and 0 <= x[0] + x[1] <= 1
    assert find_feasible([[1, 1]], [-1], (), (), nvar=2) is None


def _inside(normals, x):
    return all(sum(a * b for a, b in zip(v, x)) >= 0 for v in normals)


def test_double_description_examples():
    d = double_description([(1, 0)], 2)
    assert canonical_description(d) == (((0, 1),), ((1, 0),))
    d = double_description([(1, 1), (1, -1)], 2)
    assert set(d.rays) == {(1, 1), (1, -1)} and not d.lineality
    d = double_description([(1, 0), (-1, 0), (0, 1), (0, -1)], 2)
    assert d.is_trivial()


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(gambles(n, small_ints), max_size=5))))
def test_double_description_generators_lie_in_the_cone(data):
    n, normals = data
    rows = [g.coords for g in normals]
    d = double_description(rows, n)
    for r in d.generators():
        assert _inside(rows, r)
    for l in d.lineality:
        assert all(sum(a * b for a, b in zip(v, l)) == 0 for v in rows)


@given(
    st.integers(1, 3).flatmap(
        lambda n: st.tuples(st.lists(gambles(n, small_ints), max_size=4), gambles(n, small_ints))
    )
)
def test_double_description_matches_lp_membership(data):
    normals, x = data
    n = x.dim
    rows = [g.coords for g in normals]
    gens = double_description(rows, n).generators()
    # x in cone(gens) decided by an LP in the generator weights
    if gens:
        A_eq = [[g[i] for g in gens] for i in range(n)]
        ok = find_feasible((), (), A_eq, list(x.coords), nvar=len(gens)) is not None
    else:
        ok = x.is_zero()
    assert ok == _inside(rows, x.coords)
