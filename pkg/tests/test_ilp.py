import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minperiodic.ilp import (
    ComponentCase,
    ConstraintSystem,
    EmptyBoxError,
    InfeasibleError,
    LinearConstraint,
    PointCounts,
    audit,
    brute_force_min,
    build_constraints,
    component_solution,
    default_box,
    global_minimum,
    oracle_solver,
    solve_min,
)
from minperiodic.model import AttractorSpec, Bunch, ComponentSpec, Side, assemble
from minperiodic.realize import minimal_spec, nonorientable_spec
from minperiodic.regularize import regularize_component

from specgen import specs


def rc_plus(l2, orientable=True):
    return regularize_component(ComponentSpec("p", Side.PLUS, orientable, 0, l2), [1] * l2)


def rc_minus(l1, l2=0):
    return regularize_component(ComponentSpec("m", Side.MINUS, False, l1, l2), [1] * (l1 + l2))


def scan(cs, box):
    """Plain nested enumeration over the box, kept deliberately naive."""

    def clear(coeffs, rhs):
        den = math.lcm(*(v.denominator for v in (*coeffs, rhs)))
        return [int(v * den) for v in coeffs], int(rhs * den)

    eqs = [clear(e.coeffs, e.rhs) for e in cs.equalities]
    ges = [clear(g.coeffs, g.rhs) for g in cs.inequalities]
    obj, _ = clear(cs.objective, F(0))
    best = None
    for c in itertools.product(range(box + 1), repeat=4):
        if any(sum(a * v for a, v in zip(row, c)) != b for row, b in eqs):
            continue
        if any(sum(a * v for a, v in zip(row, c)) < b for row, b in ges):
            continue
        if any(c[i] % 2 for i in cs.parities):
            continue
        key = (sum(a * v for a, v in zip(obj, c)), c[3], c[2], c[1], c[0])
        if best is None or key < best[0]:
            best = (key, c)
    return None if best is None else PointCounts(*best[1])


def ineq(cs):
    return {c.name: (c.coeffs, c.rhs) for c in cs.inequalities}


# -- build_constraints ---------------------------------------------------------

def test_type1_system():
    cs = build_constraints(rc_plus(2))
    assert [e.name for e in cs.equalities] == ["lefschetz"]
    assert cs.equalities[0].coeffs == (-1, 1, -1, 1) and cs.equalities[0].rhs == 0
    assert ineq(cs) == {
        "connectivity": ((-1, 1, 0, 0), -1),
        "glued-sinks": ((1, 0, 0, 0), 2),
        "sources": ((0, 0, 0, 1), 1),
    }
    assert cs.parities == frozenset()


def test_type2_system():
    cs = build_constraints(rc_minus(2, 0))
    assert [e.rhs for e in cs.equalities] + [c.rhs for c in cs.inequalities] == [0, 2, 0, 2]
    assert ineq(cs)["saddle-skeleton"] == ((-1, 1, 0, 0), 0)
    assert cs.parities == frozenset({1, 2, 3})


def test_type1_non_orientable_system():
    cs = build_constraints(rc_plus(1, orientable=False))
    got = ineq(cs)
    assert got["index1-saddle"] == ((0, 1, 0, 0), 1)
    assert got["index2-saddle"] == ((0, 0, 1, 0), 1)
    assert "connectivity" in got


def test_exact_rationals_only():
    for rc in (rc_plus(3), rc_minus(4, 1), rc_plus(2, False)):
        cs = build_constraints(rc)
        for c in cs.equalities + cs.inequalities:
            assert all(isinstance(v, F) for v in (*c.coeffs, c.rhs))


def test_minus_descriptor_needs_even_l1():
    from minperiodic.regularize import RegularizedComponent

    odd = RegularizedComponent("m", True, 3, 3, 3, 0, False, (1, 1, 1))
    with pytest.raises(ValueError):
        build_constraints(odd)
    empty = RegularizedComponent("m", True, 2, 2, 0, 1, False, (1, 1))
    with pytest.raises(ValueError):
        build_constraints(empty)


# -- solve_min ------------------------------------------------------------------

def test_type1_example():
    counts = solve_min(build_constraints(rc_plus(2)))
    assert counts == (2, 1, 0, 1) and counts.total == 4


def test_type2_example():
    counts = solve_min(build_constraints(rc_minus(2, 1)))
    assert counts == (4, 4, 2, 2) and counts.total == 12


def test_type1_non_orientable_example():
    assert solve_min(build_constraints(rc_plus(1, False))).total == 4


def test_two_optima_in_non_orientable_case():
    # both optima listed for this case are feasible with the same total; tie-break picks fewer sources
    l2 = 3
    rc = rc_plus(l2, False)
    one_source = PointCounts(l2, l2, 1, 1)
    two_sources = PointCounts(l2, l2 - 1, 1, 2)
    assert audit(rc, one_source) == [] and audit(rc, two_sources) == []
    assert one_source.total == two_sources.total == 2 * l2 + 2
    assert solve_min(build_constraints(rc)) == one_source


def test_infeasible_system():
    cs = ConstraintSystem(
        inequalities=(
            LinearConstraint("at-least-one", (F(1), F(0), F(0), F(0)), F(1)),
            LinearConstraint("at-most-zero", (F(-1), F(0), F(0), F(0)), F(0)),
        )
    )
    with pytest.raises(InfeasibleError):
        solve_min(cs)


def test_parity_makes_lp_and_ilp_differ():
    # C1 >= 3 with C1 even forces C1 = 4
    cs = ConstraintSystem(
        inequalities=(LinearConstraint("c1", (F(0), F(1), F(0), F(0)), F(3)),), parities=frozenset({1})
    )
    assert solve_min(cs) == (0, 4, 0, 0)


def test_fractional_relaxation_needs_branching():
    # 2*C0 + 2*C1 >= 3 has LP optimum 3/2; integer optimum 2
    cs = ConstraintSystem(inequalities=(LinearConstraint("x", (F(2), F(2), F(0), F(0)), F(3)),))
    got = solve_min(cs)
    assert got == scan(cs, 4) == (2, 0, 0, 0)


# -- brute_force_min ---------------------------------------------------------------

def test_brute_force_type2_example():
    cs = build_constraints(rc_minus(2, 0))
    got = brute_force_min(cs, 20)
    assert got == scan(cs, 20) == (2, 2, 2, 2)
    assert cs.value(got) == 8


def test_brute_force_lefschetz_only():
    cs = ConstraintSystem(
        equalities=(LinearConstraint("lefschetz", (F(-1), F(1), F(-1), F(1)), F(0)),),
        inequalities=(
            LinearConstraint("sources", (F(0), F(0), F(0), F(1)), F(1)),
            LinearConstraint("sinks", (F(1), F(0), F(0), F(0)), F(0)),
        ),
    )
    expected = scan(cs, 5)
    assert expected == (1, 0, 0, 1)
    assert brute_force_min(cs, 5) == expected == solve_min(cs)


def test_brute_force_empty_box():
    cs = ConstraintSystem(
        inequalities=(
            LinearConstraint("a", (F(1), F(0), F(0), F(0)), F(1)),
            LinearConstraint("b", (F(-1), F(0), F(0), F(0)), F(0)),
        )
    )
    with pytest.raises(EmptyBoxError, match="empty box"):
        brute_force_min(cs, 10)


def test_brute_force_box_too_small():
    with pytest.raises(EmptyBoxError):
        brute_force_min(build_constraints(rc_plus(5)), 3)
    with pytest.raises(ValueError):
        brute_force_min(build_constraints(rc_plus(1)), 0)


coeff = st.integers(-3, 3).map(F)
vectors = st.tuples(coeff, coeff, coeff, coeff)


@given(
    eqs=st.lists(st.tuples(vectors, st.integers(-2, 4)), max_size=1),
    ges=st.lists(st.tuples(vectors, st.integers(-3, 4)), min_size=1, max_size=3),
    parities=st.frozensets(st.integers(0, 3)),
    objective=st.tuples(*[st.integers(1, 3).map(F)] * 4),
)
@settings(max_examples=80, deadline=None)
def test_random_systems_agree_with_naive_scan(eqs, ges, parities, objective):
    box = 4
    # keep the box honest: bound every variable so the box contains all optima
    bounds = tuple(
        LinearConstraint(f"ub{i}", tuple(F(-1) if j == i else F(0) for j in range(4)), F(-box)) for i in range(4)
    )
    cs = ConstraintSystem(
        equalities=tuple(LinearConstraint(f"e{i}", v, F(b)) for i, (v, b) in enumerate(eqs)),
        inequalities=tuple(LinearConstraint(f"g{i}", v, F(b)) for i, (v, b) in enumerate(ges)) + bounds,
        parities=parities,
        objective=objective,
    )
    expected = scan(cs, box)
    if expected is None:
        with pytest.raises(EmptyBoxError):
            brute_force_min(cs, box)
        with pytest.raises(InfeasibleError):
            solve_min(cs)
        return
    assert brute_force_min(cs, box) == expected
    assert solve_min(cs) == expected


# -- audit ---------------------------------------------------------------------

def test_audit_examples():
    assert audit(rc_minus(2, 0), (2, 2, 2, 2)) == []
    got = audit(rc_plus(1), (1, 0, 0, 0))
    assert "lefschetz" in got and "sources" in got
    assert audit(rc_minus(2, 0), (2, 3, 3, 2)) == ["even:C1", "even:C2"]
    assert audit(rc_plus(1), (-1, 0, 0, 1)) == ["nonnegative:C0", "lefschetz", "glued-sinks"]


def test_audit_type1_l2_5():
    rc = rc_plus(5)
    cs = build_constraints(rc)
    feasible = {c for c in itertools.product(range(8), repeat=4) if not cs.violations(c)}
    assert (5, 4, 0, 1) in feasible
    assert audit(rc, (5, 4, 0, 1)) == []


# -- component_solution / global_minimum -----------------------------------------------

def test_component_solutions():
    sol = component_solution(rc_plus(2))
    assert sol.isolated_for_f == 2 and sol.case is ComponentCase.PLUS_ORIENTABLE
    sol = component_solution(rc_minus(2, 1))
    assert sol.regular_total == 12 and sol.isolated_for_f == (12 - 4) // 2 == 4
    sol = component_solution(rc_plus(3, False))
    assert sol.isolated_for_f == 5 and sol.case is ComponentCase.PLUS_NONORIENTABLE


def test_global_minimum_examples():
    gm = global_minimum(minimal_spec(2, 3))
    assert gm.total == 6
    assert global_minimum(minimal_spec(0, 1)).total == 1


def test_nonorientable_spread_over_components():
    # one non-orientable and two orientable plus components, one 2-bunch each: 1 + 1 + (1 + 2)
    gm = global_minimum(nonorientable_spec(3))
    assert [s.isolated_for_f for s in gm.per_component] == [1, 1, 3]
    assert gm.total == 5


def test_nonorientable_single_component():
    bunches = [Bunch(f"b{i}", 2, "A", "N") for i in range(4)]
    spec = assemble(False, [AttractorSpec("A", True, tuple(b.id for b in bunches))], [("N", Side.PLUS, False)], bunches)
    assert global_minimum(spec).total == 4 + 2


def test_global_minimum_with_oracle():
    spec = minimal_spec(4, 2)
    assert global_minimum(spec, oracle_solver()) == global_minimum(spec)


# -- properties over the l1/l2 grid ----------------------------------------------------

GRID_L1 = range(2, 11, 2)
GRID_L2 = range(0, 11)


def test_closed_forms():
    for l2 in range(1, 11):
        c = solve_min(build_constraints(rc_plus(l2)))
        assert c == (l2, l2 - 1, 0, 1) and c.total == 2 * l2
        assert solve_min(build_constraints(rc_plus(l2, False))).total == 2 * l2 + 2
    for l1 in GRID_L1:
        for l2 in GRID_L2:
            c = solve_min(build_constraints(rc_minus(l1, l2)))
            assert c == (l1 + 2 * l2, 2 * l1 + 2 * l2 - 2, l1, 2)
            assert c.alternating_sum() == 0
            sol = component_solution(rc_minus(l1, l2))
            assert 2 * sol.isolated_for_f == 3 * l1 + 2 * l2


def test_monotone_in_l2():
    # one more 2-bunch adds one glued sink and one saddle upstairs; on a covered
    # component both appear twice
    for l2 in range(1, 10):
        a = component_solution(rc_plus(l2))
        b = component_solution(rc_plus(l2 + 1))
        assert b.regular_total == a.regular_total + 2
        assert b.isolated_for_f == a.isolated_for_f + 1
    for l1 in GRID_L1:
        for l2 in range(0, 10):
            a = component_solution(rc_minus(l1, l2))
            b = component_solution(rc_minus(l1, l2 + 1))
            assert b.regular_total == a.regular_total + 4
            assert b.isolated_for_f == a.isolated_for_f + 1


@given(
    st.sampled_from([("plus", l) for l in range(1, 8)] + [("twist", l) for l in range(1, 8)]
                    + [("minus", l1, l2) for l1 in (2, 4, 6) for l2 in range(0, 4)]),
    st.fractions(min_value=F(1, 7), max_value=F(10), max_denominator=7),
)
@settings(max_examples=60, deadline=None)
def test_objective_scaling_keeps_optimizer(shape, factor):
    rc = rc_minus(shape[1], shape[2]) if shape[0] == "minus" else rc_plus(shape[1], shape[0] == "plus")
    cs = build_constraints(rc)
    scaled = cs.with_objective([factor * v for v in cs.objective])
    assert solve_min(scaled) == solve_min(cs)


def test_oracle_equivalence_on_grid():
    rcs = [rc_plus(l2) for l2 in range(1, 8)] + [rc_plus(l2, False) for l2 in range(1, 8)]
    rcs += [rc_minus(l1, l2) for l1 in (2, 4) for l2 in range(0, 4)]
    for rc in rcs:
        cs = build_constraints(rc)
        assert brute_force_min(cs, default_box(rc)) == solve_min(cs)


@given(specs(realizable=False, max_k1=6, max_k2=6))
@settings(max_examples=40, deadline=None)
def test_orientable_bound_on_general_shapes(spec):
    gm = global_minimum(spec)
    k1 = sum(1 for b in spec.bunches if b.degree == 1)
    k2 = sum(1 for b in spec.bunches if b.degree == 2)
    assert 2 * gm.total == 3 * k1 + 2 * k2
    for sol in gm.per_component:
        assert sol.counts.alternating_sum() == 0
