"""Point-count integer programs for regularized components."""
from .branch import solve_min
from .components import (
    Breakdown,
    ComponentSolution,
    GlobalMinimum,
    attribute,
    component_solution,
    default_box,
    global_minimum,
    oracle_solver,
)
from .constraints import (
    VARIABLES,
    ComponentCase,
    ConstraintSystem,
    LinearConstraint,
    PointCounts,
    audit,
    build_constraints,
    component_case,
)
from .oracle import EmptyBoxError, brute_force_min
from .simplex import InfeasibleError, SolverError, UnboundedError, linprog

__all__ = [
    "Breakdown",
    "ComponentCase",
    "ComponentSolution",
    "ConstraintSystem",
    "EmptyBoxError",
    "GlobalMinimum",
    "InfeasibleError",
    "LinearConstraint",
    "PointCounts",
    "SolverError",
    "UnboundedError",
    "VARIABLES",
    "attribute",
    "audit",
    "brute_force_min",
    "build_constraints",
    "component_case",
    "component_solution",
    "default_box",
    "global_minimum",
    "linprog",
    "oracle_solver",
    "solve_min",
]
