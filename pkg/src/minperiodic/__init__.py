"""Minimum counts of isolated periodic points for 3-diffeomorphisms with
codimension-1 expanding attractors."""
from .model import (
    AttractorSpec,
    Bunch,
    ComponentSpec,
    InvalidSpecError,
    Side,
    SystemSpec,
    Violation,
    assemble,
    totals,
    validate,
)

__version__ = "0.1.0"
