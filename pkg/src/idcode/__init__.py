"""Exact identifying codes, domination numbers and corona-product formulas for small graphs."""

from .classifier import Classification, CodeWitness, classify
from .corona import CoronaLayout, corona, corona_identifiable
from .edgelist import parse_edge_list, serialize_edge_list
from .errors import (
    CapacityError,
    EnumerationOverflow,
    GraphFormatError,
    IdcodeError,
    InfeasibleError,
    NotIdentifiableError,
    PreconditionError,
)
from .families import GraphSpec, make_family, parse_spec
from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    covers,
    is_identifiable,
    is_identifying_code,
    members,
    separates,
    vset,
)
from .solver import (
    ConstraintSystem,
    SolveResult,
    enumerate_solutions,
    extend_separating,
    min_dominating_set,
    min_hitting_set,
    min_identifying_code,
    min_separating_set,
    min_total_dominating_set,
)
from .theorem import CoronaResult, corona_bounds, gamma_id_corona

__all__ = [name for name in dir() if not name.startswith("_")]
