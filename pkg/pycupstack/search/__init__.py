from .base import Classification, SearchResult, Status, TargetVerdict, WeightTable
from .stackability import (
    automorphism_orbits,
    decide_stackable,
    decide_t_stackable,
    is_stackable,
    random_playout,
)
from .weights import min_weight, weight_table
from .experiments import Census, census_stackable_nonhamiltonian, find_alternating_chain
