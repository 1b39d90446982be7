from .base import (
    UNREACHABLE,
    Bipartition,
    DistanceMatrix,
    Graph,
    PathPartition,
    all_pairs_distances,
    bipartition,
)
from .families import FAMILIES, build_family
from .operations import cartesian_product, graph_power, subdivide
from .analysis import (
    canonical_form,
    enumerate_connected_graphs,
    find_hamilton_path,
    tree_spread_and_diameter,
)
