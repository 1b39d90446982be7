from .paths import canonical_hamilton_path, solve_via_hamilton, stack_path
from .chunking import Chunking, chunk_partition, stack_chunked_path
from .bipartite import (
    HypothesisReport,
    biwheel_path_partition,
    check_bipartite_hypotheses,
    solve_bipartite_paths,
)
from .powers import check_power_hypotheses, min_power_for_stackability, solve_power
from .trees import check_tree_power_hypotheses, solve_tree_power, tree_path_partition
