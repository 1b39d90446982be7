from pycupstack.config import Config
from pycupstack.graphs import Graph, build_family
from pycupstack.game import Move, MoveSequence, verify_sequence
from pycupstack.solvers import solve_bipartite_paths, solve_power, solve_via_hamilton
from pycupstack.search import decide_stackable, decide_t_stackable, min_weight
from pycupstack.certificates import prove_strongly_nonstackable
