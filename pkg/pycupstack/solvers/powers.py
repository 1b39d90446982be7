"""Stacking Cartesian powers of bipartite graphs

A path partition of G induces a partition of G^r into grids, one per choice of a
path for every coordinate. The grid holding the target is stacked along its
canonical Hamilton path; every other grid is chunked along a canonical Hamilton path
whose innermost coordinate avoids the target.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor

from ..config import resolve
from ..exceptions import ChunkingError, NotBipartiteError, ParameterError
from ..game.base import MoveSequence
from ..graphs.base import PathPartition, bipartition
from ..graphs.operations import graph_power, power_coordinates, power_index
from .bipartite import HypothesisReport
from .chunking import stack_chunked_path
from .paths import canonical_hamilton_path, ensure_valid, stack_path

logger = logging.getLogger(__name__)


def min_power_for_stackability(k, d):
    """Smallest r >= 2 with k^r >= (d r)^2

    :param k: Lower bound on the number of vertices per path
    :type k: int
    :param d: Diameter of the base graph
    :type d: int
    :rtype: int
    """
    if k < 2 or d < 1:
        raise ParameterError("need k >= 2 and d >= 1, got k={} d={}".format(k, d))
    r = 2
    while k ** r < (d * r) ** 2:
        r += 1
    return r


def check_power_hypotheses(k, d, r, p=2):
    """Evaluate the sufficient conditions for stacking G^r from a path partition

    :param k: Fewest vertices on a path of the partition
    :param d: Diameter of G
    :param r: The power
    :param p: Number of paths in the partition
    :rtype: :class:`pycupstack.solvers.bipartite.HypothesisReport`
    """
    failures = []
    if p < 2:
        failures.append("partition has {} path, at least 2 are needed".format(p))
    if k < 2:
        failures.append("a path has {} vertex, at least 2 are needed".format(k))
    if r < 2:
        failures.append("power {} is below 2".format(r))
    if k ** r < (d * r) ** 2:
        failures.append("{}^{} = {} is below ({}*{})^2 = {}".format(k, r, k ** r, d, r, (d * r) ** 2))
    return HypothesisReport(failures, k=k, d=d, r=r, paths=p)


def power_grids(pp, r):
    """Index tuples of the grids of G^r, in lexicographic order"""
    return itertools.product(range(len(pp)), repeat=r)


def _resolve_target(t, n, r):
    if isinstance(t, tuple):
        if len(t) != r or any(not 0 <= c < n for c in t):
            raise ParameterError("{} is not a vertex of a power with r={} over {} vertices".format(t, r, n))
        return power_index(t, n), t
    if not 0 <= t < n ** r:
        raise ParameterError("target {} is outside 0..{}".format(t, n ** r - 1))
    return t, power_coordinates(t, n, r)


def _grid_walk(pp, grid, target, n, innermost=None):
    # Canonical Hamilton path of the grid as power vertex indices. The innermost
    # coordinate varies fastest; the other coordinate paths start away from the target.
    r = len(grid)
    paths = []
    for m, i in enumerate(grid):
        path = pp[i]
        if m != innermost and path[0] == target[m] and len(path) > 1:
            path = path[::-1]
        paths.append(path)
    order = list(range(r)) if innermost is None else [innermost] + [m for m in range(r) if m != innermost]
    walk = []
    for point in canonical_hamilton_path([paths[m] for m in order]):
        coordinates = [0] * r
        for position, m in enumerate(order):
            coordinates[m] = point[position]
        walk.append(power_index(coordinates, n))
    return walk


def _stack_grid(power, pp, grid, target, t, n):
    innermost = next(m for m, i in enumerate(grid) if target[m] not in pp[i])
    walk = _grid_walk(pp, grid, target, n, innermost)
    piece = stack_chunked_path(power, power.distances(), walk, t)
    if piece is None:
        raise ChunkingError("grid {} cannot be chunked towards {}".format(list(grid), t), where=list(grid))
    summary = {"grid": list(grid), "innermost": innermost, "orientation": piece.plan["orientation"],
               "anchors": [chunk["anchor"] for chunk in piece.plan["chunks"]]}
    return piece.moves, summary


_worker_state = {}


def _init_worker(power, pp, target, t, n):
    _worker_state.update(power=power, pp=pp, target=target, t=t, n=n)


def _stack_grid_in_worker(grid):
    s = _worker_state
    return _stack_grid(s["power"], s["pp"], grid, s["target"], s["t"], s["n"])


def solve_power(g, r, pp, t, config=None):
    """Stack every cup of G^r onto t

    :param g: A connected bipartite base graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param r: The power
    :type r: int
    :param pp: A path partition of g
    :type pp: :class:`pycupstack.graphs.base.PathPartition` or sequence of paths
    :param t: Target, a vertex index of G^r or its coordinate tuple
    :type t: int or tuple
    :param config: Supplies the vertex budget and the number of workers
    :type config: :class:`pycupstack.config.Config`, optional
    :return: A verified sequence on :func:`pycupstack.graphs.operations.graph_power` (g, r)
    :rtype: :class:`pycupstack.game.base.MoveSequence`
    :raises ChunkingError: if some grid cannot be chunked
    """
    config = resolve(config)
    if r < 1:
        raise ParameterError("power must be at least 1, got {}".format(r))
    if not isinstance(pp, PathPartition):
        pp = PathPartition(pp)
    if bipartition(g) is None:
        raise NotBipartiteError("{} is not bipartite".format(g.describe()))
    pp.validate(g)
    n = g.n
    t, target = _resolve_target(t, n, r)
    report = check_power_hypotheses(min(len(p) for p in pp), g.distances().diameter, r, len(pp))
    logger.info("stacking %s^%d onto %s (%s)", g.describe(), r, target, report.status)

    power = graph_power(g, r, config)
    d = power.distances()
    home = tuple(pp.index_of(c) for c in target)
    walk = _grid_walk(pp, home, target, n)
    moves = list(stack_path(power, d, walk, walk.index(t)))

    grids = [grid for grid in power_grids(pp, r) if grid != home]
    if config.workers > 1 and len(grids) > 1:
        with ProcessPoolExecutor(
            max_workers=config.workers, initializer=_init_worker, initargs=(power, pp, target, t, n)
        ) as executor:
            results = list(executor.map(_stack_grid_in_worker, grids))
    else:
        results = [_stack_grid(power, pp, grid, target, t, n) for grid in grids]
    summaries = []
    for grid_moves, summary in results:
        moves.extend(grid_moves)
        summaries.append(summary)

    plan = {
        "method": "power",
        "r": r,
        "target": t,
        "target_coordinates": list(target),
        "partition": [list(p) for p in pp],
        "hypotheses": report.to_dict(),
        "target_grid": list(home),
        "grids": summaries,
    }
    return ensure_valid(power, t, MoveSequence(moves, plan=plan))
