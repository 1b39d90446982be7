"""Stacking bipartite graphs that split into long paths

One path of the partition holds the target and is stacked onto it directly. Every
other path is chunked by the distances of its vertices to the target and sent over
chunk by chunk. The construction is guaranteed to succeed when every other path has
at least diameter squared vertices and its end vertices are not at distance 2 or 4;
it is attempted regardless and only ever returns verified sequences.
"""

import logging

from ..exceptions import NotBipartiteError, ParameterError
from ..game.base import MoveSequence
from ..graphs.base import PathPartition, bipartition
from .chunking import stack_chunked_path
from .paths import ensure_valid, stack_path

logger = logging.getLogger(__name__)

GUARANTEED = "guaranteed"
BEST_EFFORT = "best-effort"


class HypothesisReport(object):
    """Which sufficient conditions of a construction hold

    :var failures: One message per violated condition
    :vartype failures: list of str
    :var details: Quantities the conditions were evaluated on
    :vartype details: dict
    """

    def __init__(self, failures=(), **details):
        self.failures = list(failures)
        self.details = details

    @property
    def holds(self):
        return not self.failures

    @property
    def status(self):
        return GUARANTEED if self.holds else BEST_EFFORT

    def __bool__(self):
        return self.holds

    def to_dict(self):
        data = {"status": self.status, "failures": list(self.failures)}
        data.update(self.details)
        return data

    def __repr__(self):
        return "<HypothesisReport {} failures={}>".format(self.status, len(self.failures))


def check_bipartite_hypotheses(g, pp, d=None):
    """Evaluate the sufficient conditions for the path partition solver

    The first path is taken to be the one holding the target. The conditions are at
    least two paths, and for every other path at least diameter squared vertices with
    ends not at distance 2 or 4.

    :param g: A connected bipartite graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param pp: The path partition, target path first
    :type pp: :class:`pycupstack.graphs.base.PathPartition`
    :param d: Distances of g, computed when omitted
    :rtype: :class:`HypothesisReport`
    """
    d = g.distances() if d is None else d
    diameter = d.diameter
    failures = []
    if len(pp) < 2:
        failures.append("partition has {} path, at least 2 are needed".format(len(pp)))
    ends = []
    for j in range(1, len(pp)):
        first, last = pp.terminals(j)
        gap = d[first, last]
        ends.append(gap)
        if len(pp[j]) < diameter ** 2:
            failures.append("path {} has {} vertices, fewer than {}".format(j, len(pp[j]), diameter ** 2))
        if gap in (2, 4):
            failures.append("ends of path {} are at distance {}".format(j, gap))
    return HypothesisReport(failures, diameter=diameter, sizes=[len(p) for p in pp], end_distances=ends)


def solve_bipartite_paths(g, pp, t):
    """Stack every cup of a bipartite graph onto t using a path partition

    :param g: A connected bipartite graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param pp: Paths covering every vertex exactly once
    :type pp: :class:`pycupstack.graphs.base.PathPartition` or sequence of paths
    :param t: Target vertex
    :type t: int
    :return: A verified sequence, or None if some path cannot be chunked
    :rtype: :class:`pycupstack.game.base.MoveSequence` or None
    """
    if not isinstance(pp, PathPartition):
        pp = PathPartition(pp)
    if not 0 <= t < g.n:
        raise ParameterError("target {} is not a vertex of {}".format(t, g.describe()))
    if bipartition(g) is None:
        raise NotBipartiteError("{} is not bipartite".format(g.describe()))
    pp.validate(g)
    pp = pp.with_first(pp.index_of(t))
    d = g.distances()
    report = check_bipartite_hypotheses(g, pp, d)
    if report.holds:
        logger.info("path partition of %s meets the sufficient conditions", g.describe())
    else:
        logger.info("path partition of %s is best-effort: %s", g.describe(), "; ".join(report.failures))

    head = pp[0]
    moves = list(stack_path(g, d, head, head.index(t)))
    pieces = []
    for j in range(1, len(pp)):
        piece = stack_chunked_path(g, d, pp[j], t)
        if piece is None:
            logger.info("path %d of %s cannot be chunked towards %d", j, g.describe(), t)
            return None
        moves.extend(piece)
        pieces.append(piece.plan)
    plan = {
        "method": "bipartite-paths",
        "target": t,
        "hypotheses": report.to_dict(),
        "target_path": list(head),
        "paths": pieces,
    }
    return ensure_valid(g, t, MoveSequence(moves, plan=plan))


def biwheel_path_partition(l, removed, t):
    """The path partition of the biwheel W_{l,I} used to stack it onto t

    The rim cycle x_1 y_1 x_2 y_2 ... splits at the removed spokes into arcs running
    from some y_i to some x_j. The hub is appended to the x end of the arc holding t,
    or to the first arc when t is the hub. Vertices are numbered as by
    :func:`pycupstack.graphs.families.biwheel`. Without removed spokes the rim is cut
    between y_l and x_1 and the hub put in front of x_1.

    :param l: Number of x vertices
    :type l: int
    :param removed: The removed spoke indices
    :type removed: iterable of int
    :param t: Target vertex
    :type t: int
    :rtype: :class:`pycupstack.graphs.base.PathPartition`
    """
    removed = sorted(set(int(i) for i in removed))
    if l < 2 or any(not 1 <= i <= l for i in removed):
        raise ParameterError("no biwheel W_{{{},{}}}".format(l, removed))
    if not 0 <= t <= 2 * l:
        raise ParameterError("target {} is not a vertex of a biwheel with l={}".format(t, l))
    if not removed:
        rim = [0]
        for i in range(1, l + 1):
            rim.extend((i, l + i))
        return PathPartition([rim])

    arcs = []
    for a, i in enumerate(removed):
        stop = removed[(a + 1) % len(removed)]
        arc = [l + i]
        j = i % l + 1
        while True:
            arc.append(j)
            if j == stop:
                break
            arc.append(l + j)
            j = j % l + 1
        arcs.append(arc)
    holder = 0 if t == 0 else next(a for a, arc in enumerate(arcs) if t in arc)
    arcs[holder].append(0)
    return PathPartition(arcs).with_first(holder)
