"""Stacking along paths and the Hamilton path solver"""

import logging

from ..config import resolve
from ..exceptions import (
    BudgetExceededError,
    CupStackError,
    InvalidPathError,
    NoHamiltonPathError,
    ParameterError,
)
from ..game.base import Move, MoveSequence, verify_sequence
from ..graphs.analysis import find_hamilton_path, is_hamilton_path

logger = logging.getLogger(__name__)


def check_path(g, p):
    """Raise InvalidPathError unless p lists distinct vertices of g joined by edges"""
    if not p:
        raise InvalidPathError("empty path")
    if len(set(p)) != len(p):
        raise InvalidPathError("path repeats a vertex")
    for v in p:
        if not 0 <= v < g.n:
            raise InvalidPathError("vertex {} is not in {}".format(v, g.describe()))
    for u, v in zip(p, p[1:]):
        if not g.has_edge(u, v):
            raise InvalidPathError("{} and {} are consecutive on the path but not adjacent".format(u, v))


def _stack_moves(rows, p, lo, hi, t):
    # Stack p[lo..hi] onto p[t]. Work from the end of the segment away from t: split
    # off the s = d(end, p[t]) vertices at that end, stack them onto the end vertex,
    # and hop the s cups onto p[t] once the rest of the segment is done.
    moves = []
    hops = []
    while lo < hi:
        if t == lo:
            s = rows[p[hi]][p[t]]
            moves.extend(_stack_moves(rows, p, hi - s + 1, hi, hi))
            hops.append(Move(p[hi], p[t], s))
            hi -= s
        else:
            s = rows[p[lo]][p[t]]
            moves.extend(_stack_moves(rows, p, lo, lo + s - 1, lo))
            hops.append(Move(p[lo], p[t], s))
            lo += s
    moves.extend(reversed(hops))
    return moves


def stack_path(g, d, p, t_index):
    """Stack the cups of a path onto one of its vertices

    The cups are assumed to sit one per vertex of p. Distances are those of the whole
    graph, so p need not be isometric. The sequence has exactly len(p) - 1 moves and
    touches only vertices of p.

    :param g: The graph containing p
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param d: Distances of g
    :type d: :class:`pycupstack.graphs.base.DistanceMatrix`
    :param p: The path as a vertex sequence
    :type p: sequence of int
    :param t_index: Position of the target vertex in p, counted from 0
    :type t_index: int
    :rtype: :class:`pycupstack.game.base.MoveSequence`
    """
    p = tuple(p)
    check_path(g, p)
    if not 0 <= t_index < len(p):
        raise ParameterError("target index {} is outside a path of {} vertices".format(t_index, len(p)))
    moves = _stack_moves(d.rows, p, 0, len(p) - 1, t_index)
    return MoveSequence(moves, plan={"method": "path", "path": list(p), "target": p[t_index]})


def canonical_hamilton_path(paths):
    """The boustrophedon Hamilton path of the grid P_1 x ... x P_p

    The first coordinate varies fastest: H(P_1) visits P_1, and H(P_1, ..., P_p) visits
    H' x_1, rev(H') x_2, H' x_3, ... where H' = H(P_1, ..., P_{p-1}) and x_1, x_2, ...
    are the vertices of P_p. Product vertices are coordinate tuples, 1-tuples for a
    single path.

    :param paths: The factor paths
    :type paths: sequence of sequences
    :rtype: list of tuple
    """
    paths = [tuple(p) for p in paths]
    if not paths or any(not p for p in paths):
        raise ParameterError("canonical Hamilton path needs at least one nonempty path")
    walk = [(v,) for v in paths[0]]
    for p in paths[1:]:
        extended = []
        for i, x in enumerate(p):
            segment = walk if i % 2 == 0 else walk[::-1]
            extended.extend(h + (x,) for h in segment)
        walk = extended
    return walk


def known_hamilton_path(g):
    """A Hamilton path read off the coordinate labels of a grid or hypercube, if g is one"""
    labels = g.labels
    if not labels or not all(isinstance(label, tuple) for label in labels):
        return None
    width = len(labels[0])
    if width == 0 or any(len(label) != width for label in labels):
        return None
    if not all(isinstance(c, int) for label in labels for c in label):
        return None
    dims = [max(label[j] for label in labels) + 1 for j in range(width)]
    index = {label: v for v, label in enumerate(labels)}
    try:
        walk = [index[c] for c in canonical_hamilton_path([range(length) for length in dims])]
    except KeyError:
        return None
    if is_hamilton_path(g, walk):
        return tuple(walk)
    return None


def ensure_valid(g, t, seq):
    """Replay seq and fail loudly if a constructed solution is wrong"""
    verdict = verify_sequence(g, t, seq)
    if not verdict.valid:
        raise CupStackError(
            "constructed sequence for target {} on {} failed verification at move {}: {}".format(
                t, g.describe(), verdict.index, verdict.reason
            )
        )
    return seq


def solve_via_hamilton(g, t, path=None, config=None):
    """Stack every cup onto t along a Hamilton path

    :param g: The graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param t: Target vertex
    :type t: int
    :param path: A Hamilton path of g; found automatically when omitted
    :type path: sequence of int, optional
    :rtype: :class:`pycupstack.game.base.MoveSequence`
    :raises NoHamiltonPathError: if no Hamilton path is available
    """
    if not 0 <= t < g.n:
        raise ParameterError("target {} is not a vertex of {}".format(t, g.describe()))
    if path is None:
        path = known_hamilton_path(g)
    if path is None:
        try:
            path = find_hamilton_path(g, resolve(config))
        except BudgetExceededError as e:
            raise NoHamiltonPathError("Hamilton path search gave up: {}".format(e), proven_absent=False)
        if path is None:
            raise NoHamiltonPathError("{} has no Hamilton path".format(g.describe()), proven_absent=True)
    path = tuple(path)
    if not is_hamilton_path(g, path):
        raise InvalidPathError("the supplied path is not a Hamilton path of {}".format(g.describe()))
    seq = stack_path(g, g.distances(), path, path.index(t))
    seq.plan = {"method": "hamilton", "path": list(path), "target": t}
    logger.info("stacked %s onto %d along a Hamilton path", g.describe(), t)
    return ensure_valid(g, t, seq)
