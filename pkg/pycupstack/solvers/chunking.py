"""Splitting paths into proper chunks and stacking them onto an outside target

A chunk of a sequence is a run of consecutive entries; it is proper when one of its
entries equals its length. If the entries are the distances of path vertices to a
target t, a proper chunk is a subpath whose cups can be stacked onto the vertex at
distance equal to the chunk length and then moved onto t in one hop.
"""

import logging

from ..exceptions import ParameterError
from ..game.base import Move, MoveSequence
from .paths import check_path, stack_path

logger = logging.getLogger(__name__)


class Chunking(object):
    """A partition of a sequence into proper chunks

    :var chunks: (start, end, anchor) per chunk, 0-based inclusive indices in sequence
        order, with ``sequence[anchor] == end - start + 1``
    :vartype chunks: list of tuple
    """

    def __init__(self, chunks):
        self.chunks = [tuple(c) for c in chunks]

    def __len__(self):
        return len(self.chunks)

    def __iter__(self):
        return iter(self.chunks)

    def lengths(self):
        return [end - start + 1 for start, end, _ in self.chunks]

    def is_valid_for(self, xs):
        """True if the chunks cover xs consecutively and are all proper"""
        position = 0
        for start, end, anchor in self.chunks:
            if start != position or end < start or not start <= anchor <= end:
                return False
            if xs[anchor] != end - start + 1:
                return False
            position = end + 1
        return position == len(xs)

    def __eq__(self, other):
        return isinstance(other, Chunking) and self.chunks == other.chunks

    def __repr__(self):
        return "Chunking({})".format(self.chunks)


def chunk_partition(xs):
    """Partition xs into proper chunks

    Position i is a cut if xs[:i] can be partitioned into proper chunks; cuts are found
    left to right. The partition is read back from the end, always taking the shortest
    feasible last chunk and, within a chunk, the first entry equal to its length as
    the anchor.

    :param xs: The sequence
    :type xs: sequence of int
    :return: The chunking, or None if xs cannot be partitioned
    :rtype: :class:`Chunking` or None
    """
    xs = list(xs)
    if not xs:
        raise ParameterError("cannot chunk an empty sequence")
    n = len(xs)
    longest = max(xs)
    cut = [False] * (n + 1)
    cut[0] = True
    for i in range(1, n + 1):
        for length in range(1, min(i, longest) + 1):
            if cut[i - length] and length in xs[i - length:i]:
                cut[i] = True
                break
    if not cut[n]:
        return None
    chunks = []
    i = n
    while i > 0:
        for length in range(1, min(i, longest) + 1):
            start = i - length
            if cut[start] and length in xs[start:i]:
                chunks.append((start, i - 1, start + xs[start:i].index(length)))
                i = start
                break
    chunks.reverse()
    return Chunking(chunks)


def stack_chunked_path(g, d, p, t):
    """Stack the cups of a path onto a vertex outside it, one proper chunk at a time

    The distances of the path vertices to t are chunked with the path as given and, if
    that fails, reversed. Each chunk is stacked onto its anchor along the path and the
    stack then hops onto t. The cups of p must sit one per vertex and t must hold at
    least one cup when the moves are played.

    :param g: The graph
    :param d: Distances of g
    :param p: The path
    :type p: sequence of int
    :param t: Target vertex, not on p
    :type t: int
    :return: The moves, or None if neither orientation can be chunked
    :rtype: :class:`pycupstack.game.base.MoveSequence` or None
    """
    p = tuple(p)
    check_path(g, p)
    if t in p:
        raise ParameterError("target {} lies on the path".format(t))
    rows = d.rows
    for orientation, walk in (("forward", p), ("reversed", p[::-1])):
        xs = [rows[v][t] for v in walk]
        chunking = chunk_partition(xs)
        if chunking is None:
            logger.debug("distance sequence %s has no proper chunking (%s)", xs, orientation)
            continue
        moves = []
        for start, end, anchor in chunking:
            piece = walk[start:end + 1]
            moves.extend(stack_path(g, d, piece, anchor - start))
            moves.append(Move(walk[anchor], t, end - start + 1))
        plan = {
            "method": "chunked-path",
            "path": list(walk),
            "orientation": orientation,
            "distances": xs,
            "chunks": [
                {"vertices": list(walk[start:end + 1]), "anchor": walk[anchor]}
                for start, end, anchor in chunking
            ],
        }
        return MoveSequence(moves, plan=plan)
    return None
