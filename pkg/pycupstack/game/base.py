# BSD 3 - Clause License

# Copyright(c) 2026, The pycupstack authors
# All rights reserved.

# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:

# 1. Redistributions of source code must retain the above copyright notice, this
# list of conditions and the following disclaimer.

# 2. Redistributions in binary form must reproduce the above copyright notice,
# this list of conditions and the following disclaimer in the documentation
# and / or other materials provided with the distribution.

# 3. Neither the name of the copyright holder nor the names of its
# contributors may be used to endorse or promote products derived from
# this software without specific prior written permission.

# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES(INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
#         SERVICES
#         LOSS OF USE, DATA, OR PROFITS
#         OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT(INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

import logging
from collections import namedtuple

from ..exceptions import IllegalMoveError, IllegalMoveReason, ParameterError

logger = logging.getLogger(__name__)


class GameState(object):
    """Cup counts per vertex

    :param cups: Non-negative count per vertex
    :type cups: iterable of int
    """

    __slots__ = ("cups", "total")

    def __init__(self, cups):
        self.cups = tuple(int(c) for c in cups)
        if any(c < 0 for c in self.cups):
            raise ParameterError("cup counts must be non-negative: {}".format(self.cups))
        self.total = sum(self.cups)

    @property
    def occupied(self):
        """Number of vertices holding at least one cup"""
        return sum(1 for c in self.cups if c)

    def is_terminal(self, t):
        """True if every cup is on t"""
        return self.total > 0 and self.cups[t] == self.total

    def __getitem__(self, v):
        return self.cups[v]

    def __len__(self):
        return len(self.cups)

    def __eq__(self, other):
        return isinstance(other, GameState) and self.cups == other.cups

    def __hash__(self):
        return hash(self.cups)

    def __repr__(self):
        return "GameState({})".format(self.cups)


class Move(namedtuple("Move", ["source", "target", "cups"])):
    """Move all ``cups`` cups from ``source`` onto ``target``

    Moves order lexicographically by (source, target, cups).
    """

    __slots__ = ()

    def __new__(cls, source, target, cups):
        if source == target:
            raise ParameterError("a move needs distinct vertices, got {} twice".format(source))
        if cups < 1:
            raise ParameterError("a move carries at least one cup, got {}".format(cups))
        return super().__new__(cls, int(source), int(target), int(cups))

    @classmethod
    def unchecked(cls, source, target, cups):
        """A move built without the shape checks, for replaying records read from files

        :func:`verify_sequence` rejects such a move at its index instead.
        """
        return super(Move, cls).__new__(cls, int(source), int(target), int(cups))

    def __str__(self):
        return "{}->{} ({})".format(self.source, self.target, self.cups)

    def to_dict(self):
        return {"from": self.source, "to": self.target, "cups": self.cups}


class MoveSequence(object):
    """An ordered list of moves

    :param moves: The moves
    :type moves: iterable of :class:`Move`
    :param plan: Optional description of how the sequence was constructed
    :type plan: dict, optional

    :var weight: Total number of cups moved
    :vartype weight: int
    """

    def __init__(self, moves=(), plan=None):
        self.moves = tuple(moves)
        self.weight = sum(m.cups for m in self.moves)
        self.plan = plan

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __getitem__(self, i):
        return self.moves[i]

    def __add__(self, other):
        return MoveSequence(self.moves + tuple(other))

    def __eq__(self, other):
        return isinstance(other, MoveSequence) and self.moves == other.moves

    def __hash__(self):
        return hash(self.moves)

    def __repr__(self):
        return "<MoveSequence moves={} weight={}>".format(len(self.moves), self.weight)


class Verdict(object):
    """Outcome of :func:`verify_sequence`

    :var valid: True if the sequence is a complete solution
    :vartype valid: bool
    :var index: Index of the first offending move, None if the failure is not tied to a move
    :vartype index: int
    :var reason: Why the sequence was rejected, empty when valid
    :vartype reason: str
    :var final_state: State after the last legal move
    :vartype final_state: :class:`GameState`
    """

    def __init__(self, valid, final_state, index=None, reason=""):
        self.valid = valid
        self.final_state = final_state
        self.index = index
        self.reason = reason

    def __bool__(self):
        return self.valid

    def __repr__(self):
        if self.valid:
            return "<Verdict valid>"
        return "<Verdict invalid at {}: {}>".format(self.index, self.reason)


def initial_state(g):
    """One cup on every vertex

    :rtype: :class:`GameState`
    """
    if g.n == 0:
        raise ParameterError("the game needs a nonempty graph")
    return GameState([1] * g.n)


def legal_moves(g, d, s):
    """Every legal move in state s, ordered by source then target

    A stack of r cups on x may move onto an occupied vertex y with d(x, y) = r.

    :param g: The graph
    :param d: Its distances
    :type d: :class:`pycupstack.graphs.base.DistanceMatrix`
    :param s: The state
    :type s: :class:`GameState`
    :rtype: list of :class:`Move`
    """
    cups = s.cups
    if len(cups) != g.n:
        raise ParameterError("state has {} entries for a graph on {} vertices".format(len(cups), g.n))
    moves = []
    for x, r in enumerate(cups):
        if not r:
            continue
        shells = d.shells(x)
        if r < len(shells):
            moves.extend(Move(x, y, r) for y in shells[r] if cups[y])
    return moves


def check_move(d, cups, m):
    """The rule clause m violates when played on the cup counts cups, or None if m is legal

    :rtype: :class:`pycupstack.exceptions.IllegalMoveReason` or None
    """
    n = len(cups)
    if not (0 <= m.source < n and 0 <= m.target < n):
        return IllegalMoveReason.UNKNOWN_VERTEX
    if m.source == m.target:
        return IllegalMoveReason.SAME_VERTEX
    if m.cups < 1:
        return IllegalMoveReason.EMPTY_MOVE
    if cups[m.source] != m.cups:
        return IllegalMoveReason.WRONG_STACK_SIZE
    if not cups[m.target]:
        return IllegalMoveReason.EMPTY_TARGET
    if d[m.source, m.target] != m.cups:
        return IllegalMoveReason.DISTANCE_MISMATCH
    return None


def _illegal(d, cups, m, reason):
    detail = ""
    if reason is IllegalMoveReason.WRONG_STACK_SIZE:
        detail = "vertex {} holds {} cups".format(m.source, cups[m.source])
    elif reason is IllegalMoveReason.DISTANCE_MISMATCH:
        detail = "distance is {}".format(d[m.source, m.target])
    return IllegalMoveError(m, reason, detail)


def apply_move(s, m, d):
    """Play m in state s

    :param s: The state
    :type s: :class:`GameState`
    :param m: The move
    :type m: :class:`Move`
    :param d: Distances of the graph being played on
    :type d: :class:`pycupstack.graphs.base.DistanceMatrix`
    :return: The new state
    :rtype: :class:`GameState`
    :raises IllegalMoveError: naming the violated clause
    """
    reason = check_move(d, s.cups, m)
    if reason is not None:
        raise _illegal(d, s.cups, m, reason)
    return GameState(apply_move_unchecked(s.cups, m))


def apply_move_unchecked(cups, m):
    """Play m on a tuple of cup counts without checking legality"""
    result = list(cups)
    result[m.target] += result[m.source]
    result[m.source] = 0
    return tuple(result)


def verify_sequence(g, t, seq):
    """Replay seq from the initial state and check that it stacks every cup on t

    :param g: The graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param t: The target vertex
    :type t: int
    :param seq: The moves
    :type seq: :class:`MoveSequence` or iterable of :class:`Move`
    :rtype: :class:`Verdict`
    """
    moves = list(seq)
    state = initial_state(g)
    if not 0 <= t < g.n:
        return Verdict(False, state, None, "target {} is not a vertex".format(t))
    d = g.distances()
    cups = list(state.cups)
    for i, m in enumerate(moves):
        reason = check_move(d, cups, m)
        if reason is not None:
            return Verdict(False, GameState(cups), i, str(_illegal(d, cups, m, reason)))
        cups = apply_move_unchecked(cups, m)
    state = GameState(cups)
    if not state.is_terminal(t):
        return Verdict(False, state, None, "{} cups end on the target, expected {}".format(state.cups[t], g.n))
    if len(moves) != g.n - 1:
        return Verdict(False, state, None, "{} moves, expected {}".format(len(moves), g.n - 1))
    return Verdict(True, state)
