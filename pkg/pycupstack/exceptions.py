from enum import Enum


class CupStackError(Exception):
    """Base class for every error raised by pycupstack"""


class ParameterError(CupStackError, ValueError):
    """A parameter or input structure is outside the range an operation accepts."""


class DisconnectedGraphError(ParameterError):
    pass


class NotATreeError(ParameterError):
    pass


class NotBipartiteError(ParameterError):
    pass


class InvalidPathError(ParameterError):
    """A vertex sequence is not a path of the graph it is used with."""


class InvalidPartitionError(ParameterError):
    """A set of paths does not partition the vertex set of a graph."""


class FormatError(CupStackError, ValueError):
    """A graph, solution or certificate file could not be parsed."""


class BudgetExceededError(CupStackError):
    """A resource guard refused or stopped a computation.

    :param message: Human readable description
    :type message: str
    :param budget: The configured limit
    :type budget: int
    :param requested: The size that was asked for, if known
    :type requested: int, optional
    """

    def __init__(self, message, budget, requested=None):
        super().__init__(message)
        self.budget = budget
        self.requested = requested


class IllegalMoveReason(Enum):
    """Which clause of the move rule a move violates"""

    UNKNOWN_VERTEX = "unknown vertex"
    SAME_VERTEX = "source equals target"
    EMPTY_MOVE = "no cups moved"
    WRONG_STACK_SIZE = "wrong stack size"
    EMPTY_TARGET = "empty target"
    DISTANCE_MISMATCH = "distance mismatch"


class IllegalMoveError(CupStackError):
    """A move was applied to a state in which it is not legal.

    :var move: The offending move
    :var reason: The violated clause
    :vartype reason: :class:`IllegalMoveReason`
    """

    def __init__(self, move, reason, detail=""):
        message = "illegal move {}: {}".format(move, reason.value)
        if detail:
            message = "{} ({})".format(message, detail)
        super().__init__(message)
        self.move = move
        self.reason = reason


class NoHamiltonPathError(CupStackError):
    """No Hamilton path is available.

    :var proven_absent: True if the graph has no Hamilton path, False if the search budget prevented a decision
    :vartype proven_absent: bool
    """

    def __init__(self, message, proven_absent):
        super().__init__(message)
        self.proven_absent = proven_absent


class ChunkingError(CupStackError):
    """A path could not be split into proper chunks in either orientation."""

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class NotStackableError(CupStackError):
    pass
