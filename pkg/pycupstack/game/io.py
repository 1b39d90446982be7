"""JSON form of move sequences

A sequence is a JSON array of objects ``{"from": int, "to": int, "cups": int}``. The
construction plan of a sequence, when present, is written to a separate sidecar file.
"""

import json
import os

from ..exceptions import FormatError
from .base import Move, MoveSequence


def sequence_to_data(seq):
    return [m.to_dict() for m in seq]


def sequence_from_data(data):
    if not isinstance(data, list):
        raise FormatError("a move sequence must be a JSON array")
    moves = []
    for i, item in enumerate(data):
        try:
            # self-moves and empty moves are kept for verify_sequence to reject
            moves.append(Move.unchecked(item["from"], item["to"], item["cups"]))
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError("move {} is malformed: {}".format(i, e))
    return MoveSequence(moves)


def dumps_sequence(seq):
    return json.dumps(sequence_to_data(seq))


def loads_sequence(text):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise FormatError("invalid JSON: {}".format(e))
    return sequence_from_data(data)


def write_sequence(seq, destination, plan_destination=None):
    """Write seq as JSON, and its plan to plan_destination if both are given"""
    with open(destination, "w") as f:
        f.write(dumps_sequence(seq))
        f.write("\n")
    if plan_destination is not None and seq.plan is not None:
        with open(plan_destination, "w") as f:
            json.dump(seq.plan, f, indent=2, sort_keys=True, default=str)
            f.write("\n")


def read_sequence(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source) as f:
            return loads_sequence(f.read())
    return loads_sequence(source.read())
