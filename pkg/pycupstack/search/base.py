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


import csv
import json
import logging
from enum import Enum

from ..game.io import sequence_to_data

logger = logging.getLogger(__name__)


class Status(Enum):
    """Outcome of a search for one target"""

    STACKABLE = "stackable"
    NOT_STACKABLE = "not"
    UNKNOWN = "unknown"


class Classification(Enum):
    """Outcome of a search over all targets"""

    STACKABLE = "stackable"
    NON_STACKABLE = "non-stackable"
    STRONGLY_NON_STACKABLE = "strongly non-stackable"
    UNKNOWN = "unknown"


class TargetVerdict(object):
    """The search result for a single target

    :var target: The target vertex
    :vartype target: int
    :var status: The verdict
    :vartype status: :class:`Status`
    :var witness: A verified winning sequence when the target is stackable
    :vartype witness: :class:`pycupstack.game.base.MoveSequence` or None
    :var explored: Number of distinct states expanded
    :vartype explored: int
    :var memo_hits: Number of times a known failed state was reached again
    :vartype memo_hits: int
    :var mu: Least total weight of a winning sequence, when computed
    :vartype mu: int or None
    """

    def __init__(self, target, status, witness=None, explored=0, memo_hits=0, mu=None):
        self.target = target
        self.status = status
        self.witness = witness
        self.explored = explored
        self.memo_hits = memo_hits
        self.mu = mu

    @property
    def stackable(self):
        return self.status is Status.STACKABLE

    def to_data(self, witness_path=None):
        return {
            "target": self.target,
            "status": self.status.value,
            "mu": self.mu,
            "witness": witness_path,
        }

    def __repr__(self):
        return "<TargetVerdict target={} status={}>".format(self.target, self.status.value)


class SearchResult(object):
    """Verdicts for every target of a graph

    :param graph: The graph searched
    :type graph: :class:`pycupstack.graphs.base.Graph`
    :param verdicts: One verdict per target, in target order
    :type verdicts: list of :class:`TargetVerdict`
    """

    def __init__(self, graph, verdicts):
        self.graph = graph
        self.verdicts = list(verdicts)

    def __iter__(self):
        return iter(self.verdicts)

    def __len__(self):
        return len(self.verdicts)

    def __getitem__(self, t):
        for verdict in self.verdicts:
            if verdict.target == t:
                return verdict
        raise KeyError(t)

    @property
    def stackable(self):
        """Status per target"""
        return {v.target: v.status for v in self.verdicts}

    @property
    def witness(self):
        """Witness per stackable target"""
        return {v.target: v.witness for v in self.verdicts if v.witness is not None}

    @property
    def explored(self):
        return sum(v.explored for v in self.verdicts)

    @property
    def memo_hits(self):
        return sum(v.memo_hits for v in self.verdicts)

    @property
    def classification(self):
        """Stackable and strongly non-stackable need a definitive verdict for every target"""
        statuses = [v.status for v in self.verdicts]
        if statuses and all(s is Status.STACKABLE for s in statuses):
            return Classification.STACKABLE
        if statuses and all(s is Status.NOT_STACKABLE for s in statuses):
            return Classification.STRONGLY_NON_STACKABLE
        if any(s is Status.NOT_STACKABLE for s in statuses):
            return Classification.NON_STACKABLE
        return Classification.UNKNOWN

    def to_data(self, graph_path=None, witness_paths=None):
        """The result JSON document

        :param graph_path: Where the graph was read from
        :type graph_path: str, optional
        :param witness_paths: Where each target's witness was written
        :type witness_paths: dict, optional
        """
        witness_paths = witness_paths or {}
        return {
            "graph": graph_path,
            "classification": self.classification.value,
            "verdicts": [v.to_data(witness_paths.get(v.target)) for v in self.verdicts],
        }

    def __repr__(self):
        return "<SearchResult {} {}>".format(self.graph.describe(), self.classification.value)


class WeightTable(object):
    """Least weights of winning sequences per target

    :var mu: Least total weight per target
    :vartype mu: dict
    :var witness: A winning sequence of least weight per target
    :vartype witness: dict
    """

    def __init__(self, graph, mu, witness):
        self.graph = graph
        self.mu = dict(mu)
        self.witness = dict(witness)

    def values(self):
        """The weights in target order"""
        return [self.mu[t] for t in sorted(self.mu)]

    def to_data(self, graph_path=None, witness_paths=None):
        witness_paths = witness_paths or {}
        return {
            "graph": graph_path,
            "verdicts": [
                {"target": t, "status": "stackable", "mu": self.mu[t], "witness": witness_paths.get(t)}
                for t in sorted(self.mu)
            ],
        }

    def witness_data(self):
        return {str(t): sequence_to_data(seq) for t, seq in sorted(self.witness.items())}

    def __repr__(self):
        return "<WeightTable {} mu={}>".format(self.graph.describe(), self.values())


def write_weight_csv(tables, destination):
    """Write one row per table: the order of the graph followed by its weights"""
    with open(destination, "w", newline="") as f:
        writer = csv.writer(f)
        for table in tables:
            writer.writerow([table.graph.n] + table.values())


def write_result(data, destination):
    with open(destination, "w") as f:
        json.dump(data, f, indent=2)
        f.write("\n")
    logger.debug("wrote %s", destination)
