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

import networkx as nx
import numpy as np

from ..exceptions import (
    DisconnectedGraphError,
    InvalidPartitionError,
    ParameterError,
)

logger = logging.getLogger(__name__)

#: Distance recorded for a pair of vertices in different components
UNREACHABLE = -1


class Graph(object):
    """An immutable undirected simple graph on the vertices 0..n-1

    :param n: Number of vertices
    :type n: int
    :param edges: Iterable of vertex pairs
    :type edges: iterable
    :param labels: Optional display label per vertex (tuples for product graphs, sets for Kneser graphs)
    :type labels: sequence, optional
    :param name: Optional human readable name of the graph
    :type name: str, optional
    """

    def __init__(self, n, edges=(), labels=None, name=None):
        if n < 0:
            raise ParameterError("vertex count must be non-negative, got {}".format(n))
        neighbours = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError("edge ({}, {}) has a vertex outside 0..{}".format(u, v, n - 1))
            if u == v:
                raise ParameterError("self-loop at vertex {}".format(u))
            neighbours[u].add(v)
            neighbours[v].add(u)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ParameterError("expected {} labels, got {}".format(n, len(labels)))
        self._n = n
        self._adjacency = tuple(frozenset(nbrs) for nbrs in neighbours)
        self._edges = tuple(
            sorted((u, v) for u in range(n) for v in neighbours[u] if u < v)
        )
        self._labels = labels
        self._name = name
        self._distances = None
        self._distance_source = None
        self._nx = None
        self._masks = None

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return len(self._edges)

    @property
    def edges(self):
        """Edges as sorted pairs (u, v) with u < v, in lexicographic order"""
        return self._edges

    @property
    def adjacency(self):
        """Tuple of frozensets, the neighbourhood of every vertex"""
        return self._adjacency

    @property
    def labels(self):
        return self._labels

    @property
    def name(self):
        return self._name

    def label(self, v):
        if self._labels is None:
            return v
        return self._labels[v]

    def vertices(self):
        return range(self._n)

    def neighbors(self, v):
        return self._adjacency[v]

    def degree(self, v):
        return len(self._adjacency[v])

    def has_edge(self, u, v):
        return v in self._adjacency[u]

    @property
    def adjacency_masks(self):
        """Neighbourhoods as integer bit masks"""
        if self._masks is None:
            self._masks = tuple(
                sum(1 << w for w in nbrs) for nbrs in self._adjacency
            )
        return self._masks

    def to_networkx(self):
        """A frozen networkx view of this graph with the labels stored as the "label" node attribute

        :rtype: :class:`networkx.Graph`
        """
        if self._nx is None:
            graph = nx.Graph()
            for v in range(self._n):
                graph.add_node(v, label=self.label(v))
            graph.add_edges_from(self._edges)
            self._nx = nx.freeze(graph)
        return self._nx

    @classmethod
    def from_networkx(cls, graph, name=None):
        """Build a graph from a networkx graph, numbering vertices in sorted node order

        The original node keys become the labels.
        """
        try:
            nodes = sorted(graph.nodes())
        except TypeError:
            nodes = list(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in graph.edges()]
        return cls(len(nodes), edges, labels=nodes, name=name)

    def is_connected(self):
        if self._n == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def require_connected(self):
        """Raise DisconnectedGraphError unless the graph is connected and nonempty"""
        if not self.is_connected():
            raise DisconnectedGraphError(
                "{} is not a connected nonempty graph".format(self.describe())
            )

    def is_tree(self):
        return self._n > 0 and nx.is_tree(self.to_networkx())

    def distances(self):
        """All-pairs distances, computed once per graph

        :rtype: :class:`DistanceMatrix`
        """
        if self._distances is None:
            source = self._distance_source or all_pairs_distances
            self._distances = source(self)
        return self._distances

    def add_edges(self, edges, name=None):
        """Return a new graph on the same vertex set with extra edges"""
        return Graph(self._n, list(self._edges) + list(edges), labels=self._labels, name=name)

    def is_subgraph_of(self, other):
        """True if other has the same vertex count and contains every edge of this graph"""
        return self._n == other.n and set(self._edges) <= set(other.edges)

    def describe(self):
        if self._name:
            return self._name
        return "graph(n={}, m={})".format(self._n, self.m)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __len__(self):
        return self._n

    def __repr__(self):
        return "<Graph {} n={} m={}>".format(self._name or "", self._n, self.m)


class DistanceMatrix(object):
    """All-pairs hop distances of a graph

    Pairs in different components hold :data:`UNREACHABLE`; use :meth:`distance`
    to get ``None`` for them instead of the sentinel.

    :param matrix: Square integer matrix
    :type matrix: numpy.ndarray
    """

    def __init__(self, matrix):
        matrix = np.asarray(matrix, dtype=np.int64)
        matrix.setflags(write=False)
        self._matrix = matrix
        self._rows = None
        self._shells = None

    @property
    def n(self):
        return self._matrix.shape[0]

    @property
    def dist(self):
        """Read-only numpy matrix of distances"""
        return self._matrix

    @property
    def rows(self):
        """The matrix as nested lists, for tight loops"""
        if self._rows is None:
            self._rows = self._matrix.tolist()
        return self._rows

    @property
    def connected(self):
        return self.n > 0 and not bool((self._matrix == UNREACHABLE).any())

    def distance(self, x, y):
        value = self.rows[x][y]
        return None if value == UNREACHABLE else value

    def __getitem__(self, key):
        x, y = key
        return self.rows[x][y]

    def eccentricity(self, x):
        """Largest distance from x, or None if some vertex is unreachable"""
        row = self._matrix[x]
        if (row == UNREACHABLE).any():
            return None
        return int(row.max())

    @property
    def diameter(self):
        if not self.connected:
            return None
        return int(self._matrix.max())

    def shells(self, x):
        """Vertices grouped by distance from x: ``shells(x)[r]`` lists the vertices at distance exactly r"""
        if self._shells is None:
            self._shells = [None] * self.n
        if self._shells[x] is None:
            row = self.rows[x]
            reach = [value for value in row if value != UNREACHABLE]
            grouped = [[] for _ in range(max(reach) + 1)]
            for y, value in enumerate(row):
                if value != UNREACHABLE:
                    grouped[value].append(y)
            self._shells[x] = tuple(tuple(group) for group in grouped)
        return self._shells[x]


def all_pairs_distances(g):
    """Breadth-first search from every vertex

    :param g: The graph
    :type g: :class:`Graph`
    :return: Exact hop distances, with UNREACHABLE between components
    :rtype: :class:`DistanceMatrix`
    """
    matrix = np.full((g.n, g.n), UNREACHABLE, dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, length in lengths.items():
            matrix[source, target] = length
    result = DistanceMatrix(matrix)
    if g.n and not result.connected:
        logger.debug("%s is disconnected", g.describe())
    return result


class Bipartition(object):
    """A proper 2-colouring of a connected bipartite graph

    :var side: Colour 0 or 1 per vertex, vertex 0 always has colour 0
    :vartype side: tuple
    :var delta: Absolute difference of the colour class sizes
    :vartype delta: int
    """

    def __init__(self, side):
        self.side = tuple(side)
        ones = sum(self.side)
        self.delta = abs(len(self.side) - 2 * ones)

    def classes(self):
        """The two colour classes as sorted tuples"""
        zero = tuple(v for v, s in enumerate(self.side) if s == 0)
        one = tuple(v for v, s in enumerate(self.side) if s == 1)
        return zero, one

    def __repr__(self):
        return "<Bipartition delta={}>".format(self.delta)


def bipartition(g):
    """Two-colour a connected graph

    :param g: A connected graph
    :type g: :class:`Graph`
    :return: The bipartition, or None if g has an odd cycle
    :rtype: :class:`Bipartition` or None
    """
    g.require_connected()
    graph = g.to_networkx()
    if not nx.is_bipartite(graph):
        return None
    colour = nx.bipartite.color(graph)
    return Bipartition(colour[v] ^ colour[0] for v in range(g.n))


class PathPartition(object):
    """A spanning set of vertex-disjoint paths

    :param paths: Vertex sequences
    :type paths: iterable
    """

    def __init__(self, paths):
        self.paths = tuple(tuple(p) for p in paths)

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __getitem__(self, j):
        return self.paths[j]

    def terminals(self, j):
        """The end vertices of path j"""
        path = self.paths[j]
        return path[0], path[-1]

    def index_of(self, v):
        for j, path in enumerate(self.paths):
            if v in path:
                return j
        raise InvalidPartitionError("vertex {} is not covered by the partition".format(v))

    def with_first(self, j):
        """The same partition with path j moved to the front"""
        rest = [p for i, p in enumerate(self.paths) if i != j]
        return PathPartition([self.paths[j]] + rest)

    def validate(self, g):
        """Raise InvalidPartitionError unless the paths partition g's vertices along edges of g"""
        seen = set()
        for path in self.paths:
            if not path:
                raise InvalidPartitionError("empty path in partition")
            for v in path:
                if not 0 <= v < g.n:
                    raise InvalidPartitionError("vertex {} is not in the graph".format(v))
                if v in seen:
                    raise InvalidPartitionError("vertex {} appears twice".format(v))
                seen.add(v)
            for u, v in zip(path, path[1:]):
                if not g.has_edge(u, v):
                    raise InvalidPartitionError("{} and {} are consecutive but not adjacent".format(u, v))
        if len(seen) != g.n:
            missing = sorted(set(range(g.n)) - seen)
            raise InvalidPartitionError("vertices {} are not covered".format(missing))

    def __repr__(self):
        return "<PathPartition sizes={}>".format([len(p) for p in self.paths])
