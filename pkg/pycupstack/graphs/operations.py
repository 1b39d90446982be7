"""Graph products, powers and subdivisions"""

import functools
import itertools
import logging

import numpy as np

from ..config import resolve
from ..exceptions import BudgetExceededError, ParameterError
from .base import UNREACHABLE, DistanceMatrix, Graph

logger = logging.getLogger(__name__)


def cartesian_product(g, h, name=None):
    """The Cartesian product of two graphs

    Vertex (v, w) gets index ``v * h.n + w`` and the label ``(g.label(v), h.label(w))``.
    (v, w) and (v', w') are adjacent when v = v' and ww' is an edge of h, or vv' is an
    edge of g and w = w'.

    :param g: First factor
    :type g: :class:`Graph`
    :param h: Second factor
    :type h: :class:`Graph`
    :rtype: :class:`Graph`
    """
    if g.n == 0 or h.n == 0:
        raise ParameterError("cartesian product needs two nonempty graphs")
    size = h.n
    edges = []
    for v in range(g.n):
        for w, w2 in h.edges:
            edges.append((v * size + w, v * size + w2))
    for v, v2 in g.edges:
        for w in range(size):
            edges.append((v * size + w, v2 * size + w))
    labels = [(g.label(v), h.label(w)) for v in range(g.n) for w in range(size)]
    if name is None and g.name and h.name:
        name = "{} x {}".format(g.name, h.name)
    return Graph(g.n * size, edges, labels=labels, name=name)


def power_index(coordinates, base_order):
    """Index of a vertex of G^r from its coordinates, the first coordinate being most significant"""
    index = 0
    for c in coordinates:
        index = index * base_order + c
    return index


def power_coordinates(index, base_order, r):
    """Inverse of :func:`power_index`"""
    coordinates = []
    for _ in range(r):
        index, c = divmod(index, base_order)
        coordinates.append(c)
    return tuple(reversed(coordinates))


def graph_power(g, r, config=None, name=None):
    """The r-fold Cartesian product of g with itself

    Vertices are numbered by :func:`power_index` and labelled with the tuple of base labels.

    :param g: Base graph
    :type g: :class:`Graph`
    :param r: The power, at least 1
    :type r: int
    :param config: Supplies the vertex budget
    :type config: :class:`pycupstack.config.Config`, optional
    :rtype: :class:`Graph`
    """
    config = resolve(config)
    if r < 1:
        raise ParameterError("power must be at least 1, got {}".format(r))
    if g.n == 0:
        raise ParameterError("cannot take the power of an empty graph")
    order = g.n ** r
    if order > config.vertex_budget:
        raise BudgetExceededError(
            "{}^{} would have {} vertices, budget is {}".format(g.describe(), r, order, config.vertex_budget),
            config.vertex_budget,
            order,
        )
    weights = [g.n ** (r - 1 - j) for j in range(r)]
    edges = []
    labels = []
    for index, coordinates in enumerate(itertools.product(range(g.n), repeat=r)):
        labels.append(tuple(g.label(c) for c in coordinates))
        for j, c in enumerate(coordinates):
            for w in g.neighbors(c):
                if w > c:
                    edges.append((index, index + (w - c) * weights[j]))
    if name is None and g.name:
        name = "{}^{}".format(g.name, r)
    logger.debug("built power with %d vertices and %d edges", order, len(edges))
    power = Graph(order, edges, labels=labels, name=name)
    if g.is_connected():
        power._distance_source = functools.partial(_distances_from_base, g, r)
    return power


def subdivide(g, s, name=None):
    """Replace every edge by a path of length s

    The original vertices keep their indices. The s-1 new vertices of the k-th edge (u, v)
    in sorted edge order get the indices ``n + k*(s-1) + i`` for i = 0..s-2, running from
    u towards v, with the label ``(u, v, i + 1)``.

    :param g: The graph to subdivide
    :type g: :class:`Graph`
    :param s: Subdivision factor, at least 1
    :type s: int
    :rtype: :class:`Graph`
    """
    if s < 1:
        raise ParameterError("subdivision factor must be at least 1, got {}".format(s))
    labels = [g.label(v) for v in range(g.n)]
    edges = []
    next_vertex = g.n
    for u, v in g.edges:
        chain = [u]
        for i in range(s - 1):
            chain.append(next_vertex)
            labels.append((u, v, i + 1))
            next_vertex += 1
        chain.append(v)
        edges.extend(zip(chain, chain[1:]))
    if name is None and g.name:
        name = "{} subdivided {}".format(g.name, s) if s > 1 else g.name
    return Graph(next_vertex, edges, labels=labels, name=name)


def power_distances(d, r):
    """Distances of G^r from those of a connected G

    The distance between two vertices of the power is the sum of the distances of
    their coordinates. Vertices are numbered as by :func:`power_index`.

    :param d: Distances of G
    :type d: :class:`pycupstack.graphs.base.DistanceMatrix`
    :param r: The power
    :type r: int
    :rtype: :class:`pycupstack.graphs.base.DistanceMatrix`
    """
    base = d.dist
    if (base == UNREACHABLE).any():
        raise ParameterError("distances of a power need a connected base graph")
    n = base.shape[0]
    matrix = base
    for _ in range(r - 1):
        m = matrix.shape[0]
        matrix = (matrix[:, None, :, None] + base[None, :, None, :]).reshape(m * n, m * n)
    return DistanceMatrix(np.ascontiguousarray(matrix))


def _distances_from_base(g, r, _power):
    return power_distances(g.distances(), r)
