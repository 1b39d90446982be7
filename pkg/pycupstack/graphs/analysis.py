"""Structural analysis: Hamilton paths, small graph enumeration and tree measures"""

import itertools
import logging
from array import array

from ..config import resolve
from ..exceptions import BudgetExceededError, NotATreeError, ParameterError
from .base import Graph, bipartition

logger = logging.getLogger(__name__)


def find_hamilton_path(g, config=None):
    """Find a Hamilton path by dynamic programming over vertex subsets

    For every subset S the table holds the set of vertices at which a path through
    exactly the vertices of S can end. The path returned is the one reconstructed
    from the lowest numbered end vertex, so the result is deterministic.

    :param g: The graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param config: Supplies the vertex budget for the search
    :type config: :class:`pycupstack.config.Config`, optional
    :return: The vertices of a Hamilton path, or None if g has none
    :rtype: tuple or None
    :raises BudgetExceededError: when g has more vertices than the Hamilton budget
    """
    config = resolve(config)
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return (0,)
    if not g.is_connected():
        return None
    parts = bipartition(g)
    if parts is not None and parts.delta >= 2:
        logger.debug("%s is bipartite with class difference %d, no Hamilton path", g.describe(), parts.delta)
        return None
    if n > config.hamilton_budget:
        raise BudgetExceededError(
            "Hamilton path search on {} vertices exceeds the budget of {}".format(n, config.hamilton_budget),
            config.hamilton_budget,
            n,
        )
    adj = g.adjacency_masks
    full = (1 << n) - 1
    ends = array("I" if n <= 32 else "Q", [0]) * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, full):
        current = ends[mask]
        while current:
            low = current & -current
            v = low.bit_length() - 1
            current ^= low
            extend = adj[v] & ~mask
            while extend:
                bit = extend & -extend
                extend ^= bit
                ends[mask | bit] |= bit
    if not ends[full]:
        return None
    last = ends[full] & -ends[full]
    v = last.bit_length() - 1
    mask = full
    result = [v]
    while mask != 1 << v:
        mask ^= 1 << v
        candidates = ends[mask] & adj[v]
        u = (candidates & -candidates).bit_length() - 1
        result.append(u)
        v = u
    result.reverse()
    return tuple(result)


def is_hamilton_path(g, vertices):
    """True if vertices visits every vertex of g exactly once along edges of g"""
    if len(vertices) != g.n or set(vertices) != set(range(g.n)):
        return False
    return all(g.has_edge(u, v) for u, v in zip(vertices, vertices[1:]))


def _pair_order(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _degree_respecting_orders(g):
    by_degree = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    groups = [by_degree[d] for d in sorted(by_degree, reverse=True)]
    for choice in itertools.product(*[itertools.permutations(group) for group in groups]):
        yield [v for part in choice for v in part]


def _canonical_order(g):
    pairs = _pair_order(g.n)
    best, best_order = None, None
    for order in _degree_respecting_orders(g):
        bits = "".join("1" if g.has_edge(order[i], order[j]) else "0" for i, j in pairs)
        if best is None or bits < best:
            best, best_order = bits, order
    return best or "", best_order or []


def canonical_form(g):
    """The lexicographically smallest upper triangle adjacency bit string

    The minimum is taken over the vertex orderings that list vertices by non-increasing
    degree. Isomorphic graphs get the same string and non-isomorphic graphs different ones.

    :rtype: str
    """
    return _canonical_order(g)[0]


def canonical_relabel(g, name=None):
    """A copy of g renumbered so that its adjacency bit string is the canonical form"""
    _, order = _canonical_order(g)
    position = {v: i for i, v in enumerate(order)}
    edges = [(position[u], position[v]) for u, v in g.edges]
    return Graph(g.n, edges, name=name or g.name)


def enumerate_connected_graphs(n, config=None):
    """One representative of every isomorphism class of connected graphs on n vertices

    Classes on n vertices are grown from the classes on n-1 vertices by adding a vertex
    joined to a nonempty subset; every connected graph has a vertex whose removal keeps
    it connected, so nothing is missed. Representatives are canonically numbered and
    yielded in increasing order of their canonical form.

    :param n: Vertex count, at most the enumeration budget
    :type n: int
    :rtype: iterator of :class:`pycupstack.graphs.base.Graph`
    """
    config = resolve(config)
    if n < 1:
        raise ParameterError("graph enumeration needs n >= 1, got {}".format(n))
    if n > config.enumeration_budget:
        raise BudgetExceededError(
            "graph enumeration on {} vertices exceeds the budget of {}".format(n, config.enumeration_budget),
            config.enumeration_budget,
            n,
        )
    level = {"": Graph(1, name="G1_0")}
    for order in range(2, n + 1):
        following = {}
        for form in sorted(level):
            g = level[form]
            for size in range(1, order):
                for neighbours in itertools.combinations(range(order - 1), size):
                    candidate = Graph(order, list(g.edges) + [(v, order - 1) for v in neighbours])
                    key = canonical_form(candidate)
                    if key not in following:
                        following[key] = candidate
        level = {}
        for i, key in enumerate(sorted(following)):
            level[key] = canonical_relabel(following[key], name="G{}_{}".format(order, i))
        logger.debug("%d connected graphs on %d vertices", len(level), order)
    for key in sorted(level):
        yield level[key]


def tree_spread_and_diameter(t):
    """The spread and the diameter of a tree

    The spread is the smallest distance between two distinct leaves, the diameter the
    largest. A single vertex has spread and diameter 0.

    :param t: A tree
    :type t: :class:`pycupstack.graphs.base.Graph`
    :return: (spread, diameter)
    :rtype: tuple
    """
    if not t.is_tree():
        raise NotATreeError("{} is not a tree".format(t.describe()))
    if t.n == 1:
        return 0, 0
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    rows = t.distances().rows
    lengths = [rows[x][y] for x, y in itertools.combinations(leaves, 2)]
    return min(lengths), max(lengths)
