"""Generators for the graph families studied with the cup stacking game

Every generator numbers its vertices deterministically; the numbering is part of
its documented behaviour so that targets and path partitions can be written down
by index. Use :func:`build_family` to construct a family by name.
"""

import itertools
import logging
import re

import networkx as nx

from ..exceptions import ParameterError
from .base import Graph

logger = logging.getLogger(__name__)


def _require(condition, message):
    if not condition:
        raise ParameterError(message)


def path(n):
    """P_n, the path 0 - 1 - ... - (n-1)"""
    _require(n >= 1, "path needs n >= 1, got n={}".format(n))
    return Graph.from_networkx(nx.path_graph(n), name="P_{}".format(n))


def cycle(n):
    """C_n on 0..n-1 in cyclic order"""
    _require(n >= 3, "cycle needs n >= 3, got n={}".format(n))
    return Graph.from_networkx(nx.cycle_graph(n), name="C_{}".format(n))


def complete(n):
    _require(n >= 1, "complete graph needs n >= 1, got n={}".format(n))
    return Graph.from_networkx(nx.complete_graph(n), name="K_{}".format(n))


def complete_bipartite(a, b):
    """K_{a,b}: vertices 0..a-1 form the first class, a..a+b-1 the second"""
    _require(a >= 1 and b >= 1, "complete bipartite graph needs a, b >= 1, got a={}, b={}".format(a, b))
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b), name="K_{{{},{}}}".format(a, b))


def star(n):
    """K_{1,n} with centre 0 and leaves 1..n"""
    _require(n >= 1, "star needs n >= 1 leaves, got n={}".format(n))
    return Graph.from_networkx(nx.star_graph(n), name="K_{{1,{}}}".format(n))


def grid(dims):
    """The product of paths P_{l_1} x ... x P_{l_d}

    Vertices are labelled with their coordinate tuples and numbered in lexicographic
    order of the coordinates.

    :param dims: Path orders l_1, ..., l_d
    :type dims: sequence of int
    """
    dims = tuple(int(length) for length in dims)
    _require(len(dims) >= 1, "grid needs at least one dimension")
    _require(all(length >= 1 for length in dims), "grid dimensions must be >= 1, got {}".format(dims))
    coordinates = list(itertools.product(*[range(length) for length in dims]))
    index = {c: i for i, c in enumerate(coordinates)}
    edges = []
    for c in coordinates:
        for j in range(len(dims)):
            if c[j] + 1 < dims[j]:
                other = c[:j] + (c[j] + 1,) + c[j + 1:]
                edges.append((index[c], index[other]))
    name = " x ".join("P_{}".format(length) for length in dims)
    return Graph(len(coordinates), edges, labels=coordinates, name=name)


def hypercube(d):
    """Q_d as the grid of d copies of P_2, labelled by 0/1 tuples"""
    _require(d >= 1, "hypercube needs d >= 1, got d={}".format(d))
    g = grid([2] * d)
    return Graph(g.n, g.edges, labels=g.labels, name="Q_{}".format(d))


def johnson(n, k, s):
    """The generalized Johnson graph J(n, k, s)

    Vertices are the k-subsets of {1..n} in lexicographic order, labelled by sorted
    tuples; two subsets are adjacent when they share exactly s elements.
    """
    _require(k >= 1, "Johnson graph needs k >= 1, got k={}".format(k))
    _require(0 <= s < k, "Johnson graph needs 0 <= s < k, got s={}, k={}".format(s, k))
    bound = 2 * k - s + (1 if s == 0 else 0)
    _require(n >= bound, "Johnson graph J(n,{},{}) needs n >= {}, got n={}".format(k, s, bound, n))
    subsets = list(itertools.combinations(range(1, n + 1), k))
    members = [frozenset(subset) for subset in subsets]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(subsets)), 2)
        if len(members[i] & members[j]) == s
    ]
    return Graph(len(subsets), edges, labels=subsets, name="J({},{},{})".format(n, k, s))


def kneser(n, k):
    """K(n, k): k-subsets of {1..n}, adjacent when disjoint"""
    _require(k >= 1, "Kneser graph needs k >= 1, got k={}".format(k))
    _require(n >= 2 * k + 1, "Kneser graph K(n,{}) needs n >= 2k+1 = {}, got n={}".format(k, 2 * k + 1, n))
    g = johnson(n, k, 0)
    return Graph(g.n, g.edges, labels=g.labels, name="K({},{})".format(n, k))


def petersen():
    return kneser(5, 2)


def biwheel(l, removed=()):
    """The biwheel W_{l,I}

    The hub c is vertex 0, x_i is vertex i and y_i is vertex l+i for i = 1..l. The
    edges are c x_i, x_i y_i and y_i x_{i+1} (indices modulo l); the spokes x_i y_i
    with i in ``removed`` are left out.

    :param l: Number of x vertices, at least 2
    :type l: int
    :param removed: The index set I, a subset of 1..l
    :type removed: iterable of int
    """
    removed = frozenset(int(i) for i in removed)
    _require(l >= 2, "biwheel needs l >= 2, got l={}".format(l))
    _require(all(1 <= i <= l for i in removed), "biwheel removed indices must lie in 1..{}, got {}".format(l, sorted(removed)))
    edges = []
    for i in range(1, l + 1):
        edges.append((0, i))
        if i not in removed:
            edges.append((i, l + i))
        edges.append((l + i, i % l + 1))
    labels = ["c"] + ["x{}".format(i) for i in range(1, l + 1)] + ["y{}".format(i) for i in range(1, l + 1)]
    if removed:
        name = "W_{{{},{{{}}}}}".format(l, ",".join(str(i) for i in sorted(removed)))
    else:
        name = "W_{}".format(l)
    return Graph(2 * l + 1, edges, labels=labels, name=name)


def _attach_pendants(base, counts, name):
    edges = list(base.edges)
    labels = [base.label(v) for v in range(base.n)]
    next_vertex = base.n
    for v, count in enumerate(counts):
        for j in range(count):
            edges.append((v, next_vertex))
            labels.append(("pendant", v, j))
            next_vertex += 1
    return Graph(next_vertex, edges, labels=labels, name=name)


def cactus(base, c):
    """The c-cactus of base: c pendant edges attached to every vertex

    Base vertices keep their indices; the pendants of vertex v are
    ``base.n + v*c + j`` for j = 0..c-1.
    """
    _require(base.n >= 1, "cactus needs a nonempty base graph")
    _require(c >= 1, "cactus needs c >= 1, got c={}".format(c))
    return _attach_pendants(base, [c] * base.n, "cactus({}, {})".format(base.describe(), c))


def spiky(clique, groups):
    """A clique with groups of pendant edges

    The clique occupies 0..clique-1; ``groups[v]`` pendants are attached to clique vertex
    v, numbered consecutively after the clique in vertex order. At least two groups must
    be nonempty and every nonempty group has at least three pendants.

    :param clique: Clique order, at least 2
    :type clique: int
    :param groups: Pendant counts for the first len(groups) clique vertices
    :type groups: sequence of int
    """
    groups = [int(count) for count in groups]
    _require(clique >= 2, "spiky clique needs a clique of order >= 2, got {}".format(clique))
    _require(len(groups) <= clique, "spiky clique has {} groups for {} clique vertices".format(len(groups), clique))
    nonempty = [count for count in groups if count]
    _require(len(nonempty) >= 2, "spiky clique needs pendant groups on at least two clique vertices")
    _require(all(count >= 3 for count in nonempty), "spiky clique groups need at least three pendants, got {}".format(groups))
    counts = groups + [0] * (clique - len(groups))
    return _attach_pendants(
        complete(clique), counts, "spiky(K_{}, {})".format(clique, "+".join(str(c) for c in nonempty))
    )


def double_star(a, b):
    """Two adjacent centres 0 and 1 carrying a and b pendant vertices"""
    _require(a >= 0 and b >= 0, "double star needs non-negative pendant counts")
    return _attach_pendants(path(2), [a, b], "double_star({},{})".format(a, b))


def f_graph(n):
    """F_n: the path 0 - ... - (n-3) with two pendant vertices n-2 and n-1 on vertex n-3"""
    _require(n >= 3, "F_n needs n >= 3, got n={}".format(n))
    base = path(n - 2)
    counts = [0] * (n - 3) + [2]
    return _attach_pendants(base, counts, "F_{}".format(n))


def spider(legs, length):
    """A centre 0 with ``legs`` paths of ``length`` vertices each

    Leg i (from 0) occupies ``1 + i*length`` .. ``(i+1)*length``, ordered away from the centre.
    """
    _require(legs >= 1 and length >= 1, "spider needs legs >= 1 and length >= 1")
    edges = []
    for i in range(legs):
        previous = 0
        for j in range(length):
            v = 1 + i * length + j
            edges.append((previous, v))
            previous = v
    return Graph(1 + legs * length, edges, name="spider({},{})".format(legs, length))


def mindeg_gadget(base, c, m=None):
    """Glue a copy of K_{c,m} onto every vertex of base

    Each base vertex v becomes one vertex of the c-side of its own K_{c,m}; the other
    c-1 c-side vertices and the m m-side vertices are new. For m >= c the minimum
    degree is c. When m is omitted it is the smallest value for which the m-side
    vertices form an independent set certificate for every target:
    (n-1)m > (D-1)nc, where n, d are the order and diameter of base and D is the
    diameter of the result, d + 2 for c = 1 and d + 4 otherwise.

    New vertices of base vertex v are numbered consecutively after all earlier
    blocks: first its c-1 c-side vertices, then its m m-side vertices.
    """
    _require(base.n >= 2, "minimum degree gadget needs a base graph with at least 2 vertices")
    _require(c >= 1, "minimum degree gadget needs c >= 1, got c={}".format(c))
    base.require_connected()
    if m is None:
        n, d = base.n, base.distances().diameter
        reach = d + 1 if c == 1 else d + 3
        m = max(c, reach * n * c // (n - 1) + 1)
    _require(m >= 1, "minimum degree gadget needs m >= 1, got m={}".format(m))
    edges = list(base.edges)
    labels = [base.label(v) for v in range(base.n)]
    next_vertex = base.n
    for v in range(base.n):
        small_side = [v]
        for j in range(c - 1):
            small_side.append(next_vertex)
            labels.append(("side", v, j))
            next_vertex += 1
        for j in range(m):
            for u in small_side:
                edges.append((u, next_vertex))
            labels.append(("spike", v, j))
            next_vertex += 1
    return Graph(next_vertex, edges, labels=labels, name="mindeg({}, {}, {})".format(base.describe(), c, m))


def connectivity_gadget(c):
    """K_{c,c} with a K_{c,5c} glued onto each class by its c-side

    The K_{c,c} classes are A = 0..c-1 and B = c..2c-1. The 5c new vertices attached
    to A follow, then the 5c new vertices attached to B. The graph is c-connected.
    """
    _require(c >= 1, "connectivity gadget needs c >= 1, got c={}".format(c))
    side_a = list(range(c))
    side_b = list(range(c, 2 * c))
    edges = [(a, b) for a in side_a for b in side_b]
    next_vertex = 2 * c
    for side in (side_a, side_b):
        for _ in range(5 * c):
            edges.extend((u, next_vertex) for u in side)
            next_vertex += 1
    return Graph(next_vertex, edges, name="connectivity_gadget({})".format(c))


def strong_nonmono_pair():
    """The 17-vertex graphs G and H with G a spanning subgraph of H

    H is the clique on 0..10 with the pendants 11, 12, 13 on vertex 0 and 14, 15, 16
    on vertex 10. G has the same pendants but the clique replaced by the path
    0 - 1 - ... - 10.

    :return: (G, H)
    :rtype: tuple
    """
    h = spiky(11, [3] + [0] * 9 + [3])
    pendants = [e for e in h.edges if e[1] >= 11]
    g = Graph(17, list(zip(range(10), range(1, 11))) + pendants, labels=h.labels, name="G_17")
    h = Graph(h.n, h.edges, labels=h.labels, name="H_17")
    return g, h


def bipartite_closure(g, name=None):
    """Add every edge between the two colour classes of a connected bipartite graph"""
    from .base import bipartition

    parts = bipartition(g)
    _require(parts is not None, "{} is not bipartite".format(g.describe()))
    zero, one = parts.classes()
    edges = [(min(u, v), max(u, v)) for u in zero for v in one]
    if name is None:
        name = "K_{{{},{}}}".format(*sorted((len(zero), len(one))))
    return Graph(g.n, edges, labels=g.labels, name=name)


def nonmono_pair(n):
    """F_n together with the complete bipartite graph on its colour classes

    For even n >= 10 the first graph is stackable and the second is
    K_{n/2-1, n/2+1}, which is not.

    :return: (F_n, its bipartite closure)
    :rtype: tuple
    """
    base = f_graph(n)
    return base, bipartite_closure(base)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete-bipartite": complete_bipartite,
    "star": star,
    "grid": grid,
    "hypercube": hypercube,
    "johnson": johnson,
    "kneser": kneser,
    "petersen": petersen,
    "biwheel": biwheel,
    "cactus": cactus,
    "spiky": spiky,
    "double-star": double_star,
    "f": f_graph,
    "spider": spider,
    "mindeg": mindeg_gadget,
    "connectivity": connectivity_gadget,
}


def build_family(name, **params):
    """Build a member of a named family

    :param name: A key of :data:`FAMILIES`, underscores and dashes are interchangeable
    :type name: str
    :param params: The generator's keyword arguments
    :return: The graph
    :rtype: :class:`pycupstack.graphs.base.Graph`
    """
    key = name.replace("_", "-").lower()
    if key not in FAMILIES:
        raise ParameterError("unknown graph family {!r}, expected one of {}".format(name, ", ".join(sorted(FAMILIES))))
    generator = FAMILIES[key]
    try:
        g = generator(**params)
    except TypeError as e:
        raise ParameterError("bad parameters for family {}: {}".format(key, e))
    logger.debug("built %s with %d vertices and %d edges", g.describe(), g.n, g.m)
    return g


_SHORTHAND = [
    (re.compile(r"^p(\d+)$"), lambda m: path(int(m.group(1)))),
    (re.compile(r"^c(\d+)$"), lambda m: cycle(int(m.group(1)))),
    (re.compile(r"^k(\d+)$"), lambda m: complete(int(m.group(1)))),
    (re.compile(r"^k(\d+),(\d+)$"), lambda m: complete_bipartite(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^q(\d+)$"), lambda m: hypercube(int(m.group(1)))),
    (re.compile(r"^f(\d+)$"), lambda m: f_graph(int(m.group(1)))),
    (re.compile(r"^petersen$"), lambda m: petersen()),
]


def from_shorthand(text):
    """Parse a short graph name: pN, cN, kN, kA,B, qD, fN or petersen

    :return: The graph, or None if text is not a shorthand
    """
    text = text.strip().lower()
    for pattern, build in _SHORTHAND:
        match = pattern.match(text)
        if match:
            return build(match)
    return None
