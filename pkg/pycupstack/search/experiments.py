"""Searches over families of graphs: the small-graph census and edge chains"""

import logging

from ..config import resolve
from ..exceptions import BudgetExceededError, ParameterError
from ..graphs.analysis import enumerate_connected_graphs, find_hamilton_path
from ..graphs.base import Graph
from .stackability import is_stackable

logger = logging.getLogger(__name__)


class Census(object):
    """Stackable graphs without a Hamilton path, found by enumeration

    :var graphs: The graphs found, canonically numbered
    :vartype graphs: list of :class:`pycupstack.graphs.base.Graph`
    :var undecided: (graph, reason) pairs a budget prevented from being decided
    :vartype undecided: list of tuple
    """

    def __init__(self, graphs=(), undecided=()):
        self.graphs = list(graphs)
        self.undecided = list(undecided)

    def __iter__(self):
        return iter(self.graphs)

    def __len__(self):
        return len(self.graphs)

    def __getitem__(self, i):
        return self.graphs[i]

    def by_order(self):
        counts = {}
        for g in self.graphs:
            counts[g.n] = counts.get(g.n, 0) + 1
        return counts


def census_stackable_nonhamiltonian(max_n, config=None):
    """Every connected stackable graph on at most max_n vertices with no Hamilton path

    :param max_n: Largest order, at most the enumeration budget
    :type max_n: int
    :rtype: :class:`Census`
    """
    config = resolve(config)
    if max_n > config.enumeration_budget:
        raise BudgetExceededError(
            "census up to {} vertices exceeds the enumeration budget of {}".format(max_n, config.enumeration_budget),
            config.enumeration_budget,
            max_n,
        )
    census = Census()
    for n in range(1, max_n + 1):
        for g in enumerate_connected_graphs(n, config):
            try:
                if find_hamilton_path(g, config) is not None:
                    continue
            except BudgetExceededError as e:
                census.undecided.append((g, str(e)))
                continue
            verdict = is_stackable(g, config)
            if verdict is None:
                census.undecided.append((g, "state budget exhausted"))
            elif verdict:
                logger.info("%s is stackable without a Hamilton path", g.describe())
                census.graphs.append(g)
    logger.info("census up to %d vertices: %s", max_n, census.by_order())
    return census


def find_alternating_chain(g_base, g_super, length, config=None):
    """Add edges of g_super to g_base one at a time, flipping stackability each time

    Edge orders are searched depth first with candidate edges in sorted order; edge
    sets known to lead nowhere are remembered, as is the verdict for every graph met.
    A graph whose verdict a budget prevented is treated as a dead end.

    :param g_base: The starting graph
    :type g_base: :class:`pycupstack.graphs.base.Graph`
    :param g_super: A graph on the same vertices containing every edge of g_base
    :type g_super: :class:`pycupstack.graphs.base.Graph`
    :param length: Number of edges to add
    :type length: int
    :return: The edges in the order they are added, or None if no chain exists
    :rtype: list of tuple or None
    """
    if g_base.n != g_super.n or not g_base.is_subgraph_of(g_super):
        raise ParameterError("{} is not a spanning subgraph of {}".format(g_base.describe(), g_super.describe()))
    if length < 0:
        raise ParameterError("chain length must be non-negative, got {}".format(length))
    if length == 0:
        return []
    config = resolve(config)
    candidates = sorted(set(g_super.edges) - set(g_base.edges))
    verdicts = {}

    def stackable(edges):
        if edges not in verdicts:
            graph = Graph(g_base.n, edges, labels=g_base.labels)
            verdicts[edges] = is_stackable(graph, config)
        return verdicts[edges]

    start = frozenset(g_base.edges)
    status = stackable(start)
    if status is None:
        logger.warning("could not decide %s, no chain searched", g_base.describe())
        return None
    dead = set()
    chain = []

    def extend(edges, status):
        if len(chain) == length:
            return True
        if edges in dead:
            return False
        for e in candidates:
            if e in edges:
                continue
            following = edges | {e}
            flipped = stackable(following)
            if flipped is None or flipped == status:
                continue
            chain.append(e)
            if extend(following, flipped):
                return True
            chain.pop()
        dead.add(edges)
        return False

    if extend(start, status):
        logger.info("alternating chain found after deciding %d graphs", len(verdicts))
        return list(chain)
    logger.info("no alternating chain of length %d after deciding %d graphs", length, len(verdicts))
    return None
