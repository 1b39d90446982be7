"""Path partitions of trees and stacking of tree powers"""

import logging

from ..exceptions import NotATreeError, ParameterError
from ..graphs.analysis import tree_spread_and_diameter
from ..graphs.base import PathPartition
from ..graphs.operations import subdivide
from .powers import solve_power

logger = logging.getLogger(__name__)

TREE_SPREAD_THRESHOLD = 72


def _rooted(t, root):
    parent = {root: None}
    depth = {root: 0}
    children = {v: set() for v in range(t.n)}
    frontier = [root]
    while frontier:
        following = []
        for v in frontier:
            for w in sorted(t.neighbors(v)):
                if w not in parent:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    children[v].add(w)
                    following.append(w)
        frontier = following
    return parent, depth, children


def tree_path_partition(t):
    """Partition a tree into paths of at least half its spread vertices each

    The tree is rooted at its smallest leaf. While the remaining tree is not a path,
    take the remaining leaf x farthest from the root (smallest index on ties), the
    deepest vertex y on the way from the root to x with more than one remaining
    child, and remove the path from y's child towards x down to x. The remaining
    path is the last part, listed from the root.

    :param t: A tree with at least 2 vertices
    :type t: :class:`pycupstack.graphs.base.Graph`
    :rtype: :class:`pycupstack.graphs.base.PathPartition`
    """
    if not t.is_tree():
        raise NotATreeError("{} is not a tree".format(t.describe()))
    if t.n < 2:
        raise ParameterError("a tree path partition needs at least 2 vertices")
    root = min(v for v in range(t.n) if t.degree(v) == 1)
    parent, depth, children = _rooted(t, root)
    remaining = set(range(t.n))
    paths = []
    while True:
        leaves = [v for v in remaining if v != root and not children[v]]
        x = min(leaves, key=lambda v: (-depth[v], v))
        branch = x
        while parent[branch] is not None and len(children[parent[branch]]) < 2:
            branch = parent[branch]
        if parent[branch] is None:
            walk = [x]
            while parent[walk[-1]] is not None:
                walk.append(parent[walk[-1]])
            paths.append(tuple(reversed(walk)))
            break
        peeled = [x]
        while peeled[-1] != branch:
            peeled.append(parent[peeled[-1]])
        paths.append(tuple(reversed(peeled)))
        children[parent[branch]].discard(branch)
        remaining.difference_update(peeled)
    logger.debug("partitioned %s into paths of sizes %s", t.describe(), [len(p) for p in paths])
    return PathPartition(paths)


class TreePowerReport(object):
    """Whether the cube of a tree, or of one of its subdivisions, is known to be stackable

    :var spread: Smallest distance between two leaves
    :var diameter: Largest distance between two vertices
    :var applies: The cube of the tree itself is covered
    :var min_subdivision: Smallest s for which the cube of the s-subdivision is covered
    :var subdivision: The subdivision factor asked about, if any
    :var applies_subdivided: The cube of the s-subdivision is covered, if s was given
    """

    def __init__(self, spread, diameter, subdivision=None):
        self.spread = spread
        self.diameter = diameter
        self.applies = _cube_covered(spread, diameter)
        if spread > 0:
            self.min_subdivision = max(1, -(-TREE_SPREAD_THRESHOLD * diameter * diameter // spread ** 3))
        else:
            self.min_subdivision = None
        self.subdivision = subdivision
        if subdivision is None:
            self.applies_subdivided = None
        else:
            self.applies_subdivided = _cube_covered(subdivision * spread, subdivision * diameter)

    def to_dict(self):
        return {
            "spread": self.spread,
            "diameter": self.diameter,
            "applies": self.applies,
            "min_subdivision": self.min_subdivision,
            "subdivision": self.subdivision,
            "applies_subdivided": self.applies_subdivided,
        }

    def __repr__(self):
        return "<TreePowerReport spread={} diameter={} applies={}>".format(self.spread, self.diameter, self.applies)


def _cube_covered(k, d):
    # d <= k^(3/2) / sqrt(72), squared to stay in integers
    return k >= TREE_SPREAD_THRESHOLD and TREE_SPREAD_THRESHOLD * d * d <= k ** 3


def check_tree_power_hypotheses(t, s=None):
    """Check whether the cube of t, or of its s-subdivision, is covered by the spread bound

    :param t: A tree
    :type t: :class:`pycupstack.graphs.base.Graph`
    :param s: Subdivision factor to evaluate
    :type s: int, optional
    :rtype: :class:`TreePowerReport`
    """
    if s is not None and s < 1:
        raise ParameterError("subdivision factor must be at least 1, got {}".format(s))
    spread, diameter = tree_spread_and_diameter(t)
    return TreePowerReport(spread, diameter, s)


def solve_tree_power(tree, r, t, config=None, s=1):
    """Stack the r-th power of a tree, or of its s-subdivision, onto t

    :param tree: The tree
    :type tree: :class:`pycupstack.graphs.base.Graph`
    :param r: The power
    :type r: int
    :param t: Target vertex of the power, index or coordinate tuple
    :param s: Subdivide every edge into s edges first
    :type s: int
    :rtype: :class:`pycupstack.game.base.MoveSequence`
    """
    if s > 1:
        tree = subdivide(tree, s)
    partition = tree_path_partition(tree)
    report = check_tree_power_hypotheses(tree)
    logger.info("tree with spread %d and diameter %d, cube covered: %s", report.spread, report.diameter, report.applies)
    seq = solve_power(tree, r, partition, t, config)
    seq.plan["tree"] = report.to_dict()
    return seq
