"""Oracles shared by the test modules

They are deliberately naive: exponential searches with no pruning and no memory,
usable only on tiny inputs.
"""

import functools
import itertools

import networkx as nx
import pytest

from pycupstack.game.base import apply_move, initial_state, legal_moves
from pycupstack.graphs import families
from pycupstack.graphs.base import Graph


def brute_force_chunkable(xs):
    """Whether xs splits into proper chunks, trying every first chunk"""
    xs = tuple(xs)

    @functools.lru_cache(maxsize=None)
    def splits(start):
        if start == len(xs):
            return True
        for end in range(start + 1, len(xs) + 1):
            if end - start in xs[start:end] and splits(end):
                return True
        return False

    return splits(0)


def naive_t_stackable(g, t):
    """Play every legal move sequence, without remembering anything"""
    d = g.distances()

    def play(state):
        if state.is_terminal(t):
            return True
        return any(play(apply_move(state, m, d)) for m in legal_moves(g, d, state))

    return play(initial_state(g))


def random_connected_graph(rng, n, p=0.2):
    """A random labelled tree on n vertices plus each other pair with probability p"""
    if n == 1:
        return Graph(1)
    tree = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    extra = [pair for pair in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, list(tree.edges()) + extra)


def has_hamilton_path(g):
    """Try every vertex order"""
    return any(
        all(g.has_edge(u, v) for u, v in zip(order, order[1:]))
        for order in itertools.permutations(range(g.n))
    )


def unit_step_sequences(length, low=1, high=4):
    """Every sequence of the given length with values in [low, high] changing by 1 at each step"""
    for first in range(low, high + 1):
        for steps in itertools.product((-1, 1), repeat=length - 1):
            xs = [first]
            for step in steps:
                xs.append(xs[-1] + step)
            if all(low <= x <= high for x in xs):
                yield tuple(xs)


@pytest.fixture
def k24():
    return families.complete_bipartite(2, 4)


@pytest.fixture
def cactus_k2():
    return families.cactus(families.complete(2), 5)


@pytest.fixture
def spiky_small():
    return families.spiky(2, [3, 3])
