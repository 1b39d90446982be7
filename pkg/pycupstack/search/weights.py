"""Winning sequences of least total weight

The weight of a sequence is the total number of cups moved. Uniform-cost search over
the states finds the least weight for a target together with a sequence attaining it.
"""

import heapq
import logging
from concurrent.futures import ProcessPoolExecutor

from ..config import resolve
from ..exceptions import BudgetExceededError, CupStackError, NotStackableError, ParameterError
from ..game.base import Move, MoveSequence, verify_sequence
from .base import WeightTable

logger = logging.getLogger(__name__)


def min_weight(g, t, config=None, budget=None):
    """The least weight of a winning sequence onto t, with a sequence attaining it

    States are settled cheapest first; among equally cheap states the one reached
    first, in order of source then target of the last move, wins.

    :param g: A connected graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param t: The target
    :type t: int
    :param config: Supplies the weight budget
    :type config: :class:`pycupstack.config.Config`, optional
    :param budget: Overrides the configured budget on settled states
    :type budget: int, optional
    :return: (weight, witness)
    :rtype: tuple
    :raises NotStackableError: if g is not t-stackable
    :raises BudgetExceededError: if the budget runs out first
    """
    g.require_connected()
    if not 0 <= t < g.n:
        raise ParameterError("target {} is not a vertex of {}".format(t, g.describe()))
    if budget is None:
        budget = resolve(config).weight_budget
    n = g.n
    d = g.distances()
    shells = [d.shells(x) for x in range(n)]
    ecc = [len(s) - 1 for s in shells]

    start = (1,) * n
    best = {start: 0}
    parent = {start: None}
    heap = [(0, 0, start)]
    pushed = 1
    settled = 0
    while heap:
        cost, _, state = heapq.heappop(heap)
        if cost > best[state]:
            continue
        if state[t] == n:
            witness = _unwind(parent, state, t)
            logger.debug("least weight onto %d in %s is %d (%d states settled)", t, g.describe(), cost, settled)
            return cost, witness
        settled += 1
        if settled > budget:
            logger.warning("weight budget of %d exhausted on %s, target %d", budget, g.describe(), t)
            raise BudgetExceededError(
                "least weight search on {} for target {} exceeded {} states".format(g.describe(), t, budget),
                budget,
                settled,
            )
        if any(x != t and state[x] > ecc[x] for x in range(n)):
            continue
        for x in range(n):
            r = state[x]
            if not r or x == t:
                continue
            for y in shells[x][r]:
                if not state[y]:
                    continue
                following = list(state)
                following[y] += r
                following[x] = 0
                following = tuple(following)
                total = cost + r
                if total < best.get(following, total + 1):
                    best[following] = total
                    parent[following] = (state, (x, y, r))
                    heapq.heappush(heap, (total, pushed, following))
                    pushed += 1
    raise NotStackableError("{} is not {}-stackable".format(g.describe(), t))


def _unwind(parent, state, t):
    moves = []
    while parent[state] is not None:
        state, (x, y, r) = parent[state]
        moves.append(Move(x, y, r))
    moves.reverse()
    return MoveSequence(moves, plan={"method": "least-weight", "target": t})


def _weight_worker(args):
    g, t, budget = args
    return min_weight(g, t, budget=budget)


def weight_table(g, config=None, targets=None):
    """Least weights for every target

    :param g: A stackable graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param config: Supplies the budget and the number of workers
    :type config: :class:`pycupstack.config.Config`, optional
    :param targets: Restrict to these targets
    :type targets: iterable of int, optional
    :rtype: :class:`pycupstack.search.base.WeightTable`
    :raises NotStackableError: if some target is not stackable
    """
    config = resolve(config)
    targets = list(range(g.n)) if targets is None else sorted(set(targets))
    jobs = [(g, t, config.weight_budget) for t in targets]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(_weight_worker, jobs))
    else:
        results = [_weight_worker(job) for job in jobs]
    mu = {}
    witness = {}
    for t, (weight, seq) in zip(targets, results):
        verdict = verify_sequence(g, t, seq)
        if not verdict.valid or seq.weight != weight:
            raise CupStackError("least weight witness for target {} is inconsistent: {}".format(t, verdict.reason))
        mu[t] = weight
        witness[t] = seq
    return WeightTable(g, mu, witness)
