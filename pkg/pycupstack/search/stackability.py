"""Deciding stackability by exhaustive search over game states

A state is the vector of cup counts. Two rules of the game keep the search small:
a vertex that has been emptied can never hold cups again, so the target's stack never
moves; and a stack larger than the eccentricity of its vertex can never move, so a
state holding one outside the target is lost.
"""

import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor

from networkx.algorithms.isomorphism import GraphMatcher

from ..config import resolve
from ..exceptions import BudgetExceededError, CupStackError, ParameterError
from ..game.base import (
    GameState,
    Move,
    MoveSequence,
    apply_move_unchecked,
    initial_state,
    legal_moves,
    verify_sequence,
)
from .base import SearchResult, Status, TargetVerdict

logger = logging.getLogger(__name__)


class _OutOfBudget(Exception):
    pass


class StateSearch(object):
    """Depth-first search for a winning sequence onto one target

    Failed states are remembered by their cup vector; moves are tried in order of
    source, then target vertex.

    :param g: A connected graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param t: The target
    :type t: int
    :param budget: Most states to expand before giving up
    :type budget: int
    """

    def __init__(self, g, t, budget):
        self.g = g
        self.t = t
        self.budget = budget
        d = g.distances()
        self.shells = [d.shells(x) for x in range(g.n)]
        self.ecc = [len(s) - 1 for s in self.shells]
        self.failed = set()
        self.explored = 0
        self.memo_hits = 0
        self._cups = None
        self._trail = None

    def run(self):
        """Search from the initial state

        :return: The winning moves, or None if there are none
        :rtype: list of :class:`pycupstack.game.base.Move` or None
        :raises BudgetExceededError: if more than budget states would be expanded
        """
        n = self.g.n
        self._cups = [1] * n
        self._trail = []
        try:
            found = self._solve()
        except _OutOfBudget:
            raise BudgetExceededError(
                "gave up on target {} after {} states".format(self.t, self.explored), self.budget, self.explored
            )
        if not found:
            return None
        return [Move(x, y, r) for x, y, r in self._trail]

    def _solve(self):
        cups = self._cups
        t = self.t
        n = len(cups)
        if cups[t] == n:
            return True
        key = tuple(cups)
        if key in self.failed:
            self.memo_hits += 1
            return False
        self.explored += 1
        if self.explored > self.budget:
            raise _OutOfBudget()
        ecc = self.ecc
        for x in range(n):
            if x != t and cups[x] > ecc[x]:
                self.failed.add(key)
                return False
        shells = self.shells
        trail = self._trail
        for x in range(n):
            r = cups[x]
            if not r or x == t:
                continue
            for y in shells[x][r]:
                if not cups[y]:
                    continue
                cups[x] = 0
                cups[y] += r
                trail.append((x, y, r))
                if self._solve():
                    return True
                trail.pop()
                cups[y] -= r
                cups[x] = r
        self.failed.add(key)
        return False


def _check_target(g, t):
    if not 0 <= t < g.n:
        raise ParameterError("target {} is not a vertex of {}".format(t, g.describe()))


def decide_t_stackable(g, t, config=None, budget=None):
    """Decide whether every cup of g can be stacked onto t

    :param g: A connected graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param t: The target
    :type t: int
    :param config: Supplies the state budget
    :type config: :class:`pycupstack.config.Config`, optional
    :param budget: Overrides the configured state budget
    :type budget: int, optional
    :return: STACKABLE with a verified witness, NOT_STACKABLE after a complete search,
        or UNKNOWN if the budget ran out
    :rtype: :class:`pycupstack.search.base.TargetVerdict`
    """
    g.require_connected()
    _check_target(g, t)
    if budget is None:
        budget = resolve(config).state_budget
    search = StateSearch(g, t, budget)
    logger.debug("searching %s for target %d with budget %d", g.describe(), t, budget)
    try:
        moves = search.run()
    except BudgetExceededError:
        logger.warning("state budget of %d exhausted on %s, target %d", budget, g.describe(), t)
        return TargetVerdict(t, Status.UNKNOWN, explored=search.explored, memo_hits=search.memo_hits)
    logger.debug(
        "target %d of %s: %s after %d states and %d memo hits",
        t, g.describe(), "stackable" if moves is not None else "not stackable", search.explored, search.memo_hits,
    )
    if moves is None:
        return TargetVerdict(t, Status.NOT_STACKABLE, explored=search.explored, memo_hits=search.memo_hits)
    witness = MoveSequence(moves, plan={"method": "search", "target": t})
    _require_valid(g, t, witness)
    return TargetVerdict(t, Status.STACKABLE, witness, search.explored, search.memo_hits)


def _require_valid(g, t, witness):
    verdict = verify_sequence(g, t, witness)
    if not verdict.valid:
        raise CupStackError("search witness for target {} failed verification: {}".format(t, verdict.reason))


def _orbit_maps(g, config):
    # Each vertex v maps to (representative, automorphism taking the representative to v).
    config = resolve(config)
    if g.n > config.automorphism_budget:
        raise BudgetExceededError(
            "automorphisms of {} vertices exceed the budget of {}".format(g.n, config.automorphism_budget),
            config.automorphism_budget,
            g.n,
        )
    graph = g.to_networkx()
    automorphisms = list(
        itertools.islice(GraphMatcher(graph, graph).isomorphisms_iter(), config.automorphism_limit)
    )
    if len(automorphisms) == config.automorphism_limit:
        logger.info("stopped after %d automorphisms of %s, orbits may be split", len(automorphisms), g.describe())
    maps = {}
    for v in range(g.n):
        if v in maps:
            continue
        for sigma in automorphisms:
            w = sigma[v]
            if w not in maps:
                maps[w] = (v, sigma)
    return maps


def automorphism_orbits(g, config=None):
    """Group the vertices into orbits of the automorphisms found

    At most ``automorphism_limit`` automorphisms are enumerated, so an orbit may be
    reported split in two, but two vertices are only grouped together when an
    automorphism maps one onto the other.

    :param g: A graph with at most ``automorphism_budget`` vertices
    :type g: :class:`pycupstack.graphs.base.Graph`
    :rtype: list of tuple
    :raises BudgetExceededError: for larger graphs
    """
    orbits = {}
    for v, (representative, _) in sorted(_orbit_maps(g, config).items()):
        orbits.setdefault(representative, []).append(v)
    return [tuple(orbits[r]) for r in sorted(orbits)]


def _transport(verdict, target, sigma):
    witness = None
    if verdict.witness is not None:
        moves = [Move(sigma[m.source], sigma[m.target], m.cups) for m in verdict.witness]
        witness = MoveSequence(moves, plan={"method": "search", "target": target, "image_of": verdict.target})
    return TargetVerdict(target, verdict.status, witness, 0, 0)


def _decide_worker(args):
    g, t, budget = args
    return decide_t_stackable(g, t, budget=budget)


def decide_stackable(g, config=None, use_symmetry=False, targets=None):
    """Decide t-stackability for every target

    :param g: A connected graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param config: Supplies the budgets and the number of workers
    :type config: :class:`pycupstack.config.Config`, optional
    :param use_symmetry: Search one target per automorphism orbit and carry its
        verdict and witness over to the rest of the orbit
    :type use_symmetry: bool
    :param targets: Restrict to these targets
    :type targets: iterable of int, optional
    :rtype: :class:`pycupstack.search.base.SearchResult`
    """
    config = resolve(config)
    g.require_connected()
    targets = list(range(g.n)) if targets is None else sorted(set(targets))
    for t in targets:
        _check_target(g, t)

    maps = {t: (t, None) for t in targets}
    if use_symmetry:
        try:
            maps = {t: entry for t, entry in _orbit_maps(g, config).items() if t in maps}
        except BudgetExceededError as e:
            logger.warning("searching every target: %s", e)
    searched = sorted({representative for representative, _ in maps.values()})

    if config.workers > 1 and len(searched) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            found = list(executor.map(_decide_worker, [(g, t, config.state_budget) for t in searched]))
    else:
        found = [decide_t_stackable(g, t, budget=config.state_budget) for t in searched]
    by_target = dict(zip(searched, found))

    verdicts = []
    for t in targets:
        representative, sigma = maps[t]
        if representative == t:
            verdicts.append(by_target[t])
        else:
            verdict = _transport(by_target[representative], t, sigma)
            if verdict.witness is not None:
                _require_valid(g, t, verdict.witness)
            verdicts.append(verdict)
    result = SearchResult(g, verdicts)
    logger.info("%s is %s (%d states)", g.describe(), result.classification.value, result.explored)
    return result


def random_playout(g, t, rng=None):
    """Play random legal moves, never moving the target's stack, until none is left

    :param rng: Source of randomness
    :type rng: :class:`random.Random`, optional
    :return: The moves if they stack every cup onto t, otherwise None
    :rtype: :class:`pycupstack.game.base.MoveSequence` or None
    """
    _check_target(g, t)
    rng = rng or random.Random()
    d = g.distances()
    state = initial_state(g)
    cups = state.cups
    moves = []
    while True:
        options = [m for m in legal_moves(g, d, state) if m.source != t]
        if not options:
            break
        m = rng.choice(options)
        cups = apply_move_unchecked(cups, m)
        state = GameState(cups)
        moves.append(m)
    if state.is_terminal(t):
        return MoveSequence(moves, plan={"method": "random", "target": t})
    return None


def is_stackable(g, config=None):
    """Whether g is stackable, stopping at the first target that is not

    :return: True or False, or None if a budget ran out and no target was refuted
    :rtype: bool or None
    """
    budget = resolve(config).state_budget
    undecided = False
    for t in range(g.n):
        status = decide_t_stackable(g, t, budget=budget).status
        if status is Status.NOT_STACKABLE:
            return False
        if status is Status.UNKNOWN:
            undecided = True
    return None if undecided else True
