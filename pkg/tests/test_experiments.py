import pytest

from pycupstack.config import Config
from pycupstack.exceptions import BudgetExceededError, ParameterError
from pycupstack.graphs import families
from pycupstack.graphs.analysis import canonical_form, find_hamilton_path
from pycupstack.search.experiments import census_stackable_nonhamiltonian, find_alternating_chain
from pycupstack.search.stackability import is_stackable


class TestCensus:
    def test_nothing_below_six_vertices(self):
        census = census_stackable_nonhamiltonian(5)
        assert len(census) == 0
        assert census.undecided == []

    @pytest.mark.slow
    def test_six_vertices(self):
        census = census_stackable_nonhamiltonian(6)
        assert len(census) == 4
        assert set(census.by_order()) == {6}
        assert census[0].edges == ((0, 1), (0, 2), (0, 5), (1, 4), (2, 3))
        forms = [canonical_form(g) for g in census]
        assert forms[0] == "110010010100000"
        assert forms == sorted(set(forms))
        for g in census:
            assert find_hamilton_path(g) is None
            assert is_stackable(g)

    @pytest.mark.slow
    def test_seven_vertices(self):
        census = census_stackable_nonhamiltonian(7)
        assert census.by_order()[6] == len(census_stackable_nonhamiltonian(6))
        assert census.undecided == []

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            census_stackable_nonhamiltonian(8)

    def test_undecided_graphs_are_recorded(self):
        census = census_stackable_nonhamiltonian(4, Config(hamilton_budget=3))
        assert len(census) == 0
        assert census.undecided


class TestAlternatingChain:
    def test_empty_chain(self):
        assert find_alternating_chain(families.path(4), families.complete(4), 0) == []

    def test_star_gains_a_hamilton_path(self):
        star, k4 = families.star(3), families.complete(4)
        assert find_alternating_chain(star, k4, 1) == [(1, 2)]
        assert find_alternating_chain(star, k4, 2) is None

    def test_no_edges_to_add(self):
        g = families.cycle(5)
        assert find_alternating_chain(g, g, 1) is None

    def test_not_a_subgraph(self):
        with pytest.raises(ParameterError):
            find_alternating_chain(families.cycle(4), families.path(4), 1)

    def test_negative_length(self):
        with pytest.raises(ParameterError):
            find_alternating_chain(families.path(4), families.complete(4), -1)

    @pytest.mark.slow
    def test_f10_to_complete_bipartite(self):
        base, closure = families.nonmono_pair(10)
        chain = find_alternating_chain(base, closure, 5)
        assert chain is not None and len(chain) == 5
        g = base
        status = is_stackable(g)
        for e in chain:
            assert closure.has_edge(*e)
            g = g.add_edges([e])
            following = is_stackable(g)
            assert following is not status
            status = following
