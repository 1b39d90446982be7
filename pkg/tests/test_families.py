import networkx as nx
import pytest

from pycupstack.exceptions import ParameterError
from pycupstack.graphs import families
from pycupstack.graphs.base import bipartition


def isomorphic(g, graph):
    return nx.is_isomorphic(g.to_networkx(), graph)


class TestClassicFamilies:
    def test_small_families(self):
        assert isomorphic(families.path(5), nx.path_graph(5))
        assert isomorphic(families.cycle(6), nx.cycle_graph(6))
        assert isomorphic(families.complete(4), nx.complete_graph(4))
        assert isomorphic(families.star(3), nx.star_graph(3))

    def test_complete_bipartite_numbering(self):
        g = families.complete_bipartite(2, 3)
        assert g.m == 6
        assert bipartition(g).classes() == ((0, 1), (2, 3, 4))

    def test_grid(self):
        g = families.grid([3, 3])
        assert (g.n, g.m) == (9, 12)
        assert g.label(0) == (0, 0)
        assert g.label(1) == (0, 1)
        assert isomorphic(g, nx.grid_2d_graph(3, 3))

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_hypercube(self, d):
        g = families.hypercube(d)
        assert g.n == 2 ** d
        assert g.m == d * 2 ** (d - 1)
        assert isomorphic(g, nx.hypercube_graph(d))

    def test_petersen(self):
        g = families.petersen()
        assert isomorphic(g, nx.petersen_graph())
        assert g.label(0) == (1, 2)

    def test_johnson(self):
        g = families.johnson(5, 2, 1)
        assert g.n == 10
        assert all(g.degree(v) == 6 for v in g.vertices())
        assert families.johnson(5, 2, 0) == families.kneser(5, 2)

    @pytest.mark.parametrize("n, k, s", [(2, 2, 1), (4, 2, 0), (5, 0, 0), (5, 2, 2)])
    def test_johnson_bounds(self, n, k, s):
        with pytest.raises(ParameterError):
            families.johnson(n, k, s)

    def test_kneser_bound(self):
        with pytest.raises(ParameterError):
            families.kneser(4, 2)

    def test_errors_name_the_constraint(self):
        with pytest.raises(ParameterError, match="n >= 3"):
            families.cycle(2)
        with pytest.raises(ParameterError):
            families.path(0)


class TestConstructions:
    def test_biwheel(self):
        g = families.biwheel(24, [1, 9, 17])
        assert g.n == 49
        assert g.m == 24 + 21 + 24
        assert g.degree(0) == 24
        assert not g.has_edge(1, 25)
        assert g.has_edge(2, 26)
        assert g.label(25) == "y1"
        assert bipartition(g) is not None

    def test_biwheel_bounds(self):
        with pytest.raises(ParameterError):
            families.biwheel(4, [5])

    def test_cactus(self, cactus_k2):
        assert (cactus_k2.n, cactus_k2.m) == (12, 11)
        assert sorted(cactus_k2.neighbors(1)) == [0, 7, 8, 9, 10, 11]
        assert cactus_k2.distances().diameter == 3

    def test_spiky(self, spiky_small):
        assert spiky_small.n == 8
        assert sorted(spiky_small.neighbors(0)) == [1, 2, 3, 4]
        assert families.spiky(11, [3] + [0] * 9 + [3]).n == 17

    @pytest.mark.parametrize("groups", [[3], [3, 2], [0, 0, 3]])
    def test_spiky_needs_two_big_groups(self, groups):
        with pytest.raises(ParameterError):
            families.spiky(3, groups)

    def test_f_graph(self):
        g = families.f_graph(9)
        assert (g.n, g.m) == (9, 8)
        assert g.is_tree()
        assert sorted(g.neighbors(6)) == [5, 7, 8]

    def test_double_star_and_spider(self):
        assert families.double_star(3, 3).n == 8
        g = families.spider(3, 2)
        assert g.n == 7
        assert sorted(g.neighbors(0)) == [1, 3, 5]

    def test_mindeg_gadget(self):
        g = families.mindeg_gadget(families.path(2), 2)
        # 17 spikes per base vertex
        assert g.n == 2 + 2 * (1 + 17)
        assert min(g.degree(v) for v in g.vertices()) == 2
        assert g.is_connected()

    def test_connectivity_gadget(self):
        g = families.connectivity_gadget(2)
        assert g.n == 24
        assert nx.node_connectivity(g.to_networkx()) == 2
        assert g.distances().diameter == 3

    def test_strong_nonmono_pair(self):
        g, h = families.strong_nonmono_pair()
        assert g.n == h.n == 17
        assert g.is_subgraph_of(h)
        assert g.is_tree()
        assert h.m == 55 + 6

    def test_nonmono_pair(self):
        base, closure = families.nonmono_pair(10)
        assert base == families.f_graph(10)
        assert base.is_subgraph_of(closure)
        assert closure.m == 24
        assert isomorphic(closure, nx.complete_bipartite_graph(4, 6))


class TestBuildFamily:
    def test_by_name(self):
        g = families.build_family("complete_bipartite", a=2, b=4)
        assert g == families.complete_bipartite(2, 4)
        assert families.build_family("hypercube", d=3).n == 8

    def test_unknown_family(self):
        with pytest.raises(ParameterError, match="unknown graph family"):
            families.build_family("moebius")

    def test_bad_parameters(self):
        with pytest.raises(ParameterError):
            families.build_family("cycle", k=3)

    @pytest.mark.parametrize(
        "text, n",
        [("p5", 5), ("c7", 7), ("k4", 4), ("k4,6", 10), ("q3", 8), ("f10", 10), ("Petersen", 10)],
    )
    def test_shorthand(self, text, n):
        assert families.from_shorthand(text).n == n

    def test_not_a_shorthand(self):
        assert families.from_shorthand("graph.txt") is None
