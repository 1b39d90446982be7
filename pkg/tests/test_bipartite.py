import pytest

from pycupstack.exceptions import InvalidPartitionError, NotBipartiteError, ParameterError
from pycupstack.game.base import verify_sequence
from pycupstack.graphs import families
from pycupstack.graphs.base import PathPartition
from pycupstack.solvers.bipartite import (
    BEST_EFFORT,
    GUARANTEED,
    biwheel_path_partition,
    check_bipartite_hypotheses,
    solve_bipartite_paths,
)

K24_PATHS = [(2, 0, 3), (4, 1, 5)]


class TestHypotheses:
    def test_biwheel_is_guaranteed(self):
        g = families.biwheel(24, [1, 9, 17])
        report = check_bipartite_hypotheses(g, biwheel_path_partition(24, [1, 9, 17], 25))
        assert report.holds
        assert report.status == GUARANTEED
        assert report.details["diameter"] == 4
        assert report.details["sizes"] == [17, 16, 16]
        assert report.details["end_distances"] == [3, 3]

    def test_single_path(self):
        g = families.path(4)
        report = check_bipartite_hypotheses(g, PathPartition([range(4)]))
        assert not report
        assert report.to_dict()["status"] == BEST_EFFORT

    def test_short_paths_and_bad_ends(self, k24):
        report = check_bipartite_hypotheses(k24, PathPartition(K24_PATHS))
        assert len(report.failures) == 2
        assert report.details["end_distances"] == [2]


class TestSolveBipartitePaths:
    @pytest.mark.parametrize("t", [0, 1])
    def test_k24_from_the_small_class(self, k24, t):
        seq = solve_bipartite_paths(k24, K24_PATHS, t)
        assert len(seq) == 5
        assert verify_sequence(k24, t, seq)
        assert seq.plan["hypotheses"]["status"] == BEST_EFFORT

    @pytest.mark.parametrize("t", [2, 3, 4, 5])
    def test_k24_from_the_large_class(self, k24, t):
        assert solve_bipartite_paths(k24, K24_PATHS, t) is None

    def test_biwheel_every_target(self):
        l, removed = 24, [1, 9, 17]
        g = families.biwheel(l, removed)
        for t in g.vertices():
            seq = solve_bipartite_paths(g, biwheel_path_partition(l, removed, t), t)
            assert seq is not None, t
            assert seq.plan["hypotheses"]["status"] == GUARANTEED
            assert t in seq.plan["target_path"]

    def test_plan_lists_chunks(self):
        g = families.biwheel(24, [1, 9, 17])
        seq = solve_bipartite_paths(g, biwheel_path_partition(24, [1, 9, 17], 0), 0)
        assert seq.plan["method"] == "bipartite-paths"
        assert len(seq.plan["paths"]) == 2
        assert all(piece["method"] == "chunked-path" for piece in seq.plan["paths"])

    def test_single_path_partition(self):
        g = families.cycle(6)
        seq = solve_bipartite_paths(g, [range(6)], 2)
        assert verify_sequence(g, 2, seq)

    def test_not_bipartite(self):
        with pytest.raises(NotBipartiteError):
            solve_bipartite_paths(families.cycle(5), [range(5)], 0)

    def test_bad_partition(self, k24):
        with pytest.raises(InvalidPartitionError):
            solve_bipartite_paths(k24, [(2, 0, 3), (4, 1)], 0)

    def test_bad_target(self, k24):
        with pytest.raises(ParameterError):
            solve_bipartite_paths(k24, K24_PATHS, 6)


class TestBiwheelPartition:
    def test_arcs(self):
        pp = biwheel_path_partition(4, [1, 3], 5)
        # x_i = i, y_i = 4 + i
        assert list(pp) == [(5, 2, 6, 3, 0), (7, 4, 8, 1)]

    def test_hub_target(self):
        pp = biwheel_path_partition(4, [1, 3], 0)
        assert pp[0] == (5, 2, 6, 3, 0)

    def test_target_in_later_arc(self):
        pp = biwheel_path_partition(4, [1, 3], 8)
        assert list(pp) == [(7, 4, 8, 1, 0), (5, 2, 6, 3)]

    def test_partition_is_valid(self):
        g = families.biwheel(24, [1, 9, 17])
        for t in (0, 5, 30, 48):
            biwheel_path_partition(24, [1, 9, 17], t).validate(g)

    def test_no_removed_spokes(self):
        pp = biwheel_path_partition(3, [], 4)
        assert list(pp) == [(0, 1, 4, 2, 5, 3, 6)]
        pp.validate(families.biwheel(3))

    @pytest.mark.parametrize("l, removed, t", [(1, [], 0), (4, [5], 0), (4, [1], 9)])
    def test_bad_arguments(self, l, removed, t):
        with pytest.raises(ParameterError):
            biwheel_path_partition(l, removed, t)
