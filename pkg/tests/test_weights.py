import random

import pytest

from pycupstack.config import Config
from pycupstack.exceptions import BudgetExceededError, NotStackableError, ParameterError
from pycupstack.game.base import verify_sequence
from pycupstack.graphs import families
from pycupstack.search.base import write_weight_csv
from pycupstack.search.stackability import random_playout
from pycupstack.search.weights import min_weight, weight_table

PATH_WEIGHTS = {
    1: [0],
    2: [1, 1],
    3: [3, 2, 3],
    4: [4, 4, 4, 4],
    5: [6, 5, 6, 5, 6],
    6: [9, 7, 7, 7, 7, 9],
    7: [11, 10, 9, 8, 9, 10, 11],
    8: [12, 12, 12, 10, 10, 12, 12, 12],
    9: [14, 13, 14, 13, 12, 13, 14, 13, 14],
    10: [17, 15, 15, 15, 15, 15, 15, 15, 15, 17],
    11: [19, 18, 17, 16, 17, 18, 17, 16, 17, 18, 19],
    12: [22, 20, 20, 18, 18, 20, 20, 18, 18, 20, 20, 22],
}


class TestPathTable:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_short_paths(self, n):
        table = weight_table(families.path(n))
        assert table.values() == PATH_WEIGHTS[n]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(9, 13))
    def test_long_paths(self, n):
        table = weight_table(families.path(n))
        assert table.values() == PATH_WEIGHTS[n]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_reversal_preserves_the_weight(self, n):
        g = families.path(n)
        table = weight_table(g)
        assert table.values() == table.values()[::-1]
        for t in (0, n // 2):
            assert min_weight(g, n - 1 - t)[0] == table.mu[t]

    def test_witnesses_attain_the_weight(self):
        table = weight_table(families.path(6))
        for t, seq in table.witness.items():
            assert seq.weight == table.mu[t]
            assert verify_sequence(table.graph, t, seq)
            assert seq.plan["method"] == "least-weight"

    def test_workers_agree(self):
        g = families.path(7)
        assert weight_table(g, Config(workers=2)).values() == weight_table(g).values()

    def test_targets_subset(self):
        table = weight_table(families.path(9), targets=[4])
        assert table.mu == {4: 12}


class TestMinWeight:
    def test_value_and_witness(self):
        weight, seq = min_weight(families.path(3), 1)
        assert weight == 2
        assert len(seq) == 2

    def test_not_stackable(self, k24):
        with pytest.raises(NotStackableError):
            min_weight(k24, 2)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            min_weight(families.path(8), 0, budget=3)

    def test_bad_target(self):
        with pytest.raises(ParameterError):
            min_weight(families.path(3), 5)

    @pytest.mark.parametrize("g, t", [(families.path(5), 2), (families.cycle(6), 0), (families.petersen(), 0)])
    def test_random_solutions_never_lighter(self, g, t):
        weight, _ = min_weight(g, t)
        rng = random.Random(11)
        found = 0
        for _ in range(20000):
            seq = random_playout(g, t, rng)
            if seq is None:
                continue
            assert seq.weight >= weight
            found += 1
            if found == 100:
                break
        assert found > 0


class TestExport:
    def test_csv(self, tmp_path):
        tables = [weight_table(families.path(n)) for n in (1, 3)]
        destination = tmp_path / "mu.csv"
        write_weight_csv(tables, str(destination))
        assert destination.read_text() == "1,0\n3,3,2,3\n"

    def test_data(self):
        table = weight_table(families.path(2))
        data = table.to_data("p2.txt")
        assert data["verdicts"][1] == {"target": 1, "status": "stackable", "mu": 1, "witness": None}
        assert set(table.witness_data()) == {"0", "1"}
