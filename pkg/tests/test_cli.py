import json

import pytest

from pycupstack.cli import EXIT_NO, EXIT_UNKNOWN, EXIT_YES, main
from pycupstack.graphs.io import read_graph


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestGen:
    def test_hypercube_file(self, tmp_path):
        path = tmp_path / "q4.txt"
        assert main(["gen", "--family", "hypercube", "--d", "4", "-o", str(path)]) == EXIT_YES
        g = read_graph(str(path))
        assert (g.n, g.m) == (16, 32)

    def test_kneser_to_stdout(self, capsys):
        code, out = run(capsys, "gen", "--family", "kneser", "--n", "5", "--k", "2")
        assert code == EXIT_YES
        assert out.splitlines()[0] == "10 15"

    def test_biwheel_with_dot(self, tmp_path, capsys):
        dot = tmp_path / "w.dot"
        code, out = run(capsys, "gen", "--family", "biwheel", "--l", "24", "--removed", "1,9,17", "--emit-dot", str(dot))
        assert code == EXIT_YES
        assert out.splitlines()[0] == "49 69"
        assert dot.read_text().startswith("graph ")

    def test_graph_parameter(self, capsys):
        code, out = run(capsys, "gen", "--family", "cactus", "--base", "k2", "--c", "5")
        assert out.splitlines()[0] == "12 11"

    def test_unknown_family(self, capsys):
        assert run(capsys, "gen", "--family", "moebius")[0] == EXIT_UNKNOWN

    def test_stray_argument(self):
        with pytest.raises(SystemExit):
            main(["verify", "p3", "s.json", "--target", "0", "--extra", "1"])


class TestSolve:
    def test_hamilton_hypercube(self, capsys):
        code, out = run(capsys, "solve", "q4", "--target", "3", "--method", "hamilton")
        assert code == EXIT_YES
        assert len(json.loads(out)) == 15

    def test_search_refutes(self, capsys):
        code, out = run(capsys, "solve", "k2,4", "--target", "2", "--method", "search")
        assert code == EXIT_NO
        assert json.loads(out) == {"target": 2, "status": "not"}

    def test_auto_path(self, capsys):
        code, out = run(capsys, "solve", "p12", "--target", "5")
        assert code == EXIT_YES
        assert len(json.loads(out)) == 11

    def test_auto_falls_back_to_search(self, capsys):
        code, out = run(capsys, "solve", "f9", "--target", "8")
        assert code == EXIT_YES
        assert len(json.loads(out)) == 8

    def test_bipartite_paths(self, capsys):
        code, out = run(capsys, "solve", "k2,4", "--target", "0", "--method", "bipartite-paths", "--partition", "2,0,3;4,1,5")
        assert code == EXIT_YES
        assert len(json.loads(out)) == 5

    def test_bipartite_paths_unchunkable(self, capsys):
        code, out = run(capsys, "solve", "k2,4", "--target", "3", "--method", "bipartite-paths", "--partition", "2,0,3;4,1,5")
        assert code == EXIT_UNKNOWN
        assert json.loads(out)["status"] == "unknown"

    def test_power_with_plan(self, tmp_path, capsys):
        moves, plan = tmp_path / "s.json", tmp_path / "plan.json"
        code, _ = run(
            capsys, "solve", "k2,4", "--method", "power", "--power", "2", "--partition", "2,0,3;4,1,5",
            "--target", "0,0", "-o", str(moves), "--plan", str(plan),
        )
        assert code == EXIT_YES
        assert len(json.loads(moves.read_text())) == 35
        assert json.loads(plan.read_text())["method"] == "power"

    def test_power_needs_r(self, capsys):
        assert run(capsys, "solve", "p3", "--method", "power", "--target", "0")[0] == EXIT_UNKNOWN

    def test_hamilton_absent(self, capsys):
        code, out = run(capsys, "solve", "k2,4", "--target", "0", "--method", "hamilton")
        assert code == EXIT_UNKNOWN
        assert "no Hamilton path" in json.loads(out)["reason"]


class TestVerify:
    def test_round_trip(self, tmp_path, capsys):
        solution = tmp_path / "s.json"
        assert main(["solve", "c6", "--target", "2", "-o", str(solution)]) == EXIT_YES
        code, out = run(capsys, "verify", "c6", str(solution), "--target", "2")
        assert code == EXIT_YES
        assert json.loads(out)["valid"] is True

    def test_wrong_target(self, tmp_path, capsys):
        solution = tmp_path / "s.json"
        solution.write_text('[{"from": 0, "to": 1, "cups": 1}, {"from": 2, "to": 1, "cups": 1}]')
        code, out = run(capsys, "verify", "p3", str(solution), "--target", "0")
        assert code == EXIT_NO
        assert json.loads(out)["valid"] is False

    @pytest.mark.parametrize("record", [{"from": 1, "to": 1, "cups": 2}, {"from": 0, "to": 1, "cups": 0}])
    def test_shapeless_move(self, tmp_path, capsys, record):
        solution = tmp_path / "s.json"
        solution.write_text(json.dumps([{"from": 0, "to": 1, "cups": 1}, record]))
        code, out = run(capsys, "verify", "p3", str(solution), "--target", "1")
        assert code == EXIT_NO
        assert json.loads(out)["index"] == 1


class TestDecide:
    def test_k24(self, tmp_path, capsys):
        output = tmp_path / "result.json"
        witnesses = tmp_path / "witnesses"
        code, _ = run(capsys, "decide", "k2,4", "-o", str(output), "--witness-dir", str(witnesses))
        assert code == EXIT_NO
        data = json.loads(output.read_text())
        assert data["classification"] == "non-stackable"
        assert [v["status"] for v in data["verdicts"]] == ["stackable"] * 2 + ["not"] * 4
        assert sorted(p.name for p in witnesses.iterdir()) == ["witness_0.json", "witness_1.json"]

    def test_stackable(self, capsys):
        code, out = run(capsys, "decide", "p6", "--symmetry")
        assert code == EXIT_YES
        assert "elapsed" not in json.loads(out)

    def test_budget_from_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("CUPSTACK_BUDGET", "1")
        code, out = run(capsys, "decide", "f9")
        assert code == EXIT_UNKNOWN
        assert json.loads(out)["classification"] == "unknown"

    def test_budget_flag(self, capsys):
        assert run(capsys, "--budget", "1", "decide", "f9", "--targets", "0")[0] == EXIT_UNKNOWN

    def test_timings(self, capsys):
        code, out = run(capsys, "--no-deterministic", "decide", "p3")
        assert "elapsed" in json.loads(out)

    def test_output_independent_of_workers(self, capsys):
        _, serial = run(capsys, "decide", "k2,4")
        _, parallel = run(capsys, "--workers", "2", "decide", "k2,4")
        assert serial == parallel


class TestMinWeight:
    @pytest.mark.parametrize(
        "graph, row",
        [("p1", "0"), ("p7", "11,10,9,8,9,10,11"), ("p3", "3,2,3")],
    )
    def test_rows(self, capsys, graph, row):
        code, out = run(capsys, "minweight", graph, "--all-targets")
        assert code == EXIT_YES
        assert out.strip() == row

    @pytest.mark.slow
    def test_p12(self, capsys):
        assert run(capsys, "minweight", "p12", "--all-targets")[1].strip() == "22,20,20,18,18,20,20,18,18,20,20,22"

    def test_single_target(self, tmp_path, capsys):
        witness = tmp_path / "w.json"
        code, out = run(capsys, "minweight", "p9", "--target", "4", "-o", str(witness))
        assert out.strip() == "12"
        assert len(json.loads(witness.read_text())) == 8

    def test_exports(self, tmp_path, capsys):
        csv_path, json_path = tmp_path / "mu.csv", tmp_path / "mu.json"
        run(capsys, "minweight", "p4", "--all-targets", "--csv", str(csv_path), "--json", str(json_path))
        assert csv_path.read_text() == "4,4,4,4,4\n"
        assert json.loads(json_path.read_text())["verdicts"][0]["mu"] == 4

    def test_not_stackable(self, capsys):
        assert run(capsys, "minweight", "k2,4", "--all-targets")[0] == EXIT_NO

    def test_needs_a_target_choice(self):
        with pytest.raises(SystemExit):
            main(["minweight", "p3"])


class TestCensusAndChain:
    def test_census_small(self, capsys):
        code, out = run(capsys, "census", "--max-n", "5")
        assert code == EXIT_NO
        assert json.loads(out)["graphs"] == []

    def test_chain(self, tmp_path, capsys):
        star = tmp_path / "star.txt"
        main(["gen", "--family", "star", "--n", "3", "-o", str(star)])
        code, out = run(capsys, "chain", "--base", str(star), "--super", "k4", "--length", "1")
        assert code == EXIT_YES
        assert json.loads(out)["chain"] == [[1, 2]]

    def test_no_chain(self, tmp_path, capsys):
        star = tmp_path / "star.txt"
        main(["gen", "--family", "star", "--n", "3", "-o", str(star)])
        code, out = run(capsys, "chain", "--base", str(star), "--super", "k4", "--length", "2")
        assert code == EXIT_NO
        assert json.loads(out)["chain"] is None

    def test_super_in_its_own_numbering(self, capsys):
        code, out = run(capsys, "chain", "--base", "p4", "--super", "k2,2", "--length", "0")
        assert code == EXIT_YES
        assert json.loads(out)["chain"] == []

    def test_unrelated_super(self, capsys):
        assert run(capsys, "chain", "--base", "c5", "--super", "p5", "--length", "1")[0] == EXIT_UNKNOWN


class TestCertify:
    def test_cactus_round_trip(self, tmp_path, capsys):
        graph, certificates = tmp_path / "cactus.txt", tmp_path / "certificates.json"
        main(["gen", "--family", "cactus", "--base", "k2", "--c", "5", "-o", str(graph)])
        code, out = run(capsys, "certify", str(graph), "-o", str(certificates))
        assert code == EXIT_YES
        assert json.loads(out)["complete"] is True
        code, out = run(capsys, "certify", str(graph), "--check", str(certificates))
        assert code == EXIT_YES
        assert json.loads(out) == {"valid": True}

    def test_check_against_another_graph(self, tmp_path, capsys):
        graph, certificates = tmp_path / "cactus.txt", tmp_path / "certificates.json"
        main(["gen", "--family", "cactus", "--base", "k2", "--c", "5", "-o", str(graph)])
        main(["certify", str(graph), "-o", str(certificates)])
        capsys.readouterr()
        assert run(capsys, "certify", "p12", "--check", str(certificates))[0] == EXIT_NO

    def test_single_target(self, capsys):
        code, out = run(capsys, "certify", "k2,4", "--target", "2")
        assert code == EXIT_YES
        assert json.loads(out)["kind"] == "indep-set"

    def test_stackable_target(self, capsys):
        code, out = run(capsys, "certify", "p6", "--target", "0")
        assert code == EXIT_NO
        assert json.loads(out)["certificate"] is None
