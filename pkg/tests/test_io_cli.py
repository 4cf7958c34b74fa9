import json

import numpy as np
import pytest

import signednet as sn
from signednet.cli import main
from signednet.errors import EdgeListParseError
from signednet.io import (
    format_edge_list,
    load_graph,
    parse_edge_list,
    read_trajectory_csv,
    write_trajectory_csv,
)


class TestEdgeListFormat:
    def test_basic_parse_with_comments_and_count(self):
        G = parse_edge_list("# a comment\nn 3\n0 1 1.0\n# more\n1 2 -0.5\n0 2 1.0\n")
        assert G.n == 3 and G.weight(1, 2) == -0.5

    def test_node_count_inferred(self):
        G = parse_edge_list("0 1 1\n1 2 1\n0 2 1\n")
        assert G.n == 3

    def test_labels_mapped_in_first_appearance_order(self):
        G = parse_edge_list("alpha beta 1\nbeta gamma -1\nalpha gamma 1\n")
        assert G.labels == ("alpha", "beta", "gamma")
        assert G.weight(1, 2) == -1

    def test_malformed_line_names_line_number(self):
        with pytest.raises(EdgeListParseError, match="line 2"):
            parse_edge_list("0 1 1.0\n0 1\n")

    def test_bad_weight_rejected(self):
        with pytest.raises(EdgeListParseError, match="weight"):
            parse_edge_list("0 1 heavy\n")

    def test_mixed_ids_and_labels_rejected(self):
        with pytest.raises(EdgeListParseError, match="mixed"):
            parse_edge_list("0 1 1.0\n0 alpha -1.0\n")

    def test_round_trip_byte_identical(self):
        G = sn.ssbm(sn.SSBMParams(n1=5, n2=5, p_in=0.7, p_out=0.3, eta=0.2, alpha=0.1, seed=3))
        text = format_edge_list(G)
        assert format_edge_list(parse_edge_list(text)) == text

    def test_round_trip_preserves_labels(self, tmp_path):
        G = parse_edge_list("x y 1.5\ny z -2.5\n")
        path = tmp_path / "g.edges"
        sn.write_edge_list(G, path, header="demo")
        again = load_graph(path)
        assert again.labels == G.labels and again.edges == G.edges


class TestTrajectoryCSV:
    def test_round_trip(self, tmp_path):
        states = np.array([[0.0, 1.0], [0.5, -0.25], [0.125, 0.0]])
        path = tmp_path / "traj.csv"
        write_trajectory_csv(states, path)
        assert path.read_text().splitlines()[0] == "t,node,value"
        assert np.array_equal(read_trajectory_csv(path), states)


class TestCLI:
    def write_triangle(self, tmp_path, sign=1.0):
        path = tmp_path / "tri.edges"
        path.write_text(f"0 1 {sign}\n1 2 {sign}\n0 2 {sign}\n")
        return path

    def test_classify_json(self, tmp_path, capsys):
        path = self.write_triangle(tmp_path)
        assert main(["classify", "--input", str(path)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["verdict"] == "balanced"
        assert doc["d_b"] == pytest.approx(0.0, abs=1e-12)
        assert doc["balanced_partition"] == [1, 1, 1]

    def test_classify_with_frustration_report(self, tmp_path, capsys):
        path = tmp_path / "four.edges"
        path.write_text("0 1 1\n0 2 1\n1 2 1\n1 3 1\n2 3 -1\n")
        assert main(["classify", "--input", str(path), "--frustration", "balanced"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["verdict"] == "strictly_unbalanced"
        assert doc["frustration"]["flip_count"] == 1
        assert doc["frustration"]["flip_set"] == [[2, 3, -1.0]]
        assert doc["frustration"]["exact"] is True

    def test_classify_frustration_falls_back_to_heuristic_on_large_input(self, tmp_path, capsys):
        G = sn.ring_lattice(sn.LatticeParams(n=20, dbar=4, alpha=0.1, sign_plan=sn.BalancedPlan()))
        path = tmp_path / "lat.edges"
        sn.write_edge_list(G, path)
        assert main(["classify", "--input", str(path), "--frustration", "balanced"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["frustration"]["exact"] is False
        assert doc["frustration"]["flip_count"] == 0

    def test_measure_json(self, tmp_path, capsys):
        path = self.write_triangle(tmp_path, sign=-1.0)
        assert main(["measure", "--input", str(path)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["verdict"] == "antibalanced"
        assert doc["d_a"] == pytest.approx(0.0, abs=1e-12)
        assert doc["rho_signed"] == pytest.approx(doc["rho_unsigned"])

    def test_missing_file_is_data_error(self, capsys):
        assert main(["classify", "--input", "/nonexistent/file.edges"]) == 2

    def test_malformed_file_is_data_error(self, tmp_path, capsys):
        path = tmp_path / "bad.edges"
        path.write_text("0 1\n")
        assert main(["classify", "--input", str(path)]) == 2
        assert "line 1" in capsys.readouterr().err

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify"])  # missing --input
        assert exc.value.code == 1

    def test_generate_round_trips_through_classify(self, tmp_path, capsys):
        config = tmp_path / "ssbm.json"
        config.write_text(json.dumps(
            {"n1": 6, "n2": 10, "p_in": 0.8, "p_out": 0.1, "eta": 0.0, "alpha": 0.1, "seed": 5}))
        out = tmp_path / "net.edges"
        assert main(["generate", "ssbm", "--config", str(config), "--output", str(out)]) == 0
        assert main(["classify", "--input", str(out)]) == 0
        assert json.loads(capsys.readouterr().out)["verdict"] == "balanced"

    def test_generate_deterministic_files(self, tmp_path):
        config = tmp_path / "lat.json"
        config.write_text(json.dumps(
            {"n": 20, "dbar": 4, "alpha": 0.1, "sign_plan": {"kind": "flip_k", "k": 2, "seed": 9}}))
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        assert main(["generate", "lattice", "--config", str(config), "--output", str(a)]) == 0
        assert main(["generate", "lattice", "--config", str(config), "--output", str(b)]) == 0
        assert a.read_text() == b.read_text()

    def test_generate_tree_and_seed_override(self, tmp_path):
        config = tmp_path / "tree.json"
        config.write_text(json.dumps({"n": 9, "sign_prob": 0.5, "seed": 1}))
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        assert main(["generate", "tree", "--config", str(config), "--output", str(a)]) == 0
        assert main(["generate", "tree", "--config", str(config), "--output", str(b), "--seed", "2"]) == 0
        assert a.read_text() != b.read_text()

    def test_simulate_rw_emits_prediction_and_csv(self, tmp_path, capsys):
        net = tmp_path / "net.edges"
        cfgf = tmp_path / "gen.json"
        cfgf.write_text(json.dumps(
            {"n1": 6, "n2": 10, "p_in": 0.8, "p_out": 0.1, "eta": 0.0, "alpha": 0.1, "seed": 5}))
        main(["generate", "ssbm", "--config", str(cfgf), "--output", str(net)])
        capsys.readouterr()
        sim = tmp_path / "sim.json"
        sim.write_text(json.dumps({"horizon": 4000, "init": "bipartition", "l0": 1.0}))
        out = tmp_path / "traj.csv"
        assert main(["simulate", "rw", "--input", str(net), "--config", str(sim), "--output", str(out)]) == 0
        summary = json.loads(capsys.readouterr().out)
        pred = np.array(summary["stationary_prediction"]["vectors"][0])
        realized = np.array(summary["realized_final_state"])
        assert summary["stationary_prediction"]["kind"] == "fixed"
        assert np.max(np.abs(pred - realized)) < 1e-6
        states = read_trajectory_csv(out)
        assert states.shape[1] == 16

    def test_simulate_elt_reports_activations(self, tmp_path, capsys):
        net = tmp_path / "net.edges"
        latcfg = tmp_path / "lat.json"
        latcfg.write_text(json.dumps(
            {"n": 20, "dbar": 4, "alpha": 0.1, "sign_plan": {"kind": "balanced", "rule": "all"}}))
        main(["generate", "lattice", "--config", str(latcfg), "--output", str(net)])
        capsys.readouterr()
        sim = tmp_path / "sim.json"
        sim.write_text(json.dumps(
            {"horizon": 10, "init": "neighbourhood:0", "l0": 1.0, "theta_l": 2.0, "alpha": 0.1}))
        out = tmp_path / "traj.csv"
        assert main(["simulate", "elt", "--input", str(net), "--config", str(sim), "--output", str(out)]) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["activation_sets"][0]["plus"] == [0, 1, 2, 18, 19]
        assert len(summary["activation_sets"]) == 11

    def test_simulate_linear_json_format(self, tmp_path, capsys):
        path = self.write_triangle(tmp_path)
        sim = tmp_path / "sim.json"
        sim.write_text(json.dumps({"horizon": 3, "init": "node:0=1.0"}))
        out = tmp_path / "traj.json"
        assert main(["simulate", "linear", "--input", str(path), "--config", str(sim),
                     "--output", str(out), "--format", "json"]) == 0
        doc = json.loads(out.read_text())
        assert doc["states"][1] == [0.0, 1.0, 1.0]

    def test_verify_subcommand_runs_a_suite(self, capsys):
        assert main(["verify", "walks"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 2

    def test_verify_json_format(self, capsys):
        assert main(["verify", "elt", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert [r["passed"] for r in doc] == [True, True]


class TestInitialStateSpecs:
    def test_uniform_and_node_spec(self, triangle_positive):
        from signednet.cli import initial_state

        assert np.allclose(initial_state("uniform", triangle_positive, 0.5, 0), 0.5)
        x = initial_state("node:1=2.5,2=-1", triangle_positive, 1.0, 0)
        assert np.allclose(x, [0.0, 2.5, -1.0])

    def test_bipartition_spec_uses_certificate(self, triangle_two_negative):
        from signednet.cli import initial_state

        x = initial_state("bipartition", triangle_two_negative, 2.0, 0)
        assert np.allclose(x, [2.0, -2.0, -2.0])

    def test_random_spec_is_seeded_unit_l1(self, triangle_positive):
        from signednet.cli import initial_state

        a = initial_state("random", triangle_positive, 1.0, 7)
        b = initial_state("random", triangle_positive, 1.0, 7)
        assert np.array_equal(a, b)
        assert np.abs(a).sum() == pytest.approx(1.0)
