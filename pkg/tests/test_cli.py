"""CLI: exit codes, file formats, determinism, and parity with the library."""

import json
import math

import numpy as np
import pytest

from divinfo.cli import (
    load_distribution,
    load_ensemble,
    main,
    save_distribution,
    save_ensemble,
    sweep_rows_to_csv,
)
from divinfo.errors import InvalidDistributionError
from divinfo.extremal import ExtremalParams, build_profile
from divinfo.measures import Distribution, divergence_uniform, entropy, uniform
from divinfo.verify import SWEEP_CSV_HEADER, sweep


class TestDistributionIO:
    def test_round_trip_bit_exact(self, tmp_path):
        rng = np.random.default_rng(1)
        dist = Distribution(rng.exponential(1.0, 17), normalize=True)
        path = tmp_path / "d.json"
        save_distribution(dist, path)
        assert load_distribution(path) == dist

    def test_round_trip_uniform(self, tmp_path):
        path = tmp_path / "u.json"
        save_distribution(uniform(4), path)
        assert load_distribution(path) == uniform(4)

    def test_rejects_bad_sum(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 2, "p": [0.5, 0.3]}')
        with pytest.raises(InvalidDistributionError):
            load_distribution(path)

    def test_rejects_negative_entry(self, tmp_path):
        path = tmp_path / "neg.json"
        path.write_text('{"n": 2, "p": [1.1, -0.1]}')
        with pytest.raises(InvalidDistributionError):
            load_distribution(path)

    def test_rejects_shape_mismatch(self, tmp_path):
        path = tmp_path / "shape.json"
        path.write_text('{"n": 3, "p": [0.5, 0.5]}')
        with pytest.raises(ValueError):
            load_distribution(path)

    def test_ensemble_round_trip(self, tmp_path):
        from divinfo.measures import Ensemble

        ens = Ensemble([0.25, 0.75], [Distribution([0.5, 0.5]), Distribution([0.9, 0.1])])
        path = tmp_path / "e.json"
        save_ensemble(ens, path)
        loaded = load_ensemble(path)
        assert np.array_equal(loaded.matrix, ens.matrix)
        assert loaded.weights == ens.weights


class TestConstruct:
    def test_writes_distribution_and_sidecar(self, tmp_path):
        out = tmp_path / "p.json"
        assert main(["construct", "--n", "64", "--k", "1", "--out", str(out)]) == 0
        dist = load_distribution(out)
        prof = build_profile(ExtremalParams(64, 1.0))
        assert dist == prof.dist
        sidecar = json.loads((tmp_path / "p.sidecar.json").read_text())
        assert sidecar["n"] == 64
        assert sidecar["k"] == 1.0
        assert sidecar["crossover"] == 32
        assert sidecar["theorem_regime"] is True
        assert sidecar["f_lower"] == pytest.approx(-2.202402429027872)
        assert sidecar["f_upper"] == pytest.approx(2.791759469228055)

    def test_stdout_payload(self, capsys):
        assert main(["construct", "--n", "8", "--k", "1"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["sidecar"]["crossover"] == 4
        assert len(payload["distribution"]["p"]) == 8

    def test_missing_argument_is_usage_error(self, capsys):
        assert main(["construct", "--n", "8"]) == 2


class TestMeasure:
    def test_matches_library(self, tmp_path, capsys):
        dist = Distribution([0.7, 0.2, 0.1])
        path = tmp_path / "d.json"
        save_distribution(dist, path)
        assert main(["measure", "--in", str(path)]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["entropy"] == entropy(dist)
        assert result["divergence_uniform"] == divergence_uniform(dist)

    def test_malformed_json_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["measure", "--in", str(path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_invalid_distribution_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 2, "p": [0.4, 0.4]}')
        assert main(["measure", "--in", str(path)]) == 2


class TestEnsembleCommand:
    def test_matches_library(self, tmp_path, capsys):
        from divinfo.extremal import cyclic_ensemble
        from divinfo.measures import holevo_information

        ens = cyclic_ensemble(Distribution([0.7, 0.2, 0.1]))
        path = tmp_path / "e.json"
        save_ensemble(ens, path)
        assert main(["ensemble", "--in", str(path)]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["holevo"] == holevo_information(ens)
        assert result["divergence"] == pytest.approx(0.7492725295239786, abs=1e-12)
        assert result["m"] == 3


class TestVerifyCommand:
    def test_distribution_all_pass(self, capsys):
        assert main(["verify", "--theorem", "distribution", "--n", "64", "--k", "1"]) == 0
        reports = json.loads(capsys.readouterr().out)
        assert len(reports) == 3 + 1
        assert all(r["pass"] for r in reports)

    def test_out_of_regime_is_input_error(self, capsys):
        assert main(["verify", "--theorem", "distribution", "--n", "4", "--k", "1"]) == 2

    def test_ensemble_theorem(self, capsys):
        assert main(["verify", "--theorem", "ensemble", "--n", "64", "--k", "1"]) == 0

    def test_ub_with_generated_ensemble(self, capsys):
        assert main(["verify", "--theorem", "ub", "--n", "16", "--seed", "3"]) == 0
        reports = json.loads(capsys.readouterr().out)
        assert reports[0]["name"] == "holevo-divergence-tradeoff"

    def test_ub_with_file(self, tmp_path, capsys):
        from divinfo.extremal import cyclic_ensemble

        ens = cyclic_ensemble(Distribution([0.7, 0.2, 0.1]))
        path = tmp_path / "e.json"
        save_ensemble(ens, path)
        assert main(["verify", "--theorem", "ub", "--in", str(path)]) == 0

    def test_majorization(self, capsys):
        assert main(["verify", "--theorem", "majorization", "--n", "32", "--seed", "9"]) == 0

    def test_quantum(self, capsys):
        assert main(["verify", "--theorem", "quantum", "--n", "5", "--seed", "2"]) == 0

    def test_missing_required_option(self, capsys):
        assert main(["verify", "--theorem", "distribution"]) == 2

    def test_failure_exit_code_with_impossible_tolerance(self, capsys):
        # a negative tolerance fails every check; reports must still emit
        code = main(
            ["verify", "--theorem", "distribution", "--n", "64", "--k", "1",
             "--tol", "-1"]
        )
        assert code == 1
        reports = json.loads(capsys.readouterr().out)
        assert reports and not all(r["pass"] for r in reports)
        assert all(r["tol"] == -1 for r in reports)

    def test_all_aggregates_battery(self, capsys):
        # the battery carries one known-red check (the theta-ratio trend),
        # so aggregation must emit everything and exit 1
        code = main(["verify", "--theorem", "all"])
        reports = json.loads(capsys.readouterr().out)
        assert code == 1
        assert {r["criterion"] for r in reports} == {
            "1-oracle-equivalence", "2-extremal-distribution-grid",
            "3-extremal-ensemble", "4-theta-trend", "5-holevo-bound-sampler",
            "6-majorization-sampler", "7-pair-relations", "8-quantum",
            "9-solver", "10-tradeoff-calculator",
        }
        failing = [r["name"] for r in reports if not r["pass"]]
        assert failing == ["theta-strictly-increasing"]


class TestSweepCommand:
    def test_csv_shape_and_header(self, tmp_path):
        out = tmp_path / "s.csv"
        assert main(["sweep", "--n", "64,256", "--k", "0.5,1", "--out", str(out)]) == 0
        text = out.read_text()
        lines = text.split("\n")
        assert lines[0] == SWEEP_CSV_HEADER
        assert len(lines) == 1 + 4 + 1  # header, four rows, trailing newline
        assert text.endswith("\n")

    def test_byte_identical_runs(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["sweep", "--n", "64,256", "--k", "0.5,1", "--out", str(a)])
        main(["sweep", "--n", "64,256", "--k", "0.5,1", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_rows_match_library(self, tmp_path):
        out = tmp_path / "s.csv"
        main(["sweep", "--n", "64", "--k", "1", "--out", str(out)])
        line = out.read_text().split("\n")[1]
        row = sweep([64], [1.0])[0]
        fields = line.split(",")
        assert int(fields[0]) == row.n
        assert float(fields[1]) == row.k
        assert float(fields[2]) == row.s1  # repr round-trips exactly
        assert int(fields[3]) == row.crossover
        assert float(fields[4]) == row.divergence
        assert fields[9] == "true"

    def test_header_only_for_empty_grid(self):
        assert sweep_rows_to_csv([]) == SWEEP_CSV_HEADER + "\n"

    def test_nan_row_renders(self, capsys):
        assert main(["sweep", "--n", "4", "--k", "0.25"]) == 0
        out = capsys.readouterr().out
        assert "nan" in out.split("\n")[1]

    def test_json_format(self, capsys):
        assert main(["sweep", "--n", "64", "--k", "1", "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert rows[0]["crossover"] == 32


class TestQscCommand:
    def test_values(self, capsys):
        assert main(["qsc", "--n-bits", "100", "--b", "10"]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["asymptotic"] == pytest.approx(90.0, abs=1e-3)
        assert result["divergence"] == pytest.approx(47.4670016771568, abs=1e-3)
        assert result["holevo"] == pytest.approx(45.287187078897965, abs=1e-3)

    def test_invalid_query(self, capsys):
        assert main(["qsc", "--n-bits", "0", "--b", "1"]) == 2


class TestCliSurface:
    def test_unknown_command_is_usage_error(self):
        assert main(["frobnicate"]) == 2

    def test_help_exits_zero(self):
        assert main(["--help"]) == 0

    def test_float_repr_round_trip(self):
        # the CSV serializer uses repr(): shortest string that round-trips
        value = 0.1 + 0.2
        assert float(repr(value)) == value
        row_text = sweep_rows_to_csv(sweep([64], [1.0]))
        parsed = row_text.split("\n")[1].split(",")
        assert float(parsed[5]) == sweep([64], [1.0])[0].rel_entropy
