import csv
import io
import json

import numpy as np
import pytest

from skewtmix.cli import main
from skewtmix.config import ConfigError, parse_config
from skewtmix.reports import ReportRow, rows_from_json, rows_to_csv, rows_to_json

CASE1 = {
    "components": [{"mu": [0.3], "scale": [[1.5]], "delta": [0.3], "dof": 3}],
}

MIX_M2 = {
    "components": [
        {"mu": [0.3], "scale": [[1.5]], "delta": [0.3], "dof": 3},
        {"mu": [4.0], "scale": [[5.0]], "delta": [4.0], "dof": 3},
    ],
    "weights": [0.2, 0.8],
}


def write_config(tmp_path, doc, name="model.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestConfig:
    def test_roundtrip_defaults(self):
        cfg = parse_config(CASE1)
        assert cfg.mixture.n_components == 1
        assert cfg.seed == 20240601 and cfg.samples == 1_000_000

    def test_error_paths_are_named(self):
        with pytest.raises(ConfigError, match=r"components\[0\]\.scale"):
            parse_config({"components": [{"mu": [0], "scale": [[1, 2], [2, 1]],
                                          "delta": [0], "dof": 3}]})
        with pytest.raises(ConfigError, match=r"components\[0\]\.dof"):
            parse_config({"components": [{"mu": [0], "scale": [[1]], "delta": [0]}]})
        with pytest.raises(ConfigError, match="weights"):
            parse_config({"components": CASE1["components"] * 2})
        with pytest.raises(ConfigError, match="weights"):
            parse_config({**MIX_M2, "weights": [0.5, 0.6]})

    def test_unknown_fields_rejected(self):
        with pytest.raises(ConfigError, match="unknown"):
            parse_config({**CASE1, "typo": 1})

    def test_quadrature_block(self):
        cfg = parse_config({**CASE1, "quadrature": {"abs_tol": 1e-8, "rel_tol": 1e-8}})
        assert cfg.quadrature.abs_tol == 1e-8


class TestReports:
    def test_json_roundtrip(self):
        rows = [
            ReportRow(case="x", d=1, m=2, dofs=(3.0, 4.0), alpha=2.0,
                      lower=1.0, upper=2.0, approx=1.5, half_width=0.5,
                      oracle=1.4, oracle_se=0.01, reference=1.45,
                      abs_diff=0.05, passed=True),
            ReportRow(case="y", d=2, m=1, dofs=(3.0,), alpha="shannon"),
        ]
        assert rows_from_json(rows_to_json(rows)) == rows

    def test_csv_shape(self):
        rows = [ReportRow(case="x", d=1, m=1, dofs=(3.0,), alpha=2.0, approx=1.23456)]
        text = rows_to_csv(rows)
        parsed = parse_csv(text)
        assert parsed[0]["approx"] == "1.2346"  # four decimals
        assert parsed[0]["alpha"] == "2"
        assert "\r" not in text.splitlines()[0]


class TestEntropyCommand:
    def test_exact_case1(self, tmp_path, capsys):
        cfg = write_config(tmp_path, CASE1)
        code, out, _ = run_cli(capsys, "entropy", cfg, "--alpha", "shannon", "--method", "exact")
        assert code == 0
        row = parse_csv(out)[0]
        assert abs(float(row["approx"]) - 1.9590) <= 0.005

    def test_mc_deterministic_bytes(self, tmp_path, capsys):
        cfg = write_config(tmp_path, CASE1)
        argv = ("entropy", cfg, "--alpha", "2", "--method", "mc",
                "--seed", "42", "--samples", "50000")
        code1, out1, _ = run_cli(capsys, *argv)
        code2, out2, _ = run_cli(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_not_spd_exits_one(self, tmp_path, capsys):
        cfg = write_config(tmp_path, {
            "components": [{"mu": [0, 0], "scale": [[1, 2], [2, 1]], "delta": [0, 0], "dof": 3}],
        })
        code, _, err = run_cli(capsys, "entropy", cfg)
        assert code == 1
        assert "not positive definite" in err

    def test_exact_rejects_mixture(self, tmp_path, capsys):
        cfg = write_config(tmp_path, MIX_M2)
        code, _, err = run_cli(capsys, "entropy", cfg, "--method", "exact")
        assert code == 1
        assert "bounds" in err

    def test_importance_sampling_runs(self, tmp_path, capsys):
        cfg = write_config(tmp_path, CASE1)
        code, out, _ = run_cli(capsys, "entropy", cfg, "--alpha", "2", "--method", "is",
                               "--samples", "50000", "--seed", "5")
        assert code == 0
        row = parse_csv(out)[0]
        assert abs(float(row["approx"]) - 1.6571) <= 0.05


class TestBoundsCommand:
    def test_shannon_reference(self, tmp_path, capsys):
        cfg = write_config(tmp_path, MIX_M2)
        code, out, _ = run_cli(capsys, "bounds", cfg, "--alpha", "shannon")
        assert code == 0
        row = parse_csv(out)[0]
        assert abs(float(row["lower"]) - 2.0984) <= 0.01
        assert abs(float(row["upper"]) - 2.5555) <= 0.01
        assert abs(float(row["approx"]) - 2.3283) <= 0.01

    def test_single_component_degenerate(self, tmp_path, capsys):
        cfg = write_config(tmp_path, CASE1)
        code, out, _ = run_cli(capsys, "bounds", cfg, "--alpha", "2")
        assert code == 0
        row = parse_csv(out)[0]
        assert row["lower"] == row["upper"] == row["approx"]

    def test_non_integer_alpha_rejected(self, tmp_path, capsys):
        cfg = write_config(tmp_path, MIX_M2)
        code, _, err = run_cli(capsys, "bounds", cfg, "--alpha", "2.5")
        assert code == 1
        assert "integer alpha required" in err

    def test_oracle_column(self, tmp_path, capsys):
        cfg = write_config(tmp_path, MIX_M2)
        code, out, _ = run_cli(capsys, "bounds", cfg, "--alpha", "shannon",
                               "--oracle", "--samples", "50000", "--convention", "exact")
        assert code == 0
        row = parse_csv(out)[0]
        oracle = float(row["oracle"])
        assert float(row["lower"]) - 0.05 <= oracle <= float(row["upper"]) + 0.05

    def test_json_output_roundtrip(self, tmp_path, capsys):
        cfg = write_config(tmp_path, MIX_M2)
        code, out, _ = run_cli(capsys, "bounds", cfg, "--alpha", "3", "--out", "json")
        assert code == 0
        rows = rows_from_json(out)
        assert rows == rows_from_json(rows_to_json(rows))


class TestReproduceCommand:
    def test_table1_d1(self, capsys):
        code, out, err = run_cli(capsys, "reproduce", "--table", "1", "--rows", "d=1")
        rows = parse_csv(out)
        assert len(rows) == 7 * 9
        passed = sum(1 for r in rows if r["passed"] == "pass")
        assert passed / len(rows) >= 0.9
        assert code == 0

    def test_table1_d2_informational(self, capsys):
        code, out, _ = run_cli(capsys, "reproduce", "--table", "1", "--rows", "d=2,v=3")
        rows = parse_csv(out)
        assert all(r["passed"] == "" for r in rows)
        assert all(r["reference"] for r in rows)
        assert code == 0

    def test_table3_m2_approx_within_tolerance(self, capsys):
        code, out, _ = run_cli(capsys, "reproduce", "--table", "3", "--rows", "d=1,m=2")
        rows = [r for r in parse_csv(out) if r["case"] == "t3_approx"]
        assert len(rows) == 8
        assert all(abs(float(r["approx"]) - float(r["reference"])) <= 0.02 for r in rows)

    def test_table2_d3_property_mode(self, capsys):
        code, out, _ = run_cli(capsys, "reproduce", "--table", "2", "--rows", "d=3,m=2",
                               "--samples", "50000")
        rows = parse_csv(out)
        assert all(r["case"] == "t2_property" for r in rows)
        assert all(r["reference"] == "" for r in rows)
        assert all(r["oracle"] for r in rows)

    def test_unknown_table(self, capsys):
        code, _, err = run_cli(capsys, "reproduce", "--table", "9")
        assert code != 0

    def test_bad_filter(self, capsys):
        code, _, err = run_cli(capsys, "reproduce", "--table", "1", "--rows", "q=3")
        assert code == 1
        assert "row filter" in err
