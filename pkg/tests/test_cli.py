import csv
import json
from pathlib import Path

import pytest

from hyposhift.cli import EXPERIMENTS, main, parse_config, run_experiment
from hyposhift.errors import ConfigError
from hyposhift.reporting import (
    VerificationReport,
    make_bound_check,
    make_check,
    write_checks_csv,
    write_grid_csv,
    write_report,
)
from hyposhift.principal import constant_grid

CONFIG_DIR = Path(__file__).resolve().parents[1] / "configs"


class TestParseConfig:
    def test_rejects_bad_json(self):
        with pytest.raises(ConfigError):
            parse_config("{not json")

    def test_rejects_unknown_experiment(self):
        with pytest.raises(ConfigError, match="unknown name"):
            parse_config('{"experiment": "nope"}')

    def test_rejects_small_truncation(self):
        with pytest.raises(ConfigError, match="truncation"):
            parse_config('{"experiment": "pincus-check", "truncation": 4}')

    def test_rejects_bad_lambda(self):
        with pytest.raises(ConfigError, match="lam"):
            parse_config(
                '{"experiment": "t-lambda-trace", "model": {"kind": "rational", "lambda": 0.5}}'
            )

    def test_t_lambda_requires_rational(self):
        with pytest.raises(ConfigError, match="rational"):
            parse_config('{"experiment": "t-lambda-trace", "model": {"kind": "unilateral"}}')

    def test_helton_howe_requires_polynomials(self):
        with pytest.raises(ConfigError, match="p/q"):
            parse_config('{"experiment": "helton-howe"}')

    def test_rejects_c_out_of_range(self):
        with pytest.raises(ConfigError, match="c_values"):
            parse_config('{"experiment": "theorem-inequality", "c_values": [1.5]}')

    def test_rejects_bad_point_shape(self):
        with pytest.raises(ConfigError, match="points"):
            parse_config('{"experiment": "pincus-check", "points": [[1.0]]}')

    def test_parses_full_config(self):
        cfg = parse_config(
            json.dumps(
                {
                    "experiment": "helton-howe",
                    "model": {"kind": "unilateral"},
                    "truncation": 64,
                    "grid": {"n_r": 32, "n_theta": 32},
                    "p": [[0, 1, 1.0, 0.0]],
                    "q": [[1, 0, 1.0, 0.0]],
                    "tolerance": 1e-4,
                }
            )
        )
        assert cfg.truncation == 64
        assert cfg.n_r == 32
        assert cfg.p.as_dict() == {(0, 1): 1.0}

    def test_all_bundled_configs_parse(self):
        paths = sorted(CONFIG_DIR.glob("*.json"))
        assert len(paths) == 8
        for path in paths:
            cfg = parse_config(path.read_text())
            assert cfg.experiment in EXPERIMENTS


class TestRunExperiment:
    def test_theorem_inequality_report(self):
        cfg = parse_config('{"experiment": "theorem-inequality", "c_values": [0.5, 1.0]}')
        report = run_experiment(cfg)
        assert report.all_pass
        assert report.experiment == "theorem-inequality"
        assert report.parameters == {"c_values": [0.5, 1.0]}

    def test_berger_shaw_report(self):
        cfg = parse_config('{"experiment": "berger-shaw-putnam"}')
        report = run_experiment(cfg)
        assert report.all_pass
        assert len(report.checks) == 2


class TestReporting:
    def test_make_check_exact_mode(self):
        assert make_check("x", 1, 1, 0.0).passed
        assert not make_check("x", 1, 2, 0.0).passed

    def test_make_bound_check(self):
        assert make_bound_check("b", 1.0, 1.0, 1e-12).passed
        assert not make_bound_check("b", 1.1, 1.0, 1e-12).passed

    def test_json_shape(self, tmp_path):
        report = VerificationReport(
            experiment="demo",
            parameters={"n": 8},
            checks=[make_check("a", 1 + 2j, 1 + 2j, 1e-9)],
            runtime_ms=12.5,
        )
        path = tmp_path / "r.json"
        write_report(report, str(path))
        data = json.loads(path.read_text())
        assert data["all_pass"] is True
        assert data["checks"][0]["lhs"] == [1.0, 2.0]
        assert data["checks"][0]["pass"] is True
        assert data["runtime_ms"] == 12.5

    def test_csv_header(self, tmp_path):
        report = VerificationReport(
            experiment="demo", parameters={}, checks=[make_check("a", 1, 1, 1e-9)]
        )
        path = tmp_path / "r.csv"
        write_checks_csv(report, str(path))
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["name", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "tol", "pass"]
        assert len(rows) == 2

    def test_grid_csv(self, tmp_path):
        path = tmp_path / "g.csv"
        write_grid_csv(constant_grid(1.0, 2, 3), str(path))
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["r", "theta", "re", "im", "g"]
        assert len(rows) == 7


class TestMain:
    def run_config(self, tmp_path, payload, csv_out=False):
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text(json.dumps(payload))
        out = tmp_path / "out.json"
        argv = ["run", "--config", str(cfg_path), "--out", str(out)]
        if csv_out:
            argv += ["--csv", str(tmp_path / "out.csv")]
        return main(argv), out

    def test_run_success(self, tmp_path, capsys):
        code, out = self.run_config(
            tmp_path, {"experiment": "berger-shaw-putnam"}, csv_out=True
        )
        assert code == 0
        assert json.loads(out.read_text())["all_pass"] is True
        assert (tmp_path / "out.csv").exists()
        lines = capsys.readouterr().out.strip().splitlines()
        assert all(line.startswith("[PASS]") for line in lines)

    def test_run_failing_check_exits_one(self, tmp_path, capsys):
        code, out = self.run_config(
            tmp_path, {"experiment": "berger-shaw-putnam", "area": 1.0}
        )
        assert code == 1
        assert "[FAIL]" in capsys.readouterr().out

    def test_run_invalid_config_exits_two(self, tmp_path):
        code, _ = self.run_config(tmp_path, {"experiment": "nope"})
        assert code == 2

    def test_run_missing_file_exits_two(self, tmp_path):
        code = main(
            ["run", "--config", str(tmp_path / "missing.json"), "--out", str(tmp_path / "o.json")]
        )
        assert code == 2

    def test_list_names_all_experiments(self, capsys):
        assert main(["list"]) == 0
        out = capsys.readouterr().out
        for name in EXPERIMENTS:
            assert name in out

    def test_grid_subcommand(self, tmp_path):
        out = tmp_path / "grid.csv"
        code = main(
            [
                "grid",
                "--experiment",
                "pincus-check",
                "--out",
                str(out),
                "--n-r",
                "4",
                "--n-theta",
                "8",
            ]
        )
        assert code == 0
        with open(out, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["r", "theta", "re", "im", "g"]
        assert len(rows) == 1 + 4 * 8
        # the whole open disc carries principal value 1
        assert all(row[4] == "1.0" for row in rows[1:])

    def test_grid_bad_lambda_exits_two(self, tmp_path):
        code = main(
            [
                "grid",
                "--experiment",
                "pincus-check",
                "--out",
                str(tmp_path / "g.csv"),
                "--model-lambda",
                "0.5",
            ]
        )
        assert code == 2
