import json
import os

import pytest
from click.testing import CliRunner

from dppstats.cli import cli


@pytest.fixture()
def runner():
    return CliRunner()


def csv_rows(text):
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    header = lines[0].split(",")
    return header, [ln.split(",") for ln in lines[1:]]


class TestVarianceCommand:
    def test_ground_level_value(self, runner):
        result = runner.invoke(cli, ["variance", "--nu", "1", "--m", "0", "--r", "0.5"])
        assert result.exit_code == 0
        header, rows = csv_rows(result.output)
        assert header == ["r", "value", "error_estimate", "route"]
        assert len(rows) == 1
        assert rows[0][3] == "int1"
        assert float(rows[0][1]) == pytest.approx(0.266667, abs=1e-5)

    def test_both_disc_routes_agree(self, runner):
        result = runner.invoke(cli, ["variance", "--nu", "1.6", "--m", "0",
                                     "--r", "0.6", "--route", "both"])
        assert result.exit_code == 0
        _, rows = csv_rows(result.output)
        assert [row[3] for row in rows] == ["int1", "int3"]
        assert float(rows[0][1]) == pytest.approx(float(rows[1][1]), rel=1e-6)

    def test_both_planar_routes_agree(self, runner):
        result = runner.invoke(cli, ["variance", "--euclidean", "--n", "0",
                                     "--r", "1", "--route", "both"])
        assert result.exit_code == 0
        _, rows = csv_rows(result.output)
        assert [row[3] for row in rows] == ["shirai", "geometric"]
        assert float(rows[0][1]) == pytest.approx(float(rows[1][1]), rel=1e-6)

    def test_radius_sweep_row_per_radius(self, runner):
        result = runner.invoke(cli, ["variance", "--nu", "1", "--m", "0",
                                     "--r", "0.3", "--r", "0.6"])
        _, rows = csv_rows(result.output)
        assert [float(row[0]) for row in rows] == [0.3, 0.6]

    def test_invalid_nu_exits_2(self, runner):
        result = runner.invoke(cli, ["variance", "--nu", "0.4", "--m", "0", "--r", "0.5"])
        assert result.exit_code == 2
        assert "1/2" in result.stderr

    def test_missing_level_exits_2(self, runner):
        result = runner.invoke(cli, ["variance", "--r", "0.5"])
        assert result.exit_code == 2

    def test_wrong_route_for_geometry_exits_2(self, runner):
        result = runner.invoke(cli, ["variance", "--nu", "1", "--m", "0",
                                     "--r", "0.5", "--route", "shirai"])
        assert result.exit_code == 2

    def test_unreachable_tolerance_exits_3(self, runner):
        result = runner.invoke(cli, ["asymptotics", "--nu", "1", "--m", "0",
                                     "--r", "0.9", "--abs-tol", "1e-300",
                                     "--rel-tol", "1e-30"])
        assert result.exit_code == 3

    def test_json_format(self, runner):
        result = runner.invoke(cli, ["variance", "--nu", "1", "--m", "0",
                                     "--r", "0.5", "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["command"] == "variance"
        assert payload["rows"][0]["route"] == "int1"
        assert payload["rows"][0]["value"] == pytest.approx(4.0 / 15.0, rel=1e-5)

    def test_csv_byte_stability(self, runner):
        args = ["variance", "--nu", "1.6", "--m", "1", "--r", "0.4"]
        out1 = runner.invoke(cli, args).output
        out2 = runner.invoke(cli, args).output
        assert out1 == out2


class TestAsymptoticsCommand:
    def test_ground_level_constant_column(self, runner):
        result = runner.invoke(cli, ["asymptotics", "--nu", "1", "--m", "0",
                                     "--r", "0.9", "--r", "0.99"])
        assert result.exit_code == 0
        assert "warning" not in result.stderr
        header, rows = csv_rows(result.output)
        assert header == ["r", "scaled_variance", "constant", "ratio"]
        assert rows[-1][0] == "limit"
        for row in rows[:-1]:
            assert float(row[2]) == pytest.approx(0.5, abs=1e-8)
        assert float(rows[-1][2]) == pytest.approx(0.5, abs=1e-8)

    def test_ratio_monotone_toward_one(self, runner):
        result = runner.invoke(cli, ["asymptotics", "--nu", "2", "--m", "1",
                                     "--r", "0.9", "--r", "0.99"])
        _, rows = csv_rows(result.output)
        ratios = [float(row[3]) for row in rows if row[0] != "limit"]
        assert abs(ratios[0] - 1) > abs(ratios[1] - 1)

    def test_json_includes_bound(self, runner):
        result = runner.invoke(cli, ["asymptotics", "--nu", "1", "--m", "0",
                                     "--r", "0.9", "--format", "json"])
        payload = json.loads(result.output)
        assert payload["constant"] <= payload["bound"]


class TestDistributionCommand:
    def test_ground_level_variance(self, runner):
        result = runner.invoke(cli, ["distribution", "--nu", "1", "--r", "0.5",
                                     "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["variance"] == pytest.approx(4.0 / 15.0, abs=1e-10)
        assert sum(payload["pmf"]) == pytest.approx(1.0, abs=1e-12)
        assert payload["route"] == "series"

    def test_csv_pmf_and_moment_comments(self, runner):
        result = runner.invoke(cli, ["distribution", "--nu", "1", "--r", "0.5"])
        assert result.exit_code == 0
        header, rows = csv_rows(result.output)
        assert header == ["n", "probability"]
        assert sum(float(row[1]) for row in rows) == pytest.approx(1.0, abs=1e-12)
        comments = [ln for ln in result.output.splitlines() if ln.startswith("#")]
        assert any(ln.startswith("# mean=") for ln in comments)
        assert any(ln.startswith("# variance=") for ln in comments)

    def test_generating_function_values(self, runner):
        result = runner.invoke(cli, ["distribution", "--nu", "1.5", "--r", "0.7",
                                     "--s", "0.25", "--format", "json"])
        payload = json.loads(result.output)
        entry = payload["generating_function"][0]
        assert entry["s"] == 0.25
        import numpy as np
        pmf = np.array(payload["pmf"])
        dual = float((pmf * 1.25 ** np.arange(len(pmf))).sum())
        assert entry["value"] == pytest.approx(dual, rel=1e-9)

    def test_seeded_sampling_reproducible(self, runner):
        args = ["distribution", "--nu", "1.5", "--r", "0.7", "--samples", "5000",
                "--seed", "3", "--format", "json"]
        h1 = json.loads(runner.invoke(cli, args).output)["samples"]["histogram"]
        h2 = json.loads(runner.invoke(cli, args).output)["samples"]["histogram"]
        assert h1 == h2

    def test_invalid_radius_exits_2(self, runner):
        result = runner.invoke(cli, ["distribution", "--nu", "1", "--r", "1.0"])
        assert result.exit_code == 2


class TestContractionCommand:
    def test_single_scale(self, runner):
        result = runner.invoke(cli, ["contraction", "--m", "0", "--r", "1",
                                     "--scale", "4"])
        assert result.exit_code == 0
        header, rows = csv_rows(result.output)
        assert header == ["scale", "scaled_variance", "euclidean_target", "ratio"]
        assert float(rows[0][3]) == pytest.approx(1.0, abs=0.05)

    def test_invalid_scale_exits_2(self, runner):
        result = runner.invoke(cli, ["contraction", "--m", "0", "--r", "1",
                                     "--scale", "0.5"])
        assert result.exit_code == 2

    def test_json_format(self, runner):
        result = runner.invoke(cli, ["contraction", "--m", "0", "--r", "1",
                                     "--scale", "4", "--format", "json"])
        payload = json.loads(result.output)
        assert payload["route"] == "int1"
        row = payload["rows"][0]
        assert row["ratio"] == pytest.approx(
            row["scaled_variance"] / row["euclidean_target"], rel=1e-12)


class TestOutputFiles:
    def test_output_file_written_atomically(self, runner, tmp_path):
        target = tmp_path / "out.csv"
        result = runner.invoke(cli, ["variance", "--nu", "1", "--m", "0",
                                     "--r", "0.5", "--output", str(target)])
        assert result.exit_code == 0
        text = target.read_text()
        assert text.startswith("r,value,error_estimate,route\n")
        leftovers = [p for p in os.listdir(tmp_path) if p.endswith(".tmp")]
        assert leftovers == []

    def test_no_file_on_validation_failure(self, runner, tmp_path):
        target = tmp_path / "out.csv"
        result = runner.invoke(cli, ["variance", "--nu", "0.3", "--m", "0",
                                     "--r", "0.5", "--output", str(target)])
        assert result.exit_code == 2
        assert not target.exists()

    def test_output_dir_environment_variable(self, runner, tmp_path):
        result = runner.invoke(
            cli,
            ["variance", "--nu", "1", "--m", "0", "--r", "0.5",
             "--output", "rel.csv"],
            env={"DPPSTATS_OUTPUT_DIR": str(tmp_path)})
        assert result.exit_code == 0
        assert (tmp_path / "rel.csv").exists()
