import json
import math

import pytest

from umbralint import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestList:
    def test_text_contains_catalog_ids(self, capsys):
        code, out, _ = run(capsys, "list")
        assert code == 0
        assert "eq08_fresnel_bessel" in out
        assert "eq12_struve_halfline" in out

    def test_json_round_trips(self, capsys):
        code, out, _ = run(capsys, "list", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert isinstance(payload, list)
        ids = {entry["id"] for entry in payload}
        assert "eq13_struve_moment" in ids
        for entry in payload:
            assert entry["parameter_domain"]


class TestEval:
    def test_gamma(self, capsys):
        code, out, _ = run(capsys, "eval", "gamma", "0.5")
        assert code == 0
        assert out.splitlines()[0].startswith("1.7724538509")

    def test_struve_moment(self, capsys):
        code, out, _ = run(capsys, "eval", "struve_moment", "0")
        assert code == 0
        assert out.splitlines()[0].startswith("3.14159")

    def test_fresnel_bessel_complex_output(self, capsys):
        code, out, _ = run(capsys, "eval", "fresnel_bessel", "0", "1", "1")
        assert code == 0
        first = out.splitlines()[0]
        assert first.startswith("0.1237")
        assert "+0.4844" in first and first.endswith("i")

    def test_unknown_function_is_usage_error(self, capsys):
        code, _, err = run(capsys, "eval", "zeta", "2")
        assert code == 2
        assert "unknown function" in err

    def test_wrong_arity(self, capsys):
        code, _, err = run(capsys, "eval", "gamma")
        assert code == 2

    def test_domain_error_exit_code(self, capsys):
        code, _, err = run(capsys, "eval", "gamma", "0")
        assert code == 2
        assert "domain error" in err


class TestVerify:
    def test_single_identity_passes(self, capsys, tmp_path):
        out_path = tmp_path / "report.jsonl"
        code, out, err = run(capsys, "verify", "eq30_lorentz_gauss",
                             "--grid", "x=0,1", "--out", str(out_path))
        assert code == 0
        assert "[pass] eq30_lorentz_gauss" in err
        records = [json.loads(line) for line in out_path.read_text().splitlines()]
        assert len(records) == 2
        for record in records:
            assert record["pass"] is True
            assert set(record) == {
                "identity_id", "equation", "point", "closed_form_value",
                "oracle_value", "relative_error", "tolerance", "pass",
                "oracle_cost", "timing", "reason"}
            assert set(record["closed_form_value"]) == {"re", "im"}

    def test_range_grid_syntax(self, capsys, tmp_path):
        out_path = tmp_path / "report.jsonl"
        code, _, _ = run(capsys, "verify", "eq30_lorentz_gauss",
                         "--grid", "x=0:2:3", "--out", str(out_path))
        assert code == 0
        records = [json.loads(line) for line in out_path.read_text().splitlines()]
        assert [r["point"]["x"] for r in records] == [0.0, 1.0, 2.0]

    def test_damped_identity_over_default_tolerance(self, capsys, tmp_path):
        out_path = tmp_path / "report.jsonl"
        code, _, _ = run(capsys, "verify", "eq12_struve_halfline",
                         "--grid", "nu=-0.5", "--grid", "b=1,2",
                         "--out", str(out_path))
        assert code == 0
        records = [json.loads(line) for line in out_path.read_text().splitlines()]
        assert len(records) == 2
        assert all(r["pass"] for r in records)
        assert all(r["oracle_cost"] > 1000 for r in records)

    def test_uncorrected_variant_fails_at_origin(self, capsys, tmp_path):
        out_path = tmp_path / "report.jsonl"
        code, out, _ = run(capsys, "verify", "eq30_lorentz_gauss",
                           "--grid", "x=0", "--variant", "paper-literal",
                           "--out", str(out_path))
        assert code == 1
        record = json.loads(out_path.read_text().splitlines()[0])
        assert record["pass"] is False
        assert record["closed_form_value"]["re"] == pytest.approx(math.pi / 4.0,
                                                                  rel=1e-12)
        assert record["oracle_value"]["re"] == pytest.approx(math.pi / 2.0,
                                                             rel=1e-6)

    def test_domain_violations_are_reported_not_skipped(self, capsys, tmp_path):
        out_path = tmp_path / "report.jsonl"
        code, out, _ = run(capsys, "verify", "eq12_struve_halfline",
                           "--grid", "nu=0.5", "--grid", "b=1",
                           "--out", str(out_path))
        assert code == 1
        record = json.loads(out_path.read_text().splitlines()[0])
        assert record["pass"] is False
        assert "outside domain" in record["reason"]

    def test_unknown_identity_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "eq99_bogus")
        assert code == 2

    def test_bad_grid_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "eq30_lorentz_gauss",
                           "--grid", "x:0,1")
        assert code == 2
        code, _, err = run(capsys, "verify", "eq30_lorentz_gauss",
                           "--grid", "y=1")
        assert code == 2

    def test_unknown_variant_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "eq30_lorentz_gauss",
                           "--variant", "bogus")
        assert code == 2

    def test_csv_format(self, capsys, tmp_path):
        out_path = tmp_path / "report.csv"
        code, _, _ = run(capsys, "verify", "eq30_lorentz_gauss",
                         "--grid", "x=0", "--format", "csv",
                         "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        assert lines[0].startswith("identity_id,")
        assert len(lines) == 2


QUICK_CONFIG = """
# quick grids for a structural whole-catalog run
eq08_fresnel_bessel.grid.nu = 0
eq08_fresnel_bessel.grid.alpha = 1
eq08_fresnel_bessel.grid.beta = 1
eq12_struve_halfline.grid.nu = -0.5
eq12_struve_halfline.grid.b = 1
eq13_struve_moment.grid.nu = 0
eq19_bessel_generating.grid.m = 2
eq19_bessel_generating.grid.x = 0.5
eq19_bessel_generating.grid.t = 0.5
eq28_bessel_gauss_dilation.grid.n = 1
eq28_bessel_gauss_dilation.grid.x = 1
eq30_lorentz_gauss.grid.x = 1
eq02_mellin_exponential.grid.nu = 0.5
eq02_mellin_rational.grid.nu = 0.5
eq31_borel_cosine.grid.x = 0.5
eq35_borel_pseudo_trig3.grid.x = 0.5
eq36_beta_exponential.grid.alpha = 2
eq36_beta_exponential.grid.beta = 3
eq36_beta_exponential.grid.x = 1
"""


class TestVerifyAll:
    def test_whole_catalog_with_config(self, capsys, tmp_path):
        config = tmp_path / "quick.cfg"
        config.write_text(QUICK_CONFIG)
        out_path = tmp_path / "report.jsonl"
        code, out, _ = run(capsys, "verify", "all", "--config", str(config),
                           "--out", str(out_path))
        assert code == 0
        records = [json.loads(line) for line in out_path.read_text().splitlines()]
        # one record per cataloged identity with these one-point grids
        from umbralint.closedforms import CATALOG
        assert len(records) == len(CATALOG)
        assert {r["identity_id"] for r in records} == {d.id for d in CATALOG}
        assert all(r["pass"] for r in records)

    def test_determinism(self, capsys, tmp_path):
        config = tmp_path / "quick.cfg"
        config.write_text(QUICK_CONFIG)
        outputs = []
        for name in ("a.jsonl", "b.jsonl"):
            out_path = tmp_path / name
            code, _, _ = run(capsys, "verify", "eq30_lorentz_gauss",
                             "--config", str(config), "--out", str(out_path))
            assert code == 0
            records = [json.loads(line) for line in out_path.read_text().splitlines()]
            outputs.append([(r["identity_id"], tuple(sorted(r["point"].items())),
                             r["pass"]) for r in records])
        assert outputs[0] == outputs[1]

    def test_config_tolerance_override(self, capsys, tmp_path):
        config = tmp_path / "tol.cfg"
        config.write_text("eq30_lorentz_gauss.tol = 1e-5\n"
                          "eq30_lorentz_gauss.grid.x = 0\n")
        out_path = tmp_path / "report.jsonl"
        code, _, _ = run(capsys, "verify", "eq30_lorentz_gauss",
                         "--config", str(config), "--out", str(out_path))
        assert code == 0
        record = json.loads(out_path.read_text().splitlines()[0])
        assert record["tolerance"] == 1e-5


    def test_report_streams_to_stdout_without_out(self, capsys):
        import json as _json
        code, out, err = run(capsys, "verify", "eq30_lorentz_gauss",
                             "--grid", "x=0")
        assert code == 0
        record = _json.loads(out.strip().splitlines()[0])
        assert record["identity_id"] == "eq30_lorentz_gauss"
        assert "[pass]" in err
