import json
import math

import pytest

from lpenv.cli import main
from lpenv.stepfun import StepFunction


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBound:
    def test_triple_p2(self, capsys):
        code, out, _ = run(capsys, "bound", "-p", "2", "1", "1", "0.5")
        assert code == 0
        obj = json.loads(out)
        assert obj["upper"] == pytest.approx(3.0)
        assert obj["lower"] == pytest.approx(3.0)

    def test_triple_p15(self, capsys):
        code, out, _ = run(capsys, "bound", "-p", "1.5", "1", "1", "0.5")
        assert code == 0
        assert json.loads(out)["upper"] == pytest.approx(2.414213562373095)

    def test_p_zero_exit2(self, capsys):
        code, _, err = run(capsys, "bound", "-p", "0", "1", "1", "0")
        assert code == 2
        assert "error" in err

    def test_cauchy_schwarz_violation_exit2(self, capsys):
        code, _, _ = run(capsys, "bound", "-p", "2", "1", "1", "5")
        assert code == 2

    def test_files(self, tmp_path, capsys):
        fp = tmp_path / "f.json"
        gp = tmp_path / "g.json"
        fp.write_text(StepFunction((0.0, 0.5, 1.0), (2.0, 0.0)).to_json())
        gp.write_text(StepFunction.constant(1.0).to_json())
        code, out, _ = run(capsys, "bound", "-p", "3", "--files", str(fp), str(gp))
        assert code == 0
        obj = json.loads(out)
        assert obj["actual"] == pytest.approx(14.0)
        assert all(m >= -1e-9 for m in obj["margins"].values())

    def test_malformed_json_exit2(self, tmp_path, capsys):
        fp = tmp_path / "f.json"
        fp.write_text("{not json")
        code, _, _ = run(capsys, "bound", "-p", "2", "--files", str(fp), str(fp))
        assert code == 2


class TestExtremal:
    def test_f_pair(self, capsys):
        code, out, _ = run(capsys, "extremal", "-p", "2", "--which", "F",
                           "1", "1", "0.5")
        assert code == 0
        obj = json.loads(out)
        assert obj["achieved"] == pytest.approx(3.0, rel=1e-12)
        assert obj["target"] == pytest.approx(3.0, rel=1e-12)

    def test_g_pair_negative_p_serializes_inf(self, capsys):
        code, out, _ = run(capsys, "extremal", "-p", "-1", "--which", "G",
                           "1", "1", "0.5")
        assert code == 0
        obj = json.loads(out)
        assert "inf" in obj["f"]["values"] or "inf" in obj["g"]["values"]
        assert obj["achieved"] == pytest.approx(0.25, rel=1e-9)


class TestVerify:
    def test_pair_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "pair", "--seed", "7",
                           "--samples", "1100")
        assert code == 0
        assert "violations=0" in out

    def test_sum_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "sum", "--seed", "3",
                           "--samples", "70")
        assert code == 0

    def test_sum_p_neg_counterexample(self, capsys):
        code, out, _ = run(capsys, "verify", "sum", "--p-neg")
        assert code == 0
        assert "lhs=0.33333333333333331" in out
        assert "bound=-1.5" in out

    def test_analysis_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "analysis")
        assert code == 0
        assert "violations=0" in out

    def test_oracle_suite(self, capsys):
        # the 2e-2 accuracy target is calibrated for n = 512
        code, out, _ = run(capsys, "verify", "oracle", "--n", "512")
        assert code == 0

    def test_determinism(self, capsys):
        _, out1, _ = run(capsys, "verify", "pair", "--seed", "42",
                         "--samples", "500")
        _, out2, _ = run(capsys, "verify", "pair", "--seed", "42",
                         "--samples", "500")
        assert out1 == out2


class TestTable:
    def test_csv_columns_and_values(self, tmp_path, capsys):
        out_path = tmp_path / "t.csv"
        code, _, _ = run(capsys, "table", "--p-list", "1.5,3", "--grid", "5",
                         "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert lines[0] == "p,s,z,F,G,upper,lower,carlen"
        row = dict(zip(lines[0].split(","), lines[1].split(",")))
        assert float(row["p"]) == 1.5
        # s = -1 corner: x = 0, y = 2
        assert float(row["s"]) == -1.0
        assert float(row["F"]) == pytest.approx(2.0)

    def test_grid_too_small_exit2(self, capsys):
        code, _, _ = run(capsys, "table", "--p-list", "2", "--grid", "1")
        assert code == 2

    def test_unwritable_path_exit2(self, capsys):
        code, _, _ = run(capsys, "table", "--p-list", "2", "--grid", "3",
                         "--out", "/nonexistent-dir/t.csv")
        assert code == 2

    def test_determinism(self, capsys):
        _, out1, _ = run(capsys, "table", "--p-list", "1.5", "--grid", "6")
        _, out2, _ = run(capsys, "table", "--p-list", "1.5", "--grid", "6")
        assert out1 == out2


class TestOracleCompare:
    def test_csv_shape(self, capsys):
        code, out, _ = run(capsys, "oracle-compare", "-p", "3", "--n", "64",
                           "--grid", "6")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p,s,z,closed_form,oracle,abs_err,N"
        for line in lines[1:]:
            fields = line.split(",")
            assert len(fields) == 7
            assert fields[-1] == "64"
            assert float(fields[5]) < 0.5
