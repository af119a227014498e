import csv
import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ZERO_ORDINATES
from zetaspec import cli
from zetaspec.report import (CSV_COLUMNS, CheckRecord, VerificationReport, emit_csv, emit_json,
                             format_complex, parse_complex, parse_json)
from zetaspec.suites import SuiteConfig, run_suite


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestComplexText:
    @pytest.mark.parametrize("s,z", [("0.5+3i", 0.5 + 3j), ("-2.5-1i", -2.5 - 1j), ("3i", 3j), ("i", 1j),
                                     ("-i", -1j), ("2", 2 + 0j), ("1e-3+2e2j", 0.001 + 200j), ("1-i", 1 - 1j)])
    def test_parse(self, s, z):
        assert parse_complex(s) == z

    @given(st.complex_numbers(allow_nan=False, allow_infinity=False))
    def test_round_trip(self, z):
        assert parse_complex(format_complex(z)) == z

    def test_reject(self):
        with pytest.raises(ValueError):
            parse_complex("abc")


class TestReport:
    def report(self):
        checks = (
            CheckRecord.make("s", "a", "z=1", 1 + 1j, 1 + 1j, 0.0, 1e-10),
            CheckRecord.make("s", "b", "z=2", 1.0, 1.1, 0.2, 1e-10),
            CheckRecord.make("s", "c", "z=3", 1.0, 1.1, 0.0, 1e-10),
            CheckRecord.make("s", "d", "z=4", 1.0, 1.0, 0.0, 1e-10, converged=False),
        )
        return VerificationReport("s", checks, {"version": "x"}, {"k": [1.5, None]}, 0.25)

    def test_pass_rule(self):
        r = self.report()
        assert [c.passed for c in r.checks] == [True, True, False, False]
        assert not r.all_passed

    def test_json_round_trip(self):
        r = self.report()
        back = parse_json(emit_json(r))
        assert back == r
        assert json.loads(emit_json(r))["schema"] == 1

    def test_csv_columns(self):
        rows = list(csv.reader(io.StringIO(emit_csv(self.report()))))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert all(len(row) == 10 for row in rows)
        assert rows[1][-1] == "true" and rows[3][-1] == "false"

    def test_payload_excludes_wall_time(self):
        assert "wall_time" not in self.report().payload()


class TestSuites:
    def test_deterministic_and_thread_independent(self):
        from concurrent.futures import ThreadPoolExecutor

        cfg = SuiteConfig(zs=(0.5 + 3j, 2 + 1j), xs=(0.5, 2.0))
        a = run_suite("verify-eigen", cfg)
        with ThreadPoolExecutor(3) as pool:
            b = run_suite("verify-eigen", cfg, pool.map)
        assert a.payload() == b.payload()

    def test_zeros_rows(self):
        r = run_suite("zeros", SuiteConfig(t_max=50.0))
        assert len(r.checks) == 10
        assert all(c.abs_err < 1e-10 for c in r.checks)
        for c, t in zip(r.checks, ZERO_ORDINATES):
            assert f"t={t!r}"[:12] in c.inputs

    def test_wkb_notes_record_both_triples(self):
        r = run_suite("verify-wkb", SuiteConfig(Es=(14.0,)))
        note = r.notes["wkb"]["14.0"]
        assert note["printed_matches"] is False
        assert note["series_oracle"][1] == [0.25, 0.0]


class TestMain:
    def test_zeros_csv(self, capsys):
        code, out, _ = run(["zeros", "--t-max", "50", "--format", "csv"], capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 10
        assert all(float(r["abs_err"]) < 1e-10 for r in rows)
        assert [r["input"].split(";")[0] for r in rows] == [f"n={n}" for n in range(1, 11)]

    def test_kubert_example(self, capsys):
        code, out, _ = run(["verify-kubert", "--z", "0.5+3i", "--n-max", "5", "--x", "0.7"], capsys)
        assert code == 0
        d = json.loads(out)
        assert {c["check_id"] for c in d["checks"]} == {"T1", "T2", "T3", "T4", "T5"}

    @pytest.mark.parametrize("argv", [
        ["verify-eigen", "--x", ""],
        ["verify-eigen", "--x-min", "1", "--x-max", "2", "--x-count", "0"],
        ["verify-eigen", "--x-min", "3", "--x-max", "2", "--x-count", "4"],
        ["verify-eigen", "--x-min", "1", "--x-max", "2"],
        ["verify-eigen", "--z", ""],
        ["verify-eigen", "--tol", "-1"],
        ["verify-eigen", "--format", "xml"],
        ["verify-eigen", "--precision", "mp50"],
        ["verify-eigen", "--threads", "0"],
        ["verify-eigen", "--z", "banana"],
        ["no-such-command"],
        [],
    ])
    def test_usage_errors(self, argv, capsys, tmp_path):
        out_file = tmp_path / "r.json"
        code, out, err = run(argv + ["--output", str(out_file)] if argv else argv, capsys)
        assert code == 2
        assert not out_file.exists()
        assert out == ""

    def test_forced_failure(self, capsys):
        code, out, _ = run(["verify-fourier", "--z", "0.5+3i", "--tol", "1e-20", "--format", "csv"], capsys)
        assert code == 1
        assert "false" in out

    def test_non_convergence(self, capsys):
        argv = ["verify-eigen", "--z", "0.5+3i", "--x", "2", "--truncation", "tolerance_driven", "--tol", "1e-30"]
        code, _, err = run(argv, capsys)
        assert code == 3
        assert "convergence" in err

    def test_config_file_and_flag_precedence(self, capsys, tmp_path):
        conf = tmp_path / "run.conf"
        conf.write_text("# suite options\nz = 0.5+3i\nx = 0.7\nn-max = 2\nformat = csv\n")
        code, out, _ = run(["verify-kubert", "--config", str(conf), "--n-max", "3"], capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["check_id"] for r in rows] == ["T1", "T2", "T3"]

    def test_bad_config_key(self, capsys, tmp_path):
        conf = tmp_path / "run.conf"
        conf.write_text("colour = blue\n")
        code, _, _ = run(["verify-kubert", "--config", str(conf)], capsys)
        assert code == 2

    def test_geometric_grid_and_output(self, capsys, tmp_path):
        out_file = tmp_path / "r.json"
        argv = ["verify-eigen", "--z", "2+1i", "--x-min", "1", "--x-max", "100", "--x-count", "3",
                "--x-spacing", "geometric", "--output", str(out_file), "--threads", "2"]
        code, out, _ = run(argv, capsys)
        assert code == 0 and out == ""
        d = json.loads(out_file.read_text())
        xs = sorted({c["inputs"].split("x=")[1] for c in d["checks"]})
        assert xs == ["1.0", "10.0", "100.0"]

    def test_threads_env(self, monkeypatch):
        monkeypatch.setenv("ZETASPEC_THREADS", "3")
        assert cli.make_config(["zeros"]).threads == 3
        assert cli.make_config(["zeros", "--threads", "1"]).threads == 1
