import json

import pytest

from qmds.cli import main

from conftest import REFERENCE_PARAMS


def run_cli(capsys, *argv):
    exit_code = main(list(argv))
    captured = capsys.readouterr()
    return exit_code, captured.out, captured.err


class TestConstruct:
    def test_default_q_is_smallest_prime(self, capsys):
        code_exit, out, _ = run_cli(capsys, "construct", "--n", "3", "--k", "1", "--d", "2")
        assert code_exit == 0
        descriptor = json.loads(out)
        assert descriptor == {"q": 3, "n": 3, "k": 1, "d": 2, "alphas": [0, 1, 2]}

    def test_default_q_skips_composites(self, capsys):
        code_exit, out, _ = run_cli(capsys, "construct", "--n", "4", "--k", "2", "--d", "2")
        assert code_exit == 0
        assert json.loads(out)["q"] == 5

    def test_singleton_violation_exits_2(self, capsys):
        code_exit, _, err = run_cli(capsys, "construct", "--n", "3", "--k", "2", "--d", "2")
        assert code_exit == 2
        assert "k+2(d-1)" in err

    def test_explicit_alphas(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "construct", "--n", "3", "--k", "1", "--d", "2",
            "--q", "7", "--alphas", "2,4,6",
        )
        assert code_exit == 0
        assert json.loads(out)["alphas"] == [2, 4, 6]

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "code.json"
        code_exit, out, _ = run_cli(
            capsys, "construct", "--n", "3", "--k", "1", "--d", "2", "--out", str(path)
        )
        assert code_exit == 0 and out == ""
        assert json.loads(path.read_text())["n"] == 3


class TestProfile:
    def test_csv_size_aggregation(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "profile", "--n", "3", "--k", "1", "--d", "2", "--format", "csv"
        )
        assert code_exit == 0
        assert out == "size,entropy\n0,0\n1,1\n2,2\n3,1\n4,0\n"

    def test_json_entries_all_match(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "profile", "--n", "4", "--k", "2", "--d", "2"
        )
        assert code_exit == 0
        payload = json.loads(out)
        assert len(payload["entries"]) == 32
        assert all(entry["match"] for entry in payload["entries"])
        empty = payload["entries"][0]
        assert empty["subsystem"] == [] and empty["size"] == 0 and empty["entropy"] == 0

    def test_extended_reference_rows_have_null_expectation(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "profile", "--n", "4", "--k", "2", "--d", "2", "--extended-R"
        )
        assert code_exit == 0
        payload = json.loads(out)
        partial = [e for e in payload["entries"] if any(
            lbl.startswith("R") and lbl != "R" for lbl in e["subsystem"]
        )]
        assert len(partial) == 32
        assert all(e["expected"] is None and e["match"] is None for e in partial)

    def test_descriptor_file_input(self, capsys, tmp_path):
        path = tmp_path / "code.json"
        path.write_text(json.dumps({"q": 5, "n": 5, "k": 1, "d": 3}))
        code_exit, out, _ = run_cli(capsys, "profile", "--code", str(path))
        assert code_exit == 0
        assert len(json.loads(out)["entries"]) == 64

    def test_missing_code_source_exits_2(self, capsys):
        code_exit, _, err = run_cli(capsys, "profile", "--n", "3")
        assert code_exit == 2
        assert "--code" in err

    def test_byte_identical_reruns(self, capsys):
        args = ("profile", "--n", "5", "--k", "1", "--d", "3", "--q", "5")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second


class TestVerify:
    @pytest.mark.parametrize("params", REFERENCE_PARAMS)
    def test_smoke_both_oracles(self, capsys, params):
        n, k, d, q = params
        code_exit, out, _ = run_cli(
            capsys, "verify", "--n", str(n), "--k", str(k), "--d", str(d),
            "--q", str(q), "--oracle", "both", "--inequalities",
        )
        assert code_exit == 0
        assert "result: PASS" in out

    def test_reports_oracle_delta(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "verify", "--n", "5", "--k", "1", "--d", "3", "--q", "5",
            "--oracle", "both",
        )
        assert code_exit == 0
        assert "max oracle delta" in out

    def test_lemma_only(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "verify", "--n", "3", "--k", "1", "--d", "2", "--oracle", "lemma"
        )
        assert code_exit == 0
        assert "state-vector" not in out

    def test_tampered_descriptor_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(
            {"q": 3, "n": 3, "k": 1, "d": 2, "alphas": [0, 1, 1]}
        ))
        code_exit, _, err = run_cli(capsys, "verify", "--code", str(path))
        assert code_exit == 2
        assert "distinct" in err

    def test_malformed_json_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code_exit, _, _ = run_cli(capsys, "verify", "--code", str(path))
        assert code_exit == 2

    def test_statevec_memory_guard_exits_2(self, capsys):
        # 7**10 amplitudes exceed the 2**24 guard; the error names the
        # exact oracle as the fallback
        code_exit, _, err = run_cli(
            capsys, "verify", "--n", "7", "--k", "3", "--d", "3", "--q", "7",
            "--oracle", "statevec",
        )
        assert code_exit == 2
        assert "rank-identity" in err

    def test_verification_failure_exits_1(self, capsys, monkeypatch):
        # corrupt one profile entry to drive the (otherwise unreachable
        # for valid codes) failure reporting path
        import qmds.cli as cli_module
        from qmds.entropy import ProfileEntry
        from qmds.entropy import full_profile as real_full_profile

        def corrupted(code):
            profile = real_full_profile(code)
            profile.entries = [
                ProfileEntry(e.spec, e.labels, e.size, e.entropy, e.expected, False)
                if e.labels == ("Q1",)
                else e
                for e in profile.entries
            ]
            return profile

        monkeypatch.setattr(cli_module, "full_profile", corrupted)
        code_exit, out, _ = run_cli(
            capsys, "verify", "--n", "3", "--k", "1", "--d", "2", "--oracle", "lemma"
        )
        assert code_exit == 1
        assert "result: FAIL" in out


class TestDecodeTest:
    def test_all_patterns_3_1_2(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "decode-test", "--n", "3", "--k", "1", "--d", "2", "--all"
        )
        assert code_exit == 0
        lines = [line for line in out.splitlines() if line.startswith("erasures")]
        assert len(lines) == 3
        assert all("fidelity 1.000000000000" in line for line in lines)

    def test_all_patterns_4_2_2(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "decode-test", "--n", "4", "--k", "2", "--d", "2", "--all"
        )
        assert code_exit == 0
        assert out.count("fidelity") == 4

    def test_single_pattern(self, capsys):
        code_exit, out, _ = run_cli(
            capsys, "decode-test", "--n", "5", "--k", "1", "--d", "3", "--q", "5",
            "--erasures", "2,4",
        )
        assert code_exit == 0
        assert "erasures [2, 4]" in out

    def test_wrong_erasure_size_exits_2(self, capsys):
        code_exit, _, err = run_cli(
            capsys, "decode-test", "--n", "3", "--k", "1", "--d", "2",
            "--erasures", "1,2",
        )
        assert code_exit == 2
        assert "d-1=1" in err

    def test_requires_pattern_choice(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["decode-test", "--n", "3", "--k", "1", "--d", "2"])
        assert excinfo.value.code == 2


class TestFigure:
    def test_k1_d2_rows(self, capsys):
        code_exit, out, _ = run_cli(capsys, "figure", "--k", "1", "--d", "2")
        assert code_exit == 0
        assert out == "size,entropy\n0,0\n1,1\n2,2\n3,1\n4,0\n"

    def test_apex_and_endpoints(self, capsys):
        code_exit, out, _ = run_cli(capsys, "figure", "--k", "3", "--d", "4")
        assert code_exit == 0
        rows = [tuple(map(int, line.split(","))) for line in out.splitlines()[1:]]
        apex = 3 + 4 - 1
        assert rows[0] == (0, 0)
        assert rows[-1] == (2 * apex, 0)
        assert (apex, apex) in rows

    def test_bad_params_exit_2(self, capsys):
        assert run_cli(capsys, "figure", "--k", "0", "--d", "2")[0] == 2
        assert run_cli(capsys, "figure", "--k", "1", "--d", "1")[0] == 2

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "figure.csv"
        code_exit, _, _ = run_cli(
            capsys, "figure", "--k", "1", "--d", "2", "--out", str(path)
        )
        assert code_exit == 0
        assert path.read_text().splitlines()[1] == "0,0"


class TestExitCodeContract:
    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_missing_file_exits_2(self, capsys):
        code_exit, _, _ = run_cli(capsys, "profile", "--code", "/nonexistent.json")
        assert code_exit == 2
