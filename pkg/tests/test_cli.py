import json
import subprocess
import sys

import pytest

from cosetforge import cli, codes
from cosetforge.gf2 import Word, make_code, parse_matrix


def run_main(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run_main(capsys, *argv, "--json")
    assert code == cli.EXIT_OK
    return json.loads(out)


@pytest.fixture
def example1_file(tmp_path):
    p = tmp_path / "example1.txt"
    raw = "\n".join(" ".join(r) for r in codes.EXAMPLE1_H)
    p.write_text(f"# six checks on ten bits\n10 6\n{raw}\n")
    return p


def test_parse_args_decode(example1_file):
    cfg = cli.parse_args(["decode", str(example1_file), "--word", "0000110000", "--mode", "testset", "--all-nearest"])
    assert cfg.command == "decode"
    assert cfg.word == Word.from_string("0000110000")
    assert cfg.mode == "testset" and cfg.all_nearest
    assert cfg.code == codes.example1()


def test_builtin_shorthand():
    cfg = cli.parse_args(["builtin", "golay23"])
    assert cfg.command == "stats" and cfg.source == "builtin:golay23"
    cfg = cli.parse_args(["builtin", "rep3", "coset-leaders", "--json"])
    assert cfg.command == "coset-leaders" and cfg.output == "json"
    assert cli.parse_args(["stats", "builtin:hamming7"]).code == codes.hamming7()


@pytest.mark.parametrize(
    "argv",
    [
        ["stats", "no/such/file.txt"],
        ["stats", "builtin:nope"],
        ["decode", "builtin:example1", "--word", "0101"],
        ["decode", "builtin:example1", "--word", "01x1000000"],
        ["coset-leaders", "builtin:example1", "--order", "grlex"],
        ["stats", "builtin:example1", "--max-cosets", "0"],
        ["frobnicate", "builtin:example1"],
        ["builtin"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.parse_args(argv)
    assert exc.value.code == cli.EXIT_USAGE


def test_malformed_and_degenerate_matrices_exit_2(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n110\n")
    zero = tmp_path / "zero.txt"
    zero.write_text("3 1\n000\n")
    for p in (bad, zero):
        with pytest.raises(SystemExit) as exc:
            cli.parse_args(["stats", str(p)])
        assert exc.value.code == cli.EXIT_USAGE


def test_dump_matrix_round_trips(example1_file, capsys):
    code, out, _ = run_main(capsys, "stats", str(example1_file), "--dump-matrix")
    assert code == 0
    assert make_code(parse_matrix(out)) == codes.example1()
    assert parse_matrix(out) == codes.example1().H


def test_stats_example1(capsys):
    report = run_json(capsys, "stats", "builtin:example1")
    assert report["schema"] == cli.SCHEMA_VERSION
    assert report["wdcl"] == [1, 10, 30, 23, 0, 0, 0, 0, 0, 0, 0]
    assert report["num_cosets"] == 64 and report["coset_leaders"] == 118
    assert report["covering_radius"] == report["newton_radius"] == 3
    assert (report["unique_within_t"], report["unique_beyond_t"]) == (11, 19)
    assert report["leader_codewords"] == report["l1"] == 14
    assert report["iterations"] <= report["iteration_bound"]


def test_json_output_is_deterministic(capsys):
    _, first, _ = run_main(capsys, "coset-leaders", "builtin:example1", "--json")
    _, second, _ = run_main(capsys, "coset-leaders", "builtin:example1", "--json")
    assert first == second
    cosets = json.loads(first)["cosets"]
    assert len(cosets) == 64
    assert cosets[14]["leaders"] == ["1000100000", "0100010000", "0010001000", "0001000100"]


def test_coset_leaders_text_listing(capsys):
    code, out, _ = run_main(capsys, "coset-leaders", "builtin:example1", "--stats")
    assert code == 0
    lines = out.splitlines()
    assert "CL_2^1\t[e1+e2, e5+e6]" in lines
    assert "CL_3^23\t[e5+e9+e10]" in lines
    assert any(line.startswith("unique_beyond_t") and line.endswith("19") for line in lines)


def test_leader_codewords_command(capsys):
    report = run_json(capsys, "leader-codewords", "builtin:rep3")
    assert report["counts"] == {"L": 1, "L1": 1}
    assert report["codewords"][0]["word"] == "111"
    report = run_json(capsys, "leader-codewords", "builtin:bch21", "--l1-only")
    assert report["counts"]["L"] == 549
    assert len(report["codewords"]) == report["counts"]["L1"]


@pytest.mark.parametrize("mode", ["table", "testset"])
def test_decode_command(capsys, mode):
    report = run_json(capsys, "decode", "builtin:example1", "--word", "1100111000", "--mode", mode)
    assert report["error"] == "0000001000"
    assert report["codeword"] == "1100110000"
    assert report["unique"] is True and report["distance"] == 1


def test_decode_all_nearest(capsys):
    report = run_json(capsys, "decode", "builtin:example1", "--word", "0000110000", "--all-nearest")
    assert report["unique"] is False
    assert report["all_nearest"] == ["1100000000", "0000110000"]


def test_oracle_check_passes(capsys):
    code, out, _ = run_main(capsys, "oracle-check", "builtin:example1")
    assert code == cli.EXIT_OK
    assert out.splitlines() == ["leaders: PASS", "testset: PASS", "zeroneighbours: PASS"]


def test_oracle_check_reports_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(cli.oracle, "brute_leader_codewords", lambda code: frozenset())
    code, out, _ = run_main(capsys, "oracle-check", "builtin:example1", "--suite", "testset", "--json")
    assert code == cli.EXIT_MISMATCH
    suite = json.loads(out)["suites"]["testset"]
    assert suite["status"] == "FAIL"
    assert suite["counterexample"]["symmetric_difference"]


def test_oracle_check_refuses_large_codes(capsys):
    code, _, err = run_main(capsys, "oracle-check", "builtin:golay23")
    assert code == cli.EXIT_USAGE
    assert "max-oracle-n" in err


def test_guard_exceeded_is_reported(capsys):
    code, _, err = run_main(capsys, "stats", "builtin:golay23", "--max-cosets", "100")
    assert code == cli.EXIT_USAGE
    assert err.startswith("cosetforge:")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cosetforge", "builtin", "rep3", "stats", "--json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["wdcl"] == [1, 3, 0, 0]
