import json
import subprocess
import sys

import pytest

from matula import cli, extremal


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_encode_worked_example(capsys):
    code, out, err = run_cli(capsys, "encode", "((*),(*,*),*)")
    assert (code, out, err) == (0, "42\n", "")


def test_encode_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("*\n(*,*)\n\n((*),(*,*),*)\n"))
    code, out, _ = run_cli(capsys, "encode", "-")
    assert code == 0
    assert out == "1\n4\n42\n"


def test_decode_one(capsys):
    code, out, _ = run_cli(capsys, "decode", "1")
    assert (code, out) == (0, "*\n")


def test_decode_worked_example(capsys):
    code, out, _ = run_cli(capsys, "decode", "42")
    assert (code, out) == (0, "(*,(*),(*,*))\n")


def test_decode_dot(capsys):
    code, out, _ = run_cli(capsys, "decode", "8", "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("->") == 3


def test_round_trip_through_cli(capsys):
    for n in range(1, 1001):
        code, out, _ = run_cli(capsys, "decode", str(n))
        assert code == 0
        code, out2, _ = run_cli(capsys, "encode", out.strip())
        assert code == 0
        assert out2.strip() == str(n)


def test_params_accepts_tree_or_number(capsys):
    code, out, _ = run_cli(capsys, "params", "42")
    assert code == 0
    assert "vertices=7" in out and "leaves=4" in out
    code, out2, _ = run_cli(capsys, "params", "((*),(*,*),*)")
    assert out2 == out


def test_params_json(capsys):
    code, out, _ = run_cli(capsys, "--json", "params", "42")
    record = json.loads(out)
    assert record["vertices"] == 7
    assert record["leaves"] == 4
    assert record["wiener"] == 46


def test_enumerate_lines(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--class", "topological", "--leaves", "4"
    )
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 5
    assert lines == sorted(lines)


def test_enumerate_with_matula(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--class", "binary", "--leaves", "4", "--with-matula"
    )
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0
    assert len(rows) == 2
    assert {row[1] for row in rows} == {"49", "86"}


def test_enumerate_count_only(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--class", "rooted", "--vertices", "5", "--count"
    )
    assert (code, out) == (0, "9\n")


def test_enumerate_cap_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "enumerate", "--class", "topological", "--leaves", "13"
    )
    assert code == 3
    assert "cap" in err


def test_enumerate_cap_override_flag(capsys):
    code, _, err = run_cli(
        capsys,
        "enumerate", "--class", "topological", "--leaves", "4", "--max-leaves", "3",
    )
    assert code == 3
    code, out, _ = run_cli(
        capsys,
        "enumerate", "--class", "rooted", "--vertices", "4", "--max-vertices", "4",
    )
    assert code == 0
    assert len(out.splitlines()) == 4


def test_prime_bound_flag_validation(capsys):
    code, _, err = run_cli(capsys, "--prime-bound", "1", "primes", "nth", "1")
    assert code == 2
    assert "limit_value" in err


def test_seq_q(capsys):
    code, out, _ = run_cli(capsys, "seq", "q", "--max", "6")
    assert code == 0
    assert out == "1\t1\n2\t4\n3\t14\n4\t86\n5\t886\n6\t13766\n"


def test_seq_l_json(capsys):
    code, out, _ = run_cli(capsys, "--json", "seq", "l", "--max", "4")
    values = [json.loads(line)["value"] for line in out.splitlines()]
    assert code == 0
    assert values == ["1", "4", "14", "49"]


def test_primes_queries(capsys):
    assert run_cli(capsys, "primes", "nth", "14")[1] == "43\n"
    assert run_cli(capsys, "primes", "index", "43")[1] == "14\n"
    assert run_cli(capsys, "primes", "pi", "100")[1] == "25\n"


def test_primes_usage_error_on_composite(capsys):
    code, _, err = run_cli(capsys, "primes", "index", "4")
    assert code == 2
    assert "composite" in err


def test_prime_bound_flag_range_exit(capsys):
    code, _, err = run_cli(capsys, "--prime-bound", "100", "primes", "nth", "26")
    assert code == 3
    assert "offending index 26" in err


def test_syntax_error_exit(capsys):
    code, _, err = run_cli(capsys, "encode", "(*,)")
    assert code == 2
    assert "offset" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        cli.run(["no-such-command"])
    assert err.value.code == 2


def test_verify_lemma1(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma1", "--max", "6")
    assert code == 0
    lines = out.splitlines()
    assert all("holds" in line for line in lines)
    for product in ("86", "49", "886", "301", "13766", "3101", "1849"):
        assert any(f" {product} <= " in line for line in lines)


def test_verify_max_topological(capsys):
    code, out, _ = run_cli(capsys, "verify", "max-topological", "--leaves", "5")
    assert code == 0
    assert "maximum=886" in out and "ok" in out


def test_verify_min_binary(capsys):
    code, out, _ = run_cli(capsys, "verify", "min-binary", "--leaves", "6")
    assert code == 0
    assert "minimum=1589" in out
    assert "exhaustive=True" in out


def test_verify_gi_max(capsys):
    code, out, _ = run_cli(capsys, "verify", "gi-max", "--vertices", "6")
    assert code == 0
    assert "maximum=67" in out


def test_verify_prime_bounds(capsys):
    code, out, _ = run_cli(capsys, "verify", "prime-bounds", "--max-m", "2000")
    assert code == 0
    assert "failures=0" in out


def test_verify_failure_trips_exit_4(capsys, monkeypatch):
    real = extremal.exhaustive_max

    def corrupted(spec, oracle=None):
        report = real(spec, oracle)
        return type(report)(
            optimum=report.optimum + 1,
            witness=report.witness,
            examined=report.examined,
            pruned=report.pruned,
            exhaustive=report.exhaustive,
        )

    monkeypatch.setattr(extremal, "exhaustive_max", corrupted)
    monkeypatch.setattr(cli.extremal, "exhaustive_max", corrupted)
    code, out, _ = run_cli(capsys, "verify", "max-topological", "--leaves", "4")
    assert code == 4
    assert "MISMATCH" in out


def test_deterministic_output(capsys):
    first = run_cli(capsys, "enumerate", "--class", "rooted", "--vertices", "6")
    second = run_cli(capsys, "enumerate", "--class", "rooted", "--vertices", "6")
    assert first == second


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "matula.cli", "encode", "((*),(*,*),*)"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout == "42\n"


def test_json_mode_streams_objects(capsys):
    code, out, _ = run_cli(capsys, "--json", "verify", "lemma1", "--max", "4")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert all(rec["holds"] for rec in records)
    assert {(rec["k1"], rec["k2"]) for rec in records} >= {(1, 3), (2, 2)}
