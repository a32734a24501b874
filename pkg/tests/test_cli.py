import json

import pytest
from click.testing import CliRunner

from partfin import suites
from partfin.cli import create_cli


@pytest.fixture
def run():
    cli = create_cli()
    runner = CliRunner()

    def invoke(*args, input=None):
        return runner.invoke(cli, list(args), input=input)

    return invoke


def test_table(run):
    result = run("table", "--max", "5")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[-2].split() == ["5", "326", "52"]
    assert lines[-1] == "PASS"


def test_table_records(run):
    result = run("--format", "records", "table", "--max", "2")
    records = [json.loads(line) for line in result.output.splitlines()]
    assert [r["kind"] for r in records] == ["row", "row", "summary"]
    assert records[0] == {
        "kind": "row", "n": 1, "arrangements": 2, "bell": 1, "enumerated": True, "holds": True,
    }
    assert records[-1]["passed"] is True


def test_table_rejects_zero(run):
    assert run("table", "--max", "0").exit_code == 2


def test_encode_dedekind(run):
    result = run("encode-dedekind", "--base", "x y z", "-M", "4", input="x y x\n")
    assert result.exit_code == 0
    assert result.output == "{x m0 m2} {y m1} {z} {m3}\n"


def test_decode_dedekind(run):
    result = run("decode-dedekind", input="{x m0 m2} {y m1}\n")
    assert result.exit_code == 0
    assert result.output == "x y x\n"


def test_decode_dedekind_outside_image(run):
    result = run("decode-dedekind", input="{m0 m1}\n")
    assert result.exit_code == 2
    assert "not in range" in result.output


def test_unknown_name_is_a_usage_error(run):
    result = run("encode-dedekind", input="x q\n")
    assert result.exit_code == 2
    assert "q" in result.output


def test_encode_bounded(run):
    result = run("encode-bounded", "--n", "1", input="x\n")
    assert result.exit_code == 0
    assert result.output == "{a00 x} {a01 a02} {a10} {a11} {a12} {a20} {a21} {a22}\n"


def test_decode_bounded(run):
    result = run("decode-bounded", "--n", "1", input="{a00 a10} {a11 a12}\n")
    assert result.exit_code == 0
    assert result.output == "a00\n"


def test_bounded_round_trip_through_text(run):
    encoded = run("encode-bounded", "--n", "2", "--plain", "x y", input="y a00\n").output
    decoded = run("decode-bounded", "--n", "2", "--plain", "x y", input=encoded)
    assert decoded.output == "y a00\n"


def test_input_file(run, tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("z z\n")
    result = run("encode-dedekind", "--in", str(path))
    assert result.output == "{x} {y} {z m0 m1} {m2} {m3}\n"


@pytest.mark.parametrize(
    "direction, text, expected",
    [("encode", "1", "3\n"), ("encode", "", "0\n"), ("decode", "2", "0 0\n"), ("decode", "0", "\n")],
)
def test_seqnat(run, direction, text, expected):
    result = run("seqnat", direction, input=text)
    assert result.exit_code == 0
    assert result.output == expected


def test_seqnat_decode_needs_one_number(run):
    assert run("seqnat", "decode", input="1 2").exit_code == 2
    assert run("seqnat", "encode", input="-1").exit_code == 2


def test_diagonal(run):
    result = run("diagonal", "--base", "singleton:m", "--k", "1", "--window", "8")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "G(1) on 0..8: 001111111"
    assert len(lines) == 1 + 5 + 1
    assert all(line.endswith("ok") for line in lines[1:])


def test_diagonal_rejects_unknown_family(run):
    assert run("diagonal", "--base", "primes", "--k", "1").exit_code == 2


def test_fraenkel(run):
    result = run("fraenkel", "--atoms", "6", "--esizes", "1,2", "--b", "2")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("e=1: 2 > 1  injection: NO")
    assert lines[1].startswith("e=2: 5 > 2  injection: NO")
    assert lines[-1] == "PASS"


def test_fraenkel_records(run):
    result = run("--format", "records", "fraenkel", "--atoms", "5", "--esizes", "0", "--b", "2")
    [report, summary] = [json.loads(line) for line in result.output.splitlines()]
    assert report["kind"] == "fraenkel"
    assert report["inequality_claimed"] is False
    assert summary == {"kind": "summary", "passed": True, "atoms": 5, "b": 2}


@pytest.mark.parametrize(
    "args",
    [
        ("--atoms", "7", "--esizes", "1", "--b", "2"),
        ("--atoms", "6", "--esizes", "3", "--b", "3"),
        ("--atoms", "6", "--esizes", "a,b", "--b", "2"),
    ],
)
def test_fraenkel_usage_errors(run, args):
    assert run("fraenkel", *args).exit_code == 2


def test_verify_single_suite(run):
    result = run("verify", "--suite", "dedekind")
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "PASS"


def test_verify_all_is_deterministic(run):
    first = run("verify", "--suite", "all")
    second = run("verify", "--suite", "all")
    assert first.exit_code == 0
    assert first.output == second.output


def test_verify_reports_counterexample(run, monkeypatch):
    def broken(check):
        check(True, "fine")
        check(False, "a(3) != 16")

    monkeypatch.setitem(suites.SUITES, "counting", broken)
    result = run("verify", "--suite", "counting")
    assert result.exit_code == 1
    assert "counterexample: a(3) != 16" in result.output
    assert "(2 checks)" in result.output


def test_unknown_suite(run):
    assert run("verify", "--suite", "nope").exit_code == 2


def test_base_name_colliding_with_marker_is_a_usage_error(run):
    result = run("encode-dedekind", "--base", "x m1", "-M", "2", input="x\n")
    assert result.exit_code == 2
    assert "collide" in result.output


def test_diagonal_lists_every_earlier_diagonal_set(run):
    result = run("diagonal", "--base", "singleton:m", "--k", "40")
    assert result.exit_code == 0
    lines = result.output.splitlines()[1:]
    diagonal = [line for line in lines if line.lstrip().startswith("(1,")]
    assert len(diagonal) == 40
    assert diagonal[-1].lstrip().startswith("(1,39)")
    assert all(line.endswith("ok") for line in lines)
