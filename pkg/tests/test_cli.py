"""Command-line interface: formats, exit codes, determinism."""

import json

import pytest

from pascent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_enumerate_lines(capsys):
    code, out = run(capsys, "enumerate", "--p", "1", "--n", "2")
    assert code == 0
    assert out == "0,0\n0,1\n"


def test_enumerate_count_matches_gf(capsys):
    code, out = run(capsys, "enumerate", "--p", "2", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    assert "0,1,0" in lines and "0,2,3" in lines


def test_enumerate_pattern_filter(capsys):
    code, out = run(capsys, "enumerate", "--p", "3", "--n", "4", "--pattern", "00")
    assert code == 0
    assert len(out.splitlines()) == 24


def test_enumerate_json(capsys):
    code, out = run(capsys, "enumerate", "--p", "1", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == [[0, 0], [0, 1]]


def test_enumerate_updown(capsys):
    code, out = run(capsys, "count", "--p", "2", "--n", "3", "--updown")
    assert code == 0
    # up-down 2-ascent sequences of length 3: 010, 020, 021
    assert out == "3\n"


def test_count_primitive(capsys):
    code, out = run(capsys, "count", "--p", "2", "--n", "4", "--primitive")
    assert code == 0
    assert out == "21\n"


def test_series_json_values(capsys):
    code, out = run(capsys, "series", "--gf", "A", "--p", "2", "--order", "6")
    assert code == 0
    obj = json.loads(out)
    assert obj["order"] == 6
    terms = {tuple(e["exp"]): e["coeff"] for e in obj["terms"]}
    assert terms[(6, 0, 0, 1, 0)] == "380"
    assert terms[(6, 0, 0, 6, 0)] == "1"


def test_series_all_one(capsys):
    code, out = run(capsys, "series", "--gf", "R", "--p", "4", "--order", "9",
                    "--set", "all=1")
    assert code == 0
    obj = json.loads(out)
    values = {e["exp"][0]: e["coeff"] for e in obj["terms"]}
    assert [values[n] for n in range(10)] == [
        "1", "1", "4", "20", "110", "670", "4470", "32440", "254490", "2146525"
    ]


def test_series_maxk_k1_equals_R(capsys):
    code_a, out_a = run(capsys, "series", "--gf", "maxk", "--p", "1", "--k", "1",
                        "--order", "5")
    code_b, out_b = run(capsys, "series", "--gf", "R", "--p", "1", "--order", "5")
    assert code_a == code_b == 0
    assert out_a == out_b


def test_series_file_output(tmp_path, capsys):
    target = tmp_path / "series.json"
    code, out = run(capsys, "series", "--gf", "P", "--order", "4", "--out", str(target))
    assert code == 0 and out == ""
    obj = json.loads(target.read_text())
    assert obj["order"] == 4


def test_series_missing_k(capsys):
    code, _ = run(capsys, "series", "--gf", "maxk", "--p", "1", "--order", "4")
    assert code == 2


def test_series_missing_p(capsys):
    code, _ = run(capsys, "series", "--gf", "A", "--order", "4")
    assert code == 2


def test_avoid_both(capsys):
    code, out = run(capsys, "avoid", "--p", "2", "--pattern", "012", "--n", "7", "--both")
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert [r[0] for r in rows] == [str(n) for n in range(1, 8)]
    assert [r[1] for r in rows] == [r[2] for r in rows]
    assert [int(r[2]) for r in rows] == [1, 3, 8, 20, 48, 112, 256]


def test_avoid_closed_p4(capsys):
    code, out = run(capsys, "avoid", "--p", "4", "--pattern", "012", "--n", "10", "--closed")
    assert code == 0
    assert out.splitlines()[-1] == "10 26624"


def test_avoid_default_oracle(capsys):
    code, out = run(capsys, "avoid", "--p", "1", "--pattern", "01", "--n", "5")
    assert code == 0
    assert out == "1 1\n2 1\n3 1\n4 1\n5 1\n"


def test_avoid_closed_unsupported(capsys):
    code, _ = run(capsys, "avoid", "--p", "4", "--pattern", "00", "--n", "5", "--closed")
    assert code == 2


def test_avoid_both_falls_back(capsys):
    code, out = run(capsys, "avoid", "--p", "4", "--pattern", "00", "--n", "5", "--both")
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert [int(r[2]) for r in rows] == [1, 4, 16, 58, 190]


def test_bijection_maps(capsys):
    code, out = run(capsys, "bijection", "--map", "10-to-012", "--seq", "0,1,1,2")
    assert code == 0 and out == "0,2,0,2\n"
    code, out = run(capsys, "bijection", "--map", "012-to-10", "--seq", "0,2,0,2")
    assert code == 0 and out == "0,1,1,2\n"
    code, out = run(capsys, "bijection", "--map", "embed", "--p", "2", "--seq", "0,2,0")
    assert code == 0 and out == "0,1,0,2,0\n"
    code, out = run(capsys, "bijection", "--map", "project", "--p", "2",
                    "--seq", "0,1,0,2,0")
    assert code == 0 and out == "0,2,0\n"


def test_bijection_invalid_input(capsys):
    code, _ = run(capsys, "bijection", "--map", "10-to-012", "--seq", "0,1,0")
    assert code == 2


def test_bfile_A_z1(capsys):
    code, out = run(capsys, "bfile", "--gf", "A", "--p", "2", "--order", "4",
                    "--set", "z=1")
    assert code == 0
    assert out == "1 1\n2 3\n3 11\n4 46\n"


def test_bfile_requires_scalars(capsys):
    code, _ = run(capsys, "bfile", "--gf", "A", "--p", "2", "--order", "4")
    assert code == 2


def test_bfile_avoid(capsys):
    code, out = run(capsys, "bfile", "--avoid", "--p", "2", "--pattern", "10", "--n", "4")
    assert code == 0
    assert out == "1 1\n2 3\n3 8\n4 20\n"


def test_bfile_empty_range(capsys):
    code, out = run(capsys, "bfile", "--avoid", "--p", "2", "--pattern", "10", "--n", "0")
    assert code == 0 and out == ""


def test_bfile_needs_mode(capsys):
    code, _ = run(capsys, "bfile", "--p", "2")
    assert code == 2


def test_verify_single_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "jelinek", "--p", "1", "--order", "12")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["parameters"]["N"] == 12


def test_verify_kernel(capsys):
    code, out = run(capsys, "verify", "--suite", "kernel_G", "--p", "2", "--order", "6")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_oracle_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "oracle_A", "--p", "3", "--order", "6")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_pattern_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "bijection_10_012", "--order", "6")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_unknown_suite(capsys):
    code, _ = run(capsys, "verify", "--suite", "bogus")
    assert code == 2


def test_verify_all_small_budget(capsys):
    code, out = run(capsys, "verify", "--suite", "all", "--budget", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) >= 40
    assert all(json.loads(line)["status"] == "pass" for line in lines)


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--p", "0", "--n", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--p", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_byte_determinism(capsys):
    _, out_a = run(capsys, "series", "--gf", "G", "--p", "2", "--order", "5")
    _, out_b = run(capsys, "series", "--gf", "G", "--p", "2", "--order", "5")
    assert out_a == out_b
