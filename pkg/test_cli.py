import json

import pytest

from cli import main, render
from errors import CertificateError
from hc_classification import OrbitDescriptor, classify
from permutations import Perm


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rs_text_and_json(capsys):
    code, out, _ = run(capsys, "rs", "4,2,1,3")
    assert code == 0
    assert "P=[[1,3],[2],[4]]" in out
    assert "Q=[[1,4],[2],[3]]" in out

    code, out, _ = run(capsys, "--format", "json", "rs", "4213")
    assert code == 0
    assert json.loads(out) == {
        "P": {"shape": [2, 1, 1], "rows": [[1, 3], [2], [4]]},
        "Q": {"shape": [2, 1, 1], "rows": [[1, 4], [2], [3]]},
        "shape": [2, 1, 1],
    }


def test_format_flag_after_command(capsys):
    code, out, _ = run(capsys, "rs", "4,2,1,3", "--format", "json")
    assert code == 0
    assert json.loads(out)["shape"] == [2, 1, 1]


def test_canonical(capsys):
    code, out, _ = run(capsys, "canonical", "--p", "2", "--q", "2", "--m", "1")
    assert code == 0
    assert "w=4,2,1,3 σ=2,4,3,1" in out

    code, out, _ = run(capsys, "--format", "json", "canonical", "--p", "2", "--q", "2", "--m", "1")
    data = json.loads(out)
    assert data["w"] == "4,2,1,3"
    assert data["sigma"] == "2,4,3,1"
    assert data["w_inverse"] == "3,2,4,1"
    assert data["mate"] == "3,2,1,4"


def test_count(capsys):
    code, out, _ = run(capsys, "--format", "json", "count", "--n", "6", "--p", "3", "--q", "3")
    assert code == 0
    data = json.loads(out)
    assert [(r["m"], r["cell_size"]) for r in data["rows"]] == [(0, 1), (1, 5), (2, 9), (3, 5)]
    assert data["total"] == data["expected"] == 20
    assert data["identity"]["holds"] is True

    code, out, _ = run(capsys, "count", "--n", "6", "--p", "3", "--q", "3")
    assert "total 20 = 6!/(3!3!) = 20" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "--format", "json", "classify", "4,2,1,3")
    assert code == 0
    assert out.strip() == (
        '{"w":"4,2,1,3","shape":[2,1,1],"signatures":'
        '[{"p":2,"q":2,"m":1,"orbit":"O_1(2,2)","dim":3,"cell_size":3}]}'
    )

    code, out, _ = run(capsys, "classify", "3412")
    assert "not a highest-weight Harish-Chandra module for any (p,q)" in out


def test_certify_and_smooth(capsys):
    code, out, _ = run(capsys, "--format", "json", "certify", "3,4,1,2")
    assert json.loads(out) == {
        "w": "3,4,1,2", "verdict": "GoodFullCellMate",
        "witness": {"u": "3,1,4,2", "size": [2, 2]},
    }

    code, out, _ = run(capsys, "--format", "json", "smooth", "3,4,1,2")
    assert json.loads(out) == {
        "w": "3,4,1,2", "smooth": False,
        "pattern": {"pattern": "3,4,1,2", "positions": [1, 2, 3, 4]},
    }

    code, out, _ = run(capsys, "smooth", "4213")
    assert "smooth" in out and "singular" not in out


def test_cells_one_object_per_line(capsys):
    code, out, _ = run(capsys, "--format", "json", "cells", "3,4,1,2")
    lines = out.strip().splitlines()
    assert [json.loads(line) for line in lines] == [{"w": "3,4,1,2"}, {"w": "3,1,4,2"}]


def test_syt(capsys):
    code, out, _ = run(capsys, "--format", "json", "syt", "--shape", "2,2,1")
    assert json.loads(out) == {"shape": [2, 2, 1], "count": 5}

    code, out, _ = run(capsys, "--format", "json", "syt", "--shape", "2,2", "--enumerate")
    assert [json.loads(line)["rows"] for line in out.strip().splitlines()] == [
        [[1, 2], [3, 4]], [[1, 3], [2, 4]],
    ]


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--check", "rs_roundtrip", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert [c["cases"] for c in data["checks"]] == [2, 6, 24]

    code, out, _ = run(capsys, "verify", "--n", "3", "--check", "rs_roundtrip")
    assert code == 0
    assert "rs_roundtrip" in out and "PASS" in out


def test_verify_failure_exits_one(capsys, monkeypatch):
    import verify_harness
    patched = [
        verify_harness.CheckSpec(s.name, s.cases, lambda w: False, s.describe)
        if s.name == "rs_roundtrip" else s
        for s in verify_harness.CHECKS
    ]
    monkeypatch.setattr(verify_harness, "CHECKS", patched)
    code, out, _ = run(capsys, "verify", "--n", "2", "--check", "rs_roundtrip")
    assert code == 1
    assert "FAIL" in out
    assert "replay: python cli.py rs 1,2" in out


def test_inconsistent_certificate_exits_one(capsys, monkeypatch):
    import cli

    def broken(w):
        raise CertificateError(f"certificate HCModule for {w} failed re-validation")

    monkeypatch.setattr(cli, "certify", broken)
    code, out, err = run(capsys, "certify", "3,5,2,4,1")
    assert code == 1
    assert out == ""
    assert "error: certificate HCModule" in err


@pytest.mark.parametrize("argv", [
    ["rs", "4,2,2,3"],
    ["rs", "²1"],
    ["canonical", "--p", "2", "--q", "2", "--m", "3"],
    ["count", "--n", "5", "--p", "2", "--q", "2"],
    ["syt", "--shape", "1,2"],
    ["verify", "--n", "12"],
])
def test_library_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error: " in err


def test_usage_errors_exit_two(capsys):
    code, out, err = run(capsys, "frobnicate")
    assert code == 2
    assert out == ""
    assert "usage" in err

    code, _, _ = run(capsys, "verify", "--check", "no_such_check")
    assert code == 2


def test_parse_error_names_position(capsys):
    _, _, err = run(capsys, "rs", "4,2,2,3")
    assert "duplicate value 2 at position 3" in err


def test_render_orbit_descriptor():
    orbit = OrbitDescriptor(2, 2, 1)
    assert render(orbit, "text") == "O̅_1(2,2), dim 3"
    assert render(orbit, "json") == '{"p":2,"q":2,"m":1,"dim":3}'


def test_json_output_round_trips():
    text = render(classify(Perm((4, 2, 1, 3))), "json")
    assert json.dumps(json.loads(text), separators=(",", ":"), ensure_ascii=False) == text
