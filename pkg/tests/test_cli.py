import json

import pytest

from patternsort import bijections, machine, sequences
from patternsort.cli import main
from patternsort.perms import format_perm


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_simulate_exact_bytes(capsys):
    code, out, err = run(capsys, "simulate", "--sigma", "132", "--perm", "2 4 1 3")
    assert code == 0
    assert out == "s_sigma: 4 3 1 2\nsortable: true\n"
    assert err == ""


def test_simulate_trace(capsys):
    code, out, _ = run(capsys, "simulate", "--perm", "2413", "--trace")
    lines = out.splitlines()
    assert lines[0] == "s_sigma: 4 3 1 2"
    assert lines[2] == "PUSH 2 | stack: 2"
    assert lines[-1] == "POP 2 | stack: (empty)"


def test_sortable(capsys):
    code, out, _ = run(capsys, "sortable", "--perm", "132")
    assert code == 0 and out == "false\n"
    code, out, _ = run(capsys, "sortable", "--perm", "2413")
    assert code == 0 and out == "true\n"


def test_enumerate_count(capsys):
    code, out, _ = run(
        capsys, "enumerate", "sortable", "--sigma", "132", "--n", "5", "--count-only"
    )
    assert code == 0
    assert out == "51\n"


def test_enumerate_items_match_library(capsys):
    code, out, _ = run(capsys, "enumerate", "sortable", "--n", "4")
    assert code == 0
    want = [format_perm(p) for p in machine.enumerate_sortable(4, (1, 3, 2))]
    assert out.splitlines() == want


def test_map_phi_golden(capsys):
    code, out, _ = run(
        capsys, "map", "phi", "--perm", "13 14 15 10 12 6 7 8 11 9 3 1 4 5 2"
    )
    assert code == 0
    assert out == "111223332345445\n"


def test_map_names_and_aliases(capsys):
    code, out, _ = run(capsys, "map", "sortable-to-rgf", "--perm", "2 1")
    assert (code, out) == (0, "12\n")
    code, out, _ = run(capsys, "map", "phi-inverse", "--rgf", "12")
    assert (code, out) == (0, "2 1\n")
    code, out, _ = run(capsys, "map", "psi", "--rgf", "121")
    assert (code, out) == (0, "UUDUDD\n")
    code, out, _ = run(capsys, "map", "psi-inverse", "--path", "UUDUDD")
    assert (code, out) == (0, "121\n")
    code, out, _ = run(capsys, "map", "gamma", "--rgf", "12321")
    assert (code, out) == (0, "12231\n")
    code, out, _ = run(capsys, "map", "nr-to-av321", "--rgf", "121314234")
    assert (code, out) == (0, "3 5 1 7 2 9 4 6 8\n")


def test_map_beta_with_mode(capsys):
    code, out, _ = run(
        capsys, "map", "beta", "--path", "H0 H1 U U D H2 H0 D H0 H0", "--mode", "stack"
    )
    assert (code, out) == (0, "12134435367\n")
    code, out, _ = run(
        capsys, "map", "beta-inverse", "--rgf", "12134435367", "--mode", "stack"
    )
    assert (code, out) == (0, "H0 H1 U U D H2 H0 D H0 H0\n")


def test_map_json_record(capsys):
    code, out, _ = run(
        capsys, "map", "gamma", "--rgf", "12321", "--json", "--steps"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["input"] == "12321"
    assert doc["output"] == "12231"
    assert doc["statistics"]["max"] == 3
    assert doc["steps"] == [[3, 4, 5]]


def test_map_missing_input_is_usage_error(capsys):
    code, _, err = run(capsys, "map", "phi", "--rgf", "12")
    assert code == 2
    assert "requires --perm" in err


def test_decompose(capsys):
    code, out, _ = run(
        capsys, "decompose", "--perm", "13 14 15 10 12 6 7 8 11 9 3 1 4 5 2"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "perm: 13 14 15 10 12 6 7 8 11 9 3 1 4 5 2"
    assert lines[1] == "minima: 13 10 6 3 1"
    assert "C(1,1)=14,15" in lines[3]


def test_table_narayana(capsys):
    code, out, _ = run(capsys, "table", "narayana", "--n", "4")
    assert code == 0
    assert out == "k,value\n1,1\n2,6\n3,6\n4,1\n"


def test_table_sortable_by_minima(capsys):
    code, out, _ = run(capsys, "table", "sortable-by-minima", "--n", "3")
    assert code == 0
    assert out == "k,count\n1,1\n2,3\n3,1\n"


def test_table_bfile(capsys):
    code, out, _ = run(capsys, "table", "a007317", "--n", "3", "--format", "bfile")
    assert code == 0
    assert out == "1 1\n2 2\n3 5\n"


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "narayana", "--n", "4", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["rows"] == [[1, 1], [2, 6], [3, 6], [4, 1]]


def test_verify_scope(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "sequences", "--nmax", "5")
    assert code == 0
    lines = out.splitlines()
    assert all(l.startswith("pass ") for l in lines[:-1])
    assert "checks passed" in lines[-1]


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "sequences", "--nmax", "4", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] is True
    assert all(c["passed"] for c in doc["checks"])


def test_export_trace_json(capsys):
    code, out, _ = run(capsys, "export", "trace", "--perm", "2413", "--format", "json")
    doc = json.loads(out)
    assert doc["output"] == "4 3 1 2"
    assert doc["events"][0] == {"op": "PUSH", "value": 2, "stack": [2]}


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "sortable", "--perm", "2413", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "true\n"


def test_usage_errors(capsys):
    code, _, _ = run(capsys, "simulate", "--perm", "not a perm")
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2
    code, _, _ = run(capsys, "enumerate", "sortable", "--n", "25")
    assert code == 2  # over the default cap


def test_cap_precedence(capsys, monkeypatch):
    monkeypatch.setenv("PATTERNSORT_CAP", "4")
    code, _, err = run(capsys, "enumerate", "sortable", "--n", "5", "--count-only")
    assert code == 2 and "cap" in err
    code, out, _ = run(
        capsys, "enumerate", "sortable", "--n", "5", "--count-only", "--cap", "6"
    )
    assert code == 0 and out == "51\n"


def test_deterministic_output(capsys):
    a = run(capsys, "enumerate", "rgf", "--n", "4")
    b = run(capsys, "enumerate", "rgf", "--n", "4")
    assert a == b


def test_thin_adapter(capsys):
    # the CLI answer equals the direct library composition, byte for byte
    _, out, _ = run(capsys, "map", "phi", "--perm", "5 6 3 1 4 2")
    from patternsort.rgf import format_rgf

    assert out.rstrip("\n") == format_rgf(bijections.sortable_to_rgf((5, 6, 3, 1, 4, 2)))
    _, out, _ = run(capsys, "sortable", "--perm", "5 6 3 1 4 2")
    assert (out.rstrip("\n") == "true") == machine.is_sigma_sortable((5, 6, 3, 1, 4, 2))
