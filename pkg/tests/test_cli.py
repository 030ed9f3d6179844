import io
import json
import sys
import xml.etree.ElementTree as ET

import pytest

import lehmerpark.enumeration as enumeration
from lehmerpark.cli import main


def run_cli(capsys, *argv, stdin=None, monkeypatch=None, expect=0):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    captured = capsys.readouterr()
    assert code == expect, captured.err
    return captured


def test_park_single_value(capsys):
    out = run_cli(capsys, "park", "5,2,4,2,1,1").out
    assert out == '{"outcome":[5,2,4,3,1,6]}\n'


def test_park_failure(capsys):
    out = run_cli(capsys, "park", "2,2,3").out
    assert out == '{"failed_car":3}\n'


def test_park_json_array_value(capsys):
    out = run_cli(capsys, "park", "[2,2,1]").out
    assert out == '{"outcome":[3,1,2]}\n'


def test_park_stdin_lines(capsys, monkeypatch):
    out = run_cli(capsys, "park", stdin="2,2,1\n2,2,3\n", monkeypatch=monkeypatch).out
    assert out == '{"outcome":[3,1,2]}\n{"failed_car":3}\n'


def test_check_kinds(capsys):
    assert json.loads(run_cli(capsys, "check", "parking-function", "2,2,1").out)["ok"] is True
    assert json.loads(run_cli(capsys, "check", "parking-function", "2,2,3").out)["ok"] is False
    assert json.loads(run_cli(capsys, "check", "lehmer", "3,2,1").out)["ok"] is True
    assert json.loads(run_cli(capsys, "check", "lehmer", "1,3,1").out)["ok"] is False
    assert json.loads(run_cli(capsys, "check", "weakly-decreasing", "3,3,1").out)["ok"] is True
    assert json.loads(run_cli(capsys, "check", "outcome-membership", "3,4,1,5,2,6").out)["ok"] is True
    assert json.loads(run_cli(capsys, "check", "outcome-membership", "3,4,1,6,2,5").out)["ok"] is False


def test_invtable_both_directions(capsys):
    out = run_cli(capsys, "invtable", "to-table", "5,2,4,6,1,3").out
    assert out == '{"table":[4,1,3,1,0,0]}\n'
    out = run_cli(capsys, "invtable", "from-table", "[4,1,3,1,0,0]").out
    assert out == '{"perm":[5,2,4,6,1,3]}\n'


def test_invtable_pipeline_feeds_itself(capsys, monkeypatch):
    table_line = run_cli(capsys, "invtable", "to-table", "5,2,4,6,1,3").out
    out = run_cli(capsys, "invtable", "from-table", stdin=table_line, monkeypatch=monkeypatch).out
    assert out == '{"perm":[5,2,4,6,1,3]}\n'


def test_phi(capsys):
    out = run_cli(capsys, "phi", "3,4,1,5,2,6").out
    assert out == '{"n":6,"F":[1,2,5],"L":[4,5,6]}\n'


def test_to_gbsp(capsys):
    out = run_cli(capsys, "to-gbsp", "3,4,1,5,2,6").out
    assert out == '{"n":6,"F":[1,2,5],"L":[4,5,6],"g":{"3":2,"4":1,"6":1}}\n'


def test_from_gbsp_grammar_and_json(capsys):
    assert run_cli(capsys, "from-gbsp", "(_ (_ 2 1) (_) 1)").out == '{"outcome":[3,4,1,5,2,6]}\n'
    gbsp_json = '{"n":6,"F":[1,2,5],"L":[4,5,6],"g":{"3":2,"4":1,"6":1}}'
    assert run_cli(capsys, "from-gbsp", gbsp_json).out == '{"outcome":[3,4,1,5,2,6]}\n'


def test_to_partition(capsys):
    out = run_cli(capsys, "to-partition", "3,4,1,5,2,6").out
    assert out == '{"blocks":[[1,4],[2,3,6],[5]]}\n'


def test_from_partition_text_and_json(capsys):
    assert run_cli(capsys, "from-partition", "{1,4}|{2,3,6}|{5}").out == '{"outcome":[3,4,1,5,2,6]}\n'
    assert run_cli(capsys, "from-partition", '{"blocks":[[1,4],[2,3,6],[5]]}').out == (
        '{"outcome":[3,4,1,5,2,6]}\n'
    )


def test_fiber_count_and_members(capsys):
    base = "(_ (_ _ _) (_) _)"
    assert run_cli(capsys, "fiber", "--count", base).out == "4\n"
    lines = run_cli(capsys, "fiber", base).out.splitlines()
    assert len(lines) == 4
    members = {tuple(json.loads(line)["outcome"]) for line in lines}
    assert (3, 4, 1, 5, 2, 6) in members


def test_fiber_rejects_gbsp_input(capsys):
    captured = run_cli(capsys, "fiber", "(_ (_ 2 1) (_) 1)", expect=1)
    assert json.loads(captured.err.strip())["code"] == "domain"


def test_enumerate_lehmer(capsys):
    assert run_cli(capsys, "enumerate", "lehmer", "--n", "2").out == "[1,1]\n[2,1]\n"


def test_enumerate_outcomes_sorted(capsys):
    out = run_cli(capsys, "enumerate", "outcomes", "--n", "3").out
    assert out == (
        '{"outcome":[1,2,3]}\n'
        '{"outcome":[2,1,3]}\n'
        '{"outcome":[2,3,1]}\n'
        '{"outcome":[3,1,2]}\n'
        '{"outcome":[3,2,1]}\n'
    )


def test_enumerate_counts_match_formulas(capsys):
    for kind, n, expected in (
        ("partitions", 4, 15),
        ("bsp", 4, 14),
        ("gbsp", 4, 15),
        ("lehmer", 4, 24),
        ("outcomes", 4, 15),
    ):
        lines = run_cli(capsys, "enumerate", kind, "--n", str(n)).out.splitlines()
        assert len(lines) == expected, kind


def test_count_verbs(capsys):
    assert run_cli(capsys, "count", "outcomes", "--n", "6").out == "203\n"
    assert run_cli(capsys, "count", "bell", "--n", "10").out == "115975\n"
    assert run_cli(capsys, "count", "catalan", "--n", "9").out == "4862\n"


def test_partition_pipeline_is_identity(capsys, monkeypatch):
    partitions = run_cli(capsys, "enumerate", "partitions", "--n", "5").out
    outcomes = run_cli(capsys, "from-partition", stdin=partitions, monkeypatch=monkeypatch).out
    back = run_cli(capsys, "to-partition", stdin=outcomes, monkeypatch=monkeypatch).out
    assert back == partitions
    assert len(partitions.splitlines()) == 52


def test_gbsp_pipeline_is_identity(capsys, monkeypatch):
    outcomes = run_cli(capsys, "enumerate", "outcomes", "--n", "5").out
    gbsps = run_cli(capsys, "to-gbsp", stdin=outcomes, monkeypatch=monkeypatch).out
    back = run_cli(capsys, "from-gbsp", stdin=gbsps, monkeypatch=monkeypatch).out
    assert back == outcomes


def test_verify_pass(capsys):
    captured = run_cli(capsys, "verify", "thm2.4", "--n-max", "4")
    report = json.loads(captured.out)
    assert report["pass"] is True and report["theorem"] == "thm2.4"
    assert report["n_max"] == 4 and report["objects_checked"] > 0
    assert "thm2.4" in captured.err and "pass" in captured.err


def test_verify_default_n_max(capsys):
    captured = run_cli(capsys, "verify", "lemma3.13")
    report = json.loads(captured.out)
    assert report["pass"] is True
    assert report["n_max"] == enumeration.default_n_max("lemma3.13")


def test_verify_discrepancy_exits_2(capsys, monkeypatch):
    monkeypatch.setitem(
        enumeration._CHECKS,
        "lemma3.4",
        ("planted failure", 3, lambda n: (1, [f"bad at n={n}"] if n == 2 else [])),
    )
    captured = run_cli(capsys, "verify", "lemma3.4", expect=2)
    report = json.loads(captured.out)
    assert report["pass"] is False and report["discrepancies"] == ["bad at n=2"]
    assert "FAIL" in captured.err and "bad at n=2" in captured.err


def test_verify_unknown_theorem_exits_1(capsys):
    captured = run_cli(capsys, "verify", "thm9.9", expect=1)
    assert captured.out == ""


def test_render_armleg_ascii(capsys):
    out = run_cli(capsys, "render", "armleg", "3,4,1,5,2,6").out
    assert out.splitlines()[0] == "- - - - - o"
    assert len(out.splitlines()) == 6


def test_render_armleg_diagram_json(capsys):
    out = run_cli(capsys, "render", "armleg", '{"n":3,"points":[[1,3],[3,2]]}').out
    assert out == "o . .\n. - o\n. . |\n"


def test_render_svg_after_flags(capsys):
    out = run_cli(capsys, "render", "armleg", "--format", "svg", "3,4,1,5,2,6").out
    root = ET.fromstring(out)
    assert root.tag.endswith("svg")
    out = run_cli(capsys, "render", "paren", "--format", "svg", "(_ (_ 2 1) (_) 1)").out
    assert ET.fromstring(out).tag.endswith("svg")


def test_render_paren_ascii(capsys):
    out = run_cli(capsys, "render", "paren", "(_ (_ 2 1) (_) 1)").out
    assert out == "(_ (_ 2 1) (_) 1)\n 1  2 3 4   5  6\n"


def test_domain_error_json_on_stderr(capsys):
    captured = run_cli(capsys, "park", "9,9", expect=1)
    assert captured.out == ""
    err = json.loads(captured.err.strip())
    assert err["code"] == "domain" and "outside" in err["error"]


def test_gbsp_error_carries_code_and_space(capsys):
    captured = run_cli(capsys, "from-gbsp", "(_ 5)", expect=1)
    err = json.loads(captured.err.strip())
    assert err["code"] == "g-out-of-range" and err["space"] == 2


def test_parse_error_carries_position(capsys):
    captured = run_cli(capsys, "render", "paren", "(_ _ x)", expect=1)
    err = json.loads(captured.err.strip())
    assert err["code"] == "parse" and err["position"] == 3


def test_usage_errors_exit_1(capsys):
    assert main(["no-such-verb"]) == 1
    capsys.readouterr()
    assert main(["park", "1,1", "extra", "junk"]) == 1
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_outcome_membership_gate_on_transform(capsys):
    captured = run_cli(capsys, "to-gbsp", "3,4,1,6,2,5", expect=1)
    err = json.loads(captured.err.strip())
    assert "arm-leg" in err["error"]
