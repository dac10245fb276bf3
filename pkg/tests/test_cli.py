"""Command-line front end: parsing, commands, exit codes, JSON output."""

import json

import pytest

from greenring.cli import eval_as_green, eval_as_module, main, parse_expr
from greenring.errors import ExprSyntaxError
from greenring.indec import IndecLabel, realize


def test_parse_expr_shapes():
    e = parse_expr("2*P(0) + dual(O(+1,0)) * V(1)")
    assert e.kind == "sum"
    with pytest.raises(ExprSyntaxError):
        parse_expr("P(0) +")
    with pytest.raises(ExprSyntaxError):
        parse_expr("Q(0)")
    with pytest.raises(ExprSyntaxError):
        parse_expr("P(0) P(1)")


def test_eval_consistency():
    e = parse_expr("V(1) * (P(0) + 2*V(0))")
    mod = eval_as_module(e, "K2")
    green = eval_as_green(e, "K2")
    assert mod.dim == sum(l.dim() * c for l, c in green.coeffs.items())


def test_fuse_agreement(capsys):
    assert main(["fuse", "O(+1,0) * M(2,0,1)"]) == 0
    out = capsys.readouterr().out
    assert "oracle:" in out and "closed form:" in out
    assert out.count("2*P(1) + M(2,1,1)") == 2


def test_fuse_json(capsys):
    assert main(["--algebra", "DK1", "--json", "fuse", "St(0) * St(0)"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["agreement"] is True
    assert payload["result"] == [{"coeff": 1, "label": "P(1)"}]


def test_green_mul(capsys):
    assert main(["green-mul", "O(+1,0) * O(+1,0)"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "P(0) + O(+2,0)"


def test_identify_roundtrip(tmp_path, capsys):
    mod = realize(IndecLabel.parse("M(2,1,2/3)"), "K2")
    path = tmp_path / "mod.json"
    path.write_text(json.dumps(mod.to_json_dict()))
    assert main(["identify", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "M(2,1,2/3)"


def test_identify_missing_file(capsys):
    assert main(["identify", "/nonexistent/mod.json"]) == 2


def test_ideal_closure_and_contains(tmp_path, capsys):
    assert main(["ideal", "closure", "M(2,0,0)", "M(1,0,inf)"]) == 0
    spec_text = capsys.readouterr().out
    path = tmp_path / "spec.json"
    path.write_text(spec_text)
    assert main(["ideal", "contains", str(path), "M(1,1,0) + 3*P(0)"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["ideal", "contains", str(path), "V(0)"]) == 0
    assert capsys.readouterr().out.strip() == "false"


def test_ideal_contains_usage_error():
    assert main(["ideal", "contains"]) == 2


def test_negligible_and_qdim(capsys):
    assert main(["negligible", "P(0) + M(1,0,1)"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["negligible", "V(1)"]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert main(["qdim", "O(+2,1)"]) == 0
    assert capsys.readouterr().out.strip() == "-1"
    assert main(["qdim", "2*V(1) * V(1)"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_auslander(capsys):
    assert main(["auslander", "2"]) == 0
    assert "isomorphism verified" in capsys.readouterr().out


def test_verify_single_suite(capsys):
    assert main(["verify", "--suite", "hopf"]) == 0
    out = capsys.readouterr().out
    assert "overall: PASS" in out


def test_parse_error_exit_code(capsys):
    assert main(["fuse", "P(0) *"]) == 2
    assert main(["green-mul", "St(0)"]) == 2  # St invalid over K2
    assert main(["qdim", "V(7)"]) == 2


def test_usage_error_exit_code():
    assert main(["no-such-command"]) == 2
    assert main([]) == 2
