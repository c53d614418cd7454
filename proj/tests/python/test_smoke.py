import json
import os

import jsonschema
import pytest

import downup


def test_normal_form_frozen_example():
    out = downup.normal_form("downup", "alpha=2,beta=-1,gamma=0", "d*d*u")
    assert out == "2*d*u*d - u*d*d"


def test_normal_form_indeterminate_mode():
    out = downup.normal_form("qplane", "q=q", "b*a")
    assert out == "1/q*a*b"


def test_confluence_all_presentations():
    assert downup.confluence("downup", "alpha=2,beta=-1,gamma=1")
    assert downup.confluence("qplane", "q=2/3")
    assert downup.confluence("qweyl", "q=q")


def test_hom_cases():
    a = downup.hom_case("a", "3", "-2", "2", "1")
    assert a["ok"]
    assert a["target"] == "qplane"
    assert a["image_d"] == "a"

    b = downup.hom_case("b", "5", "-6", "2", "3")
    assert b["ok"]
    assert b["target"] == "qweyl"
    assert b["image_d"] == "-1/2*a"
    assert b["target_q"] == "2"


def test_hom_rejects_bad_roots():
    with pytest.raises(downup.DownupError):
        downup.hom_case("a", "3", "-2", "2", "2")


def test_witness_chain():
    wit = downup.witness("qwa-essential", "2/3", "w(4)")
    assert wit["operator"] == "b - 243/16"
    assert wit["factors"] == ["b - 243/16"]
    assert wit["result"] == "v(0)"

    simple = downup.witness("qp-simple", "q", "v(2) - q*v(0)")
    assert simple["result"] == "v(0)"


def test_orbit_machinery():
    table = downup.lambda_table("zeta:4", "1", "0", "1", 8)
    assert table[0] == "0"
    assert table[1] == "1"
    assert len(table) == 9

    form = downup.closed_form("2", "1", "0", "1")
    n = 5
    # evaluate (c1 + c2*n)*r^n + lambda_star over plain fractions
    from fractions import Fraction

    c1, c2, star = (Fraction(form[k]) for k in ("c1", "c2", "lambda_star"))
    values = [Fraction(v) for v in downup.lambda_table("2", "1", "0", "1", n)]
    assert (c1 + c2 * n) * Fraction(2) ** n + star == values[n]

    per = downup.periodicity("zeta:4", "0", "0", "0")
    assert per["order"] == 4
    assert per["periodic"]

    assert downup.centrality("zeta:4", "1", 4)
    assert not downup.centrality("zeta:4", "1", 3)


def test_classify_frozen_rows():
    fails = downup.classify("3", "-2", "0", "1", "2")
    assert fails["status"] == "FAILS"
    assert fails["rationale"] == "quantum-plane"
    assert fails["witness"]["target_q"] == "2"

    holds = downup.classify("2", "-1", "0", "1", "1")
    assert holds["status"] == "HOLDS"
    assert holds["witness"] is None

    opened = downup.classify("3", "-2", "1", "1", "2")
    assert opened["status"] == "OPEN"


def test_error_translation():
    with pytest.raises(downup.DownupError, match="missing parameter"):
        downup.normal_form("downup", "alpha=2", "d")
    with pytest.raises(downup.DownupError, match="at position 3"):
        downup.normal_form("downup", "alpha=2,beta=-1,gamma=0", "d*)")


def _schema():
    schema_dir = os.environ.get("DOWNUP_SCHEMA_DIR")
    if not schema_dir:
        schema_dir = os.path.join(os.path.dirname(__file__), "..", "..", "schema")
    with open(os.path.join(schema_dir, "report.schema.json")) as f:
        return json.load(f)


def test_run_reports_validate_against_schema():
    schema = _schema()
    invocations = [
        ["--format", "json", "nf", "--algebra", "downup", "--params",
         "alpha=2,beta=-1,gamma=0", "--expr", "d*d*u"],
        ["--format", "json", "witness", "qwa-essential", "--q", "2/3",
         "--element", "w(4)"],
        ["--format", "json", "module-check", "qp", "--q", "2/3",
         "--range", "5", "--draws", "5"],
        ["--format", "json", "classify", "--alpha", "3", "--beta", "-2",
         "--gamma", "0", "--root-r", "2", "--root-s", "1"],
        ["--format", "json", "centrality", "--r", "-1", "--gamma", "1",
         "--power", "1"],
    ]
    for args in invocations:
        code, output = downup.run(args)
        doc = json.loads(output)
        jsonschema.validate(doc, schema)
        assert code == doc["exit_status"]


def test_run_is_deterministic():
    args = ["--format", "json", "--seed", "7", "module-check", "qwa",
            "--q", "5", "--range", "6", "--draws", "8"]
    first = downup.run(args)
    second = downup.run(args)
    assert first == second
    assert first[0] == 0


def test_run_usage_error():
    code, output = downup.run(["bogus"])
    assert code == 1
    assert "usage error" in output
