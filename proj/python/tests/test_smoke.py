from pathlib import Path

import pytest

import sck

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


@pytest.fixture
def example1():
    kb = sck.load_files([FIXTURES / "example1.sck"])
    kb.saturate()
    return kb


def test_saturate_reports_rounds():
    kb = sck.load_files([FIXTURES / "example1.sck"])
    stats = kb.saturate()
    assert stats["facts_asserted"] == 7
    assert stats["facts_derived"] == 38
    assert len(kb) == 45


def test_query_roles_in_university(example1):
    rows = example1.query("play(Lucy, ?r, u, ?t)")
    assert [r["r"] for r in rows] == ["staff", "teacher"]
    assert example1.query("hasR(University, ?r)") == [{"r": "staff"}, {"r": "student"}, {"r": "teacher"}]


def test_virtual_query_and_holds(example1):
    assert example1.query("play(Lucy, teacher, u, [2,3])", mode="virtual") == [{}]
    assert example1.holds("play(Lucy, teacher, u, [2,3])")
    assert not example1.holds("play(Lucy, teacher, u, [2,30])")
    with pytest.raises(sck.Error) as info:
        example1.query("play(Lucy, ?r, u, ?t)", mode="virtual")
    assert info.value.kind == "UnboundIntervalVariable"


def test_explain(example1):
    tree = example1.explain("play(Lucy, staff, u, [0,9])")
    assert tree["rule"] == "D8"
    assert example1.explain_text("play(Lucy, staff, u, [0,9])").startswith("play(Lucy, staff, u, [0,9])  [D8]")
    with pytest.raises(sck.Error) as info:
        example1.explain("hasR(h, teacher)")
    assert info.value.kind == "NotPresent"


def test_harvest_example2():
    kb = sck.load_files([FIXTURES / "example2.sck"])
    kb.saturate()
    report = kb.harvest("rc", ["doctor", "hospital"])
    assert report["events"] == ["treating"]
    assert report["norms"] == ["no_bride"]


def test_check_and_export(example1):
    warnings = example1.check()
    assert any(w["id"] == "O12" and w["scope"] == "instance_context u" for w in warnings)
    assert all(w["severity"] == "warning" for w in warnings)
    again = sck.load(example1.export())
    assert len(again) == example1.asserted_count
    assert "play(Lucy, staff, u, [0,9])." in example1.export(with_derived=True)


def test_parse_errors_carry_locations():
    with pytest.raises(sck.ParseError) as info:
        sck.load("player Lucy.\nfoo(Lucy).\n", name="bad.sck")
    d = info.value.diagnostics[0]
    assert (d["source"], d["line"], d["column"]) == ("bad.sck", 2, 1)
    assert "unknown predicate 'foo'" in str(info.value)


def test_fact_cap():
    kb = sck.load_files([FIXTURES / "example1.sck"])
    with pytest.raises(sck.Error) as info:
        kb.saturate(fact_cap=5)
    assert info.value.kind == "ResourceLimit"


def test_rule_catalog():
    rules = sck.rules()
    assert len(rules) == 111
    assert rules[0]["id"] == "D1"
