import pytest

import qct


def test_schemas():
    ia = qct.schema("ia")
    assert len(ia) == 13
    assert ia.converse("b") == "bi"
    assert ia.identity == "eq"
    assert len(qct.schema("opra2")) == 72


def test_point_algebra_table():
    t = qct.enumerate("pa", "M=3")
    assert len(t) == 13
    assert t.cell("<", ">") == ["<", "=", ">"]
    assert ("<", "<", "<") in t
    assert qct.compose(t, ["<"], [">"]) == ["<", "=", ">"]


def test_generate_interval_algebra():
    t, stats = qct.generate("ia", "M=8", stall=100_000, seed=1)
    assert len(t) == 409
    assert stats["triad"] == 409
    assert stats["last_found"] <= stats["loop"]
    assert t.permutation_closed()
    assert t.same_triads(qct.enumerate("ia", "M=6"))
    assert t.provenance["seed"] == "1"


def test_determinism_and_round_trip(tmp_path):
    a, _ = qct.generate("rcc8-disk", "M=4", max_loops=5000, seed=3, hits=True)
    b, _ = qct.generate("rcc8-disk", "M=4", max_loops=5000, seed=3, hits=True)
    assert a.to_text() == b.to_text()
    assert qct.read_table(a.to_text()).to_text() == a.to_text()
    path = tmp_path / "t.qct"
    a.save(path)
    assert qct.load_table(path).same_triads(a)
    probs = a.probabilities("DC", "DC")
    assert abs(sum(p for _, p in probs) - 1.0) < 1e-9


def test_diff_and_filter():
    ia5 = qct.enumerate("ia", "M=5")
    ia6 = qct.enumerate("ia", "M=6")
    missing, extra = qct.diff(ia5, ia6)
    assert (len(missing), len(extra)) == (90, 0)
    indu = qct.indu_filter(ia6, qct.enumerate("pa", "M=3"))
    assert len(indu) == 2053
    assert ("b<", "b<", "b<") in indu


def test_closure():
    pa = qct.enumerate("pa", "M=3")
    assert qct.closure(pa, "vars: 3\n0 1 <\n1 2 <\n0 2 >\n") is None
    assert "0 2 <" in qct.closure(pa, "vars: 3\n0 1 <\n1 2 <\n")


def test_errors():
    with pytest.raises(qct.ParseError, match="line 5"):
        qct.read_table("# qct v1\ncalculus: pa\nrelations: < = >\ntable:\n< ; = ; zz\n")
    with pytest.raises(qct.BudgetExceeded):
        qct.enumerate("opra3-polar", "M1=4,M2=24")
    with pytest.raises(qct.DomainError):
        qct.generate("pa", "M=2", max_loops=10)
    with pytest.raises(qct.QctError):
        qct.schema("nope")
    assert qct.domain_size("opra1-polar", "M1=2,M2=8") == 136
