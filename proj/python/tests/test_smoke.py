import json
import pathlib

import pytest

import semidet

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def load(name):
    return semidet.Semigroup.load(str(FIXTURES / f"{name}.sgp"))


def test_parse_and_products():
    S = load("s2")
    assert S.order == 5
    assert S.has_zero
    assert S.star("y") == "t"
    assert S.plus("y") == "u"
    assert S.product("u", "y") == "y"
    assert semidet.Semigroup.parse(str(S)).table == S.table


def test_determinants():
    assert semidet.determinant(load("s1"), contracted=True) == "-y^3*z^3"
    assert semidet.determinant(load("s4"), contracted=True) == "0"


def test_factor():
    f = semidet.factor(load("s5"))
    assert f["verified"]
    assert f["sign"] == -1
    assert len(f["blocks"]) == 3


def test_factor_precondition():
    with pytest.raises(semidet.PreconditionFailed):
        semidet.factor(load("s4"))


def test_analyze():
    r = semidet.analyze(load("s5"), "s5")
    assert r["name"] == "s5"
    assert r["determinant_nonzero"] is True
    assert r["factorization"]["verified"] is True


def test_verify():
    assert semidet.verify(load("s3"))["ok"]
    rep = semidet.verify(load("s4"))
    assert rep["ok"]
    assert not rep["ll_transitive"]
    assert "y << u << w, not y << w" in rep["non_transitive_chains"]


def test_counts_and_scan():
    assert [semidet.count(n, up_to_iso=True) for n in range(1, 5)] == [1, 4, 18, 126]
    assert semidet.count(3) == 113
    lines = semidet.scan(3, filters=["singleton_rich"])
    assert all(json.loads(l)["singleton_rich"] for l in lines)


def test_errors():
    with pytest.raises(semidet.ParseError):
        semidet.Semigroup.parse("elements: a\na: b\n")
    with pytest.raises(semidet.SemidetError):
        semidet.Semigroup.parse("elements: a b\na: b a\nb: b b\n")
