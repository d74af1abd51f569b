import pytest

import wilsonff as w


def test_field_basics():
    f = w.Field(13)
    assert (f.p, f.n, f.q, f.eps) == (13, 1, 13, 1)
    assert f.legendre(4) == 1
    assert f.sqrt(2) is None
    g = w.Field(3, 2)
    assert g.q == 9 and len(g.elements()) == 9
    r = g.sqrt(2)
    assert r is not None and isinstance(r, tuple)


def test_bad_field():
    with pytest.raises(ValueError):
        w.Field(15)


def test_products_agree_with_brute_force():
    f = w.Field(11)
    for j in range(2, 11):
        for l in range(2, 11):
            if (j + l) % 11 == 0:
                continue
            for s in ("++", "+-", "-+", "--"):
                fam = w.brute_product(f, "T", j, l, s)
                assert fam["value"] == w.prod_T(f, j, l, s)
                assert fam["cardinality"] == w.card_closed(f, "T", j, l, s)


def test_known_values():
    f = w.Field(13)
    assert w.prod_T(f, 1, 3, "--") == 2
    assert w.prod_S_single(f, 0, 1) == 12
    assert w.brute_product(f, "S1", 0, signs="+")["value"] == 12


def test_evaluate_text():
    e = w.evaluate("T 2 2 -+ @ p=5")
    assert e["closed"] == e["brute"] == "4"
    assert e["match"]
    with pytest.raises(ValueError):
        w.evaluate("T 1 -- @ p=13")


def test_dickson():
    f = w.Field(7)
    assert w.dickson_first(f, 2) == [5, 0, 1]
    assert w.dickson_second(f, 2) == [6, 0, 1]


def test_reciprocity():
    f = w.Field(17)
    assert f.sqrt(2) in (6, 11)
    t = w.tower(f, "sqrt2", 2)
    assert t["member"] == [True, True, False] and t["ok"]
    assert w.sqrt2_class(f)["ok"]
    assert w.special_angle(w.Field(11), 10)["value"] == 4
    cases = w.irrational_products(f, "sqrt2")
    assert cases and all(c["ok"] for c in cases)


def test_table_and_verify():
    t = w.table(w.Field(13), 1)
    assert t["q"] == 13 and all(r.get("match", True) for r in t["rows"])
    v = w.verify(3, 30, 2, ["dickson", "tables"])
    assert v["ok"] and v["failures"] == 0 and v["fields"] > 0
    assert set(v["checks"][0]) == {"q", "suite", "case", "expected", "actual", "ok"}
