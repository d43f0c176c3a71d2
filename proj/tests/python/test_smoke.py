import os
from fractions import Fraction

import pytest

import edst

CORPUS = os.path.join(os.path.dirname(__file__), "..", "..", "corpus")


def test_evaluate_and_decompose():
    assert edst.evaluate("1(u) la2 1(asz) kusz3", "CTX-ADAB") == Fraction(3, 4)
    assert edst.evaluate("3(asz) 2/3 5 gin2", "CTX-SAR-ZAB", lenient=True) == Fraction(1, 16)
    assert edst.decompose(Fraction(121, 144), "CTX-SAR-ADAB", arabic=True) == "2/3 sar 10 gin2 1 samana 15 sze"
    assert edst.decompose(400, "CTX-G") == "4(iku)"


def test_squares_and_fractions():
    assert edst.square("2(u) ninda-DU") == "4(iku)"
    assert edst.square("1(gesz'u)") == "3(szar2) 2(bur'u)"
    assert edst.rect("5(u)", "5(gesz'u)") == "1(szar2) 2(bur'u) 3(bur3) 1(esze3)"
    assert edst.fraction_of_sar(1, 9) == "6 2/3 gin2"
    assert edst.fraction_of_sar(1, 16) == "3 2/3 gin2 5 gin2-bi"


def test_normalize():
    assert edst.normalize("[1(asz)] kusz3# sa2", "CTX-ADAB") == "1(as) kusz3 sa2"
    assert edst.normalize("2(esze3) 3(iku) GAN2", "CTX-G", unicode=True) == "2(eše₃) 3(iku) GAN₂"


def test_generate_and_verify():
    rows = edst.generate("T2")
    total = [r for r in rows if r["role"] == "total"]
    assert total[0]["value"] == 3315 * 100
    assert total[0]["text"] == "3(szar2) 4(bur3) 3(iku)"
    for table in edst.table_ids():
        assert edst.verify(table, corpus=CORPUS)["passed"], table
    raw = edst.verify("T4", corrections=False)
    bad = [r for r in raw["rows"] if r["status"] == "mismatch"]
    assert [r["position"] for r in bad] == ["obv ii 14"]
    assert bad[0]["corpus_value"] * 10800 == 3665
    assert bad[0]["generated_value"] * 10800 == 3675


def test_errors():
    with pytest.raises(edst.ParseError) as info:
        edst.evaluate("1(u) gin2 xyz", "CTX-SAR-ADAB")
    assert info.value.offset == 10
    with pytest.raises(edst.Error):
        edst.evaluate("1(u)", "CTX-NOPE")
    with pytest.raises(ValueError):
        edst.table("T9")


def test_cli():
    code, out, err = edst.run(["frac", "1/9"])
    assert (code, out, err) == (0, "6 2/3 gin2\n", "")
    assert edst.run(["verify", "T4", "--no-corrections"])[0] == 3
