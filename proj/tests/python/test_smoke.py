import cmath
import json

import pytest

import butson


def test_catalog_and_hadamard():
    names = butson.catalog_names()
    assert names[:3] == ["A1", "A2", "A3"]
    for name in names:
        assert butson.is_hadamard(butson.get(name)) == (not name.endswith("_printed"))
    with pytest.raises(KeyError):
        butson.get("A7")


def test_matrix_roundtrip():
    m = butson.ButsonMatrix(3, [[0, 0], [0, 4]])
    assert m.q == 3 and m.n == 2
    assert m.grid == [[0, 0], [0, 1]]
    assert butson.parse(str(butson.get("M6"))) == butson.get("M6")
    assert abs(m.embed()[1][1] - cmath.exp(2j * cmath.pi / 3)) < 1e-15


def test_charpoly_and_spectrum():
    e = butson.charpoly(butson.get("M6"))
    assert [c[0] for c in e] == [-216, 0, 108, 0, -18, 0, 1]
    spec = butson.spectrum(butson.get("M6"))
    assert [(round(v.real, 12), k) for v, k in spec] == [(-1.0, 3), (1.0, 3)]
    assert butson.same_charpoly(butson.get("A1"), butson.get("A3"))


def test_equivalence_and_defect():
    w = butson.standard_equivalent(butson.get("M6"), butson.get("M61"))
    assert w is not None and w["q"] == 4
    assert butson.apply_witness(w, butson.get("M61")) == butson.get("M6")
    assert butson.standard_equivalent(butson.get("A1"), butson.get("F6")) is None
    assert not butson.unitary_equivalent(butson.get("M6"), butson.get("M61"))
    assert butson.defect(butson.get("A1")) == 0
    assert butson.defect(butson.get("F6")) == 4
    variants = [butson.get(n) for n in ("A10", "A20", "A30", "A40", "A50", "A60")]
    assert len(butson.classify(variants, "unitary")) == 6


def test_dephase_and_family():
    std, left, right = butson.dephase(butson.get("A10"))
    assert std == butson.get("A01")
    assert len(left) == len(right) == 6
    values = butson.symmetric_family_eigenvalues(1.0)
    assert abs(values[-1] - 6.0) < 1e-12
    assert all(abs(v) < 1e-12 for v in values[:-1])


def test_report():
    doc = json.loads(butson.report())
    assert doc["refuted"] is False
    assert {c["id"] for c in doc["claims"]} >= {f"C{k}" for k in range(1, 12)}


def test_errors():
    with pytest.raises(ValueError):
        butson.ButsonMatrix(3, [[0, 1], [0]])
    with pytest.raises(ValueError):
        butson.defect(butson.get("A2_printed"))
