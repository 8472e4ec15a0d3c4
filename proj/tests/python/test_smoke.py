"""End-to-end smoke tests for the Python bindings."""

import pytest

import wplink


def test_betti2_fixtures():
    assert wplink.betti2([9, 18, 4, 4], 36) == 8
    assert wplink.betti2([264, 157, 114, 73], 1213) == 4
    assert wplink.betti2([676, 379, 266, 179], 4435) == 6
    assert wplink.betti2([1, 1, 1, 1], 3) == 6


def test_oracle_agrees():
    assert wplink.betti2_oracle([9, 18, 4, 4], 36) == 8
    assert wplink.betti2_oracle([35, 14, 20, 40], 140) == 3
    with pytest.raises(ValueError):
        wplink.betti2_oracle([264, 157, 114, 73], 1213, cap=1000)


def test_curve_genus():
    assert wplink.curve_genus([1, 1, 1], 5) == 6
    assert wplink.curve_genus([9, 2, 2], 18) == 0
    with pytest.raises(ValueError):
        wplink.curve_genus([1, 2, 2], 3)


def test_alexander_divisor():
    assert wplink.alexander_divisor([264, 157, 114, 73], 1213) == [
        (1, 1, 1),
        (1213, 3, 1),
    ]


def test_classify_polynomial():
    report = wplink.classify([9, 18, 4, 4], poly="x^4 + y^2 + z^9 + t^9")
    assert report["b2"] == 8
    assert report["quasismooth"]["passed"] is True
    assert report["diffeo_type"] == "#8 S^2 x S^3"
    assert report["flags"]["negative_eta_einstein"] is True
    assert report["flags"]["lorentzian_sasaki_einstein"] is True
    assert report["sign"]["index_gap"] == 1


def test_classify_weights_only():
    report = wplink.classify([1, 1, 1, 1], degree=2)
    assert report["b2"] == 1
    assert report["diffeo_type"] == "#1 S^2 x S^3"
    assert report["general_member"] is True
    assert report["sign"]["sign"] == "positive"
    assert report["flags"]["negative_eta_einstein"] is False


def test_cyclic_weights():
    weights, degree = wplink.cyclic_weights(4, 7, 10, 13)
    assert weights == [264, 157, 114, 73]
    assert degree == 1213


def test_families():
    inst = wplink.case_I(9)
    assert inst["weights"] == [9, 18, 4, 4]
    assert inst["degree"] == 36
    assert inst["expected"]["b2"] == 8
    assert inst["expected"]["branch"] == [(2, 0)]

    inst2 = wplink.case_II(1)
    assert inst2["weights"] == [35, 14, 20, 40]
    assert inst2["expected"]["b2"] == 3

    with pytest.raises(ValueError):
        wplink.case_I(4)


def test_search():
    certs = wplink.search({"max_weight": 1, "max_degree": 2})
    assert len(certs) == 1
    assert certs[0]["discovered_by"]["weights"] == [1, 1, 1, 1]
    assert certs[0]["report"]["b2"] == 1

    filtered = wplink.search(
        {"max_weight": 1, "max_degree": 2, "require_negative": True}
    )
    assert filtered == []
