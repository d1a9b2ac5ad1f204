import pytest

import oird


def test_gamma_matches_formula_families():
    assert oird.gamma(1, 8) == 6
    assert oird.gamma(2, 6) == 8
    assert oird.gamma(3, 9) == 19
    assert oird.gamma(7, 3) == 17


def test_formula_reports_family_and_case():
    f = oird.formula(2, 9)
    assert f["value"] == 13
    assert f["family"] == "p2cm"
    assert f["case"] == "m%6=3"
    assert f["kind"] == "exact"
    assert oird.formula(5, 5) is None


def test_bounds_for_large_sizes():
    case = oird.upper_bound_case(4, 4)
    glob = oird.upper_bound(4, 4)
    assert case["value"] == 11
    assert glob["value"] == 13
    assert case["value"] <= glob["value"]


def test_construct_validates_with_expected_weight():
    labels = oird.construct(3, 4)
    assert oird.validate(labels)["valid"]
    assert oird.weight(labels) == 8
    assert oird.encode_grid(labels) == "0101\n2020\n0101\n"


def test_validate_reports_violations():
    rep = oird.validate([[0, 0, 0], [0, 0, 0]])
    assert not rep["valid"]
    kinds = {v[0] for v in rep["violations"]}
    assert kinds == {"undominated-zero", "adjacent-zeros"}


def test_solver_agrees_with_gamma_and_returns_witness():
    out = oird.solve(4, 4)
    assert out["gamma"] == 11
    wit = out["witness"]
    assert oird.validate(wit)["valid"]
    assert oird.weight(wit) == 11


def test_solver_refuses_oversized_instances():
    with pytest.raises(oird.SizeCapError):
        oird.solve(9, 9)


def test_certify_two_row_construction():
    labels = oird.construct(2, 9)
    cert = oird.certify(labels)
    assert cert["algorithm"] == 1
    assert cert["covered"]
    assert cert["bounds_ok"]
    assert cert["bound"] == 13


def test_check_properties_on_three_column_construction():
    labels = oird.construct(10, 3)
    checks = oird.check_properties(labels, "pnc3")
    assert all(c["pass"] for c in checks if c["mandatory"])


def test_grid_round_trip_and_format_error():
    text = "20102\n01020\n"
    assert oird.encode_grid(oird.decode_grid(text)) == text
    with pytest.raises(ValueError):
        oird.decode_grid("013\n220\n")
