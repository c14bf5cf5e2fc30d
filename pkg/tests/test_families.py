from fractions import Fraction

import pytest

from nonsimple.abelian import NSClass, PolarizationType, siegel_check
from nonsimple.criterion import check_class
from nonsimple.families import (
    REPRODUCTIONS,
    BadFamily,
    FamilyPoint,
    family_matrix,
    match_systems,
    proportional,
    reproduce_borowka,
    reproduce_f5,
    reproduce_f7,
    reproduce_g,
    reproduce_prop33,
    reproduce_prop34,
    subfactor_matrix,
)
from nonsimple.ring import I, Poly, parse_poly, var


def test_family_point_validation():
    with pytest.raises(BadFamily):
        FamilyPoint("F6")
    with pytest.raises(BadFamily):
        FamilyPoint("F5", {"w": 1})
    with pytest.raises(BadFamily):
        FamilyPoint("G", {"x": "1 +"})
    p = FamilyPoint.from_json({"family": "G", "params": {"x": "1", "y": "0"}})
    assert p.value("z") == var("z") and p.value("x") == parse_poly("1")
    assert FamilyPoint.from_json(p.to_json()) == p


def test_f5_matrix_is_circulant():
    V = family_matrix(FamilyPoint("F5"))
    assert V.g == 5 and V.ptype == PolarizationType.principal(5)
    row = [str(V.Z[0, j]) for j in range(5)]
    assert row == ["z1", "z2", "z3", "z3", "z2"]
    assert str(V.Z[2, 1]) == "z2" and str(V.Z[4, 0]) == "z2"


def test_f7_matrix_is_circulant():
    V = family_matrix(FamilyPoint("F7"))
    assert [str(V.Z[0, j]) for j in range(7)] == ["z1", "z2", "z3", "z4", "z4", "z3", "z2"]
    assert all(V.Z[i, i] == var("z1") for i in range(7))


def test_g_matrix_known_points():
    Z0 = family_matrix(FamilyPoint("G", {"x": 0, "y": 0, "z": 1})).Z
    assert Z0[0, 0] == parse_poly("2") and Z0[0, 1] == parse_poly("-3/2") and Z0[4, 5] == parse_poly("-3/2")
    M = family_matrix(FamilyPoint("G", {"x": 1, "y": 0, "z": 4})).Z
    assert all(M[i, j].is_constant() and M[i, j].constant_term().im == 0 for i in range(6) for j in range(6))


def test_subfactor_matrices():
    B = subfactor_matrix(FamilyPoint("F5"))
    assert B.Z[0, 0] == parse_poly("z1 - z2") and B.Z[1, 1] == parse_poly("z1 - z3")
    T = subfactor_matrix(FamilyPoint("F7"))
    assert T.g == 3 and T.Z[1, 1] == parse_poly("z1 - z4")
    S = subfactor_matrix(FamilyPoint("G"))
    assert S.ptype == PolarizationType((1, 2))
    assert S.Z[0, 1] == parse_poly("2*x + 2*y - z")


@pytest.mark.parametrize("a", [Fraction(0), Fraction(1, 2), Fraction(-1, 2)])
def test_f5_split_members_are_in_siegel_space(a):
    z1, z2 = 2 * I, I
    pt = {"z1": z1, "z2": z2, "z3": (a + 1) * z2 - a * z1}
    assert siegel_check(subfactor_matrix(FamilyPoint("F5", pt)).Z)
    assert siegel_check(family_matrix(FamilyPoint("F5", pt)).Z)
    cls = NSClass.from_names(2, {"a24": -1, "a14": a})
    assert check_class(cls, subfactor_matrix(FamilyPoint("F5", pt)), 1).verdict


def test_f5_far_member_leaves_siegel_space():
    a = Fraction(10)
    z1, z2 = 2 * I, I
    pt = {"z1": z1, "z2": z2, "z3": (a + 1) * z2 - a * z1}
    assert not siegel_check(family_matrix(FamilyPoint("F5", pt)).Z)


def test_proportional_and_matching():
    x, y = var("x"), var("y")
    assert proportional(x + y, -2 * x - 2 * y)
    assert not proportional(x + y, x - y)
    assert proportional(Poly(), Poly()) and not proportional(Poly(), x)
    missing, extra = match_systems([x + y, x * y], [2 * x + 2 * y, x - 1])
    assert missing == [1] and extra == [x * y]


# reproductions -----------------------------------------------------------------


@pytest.mark.parametrize("fn", [reproduce_prop33, reproduce_f5, reproduce_f7, reproduce_g])
def test_reproductions_pass(fn):
    report = fn()
    assert report.passed, report.to_text()
    assert all(step.passed for step in report.steps)


def test_f5_steps():
    report = reproduce_f5()
    assert [s.name for s in report.steps] == ["system_5_1", "generic_elimination", "S_a_reduction", "S_a_samples"]
    assert "5*a13^2+5*a13+1" in report.step("generic_elimination").detail


def test_f7_steps():
    report = reproduce_f7()
    assert [s.name for s in report.steps] == ["linear_relations", "a15_relation", "conic", "sextics", "no_rational_roots"]


def test_g_remark_needs_rescaling():
    step = reproduce_g().step("f7_split_remark")
    assert step.passed
    assert "literal False" in step.detail and "as -1/2*alpha True" in step.detail


def test_prop34_reports_the_printed_seventh_equation():
    report = reproduce_prop34()
    assert not report.passed
    step = report.step("threefold_system")
    assert "d3 = d2" in step.detail
    assert "a36*d2" in step.diff


def test_borowka_report():
    report = reproduce_borowka()
    assert not report.step("printed_form_condition_a").passed
    corrected = [s for s in report.steps if s.name.startswith("corrected_form")]
    assert len(corrected) == 3 and all(s.passed for s in corrected)


def test_report_serialisation():
    report = reproduce_prop33()
    data = report.to_json()
    assert data["target"] == "prop33" and data["passed"] is True
    assert report.to_text().splitlines()[0] == "reproduce prop33: PASS"
    assert set(REPRODUCTIONS) == {"prop33", "prop34", "f5", "f7", "g", "borowka"}
