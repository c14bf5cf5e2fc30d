import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonsimple import reference as ref
from nonsimple.abelian import NonNumeric, NSClass, PeriodMatrix, PolarizedVariety, NotInSiegel
from nonsimple.criterion import check_class, split_check
from nonsimple.families import FamilyPoint, subfactor_matrix
from nonsimple.ring import I, canonicalize_equation, Poly, parse_poly, poly_eval, var
from nonsimple.solve import (
    AffineSolutionSpace,
    Inconsistent,
    bounded_height_points,
    coefficient_match,
    find_split,
    find_subvariety,
    height,
    linear_solve,
    rationals_of_height,
)

SIX = ["a12", "a13", "a14", "a23", "a24", "a34"]


def diag_variety(*taus):
    return PolarizedVariety.principal(PeriodMatrix.diagonal(list(taus)))


# linear_solve ------------------------------------------------------------------


def test_linear_solve_single_equation():
    space = linear_solve([parse_poly("a13 + a24 + 1")], SIX)
    assert isinstance(space, AffineSolutionSpace)
    assert space.dimension == 5 and space.rank == 1
    assert space.free == ["a12", "a14", "a23", "a24", "a34"]
    assert space.expressions()["a13"] == parse_poly("-a24 - 1")


def test_linear_solve_inconsistent():
    x = var("x")
    res = linear_solve([x - 1, x - 2], ["x"])
    assert isinstance(res, Inconsistent) and not res


def test_linear_solve_rejects_nonlinear():
    with pytest.raises(ValueError):
        linear_solve([var("x") ** 2], ["x"])
    with pytest.raises(ValueError):
        linear_solve([var("x") * I], ["x"])


def test_linear_solve_empty_system():
    space = linear_solve([], ["x", "y"])
    assert space.dimension == 2 and space.basepoint == [0, 0]


def _rank(rows):
    """Rank over Q by naive elimination, as an oracle."""
    m = [list(r) for r in rows]
    rank = 0
    for col in range(len(m[0]) if m else 0):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][col] / m[rank][col]
            m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_linear_solve_against_oracle(data):
    k = data.draw(st.integers(1, 5))
    rows = data.draw(st.integers(1, 5))
    entry = st.fractions(min_value=-3, max_value=3, max_denominator=2)
    names = [f"x{i}" for i in range(k)]
    coeffs = [[data.draw(entry) for _ in range(k)] for _ in range(rows)]
    rhs = [data.draw(entry) for _ in range(rows)]
    eqs = [sum((var(v) * c for v, c in zip(names, row)), Poly()) - r for row, r in zip(coeffs, rhs)]
    res = linear_solve(eqs, names)
    rank = _rank(coeffs)
    if not res:
        # inconsistent exactly when the augmented matrix has larger rank
        assert _rank([row + [r] for row, r in zip(coeffs, rhs)]) > rank
        return
    assert res.dimension == k - rank == k - res.rank
    params = [data.draw(entry) for _ in range(res.dimension)]
    point = dict(zip(names, res.point(params)))
    for e in eqs:
        assert poly_eval(e, point) == 0


# coefficient_match ---------------------------------------------------------------


def test_coefficient_match_examples():
    eq = parse_poly("(a23 - a14)*z1 + a34")
    assert coefficient_match([eq], SIX) == [parse_poly("a23 - a14"), parse_poly("a34")]
    plain = parse_poly("a13 + a24 + 1")
    assert coefficient_match([plain], SIX) == [plain]


def test_coefficient_match_on_f5_second_equation():
    eq = parse_poly(ref.F5_SYSTEM[1])
    got = {canonicalize_equation(p) for p in coefficient_match([eq], SIX)}
    expected = {"a12", "a23-a14", "a13+a14-a24", "a24-a13-a23", "a34"}
    assert got == {canonicalize_equation(parse_poly(s)) for s in expected}


# heights ---------------------------------------------------------------------------


def test_bounded_height_examples():
    assert list(bounded_height_points(1, 1)) == [(-1,), (0,), (1,)]
    assert {p[0] for p in bounded_height_points(1, 2)} == {0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)}
    assert [len(list(bounded_height_points(1, H))) for H in (1, 2, 3)] == [3, 7, 15]
    assert list(bounded_height_points(0, 4)) == [()]
    with pytest.raises(ValueError):
        list(bounded_height_points(1, 0))


def _brute_count(H):
    return len({Fraction(p, q) for p in range(-H, H + 1) for q in range(1, H + 1) if max(abs(Fraction(p, q).numerator), Fraction(p, q).denominator) <= H})


@pytest.mark.parametrize("k,H", [(1, 1), (1, 4), (1, 7), (2, 3), (3, 2)])
def test_bounded_height_invariants(k, H):
    pts = list(bounded_height_points(k, H))
    assert len(pts) == len(set(pts)) == _brute_count(H) ** k
    for pt in pts:
        for x in pt:
            assert math.gcd(x.numerator, x.denominator) == 1 and height(x) <= H
    heights = [max(height(x) for x in pt) for pt in pts]
    assert heights == sorted(heights)


def test_rationals_of_height_order():
    assert rationals_of_height(2) == [-1, 0, 1, -2, Fraction(-1, 2), Fraction(1, 2), 2]


# find_subvariety --------------------------------------------------------------------


def test_find_on_product_surface():
    rep = find_subvariety(diag_variety(I, 2 * I), 1, 1)
    assert rep.found
    assert NSClass(2, {(1, 3): -1}) in rep.witnesses


def test_find_witnesses_are_sound():
    V = diag_variety(I, 2 * I)
    rep = find_subvariety(V, 1, 2)
    assert rep.witnesses
    for w in rep.witnesses:
        assert check_class(w, V, 1).verdict


def test_find_rejects_bad_input():
    with pytest.raises(NotInSiegel):
        find_subvariety(diag_variety(-I, I), 1, 1)
    with pytest.raises(ValueError):
        find_subvariety(diag_variety(I, I), 1, 0)


def test_find_on_f5_split_surface():
    V = subfactor_matrix(FamilyPoint("F5", {"z1": 2 * I, "z2": I, "z3": 0}))
    rep = find_subvariety(V, 1, 2, max_witnesses=1)
    assert rep.found
    [w] = rep.witnesses
    assert w == NSClass.from_names(2, {"a14": 1, "a24": -1})


def test_find_on_generic_f5_is_exactly_none():
    V = subfactor_matrix(FamilyPoint("F5"))
    rep = find_subvariety(V, 1, 8)
    assert rep.status == "none_exact"
    assert rep.diagnostics["path"] == "quadratic-discriminant"
    assert len(rep.diagnostics["free"]) == 1
    order = ["a12", "a14", "a23", "a24", "a34", "a13"]
    kept = find_subvariety(V, 1, 8, unknown_order=order)
    assert kept.status == "none_exact" and kept.diagnostics["free"] == ["a13"]


def test_find_is_deterministic_across_threads():
    V = diag_variety(I, 2 * I, 3 * I)
    one = find_subvariety(V, 1, 1, max_witnesses=5, threads=1).to_json()
    four = find_subvariety(V, 1, 1, max_witnesses=5, threads=4).to_json()
    assert one == four


def test_find_report_json():
    data = find_subvariety(diag_variety(I, 2 * I), 1, 1).to_json()
    assert data["status"] == "found" and data["height_bound"] == 1
    assert {"a13": "-1"} in data["witnesses"]


# find_split -------------------------------------------------------------------------


def test_split_three_curves():
    V = diag_variety(I, 2 * I, 3 * I)
    rep = find_split(V, 1)
    assert rep.found
    [triple] = rep.witnesses
    assert sorted(triple, key=str) == sorted((NSClass(3, {(i, i + 3): -1}) for i in (1, 2, 3)), key=str)
    assert split_check(triple, V)


def test_split_dimension_one():
    rep = find_split(diag_variety(I), 3)
    assert rep.found and rep.witnesses == [[NSClass(1, {(1, 2): -1})]]


def test_split_curve_times_surface_has_no_small_splitting():
    Z = [["i", "0", "0"], ["0", "7/3*i", "1/5+2/7*i"], ["0", "1/5+2/7*i", "5/2*i"]]
    V = PolarizedVariety.from_json({"Z": Z})
    rep = find_split(V, 1)
    assert rep.status == "none_up_to_height"
    assert rep.diagnostics["elliptic_witnesses"] == 1


def test_split_needs_numbers():
    with pytest.raises(NonNumeric):
        find_split(PolarizedVariety.principal(PeriodMatrix.symbolic(2)), 1)
