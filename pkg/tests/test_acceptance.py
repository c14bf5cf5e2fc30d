"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import itertools
import json
import math
import random
import time
from fractions import Fraction

import pytest

from nonsimple import reference as ref
from nonsimple.abelian import (
    NSClass,
    PeriodMatrix,
    PolarizationType,
    PolarizedVariety,
    chern_theta,
    euler_char,
    form_to_class,
    omega0,
)
from nonsimple.cli import main
from nonsimple.criterion import char_poly_identity, check_class, pair_identity, split_check
from nonsimple.exterior import MultiVector, pfaffian, wedge, wedge_power
from nonsimple.families import (
    FamilyPoint,
    match_systems,
    reproduce_f5,
    reproduce_f7,
    reproduce_g,
    subfactor_matrix,
)
from nonsimple.ring import GaussianRational, I, Poly, parse_poly, var
from nonsimple.solve import find_split, find_subvariety


@pytest.fixture
def verdict(capsys):
    """Print a criterion's outcome past pytest's capture, then assert it."""

    def emit(number, ok, elapsed, limit, detail=""):
        ok_time = elapsed < limit
        line = f"criterion {number}: {'PASS' if ok and ok_time else 'FAIL'} ({elapsed:.2f}s, limit {limit}s)"
        if detail:
            line += f" {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, detail
        assert ok_time, f"took {elapsed:.2f}s"

    return emit


def gen_system_lines(capsys, *argv):
    code = main(["gen-system", *argv])
    out, _ = capsys.readouterr()
    assert code == 0
    return [parse_poly(line) for line in out.splitlines() if line.strip()]


def test_criterion_1_surface_system(capsys, verdict):
    start = time.perf_counter()
    eqs = gen_system_lines(capsys, "--g", "2", "--type", "1,d2", "--n", "1")
    missing, extra = match_systems(eqs, [parse_poly(e) for e in ref.SURFACE_SYSTEM])
    ok = len(eqs) == 3 and not missing and not extra
    verdict(1, ok, time.perf_counter() - start, 1, f"unmatched printed {missing}, extra {len(extra)}")


def test_criterion_2_threefold_system(capsys, verdict):
    start = time.perf_counter()
    eqs = gen_system_lines(capsys, "--g", "3", "--type", "1,d2,d3", "--n", "1")
    missing, extra = match_systems(eqs, [parse_poly(e) for e in ref.THREEFOLD_SYSTEM])
    ok = len(eqs) == 9 and not missing and not extra
    detail = f"unmatched printed {missing}, extra {[str(e) for e in extra]}"
    verdict(2, ok, time.perf_counter() - start, 5, detail)


def _timed_report(fn):
    start = time.perf_counter()
    report = fn()
    return report, time.perf_counter() - start


def test_criterion_3_f5(verdict):
    report, elapsed = _timed_report(reproduce_f5)
    ok = report.passed and len(report.steps) == 4
    verdict(3, ok, elapsed, 5, report.to_text() if not ok else "")


def test_criterion_4_f7(verdict):
    report, elapsed = _timed_report(reproduce_f7)
    verdict(4, report.passed, elapsed, 30, report.to_text() if not report.passed else "")


def test_criterion_5_g(verdict):
    report, elapsed = _timed_report(reproduce_g)
    needed = ("Q_and_R", "corollary_point", "siegel_samples")
    ok = all(report.step(name).passed for name in needed)
    verdict(5, ok, elapsed, 10, report.to_text() if not ok else "")


# criterion 6 -------------------------------------------------------------------


def _types(g, dmax=3):
    for diag in itertools.product(range(1, dmax + 1), repeat=g):
        if all(b % a == 0 for a, b in zip(diag, diag[1:])):
            yield PolarizationType(diag)


def _random_form(rng, dim, grade):
    blades = list(itertools.combinations(range(1, dim + 1), grade))
    chosen = rng.sample(blades, min(len(blades), rng.randint(0, 4)))
    return MultiVector(dim, {b: Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for b in chosen})


def _perm_sign(seq):
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _wedge_oracle(u, v):
    out = {}
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            idx = a + b
            if len(set(idx)) < len(idx):
                continue
            out[tuple(sorted(idx))] = out.get(tuple(sorted(idx)), Poly()) + ca * cb * _perm_sign(idx)
    return MultiVector(u.dim, out)


def test_criterion_6_identity_suite(verdict):
    start = time.perf_counter()
    rng = random.Random(20261016)
    failures = []
    for g in range(1, 5):
        for D in _types(g):
            lhs = wedge_power(chern_theta(D), g)
            if lhs != omega0(g).scale(euler_char(D) * math.factorial(g)):
                failures.append(f"theta power for {D}")
    for _ in range(500):
        dim = rng.choice([2, 4, 6, 8])
        p, q, s = (rng.randint(0, min(3, dim)) for _ in range(3))
        u, v, w = _random_form(rng, dim, p), _random_form(rng, dim, q), _random_form(rng, dim, s)
        if wedge(u, v) != wedge(v, u) * ((-1) ** (p * q)):
            failures.append("anticommutativity")
        if wedge(wedge(u, v), w) != wedge(u, wedge(v, w)):
            failures.append("associativity")
    for _ in range(100):
        g = rng.randint(1, 3)
        n = 2 * g
        entries = {(i, j): Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for i in range(n) for j in range(i + 1, n)}
        matrix = [[Poly() for _ in range(n)] for _ in range(n)]
        for (i, j), c in entries.items():
            matrix[i][j], matrix[j][i] = Poly.coerce(c), Poly.coerce(-c)
        omega = MultiVector(n, {(i + 1, j + 1): c for (i, j), c in entries.items()})
        top = MultiVector(n, {tuple(range(1, n + 1)): pfaffian(matrix) * math.factorial(g)})
        if wedge_power(omega, g) != top:
            failures.append("pfaffian power")
    for _ in range(100):
        dim = rng.choice([2, 4, 6])
        u = _random_form(rng, dim, rng.randint(0, min(3, dim)))
        v = _random_form(rng, dim, rng.randint(0, min(3, dim)))
        if wedge(u, v) != _wedge_oracle(u, v):
            failures.append("permutation oracle")
    verdict(6, not failures, time.perf_counter() - start, 60, "; ".join(sorted(set(failures))))


# criterion 7 -------------------------------------------------------------------


def test_criterion_7_product_varieties(verdict):
    start = time.perf_counter()
    rng = random.Random(7)
    t = var("t")
    failures = []
    for case in range(50):
        g = rng.randint(1, 3)
        taus = [
            GaussianRational(Fraction(rng.randint(-6, 6), rng.randint(1, 4)), Fraction(rng.randint(1, 12), rng.randint(1, 4)))
            for _ in range(g)
        ]
        V = PolarizedVariety.principal(PeriodMatrix.diagonal(taus))
        classes = [NSClass(g, {(i, g + i): -1}) for i in range(1, g + 1)]
        for c in classes:
            if not check_class(c, V, 1).verdict:
                failures.append(f"case {case}: check_class {c}")
            if char_poly_identity(c, V, 1) != t ** (g - 1) * (t - 1):
                failures.append(f"case {case}: char poly {c}")
        total = classes[0]
        for c in classes[1:]:
            total = total + c
        if total != form_to_class(chern_theta(V.ptype)):
            failures.append(f"case {case}: sum is not the theta class")
        if not split_check(classes, V):
            failures.append(f"case {case}: split_check")
    verdict(7, not failures, time.perf_counter() - start, 30, "; ".join(failures[:5]))


# criterion 8 -------------------------------------------------------------------


def _cli_json(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, json.loads(out)


def test_criterion_8_search_soundness(capsys, verdict):
    start = time.perf_counter()
    failures = []
    diag2 = PolarizedVariety.principal(PeriodMatrix.diagonal([I, 2 * I]))
    diag3 = PolarizedVariety.principal(PeriodMatrix.diagonal([I, 2 * I, 3 * I]))
    f5_split = subfactor_matrix(FamilyPoint("F5", {"z1": 2 * I, "z2": I, "z3": 0}))
    for V, H in ((diag2, 2), (diag3, 1), (f5_split, 2)):
        rep = find_subvariety(V, 1, H, max_witnesses=8, threads=2)
        if not rep.found:
            failures.append(f"find found nothing on g={V.g}")
        for w in rep.witnesses:
            if not check_class(w, V, 1).verdict:
                failures.append(f"unsound find witness {w}")
    rep = find_split(diag3, 1, threads=2)
    if not rep.found:
        failures.append("split found nothing")
    for tup in rep.witnesses:
        for w in tup:
            if not check_class(w, diag3, 1).verdict:
                failures.append(f"unsound split witness {w}")
        if not split_check(tup, diag3):
            failures.append("split witness not ample")
    # the same inputs through the command line
    code, data = _cli_json(capsys, "find", "--json", json.dumps(diag2.to_json()), "--n", "1", "--H", "2", "--format", "json")
    for doc in data["witnesses"]:
        if not check_class(NSClass.from_json(2, doc), diag2, 1).verdict:
            failures.append(f"unsound CLI witness {doc}")
    # generic F5 factor surface: exact none through the discriminant
    code, data = _cli_json(
        capsys, "find", "--json", json.dumps({"family": "F5"}), "--subfactor", "--n", "1", "--format", "json"
    )
    if data["status"] != "none_exact" or data["diagnostics"].get("path") != "quadratic-discriminant" or code != 1:
        failures.append(f"generic F5: {data['status']} via {data['diagnostics'].get('path')}")
    verdict(8, not failures, time.perf_counter() - start, 60, "; ".join(failures))


# criterion 9 -------------------------------------------------------------------


def test_criterion_9_pair_identity(verdict):
    start = time.perf_counter()
    failures = []
    for g in (2, 3):
        V = PolarizedVariety.principal(PeriodMatrix.diagonal([(k + 1) * I for k in range(g)]))
        for size in range(1, g):
            for left in itertools.combinations(range(1, g + 1), size):
                right = [i for i in range(1, g + 1) if i not in left]
                a1 = NSClass(g, {(i, g + i): -1 for i in left})
                a2 = NSClass(g, {(i, g + i): -1 for i in right})
                for r, (value, expected) in enumerate(pair_identity(a1, a2, V, g), start=1):
                    if value != expected:
                        failures.append(f"g={g} {left} r={r}: {value} != {expected}")
    verdict(9, not failures, time.perf_counter() - start, 5, "; ".join(failures))
