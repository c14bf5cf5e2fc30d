import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonsimple.exterior import (
    BadTuple,
    DimensionMismatch,
    MultiVector,
    NotAlternating,
    OddSize,
    coefficient,
    merge_sign,
    pfaffian,
    wedge,
    wedge_power,
)
from nonsimple.ring import Poly, const, parse_poly, var

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def homogeneous(draw, dim, grade):
    blades = list(itertools.combinations(range(1, dim + 1), grade))
    chosen = draw(st.lists(st.sampled_from(blades), max_size=4, unique=True)) if blades else []
    return MultiVector(dim, {b: draw(small) for b in chosen})


@st.composite
def homogeneous_pair(draw, max_dim=8, max_grade=3):
    dim = draw(st.sampled_from(range(2, max_dim + 1, 2)))
    p = draw(st.integers(0, min(max_grade, dim)))
    q = draw(st.integers(0, min(max_grade, dim)))
    return draw(homogeneous(dim, p)), draw(homogeneous(dim, q)), p, q


def perm_sign(seq):
    """Sign of the permutation sorting ``seq``, counted the slow way."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def wedge_oracle(u, v):
    # expand over all orderings of the concatenated indices and antisymmetrize
    out = {}
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            idx = a + b
            if len(set(idx)) < len(idx):
                continue
            key = tuple(sorted(idx))
            hits = 0
            for perm in itertools.permutations(range(len(idx))):
                if tuple(idx[k] for k in perm) == key:
                    hits += perm_sign(perm)
            out[key] = out.get(key, Poly()) + ca * cb * hits
    return MultiVector(u.dim, out)


def test_wedge_examples():
    e = lambda *i: MultiVector.basis(4, *i)
    assert wedge(e(1, 2), e(3, 4)) == e(1, 2, 3, 4)
    assert wedge(e(1, 3), e(1, 4)).is_zero()
    assert wedge(e(1, 3), e(2, 4)) == MultiVector(4, {(1, 2, 3, 4): -1})


def test_merge_sign():
    assert merge_sign((1, 3), (2, 4)) == -1
    assert merge_sign((1, 2), (3, 4)) == 1
    assert merge_sign((2,), (2,)) == 0
    assert merge_sign((3, 4), (1, 2)) == 1


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        wedge(MultiVector.basis(4, 1), MultiVector.basis(6, 1))


def test_bad_tuples():
    with pytest.raises(BadTuple):
        MultiVector(4, {(2, 1): 1})
    with pytest.raises(BadTuple):
        MultiVector(4, {(1, 5): 1})
    with pytest.raises(BadTuple):
        coefficient(MultiVector.scalar(4), (3, 3))


def test_wedge_power_examples():
    theta = MultiVector(4, {(1, 3): -1, (2, 4): -1})
    # 2 dx1^dx3^dx2^dx4, which is -2 in the sorted basis
    assert wedge_power(theta, 2) == MultiVector.basis(4, 1, 3, 2, 4, coeff=2)
    assert wedge_power(theta, 2) == MultiVector(4, {(1, 2, 3, 4): -2})
    assert wedge_power(MultiVector.basis(4, 1, 2), 2).is_zero()
    assert wedge_power(theta, 0) == MultiVector.scalar(4)
    with pytest.raises(ValueError):
        wedge_power(theta, -1)


def test_coefficient_examples():
    u = MultiVector(4, {(1, 3): 1, (2, 4): 2})
    assert coefficient(u, (2, 4)) == const(2)
    assert coefficient(MultiVector(4), (1, 2)) == Poly()
    theta12 = MultiVector(4, {(1, 3): -1, (2, 4): -2})
    assert coefficient(theta12, (2, 4)) == const(-2)


def test_render():
    assert str(MultiVector(4, {(1, 3): 1})) == "dx1^dx3"
    assert str(MultiVector(4, {(1, 3): -1, (2, 4): 2})) == "-dx1^dx3 + (2)*dx2^dx4"


@settings(max_examples=500, deadline=None)
@given(homogeneous_pair())
def test_graded_anticommutativity(data):
    u, v, p, q = data
    assert wedge(u, v) == wedge(v, u) * ((-1) ** (p * q))


@settings(max_examples=500, deadline=None)
@given(st.data())
def test_associativity(data):
    dim = data.draw(st.sampled_from([2, 4, 6, 8]))
    u, v, w = (data.draw(homogeneous(dim, data.draw(st.integers(0, 3)))) for _ in range(3))
    assert wedge(wedge(u, v), w) == wedge(u, wedge(v, w))


@settings(max_examples=100, deadline=None)
@given(homogeneous_pair(max_dim=6))
def test_wedge_matches_permutation_oracle(data):
    u, v, _, _ = data
    assert wedge(u, v) == wedge_oracle(u, v)


def test_symbolic_coefficients():
    u = MultiVector(4, {(1,): var("a")})
    v = MultiVector(4, {(2,): var("b")})
    assert wedge(u, v) == MultiVector(4, {(1, 2): parse_poly("a*b")})


# Pfaffian ------------------------------------------------------------------


def alternating(entries, n):
    m = [[Poly() for _ in range(n)] for _ in range(n)]
    for (i, j), c in entries.items():
        m[i][j] = Poly.coerce(c)
        m[j][i] = -Poly.coerce(c)
    return m


def generic_alternating(n):
    return alternating({(i, j): var(f"a{i + 1}{j + 1}") for i in range(n) for j in range(i + 1, n)}, n)


def test_pfaffian_examples():
    assert pfaffian(alternating({(0, 1): 1, (2, 3): 1}, 4)) == const(1)
    assert pfaffian(generic_alternating(4)) == parse_poly("a12*a34 - a13*a24 + a14*a23")
    six = pfaffian(generic_alternating(6))
    assert len(six.terms) == 15
    assert six.degree() == 3


def test_pfaffian_errors():
    with pytest.raises(OddSize):
        pfaffian([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    with pytest.raises(NotAlternating):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(NotAlternating):
        pfaffian([[1, 0], [0, 0]])


def test_pfaffian_squared_is_determinant():
    # small oracle: det via permutations
    m = alternating({(0, 1): 2, (0, 2): -1, (0, 3): 3, (1, 2): 5, (1, 3): 1, (2, 3): -4}, 4)
    vals = [[x.constant_term().re for x in row] for row in m]
    det = Fraction(0)
    for perm in itertools.permutations(range(4)):
        prod = Fraction(perm_sign(perm))
        for i, j in enumerate(perm):
            prod *= vals[i][j]
        det += prod
    assert pfaffian(m) ** 2 == const(det)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_pfaffian_power_consistency(data):
    g = data.draw(st.integers(1, 3))
    n = 2 * g
    entries = {(i, j): data.draw(small) for i in range(n) for j in range(i + 1, n)}
    omega = MultiVector(n, {(i + 1, j + 1): c for (i, j), c in entries.items()})
    top = MultiVector(n, {tuple(range(1, n + 1)): pfaffian(alternating(entries, n)) * math.factorial(g)})
    assert wedge_power(omega, g) == top
