"""Deciding whether a rational 2-form is the class of an abelian subvariety.

A rational 2-form ``omega`` is the class of an ``n``-dimensional abelian
subvariety of ``(A, L)`` iff

(a) ``omega ^ dz_1 ^ ... ^ dz_g = 0``, and
(b) ``omega^r ^ theta^(g-r) = chi(L) n! prod_{i=n+1}^g (i - r) * omega_0``
    for ``1 <= r <= n``, and ``0`` for ``r > n``.

The ``omega_0``-coefficient of a top form is the intersection number of
the corresponding classes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .abelian import (
    NSClass,
    NonNumeric,
    PeriodMatrix,
    PolarizationType,
    PolarizedVariety,
    chern_theta,
    class_to_form,
    euler_char,
    holomorphic_volume,
    omega0_sign,
    pair_name,
    symbolic_form,
)
from .exterior import MultiVector, wedge, wedge_all
from .ring import Poly, canonicalize_equation, parse_poly, var, var_key

__all__ = [
    "BadDimension",
    "GradeError",
    "CriterionReport",
    "EquationSystem",
    "omega0_coefficient",
    "expected_intersection",
    "condition_a",
    "condition_b",
    "check_class",
    "generate_system",
    "intersection_number",
    "self_intersections",
    "ample_check",
    "split_check",
    "char_poly_identity",
    "pair_identity",
    "borowka_form",
]

FormLike = Union[NSClass, MultiVector]


class BadDimension(ValueError):
    pass


class GradeError(ValueError):
    pass


def _as_form(omega: FormLike) -> MultiVector:
    return class_to_form(omega) if isinstance(omega, NSClass) else omega


def omega0_coefficient(top: MultiVector) -> Poly:
    """Coefficient ``c`` with ``top = c * omega_0``; ``top`` must be a top form."""
    n = top.dim
    full = tuple(range(1, n + 1))
    stray = [k for k in top.terms if k != full]
    if stray:
        raise GradeError(f"expected a top form, found terms {stray[:3]}")
    c = top.terms.get(full, Poly())
    return c if omega0_sign(n // 2) > 0 else -c


def expected_intersection(D: PolarizationType, n: int, r: int) -> Poly:
    """``chi(L) n! prod_{i=n+1}^g (i-r)`` for ``r <= n``, else 0."""
    if r > n:
        return Poly()
    prod = math.factorial(n) * math.prod(i - r for i in range(n + 1, D.g + 1))
    return euler_char(D) * prod


def condition_a(omega: FormLike, V: PolarizedVariety) -> list[Poly]:
    """Coefficients of ``omega ^ dz_1 ^ ... ^ dz_g`` in the sorted basis.

    Ordered by the omitted indices (the complement of each basis tuple),
    lexicographically; zero coefficients are included.
    """
    form = _as_form(omega)
    if form.dim != 2 * V.g:
        raise BadDimension(f"form on dimension {form.dim} but g={V.g}")
    if V.g < 2:
        return []  # degree g + 2 exceeds 2g: the condition is vacuous
    prod = wedge(form, holomorphic_volume(V))
    n = 2 * V.g
    out = []
    for omitted in itertools.combinations(range(1, n + 1), V.g - 2):
        key = tuple(i for i in range(1, n + 1) if i not in omitted)
        out.append(prod.terms.get(key, Poly()))
    return out


def _powers(form: MultiVector, upto: int) -> list[MultiVector]:
    out = [MultiVector.scalar(form.dim)]
    for _ in range(upto):
        out.append(wedge(out[-1], form))
    return out


def condition_b(omega: FormLike, V: PolarizedVariety, n: int) -> list[tuple[Poly, Poly]]:
    """``(computed, expected)`` for ``r = 1..g``.

    ``computed`` is the ``omega_0``-coefficient of ``omega^r ^ theta^(g-r)``.
    """
    g = V.g
    if not 0 <= n <= g:
        raise BadDimension(f"need 0 <= n <= g, got n={n}, g={g}")
    form = _as_form(omega)
    if form.dim != 2 * g:
        raise BadDimension(f"form on dimension {form.dim} but g={g}")
    theta = chern_theta(V.ptype)
    om = _powers(form, g)
    th = _powers(theta, g)
    out = []
    for r in range(1, g + 1):
        top = wedge(om[r], th[g - r])
        out.append((omega0_coefficient(top), expected_intersection(V.ptype, n, r)))
    return out


@dataclass
class CriterionReport:
    holds_a: bool
    a_residuals: list[Poly]
    b_values: list[tuple[int, Poly, Poly]]
    verdict: bool

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "holds_a": self.holds_a,
            "a_residuals": [str(p) for p in self.a_residuals],
            "b_values": [
                {"r": r, "computed": str(c), "expected": str(e), "ok": c == e} for r, c, e in self.b_values
            ],
        }


def check_class(omega: FormLike, V: PolarizedVariety, n: int) -> CriterionReport:
    """Decide whether ``omega`` is the class of an ``n``-dimensional subvariety."""
    V.require_numeric()
    if not 1 <= n <= V.g:
        raise BadDimension(f"need 1 <= n <= g, got n={n}, g={V.g}")
    form = _as_form(omega)
    if any(not c.is_constant() or not c.constant_term().is_real() for c in form.terms.values()):
        raise NonNumeric("class coefficients must be rational numbers")
    residuals = [p for p in condition_a(form, V) if p]
    b = [(r, c, e) for r, (c, e) in enumerate(condition_b(form, V, n), start=1)]
    holds_a = not residuals
    verdict = holds_a and all(c == e for _, c, e in b)
    return CriterionReport(holds_a, residuals, b, verdict)


@dataclass
class EquationSystem:
    """Polynomial equations (each meaning ``= 0``) in class unknowns ``a_ij``."""

    unknowns: list[str]
    parameters: list[str]
    equations: list[Poly] = field(default_factory=list)

    def to_text(self) -> str:
        return "\n".join(str(e) for e in self.equations)

    def to_json(self) -> dict:
        return {
            "unknowns": list(self.unknowns),
            "parameters": list(self.parameters),
            "equations": [str(e) for e in self.equations],
        }

    @classmethod
    def from_json(cls, data: dict) -> "EquationSystem":
        return cls(list(data["unknowns"]), list(data["parameters"]), [parse_poly(e) for e in data["equations"]])


def generate_system(
    g: int, D: PolarizationType, n: int, Z: PeriodMatrix | None = None
) -> EquationSystem:
    """Equations on the ``a_ij`` for ``omega`` to be an ``n``-dimensional class.

    ``Z`` defaults to the generic symmetric matrix in ``t_ij``.  Order: the
    ``r = 1`` normalisation, then condition (a) by omitted index, then
    ``r = 2..g``.  Identically vanishing equations are dropped.
    """
    if D.g != g:
        raise BadDimension(f"type {D} does not have length g={g}")
    if not 1 <= n < g:
        raise BadDimension(f"need 1 <= n < g, got n={n}, g={g}")
    Z = Z if Z is not None else PeriodMatrix.symbolic(g)
    V = PolarizedVariety(D, Z)
    omega = symbolic_form(g)
    a_eqs = [p for p in condition_a(omega, V) if p]
    b = condition_b(omega, V, n)
    b_eqs = [c - e for c, e in b]
    ordered = [b_eqs[0]] + a_eqs + b_eqs[1:]
    equations = [canonicalize_equation(p) for p in ordered if p]
    unknowns = [pair_name(i, j) for i in range(1, 2 * g + 1) for j in range(i + 1, 2 * g + 1)]
    params = sorted({v for p in equations for v in p.variables} - set(unknowns), key=var_key)
    return EquationSystem(unknowns, params, equations)


def intersection_number(classes: Sequence[FormLike]) -> Fraction:
    """``(alpha_1 ... alpha_g)`` as the ``omega_0``-coefficient of the wedge."""
    forms = [_as_form(c) for c in classes]
    if not forms:
        raise GradeError("need at least one class")
    dim = forms[0].dim
    if len(forms) != dim // 2:
        raise GradeError(f"need exactly g={dim // 2} classes, got {len(forms)}")
    for f in forms:
        if f.dim != dim or any(len(k) != 2 for k in f.terms):
            raise GradeError("intersection numbers take grade-two classes on one space")
    c = omega0_coefficient(wedge_all(forms, dim))
    if not c.is_constant() or not c.constant_term().is_real():
        raise NonNumeric("intersection of non-rational classes")
    return c.constant_term().re


def self_intersections(alpha: FormLike, D: PolarizationType) -> list[Fraction]:
    """``(alpha^r . L^(g-r))`` for ``r = 1..g``."""
    if D.is_symbolic:
        raise NonNumeric("polarization type must be numeric")
    form = _as_form(alpha)
    g = D.g
    theta = chern_theta(D)
    om, th = _powers(form, g), _powers(theta, g)
    out = []
    for r in range(1, g + 1):
        c = omega0_coefficient(wedge(om[r], th[g - r]))
        if not c.is_constant() or not c.constant_term().is_real():
            raise NonNumeric("class coefficients must be rational numbers")
        out.append(c.constant_term().re)
    return out


def ample_check(alpha: FormLike, V: PolarizedVariety) -> bool:
    """Nakai-Moishezon: ``alpha`` is ample iff every ``(alpha^r . L^(g-r)) > 0``."""
    V.require_numeric()
    return all(x > 0 for x in self_intersections(alpha, V.ptype))


def split_check(classes: Sequence[FormLike], V: PolarizedVariety) -> bool:
    """True iff the classes come from elliptic curves whose sum class is ample."""
    V.require_numeric()
    if len(classes) != V.g:
        return False
    forms = [_as_form(c) for c in classes]
    for f in forms:
        if not check_class(f, V, 1).verdict:
            return False
    total = forms[0]
    for f in forms[1:]:
        total = total + f
    return ample_check(total, V)


def char_poly_identity(omega: FormLike, V: PolarizedVariety, n: int, q=1) -> Poly:
    """``(1/(chi g!)) sum_r C(g,r) (-q)^r t^(g-r) (omega^r . L^(g-r))`` in ``t``.

    For the class of an ``n``-dimensional subvariety this is
    ``t^(g-n) (t-q)^n``.
    """
    V.require_numeric()
    g = V.g
    q = Fraction(q)
    t = var("t")
    values = [Fraction(euler_char(V.ptype).constant_term().re * math.factorial(g))]
    values += self_intersections(omega, V.ptype)
    scale = 1 / values[0]
    out = Poly()
    for r in range(g + 1):
        out = out + t ** (g - r) * (math.comb(g, r) * (-q) ** r * values[r] * scale)
    return out


def pair_identity(alpha1: FormLike, alpha2: FormLike, V: PolarizedVariety, n: int) -> list[tuple[Fraction, Fraction]]:
    """``sum_{j=0}^r C(r,j) (alpha1^j . alpha2^(r-j) . L^(g-r))`` against its target.

    Returns ``(value, expected)`` for ``r = 1..g``; ``alpha1``, ``alpha2``
    are classes of complementary subvarieties of an ``n``-dimensional one.
    """
    V.require_numeric()
    g = V.g
    if not 0 <= n <= g:
        raise BadDimension(f"need 0 <= n <= g, got n={n}")
    f1, f2 = _as_form(alpha1), _as_form(alpha2)
    theta = chern_theta(V.ptype)
    p1, p2, th = _powers(f1, g), _powers(f2, g), _powers(theta, g)
    out = []
    for r in range(1, g + 1):
        total = Fraction(0)
        for j in range(0, r + 1):
            top = wedge(wedge(p1[j], p2[r - j]), th[g - r])
            c = omega0_coefficient(top)
            total += math.comb(r, j) * (c.constant_term().re if c else 0)
        out.append((total, expected_intersection(V.ptype, n, r).constant_term().re))
    return out


def borowka_form(g: int, n: int, sub_type: Sequence[int]) -> NSClass:
    """``theta - sum_{i=1}^n (1/d_i) dx_{g-i+1} ^ dx_{g+i}`` for a principal ``theta``."""
    if not 1 <= n < g or len(sub_type) != n:
        raise BadDimension(f"need 1 <= n < g and n type entries, got n={n}, g={g}, type={sub_type}")
    coeffs = {(i, g + i): Fraction(-1) for i in range(1, g + 1)}
    for i in range(1, n + 1):
        key = (g - i + 1, g + i)
        coeffs[key] = coeffs.get(key, 0) - Fraction(1, sub_type[i - 1])
    return NSClass(g, coeffs)
