"""Polarized abelian varieties given by period matrices ``(D Z)``.

Real coordinates ``x_1..x_2g`` of the lattice are tied to the complex
coordinates by ``z = (D Z) x``, so ``dz_i = d_i dx_i + sum_j Z_ij dx_{g+j}``.
Classes in the rational Neron-Severi group are rational 2-forms
``sum a_ij dx_i ^ dx_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exterior import MultiVector, wedge_all, DimensionMismatch
from .ring import GaussianRational, Poly, const, parse_poly, var, PolyParseError

__all__ = [
    "PolarizationType",
    "PeriodMatrix",
    "PolarizedVariety",
    "NSClass",
    "NonNumeric",
    "NotInSiegel",
    "NotGradeTwo",
    "chern_theta",
    "omega0",
    "omega0_sign",
    "dz_forms",
    "euler_char",
    "siegel_check",
    "leading_minors",
    "class_to_form",
    "form_to_class",
    "symbolic_form",
    "pair_name",
    "parse_pair_name",
]


class NonNumeric(ValueError):
    pass


class NotInSiegel(ValueError):
    pass


class NotGradeTwo(ValueError):
    pass


def pair_name(i: int, j: int) -> str:
    """Unknown name ``aij`` for the coefficient of ``dx_i ^ dx_j``."""
    if i >= 10 or j >= 10:
        return f"a{i}_{j}"
    return f"a{i}{j}"


def parse_pair_name(name: str) -> tuple[int, int]:
    body = name[1:]
    if "_" in body:
        i, j = body.split("_")
        return int(i), int(j)
    if len(body) != 2 or not name.startswith("a"):
        raise ValueError(f"not a class coefficient name: {name!r}")
    return int(body[0]), int(body[1])


@dataclass(frozen=True)
class PolarizationType:
    """Elementary divisors ``(d_1, ..., d_g)``; entries may be symbolic names."""

    diag: tuple

    def __post_init__(self):
        if not self.diag:
            raise ValueError("polarization type needs at least one entry")
        entries = []
        for d in self.diag:
            if isinstance(d, str):
                d = d.strip()
                if d.lstrip("-").isdigit():
                    d = int(d)
            if isinstance(d, int):
                if d <= 0:
                    raise ValueError(f"type entries must be positive, got {d}")
            elif not isinstance(d, str):
                raise TypeError(f"bad type entry {d!r}")
            entries.append(d)
        for a, b in zip(entries, entries[1:]):
            if isinstance(a, int) and isinstance(b, int) and b % a:
                raise ValueError(f"type entries must divide each other: {a} does not divide {b}")
        object.__setattr__(self, "diag", tuple(entries))

    @classmethod
    def principal(cls, g: int) -> "PolarizationType":
        return cls((1,) * g)

    @classmethod
    def parse(cls, text: str) -> "PolarizationType":
        return cls(tuple(p for p in text.split(",") if p.strip()))

    @property
    def g(self) -> int:
        return len(self.diag)

    @property
    def is_symbolic(self) -> bool:
        return any(isinstance(d, str) for d in self.diag)

    def entry(self, i: int) -> Poly:
        """``d_{i+1}`` as a polynomial (0-based ``i``)."""
        d = self.diag[i]
        return var(d) if isinstance(d, str) else const(d)

    def __str__(self):
        return ",".join(str(d) for d in self.diag)


def euler_char(D: PolarizationType) -> Poly:
    """``chi(L) = d_1 * ... * d_g``."""
    out = const(1)
    for i in range(D.g):
        out = out * D.entry(i)
    return out


class PeriodMatrix:
    """Symmetric ``g x g`` matrix ``Z`` of polynomials (parameters allowed)."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence[object]]):
        entries = tuple(tuple(Poly.coerce(x) for x in row) for row in rows)
        g = len(entries)
        if g == 0 or any(len(r) != g for r in entries):
            raise DimensionMismatch("period matrix must be square and nonempty")
        for i in range(g):
            for j in range(i + 1, g):
                if entries[i][j] != entries[j][i]:
                    raise ValueError(f"period matrix is not symmetric at ({i + 1},{j + 1})")
        self.entries = entries

    @classmethod
    def symbolic(cls, g: int) -> "PeriodMatrix":
        """Generic symmetric matrix in ``t11, t12, ..., tgg``."""
        return cls([[var(f"t{min(i, j) + 1}{max(i, j) + 1}") for j in range(g)] for i in range(g)])

    @classmethod
    def diagonal(cls, values: Sequence[object]) -> "PeriodMatrix":
        g = len(values)
        return cls([[values[i] if i == j else 0 for j in range(g)] for i in range(g)])

    @property
    def g(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def parameters(self) -> list[str]:
        seen: set[str] = set()
        for row in self.entries:
            for x in row:
                seen.update(x.variables)
        from .ring import var_key

        return sorted(seen, key=var_key)

    def is_numeric(self) -> bool:
        return all(x.is_constant() for row in self.entries for x in row)

    def subs(self, assignment: Mapping[str, object]) -> "PeriodMatrix":
        return PeriodMatrix([[x.subs(assignment) for x in row] for row in self.entries])

    def scale(self, factor) -> "PeriodMatrix":
        factor = Poly.coerce(factor)
        return PeriodMatrix([[x * factor for x in row] for row in self.entries])

    def numeric(self) -> list[list[GaussianRational]]:
        if not self.is_numeric():
            raise NonNumeric(f"period matrix still depends on {self.parameters}")
        return [[x.constant_term() for x in row] for row in self.entries]

    def imag_part(self) -> list[list[Fraction]]:
        return [[c.im for c in row] for row in self.numeric()]

    def __eq__(self, other):
        return isinstance(other, PeriodMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"PeriodMatrix({[[str(x) for x in row] for row in self.entries]})"


@dataclass(frozen=True)
class PolarizedVariety:
    """A polarized abelian variety with period matrix ``(D Z)``."""

    ptype: PolarizationType
    Z: PeriodMatrix

    def __post_init__(self):
        if self.ptype.g != self.Z.g:
            raise DimensionMismatch(f"type has length {self.ptype.g} but Z is {self.Z.g}x{self.Z.g}")

    @classmethod
    def principal(cls, Z: PeriodMatrix) -> "PolarizedVariety":
        return cls(PolarizationType.principal(Z.g), Z)

    @property
    def g(self) -> int:
        return self.Z.g

    @property
    def parameters(self) -> list[str]:
        return self.Z.parameters

    def is_numeric(self) -> bool:
        return self.Z.is_numeric() and not self.ptype.is_symbolic

    def subs(self, assignment: Mapping[str, object]) -> "PolarizedVariety":
        return PolarizedVariety(self.ptype, self.Z.subs(assignment))

    def require_numeric(self) -> None:
        if not self.is_numeric():
            raise NonNumeric(f"variety depends on parameters {self.parameters}")

    # JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "type": [d for d in self.ptype.diag],
            "Z": [[str(x) for x in row] for row in self.Z.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PolarizedVariety":
        try:
            rows = data["Z"]
            g = int(data.get("g", len(rows)))
            ptype = data.get("type", [1] * g)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise PolyParseError(f"bad variety JSON: {exc}") from None
        if isinstance(ptype, str):
            ptype = ptype.split(",")
        Z = PeriodMatrix([[_parse_entry(x) for x in row] for row in rows])
        if Z.g != g:
            raise DimensionMismatch(f"declared g={g} but Z is {Z.g}x{Z.g}")
        return cls(PolarizationType(tuple(ptype)), Z)


def _parse_entry(x) -> Poly:
    if isinstance(x, bool):
        raise PolyParseError("booleans are not matrix entries")
    if isinstance(x, int):
        return const(x)
    if isinstance(x, str):
        return parse_poly(x)
    raise PolyParseError(f"matrix entries must be strings or integers, got {x!r}")


class NSClass:
    """Rational 2-form ``sum_{i<j} a_ij dx_i ^ dx_j`` on ``Q^{2g}``."""

    __slots__ = ("g", "coeffs")

    def __init__(self, g: int, coeffs: Mapping[tuple[int, int], object] | None = None):
        self.g = g
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            if not (1 <= i < j <= 2 * g):
                raise ValueError(f"bad index pair ({i},{j}) for g={g}")
            if isinstance(c, GaussianRational):
                if not c.is_real():
                    raise ValueError("class coefficients must be rational")
                c = c.re
            elif isinstance(c, str):
                c = GaussianRational.coerce(c)
                if not c.is_real():
                    raise ValueError("class coefficients must be rational")
                c = c.re
            c = Fraction(c)
            if c:
                clean[(i, j)] = c
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def from_names(cls, g: int, named: Mapping[str, object]) -> "NSClass":
        return cls(g, {parse_pair_name(k): v for k, v in named.items()})

    def named(self) -> dict[str, Fraction]:
        return {pair_name(i, j): c for (i, j), c in self.coeffs.items()}

    def to_json(self) -> dict[str, str]:
        return {k: _fstr(v) for k, v in self.named().items()}

    @classmethod
    def from_json(cls, g: int, data: Mapping) -> "NSClass":
        if "coeffs" in data:
            g = int(data.get("g", g))
            data = data["coeffs"]
        try:
            return cls.from_names(g, {k: (v if isinstance(v, (int, str)) else str(v)) for k, v in data.items()})
        except (ValueError, TypeError, AttributeError) as exc:
            raise PolyParseError(f"bad class JSON: {exc}") from None

    def __add__(self, other: "NSClass") -> "NSClass":
        if self.g != other.g:
            raise DimensionMismatch("classes live on different dimensions")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return NSClass(self.g, out)

    def __neg__(self):
        return NSClass(self.g, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "NSClass":
        factor = Fraction(factor)
        return NSClass(self.g, {k: c * factor for k, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, NSClass) and self.g == other.g and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.g, tuple(self.coeffs.items())))

    def __repr__(self):
        return f"NSClass({self.g}, {self.to_json()})"


def _fstr(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def class_to_form(c: NSClass) -> MultiVector:
    return MultiVector(2 * c.g, {k: v for k, v in c.coeffs.items()})


def form_to_class(form: MultiVector) -> NSClass:
    if form.dim % 2:
        raise NotGradeTwo("forms live on an even-dimensional space")
    coeffs = {}
    for k, c in form.terms.items():
        if len(k) != 2:
            raise NotGradeTwo(f"term {k} is not of grade two")
        if not c.is_constant() or not c.constant_term().is_real():
            raise NotGradeTwo(f"coefficient {c} of {k} is not rational")
        coeffs[k] = c.constant_term().re
    return NSClass(form.dim // 2, coeffs)


def symbolic_form(g: int) -> MultiVector:
    """``sum_{i<j} a_ij dx_i ^ dx_j`` with unknown coefficients."""
    n = 2 * g
    return MultiVector(n, {(i, j): var(pair_name(i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)})


def chern_theta(D: PolarizationType) -> MultiVector:
    """First Chern class ``-sum d_i dx_i ^ dx_{i+g}``."""
    g = D.g
    return MultiVector(2 * g, {(i + 1, i + 1 + g): -D.entry(i) for i in range(g)})


def omega0_sign(g: int) -> int:
    """Coefficient of ``dx_1 ^ ... ^ dx_2g`` in ``omega_0``."""
    # sorting (1, g+1, 2, g+2, ..., g, 2g) takes g(g-1)/2 transpositions
    return (-1) ** g * (-1) ** (g * (g - 1) // 2)


def omega0(g: int) -> MultiVector:
    """``(-1)^g dx_1 ^ dx_{g+1} ^ dx_2 ^ dx_{g+2} ^ ... ^ dx_g ^ dx_2g``."""
    if g < 1:
        raise ValueError("g must be positive")
    return MultiVector(2 * g, {tuple(range(1, 2 * g + 1)): omega0_sign(g)})


def dz_forms(D: PolarizationType, Z: PeriodMatrix) -> list[MultiVector]:
    g = D.g
    if Z.g != g:
        raise DimensionMismatch(f"type has length {g} but Z is {Z.g}x{Z.g}")
    out = []
    for i in range(g):
        terms = {(i + 1,): D.entry(i)}
        for j in range(g):
            terms[(g + j + 1,)] = Z[i, j]
        out.append(MultiVector(2 * g, terms))
    return out


def holomorphic_volume(V: PolarizedVariety) -> MultiVector:
    """``dz_1 ^ ... ^ dz_g``."""
    return wedge_all(dz_forms(V.ptype, V.Z), 2 * V.g)


def leading_minors(m: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Leading principal minors ``det(m[:k, :k])`` for ``k = 1..n``, exactly."""
    n = len(m)
    out = []
    for k in range(1, n + 1):
        out.append(_det([list(map(Fraction, row[:k])) for row in m[:k]]))
    return out


def _det(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    a = [row[:] for row in a]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def siegel_check(Z: PeriodMatrix, assignment: Mapping[str, object] | None = None) -> bool:
    """True iff ``Z`` is symmetric with positive definite imaginary part.

    Decided with Sylvester's criterion in exact arithmetic.
    """
    if assignment:
        Z = Z.subs(assignment)
    im = Z.imag_part()
    return all(m > 0 for m in leading_minors(im))
