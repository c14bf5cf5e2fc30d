"""Exact scalars and sparse multivariate polynomials.

Coefficients live in Q(i) (:class:`GaussianRational`); rationals are the
``im == 0`` case.  A :class:`Poly` is an immutable map from sparse monomials
to nonzero coefficients, so equal polynomials always compare equal.

Variables are ordered globally: ``a12 < a13 < ... < a56 < t11 < t12 < ...``
and then every other name alphabetically.  That order drives the graded
lexicographic leading term used by :func:`canonicalize_equation` and by
rendering.
"""

from __future__ import annotations

import ast
import functools
import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "GaussianRational",
    "Poly",
    "MissingVariable",
    "ZeroDenominator",
    "NotUnivariate",
    "ZeroPolynomial",
    "PolyParseError",
    "var",
    "const",
    "parse_poly",
    "poly_eval",
    "substitute_rational",
    "rational_roots",
    "canonicalize_equation",
    "var_key",
    "I",
]


class MissingVariable(KeyError):
    pass


class ZeroDenominator(ZeroDivisionError):
    pass


class NotUnivariate(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


class PolyParseError(ValueError):
    pass


class GaussianRational:
    """Exact element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            p = parse_poly(value)
            if not p.is_constant():
                raise PolyParseError(f"not a scalar: {value!r}")
            return p.constant_term()
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re + other, self.im)
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re - other, self.im)
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)")
        c, d = other.re, other.im
        n = c * c + d * d
        return GaussianRational((self.re * c + self.im * d) / n, (self.im * c - self.re * d) / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return _scalar_str(self)


I = GaussianRational(0, 1)

Scalar = Union[int, Fraction, GaussianRational]


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _scalar_str(c: GaussianRational) -> str:
    if not c.im:
        return _frac_str(c.re)
    im = "i" if c.im == 1 else "-i" if c.im == -1 else f"{_frac_str(c.im)}*i"
    if not c.re:
        return im
    sign = "" if im.startswith("-") else "+"
    return f"({_frac_str(c.re)}{sign}{im})"


_A_RE = re.compile(r"a(\d)(\d)$")
_T_RE = re.compile(r"t(\d)(\d)$")


@functools.lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """Sort key realising the global variable order."""
    m = _A_RE.match(name)
    if m:
        return (0, int(m.group(1)), int(m.group(2)), "")
    m = _T_RE.match(name)
    if m:
        return (1, int(m.group(1)), int(m.group(2)), "")
    return (2, 0, 0, name)


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: var_key(ve[0])))


def _mono_degree(m: tuple) -> int:
    return sum(e for _, e in m)


def _mono_cmp(m1: tuple, m2: tuple) -> int:
    """Graded lexicographic comparison; positive when ``m1 > m2``."""
    d1, d2 = _mono_degree(m1), _mono_degree(m2)
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for (v1, e1), (v2, e2) in zip(m1, m2):
        if v1 != v2:
            return 1 if var_key(v1) < var_key(v2) else -1
        if e1 != e2:
            return 1 if e1 > e2 else -1
    if len(m1) != len(m2):
        return 1 if len(m1) > len(m2) else -1
    return 0


_mono_sort_key = functools.cmp_to_key(_mono_cmp)


class Poly:
    """Sparse polynomial over Q(i) in named variables.

    Monomials are tuples of ``(variable, exponent)`` pairs in global
    variable order; zero coefficients are never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, GaussianRational] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, str):
            return parse_poly(value)
        return const(value)

    @property
    def variables(self) -> list[str]:
        seen = {v for m in self.terms for v, _ in m}
        return sorted(seen, key=var_key)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((), GaussianRational(0))

    def degree(self, variables: Iterable[str] | None = None) -> int:
        """Total degree, optionally counting only ``variables``."""
        if not self.terms:
            return -1
        if variables is None:
            return max(_mono_degree(m) for m in self.terms)
        vs = set(variables)
        return max(sum(e for v, e in m if v in vs) for m in self.terms)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def real_part(self) -> "Poly":
        return Poly({m: GaussianRational(c.re) for m, c in self.terms.items()})

    def imag_part(self) -> "Poly":
        return Poly({m: GaussianRational(c.im) for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[tuple, GaussianRational]]:
        """Terms from the graded-lex leading monomial downwards."""
        return sorted(self.terms.items(), key=lambda mc: _mono_sort_key(mc[0]), reverse=True)

    def leading(self) -> tuple[tuple, GaussianRational]:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        m = max(self.terms, key=_mono_sort_key)
        return m, self.terms[m]

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            if not c:
                return Poly()
            return Poly({m: v * c for m, v in self.terms.items()})
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m)
                p = c1 * c2
                out[m] = p if s is None else s + p
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant():
                raise TypeError("only division by scalars is supported")
            other = other.constant_term()
        c = GaussianRational.coerce(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Poly({m: v / c for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not m:
                s = _scalar_str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{_scalar_str(c)}*{mono}"
            if parts and not s.startswith("-"):
                s = "+" + s
            parts.append(s)
        return "".join(parts)

    # substitution -------------------------------------------------------

    def subs(self, mapping: Mapping[str, object]) -> "Poly":
        """Substitute polynomials (or scalars) for variables."""
        if not mapping:
            return self
        repl = {v: Poly.coerce(p) for v, p in mapping.items()}
        cache: dict[tuple[str, int], Poly] = {}
        out = Poly()
        acc: dict = {}
        for m, c in self.terms.items():
            kept = []
            factor = None
            for v, e in m:
                if v in repl:
                    key = (v, e)
                    pw = cache.get(key)
                    if pw is None:
                        pw = cache[key] = repl[v] ** e
                    factor = pw if factor is None else factor * pw
                else:
                    kept.append((v, e))
            if factor is None:
                s = acc.get(m)
                acc[m] = c if s is None else s + c
                continue
            head = Poly({tuple(kept): c})
            out = out + head * factor
        return out + Poly(acc)

    def coefficients_in(self, variables: Iterable[str]) -> dict[tuple, "Poly"]:
        """Split into ``{monomial in variables: coefficient Poly}``."""
        vs = set(variables)
        groups: dict[tuple, dict] = {}
        for m, c in self.terms.items():
            outer = tuple((v, e) for v, e in m if v in vs)
            inner = tuple((v, e) for v, e in m if v not in vs)
            groups.setdefault(outer, {})[inner] = c
        return {k: Poly(v) for k, v in groups.items()}

    def univariate_coeffs(self) -> list[GaussianRational]:
        """Dense coefficients, constant first, of a polynomial in <= 1 variable."""
        vs = self.variables
        if len(vs) > 1:
            raise NotUnivariate(f"polynomial in {vs} is not univariate")
        if not self.terms:
            return []
        deg = self.degree()
        coeffs = [GaussianRational(0)] * (deg + 1)
        for m, c in self.terms.items():
            coeffs[m[0][1] if m else 0] = c
        return coeffs


def _as_poly(value) -> Poly | None:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return const(value)
    return None


def var(name: str) -> Poly:
    return Poly({((name, 1),): GaussianRational(1)})


def const(value) -> Poly:
    return Poly({(): GaussianRational.coerce(value)})


# parsing ----------------------------------------------------------------

_IMAG_LITERAL = re.compile(r"(?<![\w.])(\d+(?:/\d+)?)i\b")


def parse_poly(text: str) -> Poly:
    """Parse the polynomial text grammar, e.g. ``5*a13^2+5*a13+1`` or ``2i``.

    Accepts ``+ - * / ^``, parentheses, integer literals, the imaginary
    unit ``i`` (also as a suffix: ``3i``, ``1/2i`` meaning ``(1/2)*i``) and
    identifiers as variables.  Division is only allowed by scalars.
    """
    if not isinstance(text, str):
        raise PolyParseError(f"expected a string, got {type(text).__name__}")
    src = _IMAG_LITERAL.sub(lambda m: f"({m.group(1)})*i", text.strip())
    src = src.replace("^", "**")
    if not src:
        raise PolyParseError("empty polynomial text")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolyParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval_node(tree.body, text)


def _eval_node(node, text) -> Poly:
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return const(node.value)
    if isinstance(node, ast.Name):
        return const(I) if node.id == "i" else var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval_node(node.operand, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, text)
        if isinstance(node.op, ast.Pow):
            exp = _eval_node(node.right, text)
            if not exp.is_constant() or not exp.constant_term().is_real():
                raise PolyParseError(f"exponent must be a nonnegative integer in {text!r}")
            k = exp.constant_term().re
            if k.denominator != 1 or k < 0:
                raise PolyParseError(f"exponent must be a nonnegative integer in {text!r}")
            return left ** int(k)
        right = _eval_node(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant() or right.is_zero():
                raise PolyParseError(f"division by a non-scalar or zero in {text!r}")
            return left / right.constant_term()
    raise PolyParseError(f"unsupported syntax in {text!r}")


# operations -------------------------------------------------------------


def poly_eval(p: Poly, assignment: Mapping[str, object]) -> GaussianRational:
    """Evaluate ``p`` exactly; every variable of ``p`` must be assigned."""
    values = {v: GaussianRational.coerce(x) for v, x in assignment.items()}
    total = GaussianRational(0)
    for m, c in p.terms.items():
        t = c
        for v, e in m:
            try:
                t = t * values[v] ** e
            except KeyError:
                raise MissingVariable(v) from None
        total = total + t
    return total


def substitute_rational(p: Poly, subs: Mapping[str, tuple[Poly, Poly]]) -> tuple[Poly, Poly]:
    """Substitute rational functions ``num/den`` for variables of ``p``.

    Returns ``(num, den)`` with ``den`` the product of the input
    denominators raised to the largest exponent each variable carries in
    ``p``.  Only the rational content is normalised; common polynomial
    factors are not cancelled.
    """
    subs = {v: (Poly.coerce(n), Poly.coerce(d)) for v, (n, d) in subs.items()}
    for v, (_, d) in subs.items():
        if d.is_zero():
            raise ZeroDenominator(f"zero denominator substituted for {v}")
    maxdeg = {v: 0 for v in subs}
    for m in p.terms:
        for v, e in m:
            if v in maxdeg and e > maxdeg[v]:
                maxdeg[v] = e
    den = const(1)
    for v, k in maxdeg.items():
        den = den * subs[v][1] ** k
    num = Poly()
    powcache: dict = {}

    def pw(v, kind, e):
        key = (v, kind, e)
        if key not in powcache:
            powcache[key] = subs[v][kind] ** e
        return powcache[key]

    for m, c in p.terms.items():
        term = Poly({tuple((v, e) for v, e in m if v not in subs): c})
        for v, e in m:
            if v in subs:
                term = term * pw(v, 0, e)
        for v, k in maxdeg.items():
            e = dict(m).get(v, 0)
            if k - e:
                term = term * pw(v, 1, k - e)
        num = num + term
    # normalise on the denominator: integral, content 1, positive lead
    s = _content_scale(den)
    num, den = num * s, den * s
    lead = den.leading()[1]
    if lead.re < 0 or (lead.re == 0 and lead.im < 0):
        num, den = -num, -den
    return num, den


def _content_scale(p: Poly) -> GaussianRational:
    """Positive rational making every coefficient part integral with gcd 1."""
    nums, dens = [], []
    for c in p.terms.values():
        for q in (c.re, c.im):
            if q:
                nums.append(abs(q.numerator))
                dens.append(q.denominator)
    if not nums:
        return GaussianRational(1)
    g = functools.reduce(math.gcd, nums)
    lcm = functools.reduce(lambda a, b: a * b // math.gcd(a, b), dens, 1)
    return GaussianRational(Fraction(lcm, g))


def canonicalize_equation(p: Poly) -> Poly:
    """Scale ``p`` to integer coefficients of content 1 with positive lead.

    "Positive" for a Gaussian coefficient means real part > 0, or real
    part 0 and imaginary part > 0.
    """
    p = Poly.coerce(p)
    if p.is_zero():
        raise ZeroPolynomial("cannot canonicalize the zero polynomial")
    q = p * _content_scale(p)
    lead = q.leading()[1]
    if lead.re < 0 or (lead.re == 0 and lead.im < 0):
        q = -q
    return q


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of a univariate polynomial with rational coefficients.

    Uses the rational root theorem on the content-normalised integer
    polynomial.  Roots are returned sorted, without multiplicity.
    """
    p = Poly.coerce(p)
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has every root")
    if not p.is_real():
        raise ValueError("rational_roots needs rational coefficients")
    coeffs = [c.re for c in canonicalize_equation(p).univariate_coeffs()]
    ints = [int(c) for c in coeffs]
    roots: set[Fraction] = set()
    # strip the x^k factor so the trailing coefficient is nonzero
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    ints = ints[k:]
    if len(ints) == 1:
        return sorted(roots)
    lead, trail = ints[-1], ints[0]

    def value(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(ints):
            acc = acc * x + c
        return acc

    for q in _divisors(lead):
        for pnum in _divisors(trail):
            if math.gcd(pnum, q) != 1:
                continue
            for cand in (Fraction(pnum, q), Fraction(-pnum, q)):
                if cand not in roots and value(cand) == 0:
                    roots.add(cand)
    return sorted(roots)
