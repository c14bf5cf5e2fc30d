"""Searching for rational classes that satisfy the criterion.

The pipeline works on the unknowns ``a_ij``: the linear conditions
(condition (a) and the ``r = 1`` normalisation) are solved exactly, the
parametrisation is pushed into the ``r >= 2`` conditions, and the reduced
system is decided exactly when it is univariate, or otherwise searched by
bounded height.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .abelian import (
    NSClass,
    NotInSiegel,
    PolarizedVariety,
    class_to_form,
    pair_name,
    siegel_check,
    symbolic_form,
)
from .criterion import (
    ample_check,
    check_class,
    condition_a,
    condition_b,
    split_check,
)
from .exterior import MultiVector, wedge
from .ring import Poly, const, var

__all__ = [
    "Inconsistent",
    "AffineSolutionSpace",
    "SolveReport",
    "linear_solve",
    "coefficient_match",
    "rationals_of_height",
    "height",
    "bounded_height_points",
    "reduce_system",
    "verify_class",
    "find_subvariety",
    "find_split",
]


@dataclass(frozen=True)
class Inconsistent:
    """Marker for a linear system with no solution."""

    reason: str = "inconsistent linear system"

    def __bool__(self):
        return False


@dataclass
class AffineSolutionSpace:
    """``basepoint + sum_k s_k * basis[k]`` over ``variables``."""

    variables: list[str]
    basepoint: list[Fraction]
    basis: list[list[Fraction]]
    free: list[str]
    rank: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, params: Sequence[Fraction]) -> list[Fraction]:
        out = list(self.basepoint)
        for s, b in zip(params, self.basis):
            if s:
                for i, x in enumerate(b):
                    if x:
                        out[i] += s * x
        return out

    def expressions(self) -> dict[str, Poly]:
        """Each variable as an affine polynomial in the free variables."""
        out = {}
        for i, v in enumerate(self.variables):
            p = const(self.basepoint[i])
            for f, b in zip(self.free, self.basis):
                if b[i]:
                    p = p + var(f) * b[i]
            out[v] = p
        return out


def _linear_row(eq: Poly, index: dict[str, int]) -> list[Fraction]:
    row = [Fraction(0)] * (len(index) + 1)
    for m, c in eq.terms.items():
        if not c.is_real():
            raise ValueError(f"linear_solve needs rational coefficients: {eq}")
        if not m:
            row[-1] -= c.re
            continue
        if len(m) != 1 or m[0][1] != 1 or m[0][0] not in index:
            raise ValueError(f"equation is not linear in the unknowns: {eq}")
        row[index[m[0][0]]] += c.re
    return row


def linear_solve(equations: Sequence[Poly], unknowns: Sequence[str]) -> AffineSolutionSpace | Inconsistent:
    """Reduced row echelon solution of ``equations = 0`` over Q.

    Pivots are taken column by column in the order of ``unknowns`` (leftmost
    nonzero column first, smallest remaining equation index as pivot row),
    so later unknowns are the ones left free.
    """
    unknowns = list(unknowns)
    index = {v: k for k, v in enumerate(unknowns)}
    rows = [_linear_row(e, index) for e in equations]
    ncols = len(unknowns)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows.insert(r, rows.pop(piv)) if piv != r else None
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    for row in rows[r:]:
        if row[-1]:
            return Inconsistent(f"0 = {row[-1]} after elimination")
    free_cols = [c for c in range(ncols) if c not in pivots]
    base = [Fraction(0)] * ncols
    for k, col in enumerate(pivots):
        base[col] = rows[k][-1]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for k, col in enumerate(pivots):
            vec[col] = -rows[k][fc]
        basis.append(vec)
    return AffineSolutionSpace(unknowns, base, basis, [unknowns[c] for c in free_cols], len(pivots))


def coefficient_match(equations: Sequence[Poly], unknowns: Sequence[str]) -> list[Poly]:
    """Split each equation by monomials in the non-unknown variables.

    Treating the parameters as algebraically independent, an equation
    holds identically iff every parameter-monomial coefficient vanishes.
    """
    unknown_set = set(unknowns)
    out = []
    for eq in equations:
        params = [v for v in eq.variables if v not in unknown_set]
        groups = eq.coefficients_in(params)
        keys = sorted(groups, key=_param_mono_key, reverse=True)
        out.extend(groups[k] for k in keys if groups[k])
    return out


def _param_mono_key(m: tuple):
    from .ring import _mono_sort_key

    return _mono_sort_key(m)


# bounded height enumeration ---------------------------------------------


def height(q: Fraction) -> int:
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)


def rationals_of_height(H: int) -> list[Fraction]:
    """All rationals of height ``<= H``, sorted by height and then value."""
    vals = {Fraction(p, q) for q in range(1, H + 1) for p in range(-H, H + 1) if math.gcd(p, q) == 1}
    return sorted(vals, key=lambda x: (height(x), x))


def bounded_height_points(k: int, H: int) -> Iterator[tuple[Fraction, ...]]:
    """Every rational ``k``-vector whose entries have height ``<= H``.

    Ordered by the largest entry height, then lexicographically by value.
    """
    if H < 1:
        raise ValueError("height bound must be at least 1")
    if k == 0:
        yield ()
        return
    vals = rationals_of_height(H)
    for h in range(1, H + 1):
        upto = sorted(x for x in vals if height(x) <= h)
        for pt in itertools.product(upto, repeat=k):
            if any(height(x) == h for x in pt):
                yield pt


def _point_key(pt: tuple[Fraction, ...]):
    return (max((height(x) for x in pt), default=1), pt)


# reduction ---------------------------------------------------------------


def _compile(p: Poly, free: Sequence[str]):
    pos = {v: i for i, v in enumerate(free)}
    return [(c.re, tuple((pos[v], e) for v, e in m)) for m, c in p.terms.items()]


def _eval_compiled(terms, pt) -> Fraction:
    total = Fraction(0)
    for c, mono in terms:
        t = c
        for i, e in mono:
            t *= pt[i] ** e
        total += t
    return total


@dataclass
class Reduction:
    """Linear part solved; what remains of the ``r >= 2`` conditions."""

    space: AffineSolutionSpace | Inconsistent
    reduced: list[Poly] = field(default_factory=list)
    linear_equations: list[Poly] = field(default_factory=list)


def _real_linear_constraints(polys: Sequence[Poly], unknowns: Sequence[str]) -> list[Poly]:
    out = []
    for p in coefficient_match(polys, unknowns):
        for part in (p.real_part(), p.imag_part()):
            if part:
                out.append(part)
    return out


def reduce_system(V: PolarizedVariety, n: int, unknown_order: Sequence[str] | None = None) -> Reduction:
    """Solve the linear conditions and substitute into the nonlinear ones.

    Parameters left in ``Z`` are treated as algebraically independent
    (condition (a) must hold identically in them).  Unknowns listed last
    in ``unknown_order`` are preferred as free variables.
    """
    g = V.g
    omega = symbolic_form(g)
    unknowns = list(unknown_order) if unknown_order else [
        pair_name(i, j) for i in range(1, 2 * g + 1) for j in range(i + 1, 2 * g + 1)
    ]
    a_polys = [p for p in condition_a(omega, V) if p]
    b = condition_b(omega, V, n)
    linear = _real_linear_constraints(a_polys, unknowns)
    linear.append(b[0][0] - b[0][1])
    space = linear_solve(linear, unknowns)
    if isinstance(space, Inconsistent):
        return Reduction(space, [], linear)
    exprs = space.expressions()
    param_form = omega.map_coefficients(lambda c: c.subs(exprs))
    reduced = []
    for c, e in condition_b(param_form, V, n)[1:]:
        d = c - e
        if d:
            reduced.append(d)
    return Reduction(space, reduced, linear)


def verify_class(omega, V: PolarizedVariety, n: int) -> bool:
    """Independent re-check of a class; parameters of ``Z`` are generic."""
    if V.is_numeric():
        return check_class(omega, V, n).verdict
    if any(condition_a(omega, V)):
        return False
    return all(c == e for c, e in condition_b(omega, V, n))


# reports -----------------------------------------------------------------


@dataclass
class SolveReport:
    status: str
    witnesses: list = field(default_factory=list)
    height_bound: int | None = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == "found"

    def to_json(self) -> dict:
        wit = []
        for w in self.witnesses:
            if isinstance(w, (list, tuple)):
                wit.append([c.to_json() for c in w])
            else:
                wit.append(w.to_json())
        return {
            "status": self.status,
            "height_bound": self.height_bound,
            "witnesses": wit,
            "diagnostics": self.diagnostics,
        }


def _class_from_point(space: AffineSolutionSpace, pt, g: int) -> NSClass:
    from .abelian import parse_pair_name

    values = space.point(pt)
    return NSClass(g, {parse_pair_name(v): x for v, x in zip(space.variables, values)})


def _univariate_roots(polys: Sequence[Poly]) -> tuple[list[Fraction], str]:
    """Common rational roots of univariate polynomials, decided exactly."""
    from .ring import rational_roots

    polys = sorted(polys, key=lambda p: p.degree())
    first = polys[0]
    coeffs = [c.re for c in first.univariate_coeffs()]
    if len(coeffs) == 3:
        c0, c1, c2 = coeffs
        disc = c1 * c1 - 4 * c2 * c0
        root = _rational_sqrt(disc)
        path = "quadratic-discriminant"
        if root is None:
            cands = []
        else:
            cands = sorted({(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)})
    elif len(coeffs) == 2:
        cands, path = [-coeffs[0] / coeffs[1]], "linear"
    else:
        cands, path = rational_roots(first), "rational-root-theorem"
    roots = []
    for x in cands:
        if all(_eval_compiled(_compile(p, p.variables or ["_"]), (x,)) == 0 for p in polys):
            roots.append(x)
    return roots, path


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _search_chunk(args):
    compiled, k, H, first_values, limit = args
    found = []
    tested = 0
    vals = rationals_of_height(H)
    for h in range(1, H + 1):
        upto = sorted(x for x in vals if height(x) <= h)
        for x0 in first_values:
            if height(x0) > h:
                continue
            for rest in itertools.product(upto, repeat=k - 1):
                pt = (x0,) + rest
                if max(height(x) for x in pt) != h:
                    continue
                tested += 1
                if all(_eval_compiled(t, pt) == 0 for t in compiled):
                    found.append(pt)
                    if limit is not None and len(found) >= limit:
                        return found, tested
    return found, tested


def _enumerate(reduced: Sequence[Poly], free: Sequence[str], H: int, limit: int | None, threads: int):
    compiled = sorted((_compile(p, free) for p in reduced), key=len)
    k = len(free)
    vals = rationals_of_height(H)
    if threads <= 1 or k == 0:
        found, tested = [], 0
        for pt in bounded_height_points(k, H):
            tested += 1
            if all(_eval_compiled(t, pt) == 0 for t in compiled):
                found.append(pt)
                if limit is not None and len(found) >= limit:
                    break
        return found, tested
    chunks = [vals[i::threads] for i in range(threads)]
    jobs = [(compiled, k, H, chunk, limit) for chunk in chunks if chunk]
    with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
        results = list(pool.map(_search_chunk, jobs))
    found = sorted((pt for res, _ in results for pt in res), key=_point_key)
    if limit is not None and len(found) >= limit:
        found = found[:limit]
        # count what a serial scan would have tested, so reports do not
        # depend on the thread count
        last = _point_key(found[-1])
        tested = 0
        for pt in bounded_height_points(k, H):
            tested += 1
            if _point_key(pt) == last:
                break
    else:
        tested = len(vals) ** k
    return found, tested


def find_subvariety(
    V: PolarizedVariety,
    n: int,
    H: int = 8,
    *,
    max_witnesses: int | None = None,
    threads: int = 1,
    unknown_order: Sequence[str] | None = None,
) -> SolveReport:
    """Search for the class of an ``n``-dimensional abelian subvariety.

    Numeric ``Z`` must lie in the Siegel space.  A ``Z`` with parameters is
    read as a generic member of its family.  Statuses: ``found``,
    ``none_exact`` (the reduced system is univariate or empty and has no
    rational solution), ``inconsistent_linear`` and ``none_up_to_height``.
    """
    if H < 1:
        raise ValueError("height bound must be at least 1")
    if V.Z.is_numeric():
        V.require_numeric()
        if not siegel_check(V.Z):
            raise NotInSiegel("imaginary part of Z is not positive definite")
    g = V.g
    red = reduce_system(V, n, unknown_order)
    diag = {"generic_parameters": V.parameters, "linear_equations": len(red.linear_equations)}
    if isinstance(red.space, Inconsistent):
        diag["path"] = "linear"
        diag["reason"] = red.space.reason
        return SolveReport("inconsistent_linear", [], H, diag)
    space = red.space
    diag.update(rank=space.rank, free=list(space.free), reduced=[str(p) for p in red.reduced])
    reduced = red.reduced
    witnesses_pts: list[tuple] = []
    exact = False
    if any(p.is_constant() for p in reduced):
        diag["path"] = "constant-obstruction"
        exact = True
    elif not space.free:
        diag["path"] = "unique-point"
        exact = True
        witnesses_pts = [()] if not reduced else []
    elif len(space.free) == 1 and reduced:
        roots, path = _univariate_roots(reduced)
        diag["path"] = path
        exact = True
        witnesses_pts = [(x,) for x in roots]
        if max_witnesses is not None:
            witnesses_pts = witnesses_pts[:max_witnesses]
    else:
        diag["path"] = "enumeration"
        witnesses_pts, tested = _enumerate(reduced, space.free, H, max_witnesses, threads)
        diag["candidates_tested"] = tested
    witnesses = [_class_from_point(space, pt, g) for pt in witnesses_pts]
    for w in witnesses:
        if not verify_class(w, V, n):
            raise AssertionError(f"witness {w} failed independent verification")
    if witnesses:
        return SolveReport("found", witnesses, H, diag)
    return SolveReport("none_exact" if exact else "none_up_to_height", [], H, diag)


def _is_square_zero(c: NSClass) -> bool:
    f = class_to_form(c)
    return wedge(f, f).is_zero()


def find_split(
    V: PolarizedVariety,
    H: int = 8,
    *,
    threads: int = 1,
    max_candidates: int = 2000,
) -> SolveReport:
    """Search for ``g`` elliptic-curve classes whose sum is ample.

    Heights are raised one at a time, and combinations are tried after each
    level, so small splittings are found without exhausting the bound.
    """
    V.require_numeric()
    if not siegel_check(V.Z):
        raise NotInSiegel("imaginary part of Z is not positive definite")
    if H < 1:
        raise ValueError("height bound must be at least 1")
    g = V.g
    if g == 1:
        from .abelian import chern_theta, form_to_class

        theta = form_to_class(chern_theta(V.ptype))
        return SolveReport("found", [[theta]], H, {"path": "dimension-one"})
    diag: dict = {}
    for h in range(1, H + 1):
        sub = find_subvariety(V, 1, h, max_witnesses=max_candidates, threads=threads)
        diag = {"elliptic_witnesses": len(sub.witnesses), "subsearch": sub.status, "searched_height": h}
        if not sub.found:
            if sub.status in ("none_exact", "inconsistent_linear"):
                return SolveReport("none_exact", [], H, diag)
            continue
        pick, visited, prune = _combine(sub.witnesses, V)
        diag["nodes_visited"] = visited
        diag["pruned_by_square_zero"] = prune
        if pick is not None:
            if not split_check(pick, V):
                raise AssertionError("split witness failed independent verification")
            return SolveReport("found", [pick], H, diag)
        if sub.diagnostics.get("path") != "enumeration":
            break
    return SolveReport("none_up_to_height", [], H, diag)


def _combine(cands: Sequence[NSClass], V: PolarizedVariety):
    """First ``g``-subset of ``cands`` (in order) with ample sum."""
    g = V.g
    # alpha ^ alpha = 0 for elliptic classes makes a vanishing partial
    # wedge rule out a positive top intersection
    prune = all(_is_square_zero(c) for c in cands)
    forms = [class_to_form(c) for c in cands]
    visited = 0

    def dfs(start: int, chosen: list[int], acc: MultiVector):
        nonlocal visited
        if len(chosen) == g:
            total = cands[chosen[0]]
            for i in chosen[1:]:
                total = total + cands[i]
            return list(chosen) if ample_check(total, V) else None
        for i in range(start, len(cands)):
            visited += 1
            nxt = wedge(acc, forms[i])
            if prune and nxt.is_zero():
                continue
            res = dfs(i + 1, chosen + [i], nxt)
            if res:
                return res
        return None

    pick = dfs(0, [], MultiVector.scalar(2 * g))
    return ([cands[i] for i in pick] if pick is not None else None), visited, prune
