"""Exterior algebra of K^{2g} with polynomial coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .ring import Poly, const

__all__ = [
    "MultiVector",
    "DimensionMismatch",
    "BadTuple",
    "OddSize",
    "NotAlternating",
    "wedge",
    "wedge_power",
    "wedge_all",
    "coefficient",
    "pfaffian",
    "merge_sign",
]


class DimensionMismatch(ValueError):
    pass


class BadTuple(ValueError):
    pass


class OddSize(ValueError):
    pass


class NotAlternating(ValueError):
    pass


def merge_sign(a: Sequence[int], b: Sequence[int]) -> int:
    """Sign of the shuffle sorting ``a + b``; 0 if they share an index.

    Both inputs must be strictly increasing.  The sign is the parity of
    the number of pairs ``(x in a, y in b)`` with ``x > y``.
    """
    inversions = 0
    i = 0
    na = len(a)
    for y in b:
        while i < na and a[i] < y:
            i += 1
        if i < na and a[i] == y:
            return 0
        inversions += na - i
    return -1 if inversions & 1 else 1


class MultiVector:
    """Element of the exterior algebra on ``dx_1, ..., dx_dim``.

    ``terms`` maps strictly increasing index tuples (1-based) to nonzero
    :class:`Poly` coefficients.  Mixed grades are allowed.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[tuple, object] | None = None):
        if dim <= 0:
            raise ValueError("dimension must be positive")
        self.dim = dim
        clean = {}
        for k, c in (terms or {}).items():
            k = tuple(k)
            if any(k[i] >= k[i + 1] for i in range(len(k) - 1)) or (k and (k[0] < 1 or k[-1] > dim)):
                raise BadTuple(f"index tuple {k} is not strictly increasing within 1..{dim}")
            c = Poly.coerce(c)
            if c:
                clean[k] = c
        self.terms = clean

    @classmethod
    def scalar(cls, dim: int, value=1) -> "MultiVector":
        return cls(dim, {(): value})

    @classmethod
    def basis(cls, dim: int, *indices: int, coeff=1) -> "MultiVector":
        """``coeff * dx_{i1} ^ dx_{i2} ^ ...`` for indices in any order."""
        out = cls.scalar(dim, coeff)
        for i in indices:
            out = wedge(out, cls(dim, {(i,): 1}))
        return out

    def grades(self) -> set[int]:
        return {len(k) for k in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "MultiVector") -> "MultiVector":
        _check_dims(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return MultiVector(self.dim, out)

    def __neg__(self) -> "MultiVector":
        return MultiVector(self.dim, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        return self + (-other)

    def scale(self, factor) -> "MultiVector":
        factor = Poly.coerce(factor)
        return MultiVector(self.dim, {k: c * factor for k, c in self.terms.items()})

    def __mul__(self, factor):
        if isinstance(factor, MultiVector):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __xor__(self, other: "MultiVector") -> "MultiVector":
        return wedge(self, other)

    def map_coefficients(self, fn) -> "MultiVector":
        return MultiVector(self.dim, {k: fn(c) for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiVector({self.dim}, {str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: (len(k), k)):
            c = self.terms[k]
            blade = "^".join(f"dx{i}" for i in k) or "1"
            if not k:
                parts.append(f"({c})")
            elif c == const(1):
                parts.append(blade)
            elif c == const(-1):
                parts.append("-" + blade)
            else:
                parts.append(f"({c})*{blade}")
        return " + ".join(parts).replace("+ -", "- ")


def _check_dims(u: MultiVector, v: MultiVector) -> None:
    if u.dim != v.dim:
        raise DimensionMismatch(f"dimensions {u.dim} and {v.dim} differ")


def wedge(u: MultiVector, v: MultiVector) -> MultiVector:
    _check_dims(u, v)
    out: dict[tuple, Poly] = {}
    for a, ca in u.terms.items():
        sa = set(a)
        for b, cb in v.terms.items():
            if sa.intersection(b):
                continue
            sign = merge_sign(a, b)
            key = tuple(sorted(a + b))
            prod = ca * cb
            if sign < 0:
                prod = -prod
            out[key] = out[key] + prod if key in out else prod
    return MultiVector(u.dim, out)


def wedge_all(items: Iterable[MultiVector], dim: int) -> MultiVector:
    out = MultiVector.scalar(dim)
    for item in items:
        out = wedge(out, item)
    return out


def wedge_power(u: MultiVector, r: int) -> MultiVector:
    if r < 0:
        raise ValueError("wedge power must be nonnegative")
    out = MultiVector.scalar(u.dim)
    for _ in range(r):
        out = wedge(out, u)
    return out


def coefficient(u: MultiVector, tup: Sequence[int]) -> Poly:
    tup = tuple(tup)
    if any(tup[i] >= tup[i + 1] for i in range(len(tup) - 1)) or (tup and (tup[0] < 1 or tup[-1] > u.dim)):
        raise BadTuple(f"index tuple {tup} is not strictly increasing within 1..{u.dim}")
    return u.terms.get(tup, Poly())


def pfaffian(a: Sequence[Sequence[object]]) -> Poly:
    """Pfaffian of an alternating matrix by expansion along the first row.

    Entries may be anything :meth:`Poly.coerce` accepts.
    """
    m = [[Poly.coerce(x) for x in row] for row in a]
    size = len(m)
    if any(len(row) != size for row in m):
        raise NotAlternating("matrix is not square")
    if size % 2:
        raise OddSize(f"Pfaffian needs even size, got {size}")
    for i in range(size):
        if m[i][i]:
            raise NotAlternating(f"nonzero diagonal entry at {i + 1}")
        for j in range(i + 1, size):
            if m[i][j] != -m[j][i]:
                raise NotAlternating(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not opposite")
    return _pf(m, tuple(range(size)), {})


def _pf(m, idx: tuple, memo: dict) -> Poly:
    if not idx:
        return const(1)
    if idx in memo:
        return memo[idx]
    first, rest = idx[0], idx[1:]
    total = Poly()
    for pos, j in enumerate(rest):
        entry = m[first][j]
        if not entry:
            continue
        sub = _pf(m, rest[:pos] + rest[pos + 1 :], memo)
        term = entry * sub
        total = total - term if pos % 2 else total + term
    memo[idx] = total
    return total
