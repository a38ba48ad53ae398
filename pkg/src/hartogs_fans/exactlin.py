"""Exact rational linear algebra.

Vectors are plain tuples of :class:`fractions.Fraction` (or ``int``, which
compares equal to the corresponding fraction).  Matrices are sequences of
such rows.  Nothing in here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, ZeroVector

RatVec = tuple  # tuple of Fraction / int
RatMat = Sequence[RatVec]


def to_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction.

    Accepts ints, Fractions and strings such as ``"3"`` or ``"-2/3"``.
    Floats and bools are rejected: they would silently smuggle rounding
    error into exact computations.
    """
    if isinstance(x, bool):
        raise TypeError(f"not a rational: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not an exact rational string: {x!r}")
        return Fraction(s)
    raise TypeError(f"not a rational: {x!r}")


def vec(coords: Iterable) -> RatVec:
    return tuple(to_rational(c) for c in coords)


def zero(n: int) -> RatVec:
    return (Fraction(0),) * n


def unit(n: int, i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if j == i else 0 for j in range(n))


def check_len(v: Sequence, n: int, what: str = "vector") -> None:
    if len(v) != n:
        raise DimensionMismatch(f"{what} has length {len(v)}, expected {n}")


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)} differ")
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u: Sequence, v: Sequence) -> RatVec:
    return tuple(a + b for a, b in zip(u, v))


def scale(q, v: Sequence) -> RatVec:
    return tuple(q * a for a in v)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def rref(rows: RatMat, ncols: Optional[int] = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(a) for a in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [a / piv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(m: RatMat) -> int:
    """Rank over Q by exact Gaussian elimination."""
    if not m:
        return 0
    return len(rref(m)[0])


def nullspace(m: RatMat, ncols: int) -> list[RatVec]:
    """Basis of {x : m x = 0}."""
    red, pivots = rref(m, ncols) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def primitive(v: Sequence) -> tuple[int, ...]:
    """The positive multiple of ``v`` with coprime integer coordinates."""
    if all(type(a) is int for a in v):
        return primitive_int(tuple(v))
    fr = [Fraction(a) for a in v]
    if all(a == 0 for a in fr):
        raise ZeroVector("primitive() of the zero vector")
    den = lcm(*(a.denominator for a in fr))
    ints = [int(a * den) for a in fr]
    g = gcd(*ints)
    return tuple(a // g for a in ints)


def primitive_int(v: Sequence[int]) -> tuple[int, ...]:
    """primitive() specialised to integer input (hot path of the cone kernel)."""
    g = gcd(*v)
    if g == 0:
        raise ZeroVector("primitive() of the zero vector")
    return tuple(a // g for a in v)


def solve_membership(basis: RatMat, v: Sequence) -> Optional[RatVec]:
    """Coefficients ``c`` with ``sum(c[i] * basis[i]) == v``, or None.

    When the rows of ``basis`` are dependent an arbitrary solution is
    returned (free coefficients set to zero).
    """
    n = len(v)
    for b in basis:
        check_len(b, n, "basis row")
    k = len(basis)
    if k == 0:
        return () if is_zero(v) else None
    # augmented system: columns are basis rows
    aug = [[Fraction(basis[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    red, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    c = [Fraction(0)] * k
    for row, pc in zip(red, pivots):
        c[pc] = row[k]
    return tuple(c)


def nonneg_combination(gens: RatMat, target: Sequence) -> Optional[RatVec]:
    """Find ``c >= 0`` with ``sum(c[i] * gens[i]) == target`` or return None.

    Phase one of the simplex method on an exact tableau, Bland's rule for
    anti-cycling.  Used to build positive-combination witnesses.
    """
    n = len(target)
    m = len(gens)
    for g in gens:
        check_len(g, n, "generator")
    if is_zero(target):
        return (Fraction(0),) * m
    if m == 0:
        return None
    # rows: n equations, columns: m originals + n artificials + rhs
    rows = []
    for j in range(n):
        row = [Fraction(gens[i][j]) for i in range(m)] + [Fraction(0)] * n + [Fraction(target[j])]
        if row[-1] < 0:
            row = [-a for a in row]
        row[m + j] = Fraction(1)
        rows.append(row)
    basis = [m + j for j in range(n)]
    width = m + n
    # phase-one objective: minimise sum of artificials -> reduced costs
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for c in range(width + 1):
            cost[c] -= row[c]
    for j in range(n):
        cost[m + j] = Fraction(0)
    while True:
        enter = next((c for c in range(width) if cost[c] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded: cannot happen in phase one
            break
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [a / piv for a in rows[i]]
        for k2, row in enumerate(rows):
            if k2 != i and row[enter] != 0:
                f = row[enter]
                rows[k2] = [a - f * b for a, b in zip(row, rows[i])]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, rows[i])]
        basis[i] = enter
    if cost[-1] != 0:
        return None
    c = [Fraction(0)] * m
    for i, b in enumerate(basis):
        if b < m:
            c[b] = rows[i][-1]
    return tuple(c)


def format_rational(q) -> int | str:
    """Serialisation form: bare int when integral, else ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return q.numerator
    return f"{q.numerator}/{q.denominator}"
