"""Rational polyhedral cones with both V- and H-representation.

A :class:`Cone` is stored in a canonical form so that ``==`` is equality of
point sets:

* ``lineality``  RREF basis of the lineality space ``c ∩ -c`` (primitive rows)
* ``rays``       extreme rays modulo lineality, orthogonally projected onto
                 the complement of the lineality space, primitive
* ``equations``  RREF basis of ``span(c)^⊥``
* ``facets``     facet normals projected onto ``span(c)``, primitive

``generators`` and ``inequalities`` expose the usual flat form, lineality
and equations appearing as ± pairs.  The zero cone has no generators and
inequalities ``{±e_i}``.

Conversion between the two sides is done by the double description method
(:func:`extreme_rays`), always in integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import exactlin as el
from .errors import DimensionMismatch, ZeroCone

IntVec = tuple[int, ...]


def _as_int_ray(v: Sequence) -> IntVec | None:
    if el.is_zero(v):
        return None
    return el.primitive(v)


def _idot(u: IntVec, v: IntVec) -> int:
    return sum(a * b for a, b in zip(u, v))


def extreme_rays(rank: int, inequalities: Iterable[Sequence]) -> tuple[list[IntVec], list[IntVec]]:
    """Double description: generators of ``{x : <a, x> >= 0 for all a}``.

    Returns ``(lineality_basis, rays)`` where ``rays`` are the extreme rays of
    the cone modulo its lineality space (not yet canonicalised).  Rows are
    processed in lexicographic order of their primitive forms, which makes the
    output deterministic.
    """
    rows = sorted({r for r in (_as_int_ray(a) for a in inequalities) if r is not None})
    for r in rows:
        if len(r) != rank:
            raise DimensionMismatch(f"inequality of length {len(r)} in rank {rank}")
    lin: list[IntVec] = [el.unit(rank, i) for i in range(rank)]
    rays: list[IntVec] = []
    done: list[IntVec] = []
    for a in rows:
        vals = [_idot(a, l) for l in lin]
        k = next((i for i, x in enumerate(vals) if x != 0), None)
        if k is not None:
            l0 = lin[k] if vals[k] > 0 else tuple(-x for x in lin[k])
            s0 = abs(vals[k])
            new_lin = []
            for i, l in enumerate(lin):
                if i == k:
                    continue
                new_lin.append(el.primitive_int(tuple(s0 * x - vals[i] * y for x, y in zip(l, l0))))
            new_rays = []
            for r in rays:
                ar = _idot(a, r)
                new_rays.append(el.primitive_int(tuple(s0 * x - ar * y for x, y in zip(r, l0))))
            new_rays.append(el.primitive_int(l0))
            lin, rays = new_lin, new_rays
            done.append(a)
            continue
        vals = [_idot(a, r) for r in rays]
        pos = [i for i, x in enumerate(vals) if x > 0]
        neg = [i for i, x in enumerate(vals) if x < 0]
        if not neg:
            done.append(a)
            continue
        zsets = [frozenset(j for j, b in enumerate(done) if _idot(b, r) == 0) for r in rays]
        new_rays = [rays[i] for i, x in enumerate(vals) if x >= 0]
        for p in pos:
            for n in neg:
                common = zsets[p] & zsets[n]
                if any(common <= zsets[q] for q in range(len(rays)) if q != p and q != n):
                    continue
                vp, vn = vals[p], -vals[n]
                new = tuple(vp * x + vn * y for x, y in zip(rays[n], rays[p]))
                new_rays.append(el.primitive_int(new))
        rays = list(dict.fromkeys(new_rays))
        done.append(a)
    return lin, rays


def _rref_basis(vectors: Sequence[Sequence]) -> tuple[IntVec, ...]:
    if not vectors:
        return ()
    n = len(vectors[0])
    red, _ = el.rref(vectors, n)
    return tuple(sorted(el.primitive(r) for r in red))


def _project_out(vectors: Iterable[Sequence], basis: Sequence[IntVec]) -> tuple[IntVec, ...]:
    """Project onto the orthogonal complement of span(basis), make primitive, sort."""
    basis = list(basis)
    out = set()
    if not basis:
        for v in vectors:
            r = _as_int_ray(v)
            if r is not None:
                out.add(r)
        return tuple(sorted(out))
    k = len(basis)
    gram = [[Fraction(_idot(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    for v in vectors:
        rhs = [Fraction(el.dot(b, v)) for b in basis]
        aug = [gram[i] + [rhs[i]] for i in range(k)]
        red, _ = el.rref(aug, k + 1)
        coef = [row[k] for row in red]
        p = tuple(Fraction(v[j]) - sum(coef[i] * basis[i][j] for i in range(k)) for j in range(len(v)))
        r = _as_int_ray(p)
        if r is not None:
            out.add(r)
    return tuple(sorted(out))


def _pm(vs: Iterable[IntVec]) -> list[IntVec]:
    out = []
    for v in vs:
        out.append(v)
        out.append(tuple(-x for x in v))
    return out


@dataclass(frozen=True)
class Cone:
    rank: int
    lineality: tuple[IntVec, ...]
    rays: tuple[IntVec, ...]
    equations: tuple[IntVec, ...]
    facets: tuple[IntVec, ...]

    @cached_property
    def generators(self) -> tuple[IntVec, ...]:
        return tuple(sorted(set(_pm(self.lineality)) | set(self.rays)))

    @cached_property
    def inequalities(self) -> tuple[IntVec, ...]:
        return tuple(sorted(set(_pm(self.equations)) | set(self.facets)))

    @property
    def is_zero(self) -> bool:
        return not self.lineality and not self.rays

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    def __repr__(self) -> str:
        return f"Cone(rank={self.rank}, generators={list(self.generators)})"

    @classmethod
    def _build(cls, rank: int, lin, rays, eqs, facets) -> "Cone":
        lin_c = _rref_basis(lin)
        eq_c = _rref_basis(eqs)
        return cls(rank, lin_c, _project_out(rays, lin_c), eq_c, _project_out(facets, eq_c))

    @classmethod
    def zero(cls, rank: int) -> "Cone":
        return cone_from_generators(rank, [])

    @classmethod
    def whole_space(cls, rank: int) -> "Cone":
        return cone_from_inequalities(rank, [])


def cone_from_generators(rank: int, gens: Iterable[Sequence]) -> Cone:
    """The cone ``R>=0 <gens>``; zero vectors are ignored."""
    gens = list(gens)
    for g in gens:
        el.check_len(g, rank, "generator")
    dlin, drays = extreme_rays(rank, gens)
    lin, rays = extreme_rays(rank, _pm(dlin) + drays)
    return Cone._build(rank, lin, rays, dlin, drays)


def cone_from_inequalities(rank: int, ineqs: Iterable[Sequence]) -> Cone:
    """The cone ``{x : <h, x> >= 0 for every h in ineqs}``."""
    ineqs = list(ineqs)
    for h in ineqs:
        el.check_len(h, rank, "inequality")
    lin, rays = extreme_rays(rank, ineqs)
    dlin, drays = extreme_rays(rank, _pm(lin) + rays)
    return Cone._build(rank, lin, rays, dlin, drays)


def halfspace(normal: Sequence) -> Cone:
    return cone_from_inequalities(len(normal), [normal])


def dual_cone(c: Cone) -> Cone:
    """``{y : <y, x> >= 0 for all x in c}``, recomputed from the H-side."""
    return cone_from_generators(c.rank, c.inequalities)


def is_whole_space(c: Cone) -> bool:
    return dual_cone(c).is_zero


def contains(c: Cone, v: Sequence) -> bool:
    el.check_len(v, c.rank)
    return all(el.dot(h, v) >= 0 for h in c.inequalities)


def contains_cone(outer: Cone, inner: Cone) -> bool:
    if outer.rank != inner.rank:
        raise DimensionMismatch("cones of different rank")
    return all(contains(outer, g) for g in inner.generators)


def in_relative_interior(c: Cone, v: Sequence) -> bool:
    """True iff v satisfies every equation of c and every facet strictly."""
    el.check_len(v, c.rank)
    return all(el.dot(e, v) == 0 for e in c.equations) and all(el.dot(h, v) > 0 for h in c.facets)


def dim(c: Cone) -> int:
    return el.rank(c.generators)


def lineality_dim(c: Cone) -> int:
    return len(c.lineality)


def relative_interior_point(c: Cone) -> tuple:
    """Sum of the canonical generators; lies in the relative interior."""
    if c.is_zero:
        raise ZeroCone("the zero cone has no nonzero relative interior point")
    return tuple(sum(g[i] for g in c.generators) for i in range(c.rank))


def intersect(a: Cone, b: Cone) -> Cone:
    if a.rank != b.rank:
        raise DimensionMismatch(f"ranks {a.rank} and {b.rank} differ")
    return cone_from_inequalities(a.rank, a.inequalities + b.inequalities)


def face_containing(c: Cone, v: Sequence) -> Cone:
    """Smallest face of c containing the point v (assumed to lie in c)."""
    tight = [h for h in c.facets if el.dot(h, v) == 0]
    return cone_from_inequalities(c.rank, list(c.inequalities) + [tuple(-x for x in h) for h in tight])


def is_face(f: Cone, c: Cone) -> bool:
    """True iff f = c ∩ {<h, x> = 0} for some h valid on c."""
    if f.rank != c.rank:
        raise DimensionMismatch(f"ranks {f.rank} and {c.rank} differ")
    if not contains_cone(c, f):
        return False
    p = el.zero(c.rank) if f.is_zero else relative_interior_point(f)
    return face_containing(c, p) == f


def facets_of(c: Cone) -> list[Cone]:
    """Facets of c (faces of dimension dim(c) - 1), in canonical order."""
    out = {cone_from_inequalities(c.rank, list(c.inequalities) + [tuple(-x for x in h)]) for h in c.facets}
    return sorted(out, key=lambda k: k.generators)


def faces_of(c: Cone) -> list[Cone]:
    """All nonempty faces of c, including c and its minimal face."""
    seen = {c}
    stack = [c]
    while stack:
        for f in facets_of(stack.pop()):
            if f not in seen:
                seen.add(f)
                stack.append(f)
    return sorted(seen, key=lambda k: (dim(k), k.generators))
