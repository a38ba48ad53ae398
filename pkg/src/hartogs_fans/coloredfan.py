"""Colored cones, colored fans and their validation.

A colored cone is a pair ``(sigma, F)``: a strictly convex rational cone in
``N_R`` together with a set of colors ``F`` whose points ``a_D`` help generate
it.  A colored fan is a finite set of colored cones closed under taking
colored faces, in which every point of the valuation cone lies in the relative
interior of at most one member.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Sequence

from . import exactlin as el
from .cones import (
    Cone,
    cone_from_generators,
    contains,
    dim,
    faces_of,
    in_relative_interior,
    intersect,
    relative_interior_point,
)
from .errors import DimensionMismatch, UnknownColor


@dataclass(frozen=True)
class Color:
    name: str
    point: tuple


@dataclass(frozen=True)
class ColorTable:
    """Colors ``D`` with their points ``a_D``.

    Points are kept exactly as given; they may be zero or coincide.
    """

    colors: tuple[Color, ...] = ()

    def __post_init__(self):
        names = [c.name for c in self.colors]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate color names in {names}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, Sequence]]) -> "ColorTable":
        return cls(tuple(Color(name, el.vec(p)) for name, p in pairs))

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.colors]

    def point(self, name: str) -> tuple:
        for c in self.colors:
            if c.name == name:
                return c.point
        raise UnknownColor(name)

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)


@dataclass(frozen=True)
class ColoredCone:
    sigma: Cone
    colors: frozenset = frozenset()
    v_generators: tuple = ()

    @classmethod
    def build(cls, table: ColorTable, v_generators: Iterable[Sequence] = (), colors: Iterable[str] = (),
              rank: int | None = None) -> "ColoredCone":
        colors = frozenset(colors)
        v_generators = tuple(el.vec(g) for g in v_generators)
        pts = [table.point(c) for c in sorted(colors)]
        if rank is None:
            sample = list(v_generators) + pts
            if not sample:
                raise ValueError("rank required for a colored cone without generators")
            rank = len(sample[0])
        return cls(cone_from_generators(rank, list(v_generators) + pts), colors, v_generators)

    @property
    def key(self) -> tuple:
        return (self.sigma, self.colors)

    def __repr__(self) -> str:
        return f"ColoredCone({list(self.sigma.generators)}, {sorted(self.colors)})"


@dataclass(frozen=True)
class ColoredFan:
    rank: int
    valuation_cone: Cone
    color_table: ColorTable
    cones: tuple[ColoredCone, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.valuation_cone.rank != self.rank:
            raise DimensionMismatch("valuation cone rank differs from fan rank")
        for c in self.color_table:
            el.check_len(c.point, self.rank, f"color {c.name}")
        for cc in self.cones:
            if cc.sigma.rank != self.rank:
                raise DimensionMismatch("colored cone rank differs from fan rank")


@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str
    witness: Any = None

    def __str__(self) -> str:
        return f"{self.axiom}: {self.message}"


def meets_relative_interior(sigma: Cone, other: Cone) -> bool:
    """Whether relint(sigma) ∩ other is nonempty (for a closed cone ``other``).

    The smallest face of sigma containing sigma ∩ other is the one holding a
    relative interior point of the intersection, so it suffices to test that
    single point.
    """
    k = intersect(sigma, other)
    p = el.zero(sigma.rank) if k.is_zero else relative_interior_point(k)
    return in_relative_interior(sigma, p)


def validate_colored_cone(cc: ColoredCone, fan: ColoredFan) -> list[Violation]:
    table = fan.color_table
    pts = {name: table.point(name) for name in sorted(cc.colors)}  # raises UnknownColor
    out: list[Violation] = []
    expected = cone_from_generators(fan.rank, list(cc.v_generators) + list(pts.values()))
    if expected != cc.sigma:
        out.append(Violation("generation", "cone is not generated by its colors and V-generators", cc))
    for g in cc.v_generators:
        if not contains(fan.valuation_cone, g):
            out.append(Violation("generation", f"V-generator {g} lies outside the valuation cone", g))
    if cc.sigma.lineality:
        out.append(Violation("strict convexity", "contains a line", cc.sigma.lineality[0]))
    for name, p in pts.items():
        if el.is_zero(p):
            out.append(Violation("zero color", f"color {name} has point 0", name))
    if not cc.sigma.is_zero and not meets_relative_interior(cc.sigma, fan.valuation_cone):
        out.append(Violation("valuation cone", "relative interior misses V",
                             relative_interior_point(cc.sigma)))
    return out


def colored_faces(cc: ColoredCone, fan: ColoredFan) -> list[ColoredCone]:
    """Colored faces ``(sigma', F')`` with relint(sigma') meeting V."""
    out = []
    for f in faces_of(cc.sigma):
        if not f.is_zero and not meets_relative_interior(f, fan.valuation_cone):
            continue
        fcols = frozenset(d for d in cc.colors if contains(f, fan.color_table.point(d)))
        vgens = tuple(g for g in cc.v_generators if contains(f, g))
        out.append(ColoredCone(f, fcols, vgens))
    return out


def _meet_in_relints(a: Cone, b: Cone, v: Cone) -> bool:
    k = intersect(intersect(a, b), v)
    p = el.zero(a.rank) if k.is_zero else relative_interior_point(k)
    return in_relative_interior(a, p) and in_relative_interior(b, p)


def validate_fan(fan: ColoredFan) -> list[Violation]:
    """All axiom violations of ``fan``; empty iff it is a colored fan."""
    out: list[Violation] = []
    if dim(fan.valuation_cone) != fan.rank:
        out.append(Violation("valuation cone", "valuation cone is not full-dimensional", fan.valuation_cone))
    members: dict[tuple, ColoredCone] = {}
    for cc in fan.cones:
        if cc.key in members:
            continue
        members[cc.key] = cc
    per_cone_ok = {}
    for key, cc in members.items():
        vs = validate_colored_cone(cc, fan)
        out.extend(vs)
        per_cone_ok[key] = not vs
    for key, cc in members.items():
        if not per_cone_ok[key]:
            continue
        for face in colored_faces(cc, fan):
            if face.key not in members:
                out.append(Violation(
                    "face closure",
                    f"colored face {list(face.sigma.generators)} {sorted(face.colors)} of "
                    f"{list(cc.sigma.generators)} is missing",
                    face,
                ))
    keys = list(members)
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            a, b = members[keys[i]], members[keys[j]]
            if _meet_in_relints(a.sigma, b.sigma, fan.valuation_cone):
                out.append(Violation(
                    "relint uniqueness",
                    f"relative interiors of {list(a.sigma.generators)} and {list(b.sigma.generators)} "
                    f"share a point of V",
                    (a, b),
                ))
    return out


def complete_face_closure(fan: ColoredFan) -> ColoredFan:
    """Add every missing colored face of every member cone."""
    members: dict[tuple, ColoredCone] = {}
    for cc in fan.cones:
        members.setdefault(cc.key, cc)
    for cc in list(members.values()):
        for face in colored_faces(cc, fan):
            members.setdefault(face.key, face)
    ordered = sorted(members.values(), key=lambda c: (dim(c.sigma), c.sigma.generators, sorted(c.colors)))
    return replace(fan, cones=tuple(ordered))


def support_contains(fan: ColoredFan, v: Sequence) -> bool:
    el.check_len(v, fan.rank)
    return any(contains(cc.sigma, v) for cc in fan.cones)


def is_complete(fan: ColoredFan, max_rank: int | None = None) -> bool:
    """Whether |Σ| ⊇ V, decided on the arrangement cells of V."""
    from .hartogs import gap_regions

    return not gap_regions(fan, max_rank=max_rank).gap_cells
