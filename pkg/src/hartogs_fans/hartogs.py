"""Decision procedures: gap regions, (1,0)-compactifiability, Hartogs verdict.

The gap ``V_R ∖ |Σ|`` is made finite by refining the valuation cone with
the hyperplanes occurring in the H-representations of V and of the maximal
member cones.  Each member cone is then a union of (relatively open)
arrangement faces, so every face either lies in |Σ| or has relative interior
disjoint from it.  Connectivity is read off the face-incidence graph of the
faces that avoid |Σ|.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import exactlin as el
from .coloredfan import ColoredFan, complete_face_closure, support_contains, validate_fan
from .cones import (
    Cone,
    cone_from_generators,
    cone_from_inequalities,
    dim,
    dual_cone,
    facets_of,
    intersect,
    is_face,
    is_whole_space,
    relative_interior_point,
)
from .errors import IsCompact, RankTooLarge

DEFAULT_MAX_RANK = 4


def default_max_rank() -> int:
    env = os.environ.get("HARTOGS_MAX_RANK")
    return int(env) if env else DEFAULT_MAX_RANK


@dataclass(frozen=True)
class CellComplex:
    """Arrangement refinement of V.

    ``cells`` are the full-dimensional chambers, ``adjacency`` holds
    ``(i, j, shared_facet_in_support)`` for chambers sharing a facet, and
    ``faces`` lists every arrangement face inside V with its support flag.
    ``face_edges`` are (face, facet-of-face) index pairs.
    """

    rank: int
    hyperplanes: tuple
    cells: tuple[Cone, ...]
    in_support: tuple[bool, ...]
    adjacency: tuple[tuple[int, int, bool], ...]
    faces: tuple[Cone, ...]
    face_in_support: tuple[bool, ...]
    face_edges: tuple[tuple[int, int], ...]

    @property
    def gap_cells(self) -> list[int]:
        return [i for i, s in enumerate(self.in_support) if not s]

    @property
    def gap_adjacency(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, s in self.adjacency if not s]

    def gap_components(self) -> list[list[int]]:
        """Connected components of V ∖ |Σ|, as sorted lists of face indices.

        Only faces of dimension >= 1 take part.
        """
        nodes = [i for i, f in enumerate(self.faces) if not self.face_in_support[i] and dim(f) >= 1]
        parent = {i: i for i in nodes}

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b in self.face_edges:
            if a in parent and b in parent:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        comps: dict[int, list[int]] = {}
        for i in nodes:
            comps.setdefault(find(i), []).append(i)
        return sorted(comps.values())

    def gap_regions(self) -> list[list[int]]:
        """Gap chambers grouped by connected component (chamber indices)."""
        index = {f: i for i, f in enumerate(self.faces)}
        out = []
        for comp in self.gap_components():
            members = set(comp)
            cells = [i for i in self.gap_cells if index[self.cells[i]] in members]
            if cells:
                out.append(cells)
        return out


def _canonical_hyperplane(h: Sequence[int]) -> tuple[int, ...]:
    h = el.primitive(h)
    lead = next(x for x in h if x != 0)
    return h if lead > 0 else tuple(-x for x in h)


def arrangement_hyperplanes(fan: ColoredFan) -> tuple[tuple[int, ...], ...]:
    """Hyperplanes of the H-representations of V and of the maximal member cones.

    A member that is a face of another member is already a union of faces of
    the arrangement cut out by its parent's inequalities, so it adds nothing.
    """
    sigmas = list(dict.fromkeys(cc.sigma for cc in fan.cones))
    maximal = [s for s in sigmas
               if not any(t != s and dim(t) > dim(s) and is_face(s, t) for t in sigmas)]
    hs = set()
    for c in [fan.valuation_cone] + maximal:
        for h in c.inequalities:
            hs.add(_canonical_hyperplane(h))
    return tuple(sorted(hs))


def _chambers(v: Cone, hyperplanes) -> list[tuple[Cone, tuple[int, ...]]]:
    """Full-dimensional chambers of V with their sign vectors."""
    r = v.rank
    regions = [(v, ())]
    for h in hyperplanes:
        nxt = []
        neg = tuple(-x for x in h)
        for reg, signs in regions:
            vals = [el.dot(h, g) for g in reg.generators]
            if all(x >= 0 for x in vals):
                nxt.append((reg, signs + (1,)))
            elif all(x <= 0 for x in vals):
                nxt.append((reg, signs + (-1,)))
            else:
                for s, sign in ((h, 1), (neg, -1)):
                    part = cone_from_inequalities(r, list(reg.inequalities) + [s])
                    if dim(part) == r:
                        nxt.append((part, signs + (sign,)))
        regions = nxt
    return sorted(regions, key=lambda cs: cs[0].generators)


def gap_regions(fan: ColoredFan, max_rank: Optional[int] = None) -> CellComplex:
    """Refine V by the fan's hyperplane arrangement and classify every face."""
    limit = default_max_rank() if max_rank is None else max_rank
    if fan.rank > limit:
        raise RankTooLarge(f"rank {fan.rank} exceeds the arrangement limit {limit}")
    r = fan.rank
    hyperplanes = arrangement_hyperplanes(fan)
    chambers = _chambers(fan.valuation_cone, hyperplanes)
    cells = [c for c, _ in chambers]
    signs = [sv for _, sv in chambers]

    def covered(c: Cone) -> bool:
        p = el.zero(r) if c.is_zero else relative_interior_point(c)
        return support_contains(fan, p)

    in_support = tuple(covered(c) for c in cells)
    adjacency = []
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            if sum(a != b for a, b in zip(signs[i], signs[j])) != 1:
                continue
            shared = intersect(cells[i], cells[j])
            if dim(shared) == r - 1:
                adjacency.append((i, j, covered(shared)))

    faces: dict[Cone, int] = {}
    edges: set[tuple[int, int]] = set()
    stack = []
    for c in cells:
        if c not in faces:
            faces[c] = len(faces)
            stack.append(c)
    while stack:
        g = stack.pop()
        for f in facets_of(g):
            if f not in faces:
                faces[f] = len(faces)
                stack.append(f)
            edges.add((faces[g], faces[f]))
    # deterministic numbering, independent of traversal order
    order = sorted(faces, key=lambda c: (-dim(c), c.generators))
    renum = {faces[c]: k for k, c in enumerate(order)}
    face_edges = tuple(sorted((renum[a], renum[b]) for a, b in edges))
    return CellComplex(
        rank=r,
        hyperplanes=hyperplanes,
        cells=tuple(cells),
        in_support=in_support,
        adjacency=tuple(adjacency),
        faces=tuple(order),
        face_in_support=tuple(covered(c) for c in order),
        face_edges=face_edges,
    )


def is_compactifiable_10(fan: ColoredFan, cells: Optional[CellComplex] = None,
                         max_rank: Optional[int] = None) -> bool:
    """Whether V ∖ |Σ| is connected (the fan must not be complete)."""
    cells = cells or gap_regions(fan, max_rank)
    if not cells.gap_cells:
        raise IsCompact("the fan is complete")
    return len(cells.gap_components()) == 1


def hartogs_cone_generators(fan: ColoredFan, cells: Optional[CellComplex] = None,
                            max_rank: Optional[int] = None) -> list[tuple]:
    """Generators of closures of the gap cells, then every nonzero color point.

    Duplicates are removed; order is deterministic.
    """
    cells = cells or gap_regions(fan, max_rank)
    out: dict[tuple, None] = {}
    for i in cells.gap_cells:
        for g in cells.cells[i].generators:
            out.setdefault(tuple(Fraction(x) for x in g), None)
    for c in fan.color_table:
        if not el.is_zero(c.point):
            out.setdefault(tuple(Fraction(x) for x in c.point), None)
    return list(out)


def hartogs_cone(fan: ColoredFan, cells: Optional[CellComplex] = None,
                 max_rank: Optional[int] = None) -> Cone:
    cells = cells or gap_regions(fan, max_rank)
    if not cells.gap_cells:
        raise IsCompact("the fan is complete")
    return cone_from_generators(fan.rank, hartogs_cone_generators(fan, cells))


def weight_cone(fan: ColoredFan, cells: Optional[CellComplex] = None,
                max_rank: Optional[int] = None) -> Cone:
    """L = C^∨; its lattice points L ∩ M form the weight monoid of Y."""
    return dual_cone(hartogs_cone(fan, cells, max_rank))


@dataclass(frozen=True)
class NonzeroFunctional:
    """λ ≠ 0 with <g, λ> >= 0 for every generator g of C."""

    functional: tuple
    kind = "nonzero_functional"


@dataclass(frozen=True)
class WholeSpaceWitness:
    """For each ±e_i, nonnegative coefficients over ``generators`` summing to it."""

    generators: tuple
    combinations: tuple  # ((target, ((index, coefficient), ...)), ...)
    kind = "whole_space_witness"


@dataclass(frozen=True)
class RankOneProduct:
    """Rank-one horospherical homogeneous space whose colors all map to 0."""

    rank: int
    color_points: tuple
    kind = "rank_one_product"


Certificate = Union[NonzeroFunctional, WholeSpaceWitness, RankOneProduct]


@dataclass(frozen=True)
class HartogsReport:
    rank: int
    fan_valid: bool
    violations: tuple[str, ...] = ()
    complete: Optional[bool] = None
    compactifiable_10: Optional[bool] = None
    hartogs: Optional[bool] = None
    hartogs_cone: Optional[Cone] = None
    weight_cone: Optional[Cone] = None
    certificate: Optional[Certificate] = None
    interpretation: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    cells: Optional[CellComplex] = field(default=None, compare=False, repr=False)
    c_generators: tuple = ()

    @property
    def status(self) -> str:
        if self.hartogs is True:
            return "yes"
        if self.hartogs is False:
            return "no"
        if not self.fan_valid:
            return "not applicable: invalid colored fan"
        if self.complete:
            return "not applicable: complete fan (compact variety)"
        return "not applicable: not (1,0)-compactifiable"


def whole_space_witness(rank: int, gens: Sequence[Sequence]) -> Optional[WholeSpaceWitness]:
    combos = []
    for i in range(rank):
        for s in (1, -1):
            target = el.unit(rank, i, s)
            c = el.nonneg_combination(gens, target)
            if c is None:
                return None
            combos.append((target, tuple((k, q) for k, q in enumerate(c) if q != 0)))
    return WholeSpaceWitness(tuple(tuple(g) for g in gens), tuple(combos))


def _yes_interpretation() -> tuple[str, ...]:
    return (
        "C = N_R and L = {0}",
        "weight monoid Λ₊(Y) = L ∩ M = {0}",
        "ℂ[Y] = ℂ",
        "H¹_c(X, O) = 0",
        "X admits the Hartogs phenomenon",
    )


def _no_interpretation(lam) -> tuple[str, ...]:
    s = "(" + ", ".join(str(el.format_rational(x)) for x in lam) + ")"
    return (
        f"C ≠ N_R: every generator of C pairs nonnegatively with λ = {s}",
        f"λ = {s} lies in Λ₊(Y) = L ∩ M, so Λ₊(Y) ≠ {{0}}",
        "ℂ[Y] ≠ ℂ",
        "H¹_c(X, O) ≠ 0",
        "X does not admit the Hartogs phenomenon",
    )


def check_hartogs(fan: ColoredFan, max_rank: Optional[int] = None,
                  complete_faces: bool = False) -> HartogsReport:
    """Validate, test completeness and connectivity, then decide C = N_R."""
    if complete_faces:
        fan = complete_face_closure(fan)
    violations = validate_fan(fan)
    if violations:
        return HartogsReport(fan.rank, False, tuple(str(v) for v in violations))
    cells = gap_regions(fan, max_rank)
    if not cells.gap_cells:
        return HartogsReport(fan.rank, True, complete=True, cells=cells,
                             notes=("the colored fan is complete, so the variety is compact",))
    comps = cells.gap_components()
    gens = hartogs_cone_generators(fan, cells)
    c = cone_from_generators(fan.rank, gens)
    lw = dual_cone(c)
    if is_whole_space(c) != lw.is_zero:
        raise AssertionError("C = N_R and L = 0 disagree")  # duality broken: a bug, not an outcome
    common = dict(rank=fan.rank, fan_valid=True, complete=False, hartogs_cone=c, weight_cone=lw,
                  cells=cells, c_generators=tuple(gens))
    if len(comps) != 1:
        return HartogsReport(
            compactifiable_10=False,
            notes=(
                f"V_R ∖ |Σ| has {len(comps)} connected components, so X is not (1,0)-compactifiable",
                "the criterion is not applied; X sits in a (1,0)-compactifiable G-variety X'' "
                "and Hartogs for X'' implies Hartogs for X",
            ),
            **common,
        )
    if lw.is_zero:
        cert = whole_space_witness(fan.rank, gens)
        return HartogsReport(compactifiable_10=True, hartogs=True, certificate=cert,
                             interpretation=_yes_interpretation(), **common)
    lam = lw.generators[0]
    return HartogsReport(compactifiable_10=True, hartogs=False, certificate=NonzeroFunctional(lam),
                         interpretation=_no_interpretation(lam), **common)


def verify_certificate(report: HartogsReport, fan: ColoredFan, max_rank: Optional[int] = None) -> bool:
    return verify_certificate_data(report.hartogs, report.certificate, fan, max_rank)


def verify_certificate_data(hartogs: Optional[bool], cert: Optional[Certificate], fan: ColoredFan,
                            max_rank: Optional[int] = None) -> bool:
    """Re-check a certificate against generators recomputed from ``fan``.

    Nothing from the report other than the verdict and the certificate is
    trusted.  Returns False on any mismatch.
    """
    if hartogs is None or cert is None:
        return False
    r = fan.rank
    if isinstance(cert, RankOneProduct):
        return (
            hartogs is False
            and r == 1
            and cert.rank == 1
            and is_whole_space(fan.valuation_cone)
            and all(cc.sigma.is_zero for cc in fan.cones)
            and all(el.is_zero(c.point) for c in fan.color_table)
        )
    try:
        gens = hartogs_cone_generators(fan, max_rank=max_rank)
    except RankTooLarge:
        return False
    if isinstance(cert, NonzeroFunctional):
        lam = cert.functional
        if hartogs is not False or len(lam) != r or el.is_zero(lam):
            return False
        return all(el.dot(g, lam) >= 0 for g in gens)
    if isinstance(cert, WholeSpaceWitness):
        if hartogs is not True:
            return False
        allowed = {el.primitive(g) for g in gens}
        wg = cert.generators
        for g in wg:
            if len(g) != r or el.is_zero(g) or el.primitive(g) not in allowed:
                return False
        needed = {el.unit(r, i, s) for i in range(r) for s in (1, -1)}
        seen = set()
        for target, coeffs in cert.combinations:
            if len(target) != r:
                return False
            acc = [Fraction(0)] * r
            for k, q in coeffs:
                if not 0 <= k < len(wg) or q < 0:
                    return False
                acc = [a + q * b for a, b in zip(acc, wg[k])]
            if tuple(acc) != tuple(target):
                return False
            seen.add(tuple(target))
        return needed <= seen
    return False
