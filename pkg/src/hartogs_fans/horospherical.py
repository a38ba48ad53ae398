"""Horospherical front-end: from root data to colored-fan inputs.

For a horospherical homogeneous space the valuation cone is all of ``N_R``
and the colors are the ``D_α`` for simple roots ``α ∉ I``, with
``a_{D_α} = ι*(α^∨)``.  ``ι*`` restricts a cocharacter to the sublattice
``M ⊆ X(T)`` spanned by the rows of ``M_basis``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import exactlin as el
from .coloredfan import ColoredCone, ColoredFan, ColorTable
from .cones import Cone, cone_from_generators, dual_cone
from .errors import DimensionMismatch
from .hartogs import (
    HartogsReport,
    RankOneProduct,
    _yes_interpretation,
    check_hartogs,
    hartogs_cone_generators,
    whole_space_witness,
)


@dataclass(frozen=True)
class RootDatum:
    torus_rank: int
    simple_roots: tuple
    simple_coroots: tuple
    root_names: Optional[tuple] = None

    def __post_init__(self):
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValueError("simple roots and coroots differ in number")
        for v in list(self.simple_roots) + list(self.simple_coroots):
            el.check_len(v, self.torus_rank, "root/coroot")
        if self.root_names is not None and len(self.root_names) != len(self.simple_roots):
            raise ValueError("one name per simple root required")
        bad = self.cartan_violations()
        if bad:
            raise ValueError("; ".join(bad))

    def cartan_matrix(self) -> list[list]:
        """Entries ``<α_i^∨, α_j>``."""
        return [[el.dot(c, a) for a in self.simple_roots] for c in self.simple_coroots]

    def cartan_violations(self) -> list[str]:
        out = []
        for i, row in enumerate(self.cartan_matrix()):
            for j, x in enumerate(row):
                if i == j and x != 2:
                    out.append(f"<α{i}^∨, α{i}> = {x}, expected 2")
                if i != j and x not in (0, -1, -2, -3):
                    out.append(f"<α{i}^∨, α{j}> = {x} is not in {{0, -1, -2, -3}}")
        return out

    def name(self, i: int) -> str:
        return self.root_names[i] if self.root_names else str(i + 1)


@dataclass(frozen=True)
class HorosphericalDatum:
    root_datum: RootDatum
    parabolic_set: frozenset  # indices of I ⊆ S
    m_basis: tuple  # rows spanning M inside X(T)

    def __post_init__(self):
        n = self.root_datum.torus_rank
        for row in self.m_basis:
            el.check_len(row, n, "M_basis row")
        if not self.m_basis or el.rank(self.m_basis) != len(self.m_basis):
            raise ValueError("M_basis rows must be nonempty and linearly independent")
        k = len(self.root_datum.simple_roots)
        if not all(0 <= i < k for i in self.parabolic_set):
            raise ValueError(f"parabolic subset {sorted(self.parabolic_set)} out of range")

    @property
    def rank(self) -> int:
        return len(self.m_basis)


def iota_star(d: HorosphericalDatum, u: Sequence) -> tuple:
    """Restriction of the cocharacter ``u`` to M, in M_basis coordinates."""
    if len(u) != d.root_datum.torus_rank:
        raise DimensionMismatch(f"cocharacter of length {len(u)} in torus rank {d.root_datum.torus_rank}")
    return tuple(el.dot(u, m) for m in d.m_basis)


def colors_from_roots(d: HorosphericalDatum) -> ColorTable:
    rd = d.root_datum
    pairs = [(f"D_{rd.name(i)}", iota_star(d, rd.simple_coroots[i]))
             for i in range(len(rd.simple_roots)) if i not in d.parabolic_set]
    return ColorTable.from_pairs(pairs)


def valuation_cone_horospherical(d: HorosphericalDatum) -> Cone:
    r = d.rank
    return cone_from_generators(r, [el.unit(r, i, s) for i in range(r) for s in (1, -1)])


def build_fan_input(d: HorosphericalDatum, cones: Iterable[tuple[Sequence, Iterable[str]]] = ()) -> ColoredFan:
    """ColoredFan with V = N_R and the root-derived color table.

    ``cones`` holds ``(v_generators, color_names)`` pairs.  With no cones the
    fan of the homogeneous space, ``{(0, ∅)}``, is returned.
    """
    table = colors_from_roots(d)
    r = d.rank
    members = [ColoredCone.build(table, g, c, rank=r) for g, c in cones]
    if not members:
        members = [ColoredCone.build(table, (), (), rank=r)]
    return ColoredFan(r, valuation_cone_horospherical(d), table, tuple(members))


def homogeneous_verdict(d: HorosphericalDatum) -> HartogsReport:
    """Hartogs for the homogeneous space itself, Σ = {(0, ∅)}.

    Rank > 1: yes.  Rank 1: yes iff some color maps to a nonzero point;
    otherwise the space is ℂ* times a compact flag variety and the answer is no.
    """
    fan = build_fan_input(d)
    table = fan.color_table
    r = d.rank
    nonzero = any(not el.is_zero(c.point) for c in table)
    gens = hartogs_cone_generators(fan)
    c = cone_from_generators(r, gens)
    common = dict(rank=r, fan_valid=True, complete=False, compactifiable_10=r > 1,
                  hartogs_cone=c, weight_cone=dual_cone(c), c_generators=tuple(gens))
    if r > 1 or nonzero:
        notes = ()
        if r == 1:
            notes = ("V_R ∖ {0} is disconnected in rank one; the verdict comes from an embedding "
                     "X ⊃ Ω with connected gap for which C = N_R",)
        return HartogsReport(hartogs=True, certificate=whole_space_witness(r, gens),
                             interpretation=_yes_interpretation(), notes=notes, **common)
    return HartogsReport(
        hartogs=False,
        certificate=RankOneProduct(1, tuple(c.point for c in table)),
        interpretation=(
            "ι*((S ∖ I)^∨) = {0}",
            "Ω = ℂ* × G/P⁻ with G/P⁻ compact",
            "ℂ[Ω] contains the nonconstant functions of the ℂ* factor",
            "Ω does not admit the Hartogs phenomenon",
        ),
        **common,
    )


def check_horospherical(d: HorosphericalDatum, cones=(), max_rank: Optional[int] = None,
                        complete_faces: bool = False) -> HartogsReport:
    cones = list(cones)
    if not cones:
        return homogeneous_verdict(d)
    return check_hartogs(build_fan_input(d, cones), max_rank=max_rank, complete_faces=complete_faces)


def a1_datum() -> RootDatum:
    return RootDatum(1, ((2,),), ((1,),), ("a",))


def a2_datum() -> RootDatum:
    """A2 with X(T) the weight lattice (fundamental-weight coordinates)."""
    return RootDatum(2, ((2, -1), (-1, 2)), ((1, 0), (0, 1)), ("a1", "a2"))


def sl2_times_torus_datum() -> RootDatum:
    """SL(2) × ℂ*: X(T) = Z², α12 = (2, 0), α12^∨ = (1, 0)."""
    return RootDatum(2, ((2, 0),), ((1, 0),), ("a12",))


def torus_datum(n: int) -> RootDatum:
    return RootDatum(n, (), (), ())


def product_datum(*data: RootDatum) -> RootDatum:
    """Direct product: tori concatenated, roots padded with zeros."""
    n = sum(d.torus_rank for d in data)
    roots, coroots, names = [], [], []
    off = 0
    for d in data:
        pad = lambda v: (0,) * off + tuple(v) + (0,) * (n - off - d.torus_rank)
        roots += [pad(a) for a in d.simple_roots]
        coroots += [pad(c) for c in d.simple_coroots]
        names += [d.name(i) for i in range(len(d.simple_roots))]
        off += d.torus_rank
    return RootDatum(n, tuple(roots), tuple(coroots), tuple(names))
