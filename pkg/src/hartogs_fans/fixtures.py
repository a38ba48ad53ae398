"""The three (SL(2) × ℂ*)/U⁻ embeddings used throughout the docs and tests.

N = Z², V = R², one color D12 with a_{D12} = (1, 0).  The G-stable divisors
of P² × P¹ give the rays (-1, 0), (0, 1), (0, -1).
"""
from __future__ import annotations

from .coloredfan import ColoredCone, ColoredFan, ColorTable
from .cones import Cone
from .horospherical import HorosphericalDatum, sl2_times_torus_datum

# generators of the rays: a_{D∞}, a_{D10}, a_{D01}, a_{D12}
A_D_INF = (-1, 0)
A_D_10 = (0, 1)
A_D_01 = (0, -1)
A_D_12 = (1, 0)

# (v_generators, colors) of the nine colored cones of P² × P¹
P2XP1_CONES = [
    ((), ()),
    ((A_D_INF,), ()),
    ((A_D_01,), ()),
    ((A_D_10,), ()),
    ((), ("D12",)),
    ((A_D_INF, A_D_10), ()),
    ((A_D_INF, A_D_01), ()),
    ((A_D_10,), ("D12",)),
    ((A_D_01,), ("D12",)),
]


def color_table() -> ColorTable:
    return ColorTable.from_pairs([("D12", A_D_12)])


def sl2_torus_horospherical() -> HorosphericalDatum:
    return HorosphericalDatum(sl2_times_torus_datum(), frozenset(), ((1, 0), (0, 1)))


def _fan(specs) -> ColoredFan:
    table = color_table()
    cones = tuple(ColoredCone.build(table, g, c, rank=2) for g, c in specs)
    return ColoredFan(2, Cone.whole_space(2), table, cones)


def _without(ray) -> list:
    """Cones of P² × P¹ surviving removal of the divisor with point ``ray``."""
    out = []
    for g, c in P2XP1_CONES:
        pts = list(g) + [A_D_12 for _ in c]
        if tuple(ray) not in pts:
            out.append((g, c))
    return out


def p2xp1() -> ColoredFan:
    """Σ' of the compact variety P² × P¹."""
    return _fan(P2XP1_CONES)


def c2xp1() -> ColoredFan:
    """Σ of ℂ² × P¹ = P² × P¹ minus D∞."""
    return _fan(_without(A_D_INF))


def p2xc() -> ColoredFan:
    """Σ of P² × ℂ = P² × P¹ minus D10."""
    return _fan(_without(A_D_10))


def fixture_cone_specs(which: str) -> list:
    return {"p2xp1": P2XP1_CONES, "c2xp1": _without(A_D_INF), "p2xc": _without(A_D_10)}[which]
