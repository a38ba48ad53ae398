"""JSON input documents and report (de)serialisation.

Rationals travel as bare integers or ``"p/q"`` strings; floats are refused.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Any, Optional

import jsonschema

from . import exactlin as el
from .coloredfan import ColoredCone, ColoredFan, ColorTable
from .cones import Cone, cone_from_generators
from .hartogs import (
    Certificate,
    HartogsReport,
    NonzeroFunctional,
    RankOneProduct,
    WholeSpaceWitness,
    check_hartogs,
)
from .horospherical import HorosphericalDatum, RootDatum, build_fan_input, check_horospherical

REPORT_FORMAT = "hartogs-report/1"


class DocumentError(ValueError):
    """The document does not parse or does not describe well-formed data."""


def load_schema(name: str) -> dict:
    return json.loads(resources.files("hartogs_fans.schemas").joinpath(name).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class InputDocument:
    kind: str
    fan: ColoredFan
    datum: Optional[HorosphericalDatum] = None
    cones: tuple = ()
    complete_faces: bool = False
    max_rank: Optional[int] = None
    name: Optional[str] = None

    def check(self, max_rank: Optional[int] = None) -> HartogsReport:
        mr = max_rank if max_rank is not None else self.max_rank
        if self.datum is not None:
            return check_horospherical(self.datum, self.cones, max_rank=mr, complete_faces=self.complete_faces)
        return check_hartogs(self.fan, max_rank=mr, complete_faces=self.complete_faces)


def _vectors(raw, n: Optional[int] = None) -> list[tuple]:
    out = [el.vec(v) for v in raw]
    if n is not None:
        for v in out:
            el.check_len(v, n)
    return out


def parse_document(data: Any) -> InputDocument:
    """Build an :class:`InputDocument` from decoded JSON; raises DocumentError."""
    try:
        jsonschema.validate(data, load_schema("input.schema.json"))
    except jsonschema.ValidationError as exc:
        raise DocumentError(f"schema violation: {exc.message}") from exc
    opts = data.get("options", {})
    try:
        if data["kind"] == "colored_fan":
            return _parse_colored_fan(data, opts)
        return _parse_horospherical(data, opts)
    except DocumentError:
        raise
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc)) from exc


def _parse_cones(raw, table: ColorTable, rank: int) -> list[tuple[list, list]]:
    out = []
    for c in raw:
        gens = _vectors(c.get("generators_from_V", []), rank)
        cols = list(c.get("colors", []))
        for name in cols:
            table.point(name)
        out.append((gens, cols))
    return out


def _parse_colored_fan(data, opts) -> InputDocument:
    r = data["rank"]
    vraw = data["valuation_cone"]
    if vraw == "whole_space":
        v = Cone.whole_space(r)
    else:
        v = cone_from_generators(r, _vectors(vraw["generators"], r))
    table = ColorTable.from_pairs((c["name"], _vectors([c["point"]], r)[0]) for c in data.get("colors", []))
    cones = _parse_cones(data["cones"], table, r)
    members = tuple(ColoredCone.build(table, g, c, rank=r) for g, c in cones)
    fan = ColoredFan(r, v, table, members)
    return InputDocument("colored_fan", fan, None, (), opts.get("complete_faces", False),
                         opts.get("max_rank"), data.get("name"))


def _parse_horospherical(data, opts) -> InputDocument:
    n = data["torus_rank"]
    names = data.get("root_names")
    rd = RootDatum(n, tuple(_vectors(data["simple_roots"], n)), tuple(_vectors(data["simple_coroots"], n)),
                   tuple(names) if names is not None else None)
    d = HorosphericalDatum(rd, frozenset(data.get("I", [])), tuple(_vectors(data["M_basis"], n)))
    fan = build_fan_input(d)
    cones = _parse_cones(data.get("cones", []), fan.color_table, d.rank)
    if cones:
        fan = build_fan_input(d, cones)
    return InputDocument("horospherical", fan, d, tuple(cones), opts.get("complete_faces", False),
                         opts.get("max_rank"), data.get("name"))


def load_document(path) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh, parse_float=_reject_float)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(str(exc)) from exc
    return parse_document(data)


def _reject_float(s: str):
    raise DocumentError(f"floating point literal {s} not allowed; use \"p/q\"")


# -- reports -----------------------------------------------------------------

def _vec_json(v) -> list:
    return [el.format_rational(x) for x in v]


def _cone_json(c: Optional[Cone]):
    if c is None:
        return None
    return {"generators": [_vec_json(g) for g in c.generators],
            "inequalities": [_vec_json(h) for h in c.inequalities]}


def certificate_to_json(cert: Optional[Certificate]):
    if cert is None:
        return None
    if isinstance(cert, NonzeroFunctional):
        return {"kind": cert.kind, "functional": _vec_json(cert.functional)}
    if isinstance(cert, WholeSpaceWitness):
        return {
            "kind": cert.kind,
            "generators": [_vec_json(g) for g in cert.generators],
            "combinations": [
                {"target": _vec_json(t), "coefficients": [[k, el.format_rational(q)] for k, q in coeffs]}
                for t, coeffs in cert.combinations
            ],
        }
    return {"kind": cert.kind, "rank": cert.rank, "color_points": [_vec_json(p) for p in cert.color_points]}


def certificate_from_json(data) -> Optional[Certificate]:
    if data is None:
        return None
    kind = data["kind"]
    if kind == NonzeroFunctional.kind:
        return NonzeroFunctional(el.vec(data["functional"]))
    if kind == WholeSpaceWitness.kind:
        combos = tuple(
            (el.vec(c["target"]), tuple((int(k), el.to_rational(q)) for k, q in c["coefficients"]))
            for c in data["combinations"]
        )
        return WholeSpaceWitness(tuple(el.vec(g) for g in data["generators"]), combos)
    if kind == RankOneProduct.kind:
        return RankOneProduct(int(data["rank"]), tuple(el.vec(p) for p in data["color_points"]))
    raise DocumentError(f"unknown certificate kind {kind!r}")


def report_to_json(report: HartogsReport, explain: bool = False) -> dict:
    out = {
        "format": REPORT_FORMAT,
        "status": report.status,
        "hartogs": report.hartogs,
        "fan_valid": report.fan_valid,
        "complete": report.complete,
        "compactifiable_10": report.compactifiable_10,
        "violations": list(report.violations),
        "hartogs_cone": _cone_json(report.hartogs_cone),
        "weight_cone": _cone_json(report.weight_cone),
        "weight_monoid": None if report.weight_cone is None else "L ∩ M (lattice points of weight_cone)",
        "certificate": certificate_to_json(report.certificate),
        "interpretation": list(report.interpretation),
        "notes": list(report.notes),
    }
    if explain:
        out["explain"] = explain_json(report)
    return out


def explain_json(report: HartogsReport) -> dict:
    cells = report.cells
    info: dict = {"c_generators": [_vec_json(g) for g in report.c_generators]}
    if cells is not None:
        info["hyperplanes"] = [_vec_json(h) for h in cells.hyperplanes]
        info["cells"] = [
            {"generators": [_vec_json(g) for g in c.generators], "in_support": s}
            for c, s in zip(cells.cells, cells.in_support)
        ]
        info["gap_cells"] = cells.gap_cells
        info["gap_regions"] = cells.gap_regions()
        info["adjacency"] = [[i, j, s] for i, j, s in cells.adjacency]
    return info


def dumps_report(report: HartogsReport, explain: bool = False) -> str:
    return json.dumps(report_to_json(report, explain), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_report(path) -> tuple[Optional[bool], Optional[Certificate]]:
    """(verdict, certificate) from a report file; raises DocumentError."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh, parse_float=_reject_float)
        jsonschema.validate(data, load_schema("report.schema.json"))
        return data["hartogs"], certificate_from_json(data["certificate"])
    except DocumentError:
        raise
    except (OSError, json.JSONDecodeError, jsonschema.ValidationError, KeyError, TypeError, ValueError) as exc:
        raise DocumentError(str(exc)) from exc


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(el.format_rational(x)) for x in v) + ")"


def format_text(report: HartogsReport, explain: bool = False) -> str:
    yn = {True: "yes", False: "no", None: "n/a"}
    lines = [f"HARTOGS: {report.status}"]
    lines.append(f"fan valid: {yn[report.fan_valid]}")
    for v in report.violations:
        lines.append(f"  violation: {v}")
    lines.append(f"complete: {yn[report.complete]}")
    lines.append(f"(1,0)-compactifiable: {yn[report.compactifiable_10]}")
    cert = report.certificate
    if isinstance(cert, NonzeroFunctional):
        lines.append(f"certificate: λ = {_fmt_vec(cert.functional)} (nonzero, nonnegative on C)")
    elif isinstance(cert, WholeSpaceWitness):
        lines.append(f"certificate: positive combinations of {len(cert.generators)} generators give ±e_i")
    elif isinstance(cert, RankOneProduct):
        lines.append("certificate: rank one, all color points zero")
    for s in report.interpretation:
        lines.append(f"  {s}")
    for s in report.notes:
        lines.append(f"note: {s}")
    if explain:
        cells = report.cells
        if cells is not None:
            lines.append(f"arrangement: {len(cells.hyperplanes)} hyperplanes, {len(cells.cells)} cells")
            for i, (c, s) in enumerate(zip(cells.cells, cells.in_support)):
                tag = "in |Σ|" if s else "gap"
                lines.append(f"  cell {i} [{tag}]: " + ", ".join(_fmt_vec(g) for g in c.generators))
            lines.append(f"gap regions: {cells.gap_regions()}")
        if report.hartogs_cone is not None:
            lines.append("C generators: " + ", ".join(_fmt_vec(g) for g in report.hartogs_cone.generators))
            lines.append("L generators: " + (", ".join(_fmt_vec(g) for g in report.weight_cone.generators) or "none (L = 0)"))
        if isinstance(cert, WholeSpaceWitness):
            for t, coeffs in cert.combinations:
                terms = " + ".join(f"{el.format_rational(q)}·{_fmt_vec(cert.generators[k])}" for k, q in coeffs)
                lines.append(f"  {_fmt_vec(t)} = {terms}")
    return "\n".join(lines) + "\n"


def dump_document(fan: ColoredFan, name: Optional[str] = None) -> dict:
    """Colored-fan document for ``fan`` (inverse of parse for that kind)."""
    doc = {"kind": "colored_fan", "rank": fan.rank}
    if name:
        doc["name"] = name
    if fan.valuation_cone == Cone.whole_space(fan.rank):
        doc["valuation_cone"] = "whole_space"
    else:
        doc["valuation_cone"] = {"generators": [_vec_json(g) for g in fan.valuation_cone.generators]}
    doc["colors"] = [{"name": c.name, "point": _vec_json(c.point)} for c in fan.color_table]
    doc["cones"] = [
        {"generators_from_V": [_vec_json(g) for g in cc.v_generators], "colors": sorted(cc.colors)}
        for cc in fan.cones
    ]
    return doc
