"""JSON document formats for stuquandles, presentations, and arc diagrams.

All three schemas are flat, human-diffable JSON:

  stuquandle    {"n": 4, "star": [[...]], "r1": [[...]], ..., "r4": [[...]]}
  presentation  {"generators": 4, "relations": [{"out": 0, "op": "~*",
                 "lhs": 3, "rhs": 1}, ...]}
  arc diagram   {"strands": 2, "stripes": [[strand_a, strand_b, pos_a,
                 pos_b, sign], ...], "classicals": [[over_strand, over_pos,
                 under_strand, under_pos, sign], ...]}

Structural problems raise FormatError; mathematical problems (axiom
failures, bad indices) propagate from the constructors.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import FiniteStuquandle, build_stuquandle
from .errors import FormatError
from .presentation import (
    OPS,
    Classical,
    CrossingDiagram,
    Presentation,
    Relation,
    Stuck,
)
from .rna import ArcDiagram, StrandCrossing, Stripe


def _require(obj: dict, key: str, kind, what: str):
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be a JSON object")
    if key not in obj:
        raise FormatError(f"{what} is missing {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise FormatError(f"{what} field {key!r} has the wrong type")
    return value


def _int_matrix(value, what: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise FormatError(f"{what} must be a list of rows")
    for row in value:
        for v in row:
            if not isinstance(v, int):
                raise FormatError(f"{what} must contain integers only")
    return value


def stuquandle_to_dict(X: FiniteStuquandle, name: str = "") -> dict:
    doc = {"n": X.n}
    if name:
        doc = {"name": name, "n": X.n}
    for key, table in (("star", X.star), ("r1", X.r1), ("r2", X.r2),
                       ("r3", X.r3), ("r4", X.r4)):
        doc[key] = [list(row) for row in table.rows]
    return doc


def stuquandle_from_dict(doc: dict) -> FiniteStuquandle:
    n = _require(doc, "n", int, "stuquandle document")
    tables = [
        _int_matrix(_require(doc, key, list, "stuquandle document"), key)
        for key in ("star", "r1", "r2", "r3", "r4")
    ]
    try:
        return build_stuquandle(n, *tables)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def presentation_to_dict(P: Presentation) -> dict:
    doc: dict = {}
    if P.name:
        doc["name"] = P.name
    doc["generators"] = P.generator_count
    if P.generator_names:
        doc["generator_names"] = list(P.generator_names)
    doc["relations"] = [
        {"out": r.out, "op": r.op, "lhs": r.lhs, "rhs": r.rhs} for r in P.relations
    ]
    return doc


def presentation_from_dict(doc: dict) -> Presentation:
    count = _require(doc, "generators", int, "presentation document")
    raw = _require(doc, "relations", list, "presentation document")
    relations = []
    for item in raw:
        out = _require(item, "out", int, "relation")
        op = _require(item, "op", str, "relation")
        lhs = _require(item, "lhs", int, "relation")
        rhs = _require(item, "rhs", int, "relation")
        if op not in OPS:
            raise FormatError(f"unknown relation operation {op!r}")
        relations.append(Relation(out, op, lhs, rhs))
    names = doc.get("generator_names", ())
    try:
        return Presentation(count, tuple(relations), name=doc.get("name", ""),
                            generator_names=tuple(names))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def arc_diagram_to_dict(a: ArcDiagram) -> dict:
    doc = {
        "strands": a.strand_count,
        "stripes": [
            [s.strand_a, s.strand_b, s.position_a, s.position_b, s.sign]
            for s in a.stripes
        ],
    }
    if a.classicals:
        doc["classicals"] = [
            [c.over_strand, c.over_position, c.under_strand, c.under_position, c.sign]
            for c in a.classicals
        ]
    return doc


def arc_diagram_from_dict(doc: dict) -> ArcDiagram:
    strands = _require(doc, "strands", int, "arc diagram document")
    raw_stripes = _require(doc, "stripes", list, "arc diagram document")
    stripes = []
    for item in raw_stripes:
        if not isinstance(item, list) or len(item) != 5:
            raise FormatError("each stripe must be a 5-element list")
        stripes.append(Stripe(*item))
    classicals = []
    for item in doc.get("classicals", []):
        if not isinstance(item, list) or len(item) != 5:
            raise FormatError("each classical crossing must be a 5-element list")
        classicals.append(StrandCrossing(*item))
    return ArcDiagram(strands, tuple(stripes), tuple(classicals))


def crossing_diagram_to_dict(d: CrossingDiagram) -> dict:
    crossings = []
    for c in d.crossings:
        if isinstance(c, Stuck):
            crossings.append(["stuck", c.sign, c.in1, c.in2, c.out1, c.out2])
        else:
            crossings.append(["classical", c.sign, c.over, c.under_in, c.under_out])
    doc: dict = {"arcs": d.arc_count, "crossings": crossings}
    if d.open_ends:
        doc["open_ends"] = [list(pair) for pair in d.open_ends]
    return doc


def crossing_diagram_from_dict(doc: dict) -> CrossingDiagram:
    arcs = _require(doc, "arcs", int, "crossing diagram document")
    crossings = []
    for item in _require(doc, "crossings", list, "crossing diagram document"):
        if not isinstance(item, list) or not item:
            raise FormatError("each crossing must be a non-empty list")
        kind, rest = item[0], item[1:]
        if kind == "stuck" and len(rest) == 5:
            crossings.append(Stuck(*rest))
        elif kind == "classical" and len(rest) == 4:
            crossings.append(Classical(*rest))
        else:
            raise FormatError(f"bad crossing entry {item!r}")
    open_ends = tuple(tuple(pair) for pair in doc.get("open_ends", []))
    return CrossingDiagram(arcs, tuple(crossings), open_ends)


def load_document(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{path} must contain a JSON object")
    return doc


def save_document(path, doc: dict) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def load_stuquandle(path) -> FiniteStuquandle:
    return stuquandle_from_dict(load_document(path))


def load_presentation(path) -> Presentation:
    return presentation_from_dict(load_document(path))


def load_arc_diagram(path) -> ArcDiagram:
    return arc_diagram_from_dict(load_document(path))
