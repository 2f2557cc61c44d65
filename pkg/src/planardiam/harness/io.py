"""JSON graph files.

A file holds ``format_version``, ``n``, ``edges`` as ``[u, v, length]``
triples and one embedding: ``rotations`` (per vertex, the incident edge
indices in cyclic order) or ``coordinates`` (per vertex ``[x, y]``, with
rotations taken counter-clockwise). ``marks`` optionally lists the marked
vertices; all vertices are marked when it is absent.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from ..errors import GraphError, ParseError, ValidationError
from ..graph import EmbeddedGraph, build, drop_artificial, embed_by_coordinates

FORMAT_VERSION = 1


def _int(value, field):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or value != int(value):
        raise ParseError(f"expected an integer, got {value!r}", field)
    return int(value)


def _edges(doc, n):
    raw = doc.get("edges")
    if not isinstance(raw, list):
        raise ParseError("expected a list of [u, v, length]", "edges")
    edges = []
    for i, item in enumerate(raw):
        f = f"edges[{i}]"
        if not isinstance(item, list) or len(item) != 3:
            raise ParseError("expected [u, v, length]", f)
        u, v = _int(item[0], f), _int(item[1], f)
        w = item[2]
        if isinstance(w, bool) or not isinstance(w, (int, float)) or not math.isfinite(w):
            raise ParseError(f"length must be a finite number, got {w!r}", f)
        if w < 0:
            raise ValidationError(f"negative length {w}", f)
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"endpoint outside [0, {n})", f)
        if u == v:
            raise ValidationError("self-loop", f)
        edges.append((u, v, float(w)))
    return edges


def parse_graph(doc) -> EmbeddedGraph:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported version {version!r}", "format_version")
    if "n" not in doc:
        raise ParseError("missing", "n")
    n = _int(doc["n"], "n")
    if n < 0:
        raise ParseError("must be non-negative", "n")
    edges = _edges(doc, n)
    marked = None
    if doc.get("marks") is not None:
        marks = doc["marks"]
        if not isinstance(marks, list):
            raise ParseError("expected a list of vertex ids", "marks")
        marked = np.zeros(n, bool)
        for i, v in enumerate(marks):
            v = _int(v, f"marks[{i}]")
            if not 0 <= v < n:
                raise ValidationError("vertex out of range", f"marks[{i}]")
            marked[v] = True
    try:
        if "rotations" in doc:
            rot = doc["rotations"]
            if not isinstance(rot, list) or len(rot) != n:
                raise ParseError(f"expected {n} lists of edge indices", "rotations")
            darts = []
            for v, lst in enumerate(rot):
                f = f"rotations[{v}]"
                if not isinstance(lst, list):
                    raise ParseError("expected a list of edge indices", f)
                out = []
                for e in lst:
                    e = _int(e, f)
                    if not 0 <= e < len(edges):
                        raise ValidationError(f"edge index {e} out of range", f)
                    u, w, _ = edges[e]
                    if v not in (u, w):
                        raise ValidationError(f"edge {e} is not incident to vertex {v}", f)
                    out.append(2 * e if u == v else 2 * e + 1)
                darts.append(out)
            return build(n, edges, darts, marked)
        if "coordinates" in doc:
            xy = doc["coordinates"]
            if not isinstance(xy, list) or len(xy) != n:
                raise ParseError(f"expected {n} [x, y] pairs", "coordinates")
            for v, p in enumerate(xy):
                if not isinstance(p, list) or len(p) != 2 or not all(
                        isinstance(c, (int, float)) and not isinstance(c, bool) for c in p):
                    raise ParseError("expected [x, y]", f"coordinates[{v}]")
            return embed_by_coordinates(n, edges, xy, marked)
    except GraphError as exc:
        raise ValidationError(str(exc), "rotations" if "rotations" in doc else "coordinates") from exc
    raise ParseError("needs either rotations or coordinates", "embedding")


def graph_to_doc(g: EmbeddedGraph) -> dict:
    g = drop_artificial(g)
    rotations = [[d // 2 for d in g.rotation(v)] for v in range(g.n)]
    doc = {
        "format_version": FORMAT_VERSION,
        "n": g.n,
        "edges": [[u, v, _num(w)] for u, v, w in g.edges()],
        "rotations": rotations,
    }
    if not g.marked.all():
        doc["marks"] = np.flatnonzero(g.marked).tolist()
    return doc


def _num(w: float):
    return int(w) if float(w).is_integer() else w


def read_graph(path) -> EmbeddedGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parse_graph(doc)


def write_graph(path, g: EmbeddedGraph) -> None:
    Path(path).write_text(json.dumps(graph_to_doc(g)) + "\n", encoding="utf-8")
