"""Canonical JSON documents: sorted keys, scalars as ``"p/q"`` strings."""
from __future__ import annotations

import json
from pathlib import Path

from .burling import BurlingLevel, Frame, FrameFamily, ProbeRecord
from .cbu import BoxD, BoxFamily
from .exact import Interval, Rect, format_scalar, scalar
from .graph import Graph, GraphError, graph_from_edges
from .graphio import from_edgelist, from_graph6, to_edgelist, to_graph6


class DocumentError(ValueError):
    """Input that cannot be parsed into the expected document."""


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _pair(iv: Interval) -> list:
    return [format_scalar(iv.lo), format_scalar(iv.hi)]


def _interval(raw) -> Interval:
    if not isinstance(raw, list) or len(raw) != 2:
        raise DocumentError(f"expected [lo, hi], got {raw!r}")
    if any(isinstance(x, float) for x in raw):
        raise DocumentError("floating point coordinates are not accepted")
    try:
        return Interval(scalar(raw[0]), scalar(raw[1]))
    except (TypeError, ValueError) as exc:
        raise DocumentError(str(exc)) from None


def _rect(raw) -> Rect:
    try:
        return Rect(_interval(raw["x"]), _interval(raw["y"]))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"bad rectangle {raw!r}") from exc
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _int(raw, what):
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise DocumentError(f"{what} must be an integer, got {raw!r}")
    return raw


# graphs

def graph_to_doc(g: Graph) -> dict:
    doc = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.labels and any(g.labels[v] != v for v in g.labels):
        doc["labels"] = {str(v): g.labels[v] for v in sorted(g.labels)}
    return doc


def graph_from_doc(doc) -> Graph:
    try:
        labels = doc.get("labels")
        return graph_from_edges(
            _int(doc["n"], "n"),
            [(_int(u, "vertex"), _int(v, "vertex")) for u, v in doc["edges"]],
            labels={int(k): v for k, v in labels.items()} if labels else None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad graph document: {exc}") from None


def level_to_doc(lv: BurlingLevel) -> dict:
    return {
        "level": lv.level,
        "graph": graph_to_doc(lv.graph),
        "specials": [list(s) for s in lv.specials],
    }


# families

def frames_to_doc(f: FrameFamily) -> dict:
    return {
        "frames": [{"id": fr.id, "x": _pair(fr.rect.x), "y": _pair(fr.rect.y)} for fr in f.frames],
        "probes": [
            {
                "id": p.id,
                "region": {"x": _pair(p.region.x), "y": _pair(p.region.y)},
                "members": sorted(p.members),
            }
            for p in f.probes
        ],
    }


def frames_from_doc(doc) -> FrameFamily:
    if not isinstance(doc, dict) or not isinstance(doc.get("frames"), list):
        raise DocumentError("frame family needs a 'frames' list")
    frames = [Frame(_int(fr.get("id"), "frame id"), _rect(fr)) for fr in doc["frames"]]
    probes = []
    for p in doc.get("probes", []):
        try:
            probes.append(ProbeRecord(
                _int(p["id"], "probe id"),
                _rect(p["region"]),
                tuple(sorted(_int(m, "member id") for m in p["members"])),
            ))
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"bad probe record: {exc}") from None
    try:
        return FrameFamily(frames, probes)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def boxes_to_doc(b: BoxFamily) -> dict:
    return {
        "dim": b.dim,
        "boxes": [{"id": bx.id, "intervals": [_pair(iv) for iv in bx.intervals]} for bx in b.boxes],
    }


def boxes_from_doc(doc) -> BoxFamily:
    if not isinstance(doc, dict) or "dim" not in doc or not isinstance(doc.get("boxes"), list):
        raise DocumentError("box family needs 'dim' and a 'boxes' list")
    try:
        boxes = [
            BoxD(_int(bx["id"], "box id"), tuple(_interval(iv) for iv in bx["intervals"]))
            for bx in doc["boxes"]
        ]
        return BoxFamily(_int(doc["dim"], "dim"), boxes)
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"bad box record: {exc}") from None
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


# files

def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from None


def load_graph(path) -> Graph:
    """Read a graph from ``.g6``, ``.json`` (graph or level document) or edge list."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        if path.suffix == ".g6":
            return from_graph6(text)
        if path.suffix == ".json":
            doc = json.loads(text)
            return graph_from_doc(doc["graph"] if "graph" in doc else doc)
        return from_edgelist(text)
    except (GraphError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DocumentError(f"{path}: {exc}") from None


def write_graph(g: Graph, path) -> None:
    path = Path(path)
    if path.suffix == ".g6":
        path.write_text(to_graph6(g) + "\n", encoding="utf-8")
    elif path.suffix == ".json":
        path.write_text(dumps(graph_to_doc(g)), encoding="utf-8")
    else:
        path.write_text(to_edgelist(g), encoding="utf-8")


def load_family(path):
    """A FrameFamily or BoxFamily, told apart by their keys."""
    doc = load_json(path)
    if isinstance(doc, dict) and "frames" in doc:
        return frames_from_doc(doc)
    if isinstance(doc, dict) and "boxes" in doc:
        return boxes_from_doc(doc)
    raise DocumentError(f"{path}: neither a frame family nor a box family")
