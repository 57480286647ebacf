import json
import random
from fractions import Fraction

import pytest

from burlbox import documents as docs
from burlbox.burling import burling_abstract, realize_frames
from burlbox.cbu import family, search_cbu, verify_cbu
from burlbox.coloring import analyze
from burlbox.exact import Rect
from burlbox.graph import cycle_graph, graph_from_edges
from burlbox.render import RenderError, decimal, to_svg
from oracles import corpus

SHIPPED_JSON = ["g1_boxes.json", "g2_frames.json", "level2_frames.json", "overlapping_pair.json"]


@pytest.mark.parametrize("name", SHIPPED_JSON)
def test_shipped_documents_roundtrip_byte_exact(data_dir, name):
    text = (data_dir / name).read_text(encoding="utf-8")
    fam = docs.load_family(data_dir / name)
    to_doc = docs.frames_to_doc if "frames" in name else docs.boxes_to_doc
    assert docs.dumps(to_doc(fam)) == text


@pytest.mark.parametrize("name", ["g1.g6", "g2_graph.g6", "c5.g6"])
def test_shipped_graphs_roundtrip(data_dir, name, tmp_path):
    g = docs.load_graph(data_dir / name)
    for suffix in (".g6", ".json", ".txt"):
        out = tmp_path / f"x{suffix}"
        docs.write_graph(g, out)
        assert docs.load_graph(out) == g
        first = out.read_bytes()
        docs.write_graph(docs.load_graph(out), out)
        assert out.read_bytes() == first


def test_generated_documents_roundtrip():
    for k in (1, 2, 3):
        f = realize_frames(k)
        text = docs.dumps(docs.frames_to_doc(f))
        assert docs.dumps(docs.frames_to_doc(docs.frames_from_doc(json.loads(text)))) == text
    rng = random.Random(1)
    for _ in range(50):
        fam = family(2, [(i, [(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), 10 + i)] * 2) for i in range(3)])
        text = docs.dumps(docs.boxes_to_doc(fam))
        assert docs.dumps(docs.boxes_to_doc(docs.boxes_from_doc(json.loads(text)))) == text
    for name, g in corpus(randoms=10):
        text = docs.dumps(docs.graph_to_doc(g))
        assert docs.dumps(docs.graph_to_doc(docs.graph_from_doc(json.loads(text)))) == text


def test_reports_are_canonical():
    a = docs.dumps(analyze(cycle_graph(7)).to_doc())
    assert a == docs.dumps(json.loads(a))
    r = docs.dumps(verify_cbu(search_cbu(cycle_graph(4), 2).family).to_doc())
    assert r == docs.dumps(json.loads(r))


def test_level_document():
    doc = docs.level_to_doc(burling_abstract(2))
    assert doc == {"level": 2, "graph": {"n": 3, "edges": [[1, 2]]}, "specials": [[0, 2], [0, 1]]}


@pytest.mark.parametrize("doc", [
    {"frames": [{"id": 0, "x": [0.5, 1], "y": [0, 1]}]},
    {"frames": [{"id": 0, "x": ["1", "0"], "y": ["0", "1"]}]},
    {"frames": [{"id": "a", "x": ["0", "1"], "y": ["0", "1"]}]},
    {"frames": [{"id": 0, "x": ["0", "1"]}]},
    {"frames": "nope"},
])
def test_malformed_frames(doc):
    with pytest.raises(docs.DocumentError):
        docs.frames_from_doc(doc)


@pytest.mark.parametrize("doc", [
    {"dim": 2, "boxes": [{"id": 0, "intervals": [["0", "1"]]}]},
    {"dim": 1, "boxes": [{"id": 0, "intervals": [["0", "1/0"]]}]},
    {"boxes": []},
])
def test_malformed_boxes(doc):
    with pytest.raises(docs.DocumentError):
        docs.boxes_from_doc(doc)


def test_decimal():
    assert decimal(Fraction(1, 3)) == "0.333"
    assert decimal(Fraction(2, 3)) == "0.667"
    assert decimal(Fraction(-1, 2000)) == "-0.001"
    assert decimal(Fraction(-1, 3000)) == "0"
    assert decimal(Fraction(5)) == "5"


def test_svg_boxes_and_frames(data_dir):
    svg = to_svg(docs.load_family(data_dir / "g1_boxes.json"))
    assert svg.count("<rect id=") == 7 and svg.count("<text") == 7
    assert 'fill-opacity="0.45"' in svg
    svg = to_svg(docs.load_family(data_dir / "level2_frames.json"))
    assert svg.count("<rect id=") == 3 and svg.count('fill="none"') == 3
    assert svg == to_svg(docs.load_family(data_dir / "level2_frames.json"))


def test_svg_margin():
    # one box [0,20]x[0,10]: margin 1 on x and 0.5 on y, width 1000 px
    svg = to_svg(family(2, [(0, [(0, 20), (0, 10)])]))
    assert 'viewBox="0 0 1000 500"' in svg
    assert '<rect id="r0" x="45.455" y="22.727" width="909.091" height="454.545"' in svg


def test_svg_rejects_3d():
    with pytest.raises(RenderError, match="DOT"):
        to_svg(family(3, [(0, [(0, 1)] * 3)]))
