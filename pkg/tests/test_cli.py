import json
import subprocess
import sys

import pytest

from burlbox import documents as docs
from burlbox.cli import canonical_body, main
from burlbox.exact import Rect


def run(capsys, *args):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_level_two(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "burling", "--level", 2, "--out-dir", tmp_path)
    assert code == 0
    doc = json.loads((tmp_path / "burling2.json").read_text())
    assert doc["graph"]["n"] == 3 and len(doc["specials"]) == 2
    assert docs.load_graph(tmp_path / "burling2.g6").n == 3


def test_gen_frames_deterministic(tmp_path, capsys):
    for sub in ("a", "b"):
        assert run(capsys, "gen", "burling", "--level", 3, "--frames", "--out-dir", tmp_path / sub)[0] == 0
    a = (tmp_path / "a" / "burling3_frames.json").read_bytes()
    assert a == (tmp_path / "b" / "burling3_frames.json").read_bytes()
    fam = docs.load_family(tmp_path / "a" / "burling3_frames.json")
    assert len(fam.frames) == 13 and len(fam.probes) == 8
    assert run(capsys, "verify", "burling", tmp_path / "a" / "burling3_frames.json")[0] == 0


def test_gen_level_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["gen", "burling", "--level", "0"])
    assert e.value.code == 2


def test_gen_frames_beyond_limit(tmp_path, capsys):
    code, _, err = run(capsys, "gen", "burling", "--level", 4, "--frames", "--out-dir", tmp_path)
    assert code == 2 and "levels up to" in err


def test_verify_exit_codes(data_dir, tmp_path, capsys):
    assert run(capsys, "verify", "cbu", data_dir / "g1_boxes.json")[0] == 0
    code, out, _ = run(capsys, "verify", "cbu", data_dir / "overlapping_pair.json")
    assert code == 1 and len(json.loads(out)["violations"]) == 1
    assert run(capsys, "verify", "burling", data_dir / "level2_frames.json")[0] == 0
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", "cbu", bad)[0] == 2
    assert run(capsys, "verify", "burling", data_dir / "g1_boxes.json")[0] == 2
    assert run(capsys, "verify", "cbu", tmp_path / "missing.json")[0] == 2


def test_verify_report_file(data_dir, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(capsys, "verify", "cbu", data_dir / "g1_boxes.json", "-o", out)[0] == 0
    assert json.loads(out.read_text())["pass"] is True


def test_analyze(data_dir, tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", data_dir / "c5.g6")
    doc = json.loads(out)
    assert (code, doc["chi"], doc["omega"], doc["triangle_free"], doc["wheel"]) == (0, 3, 2, True, None)
    doc = json.loads(run(capsys, "analyze", data_dir / "g1.g6")[1])
    assert doc["omega"] == 2 and doc["triangle_free"] and doc["wheel"]["hub"] == 0
    run(capsys, "gen", "burling", "--level", 3, "--out-dir", tmp_path)
    doc = json.loads(run(capsys, "analyze", tmp_path / "burling3.g6", "--k", 2)[1])
    assert doc["chi"] == 3 and doc["refutation"] == {"k": 2, "status": "no-complete", "nodes_explored": doc["refutation"]["nodes_explored"]}


def test_analyze_budget_bracket(tmp_path, capsys):
    p = tmp_path / "k6.txt"
    p.write_text("6 15\n" + "".join(f"{i} {j}\n" for i in range(6) for j in range(i + 1, 6)))
    doc = json.loads(run(capsys, "analyze", p, "--budget", 0)[1])
    lo, hi = doc["chi_bracket"]
    assert lo <= 6 <= hi


def test_search_exit_codes(data_dir, tmp_path, capsys):
    code, out, _ = run(capsys, "search", "cbu", "--dim", 2, data_dir / "c5.g6")
    assert code == 0 and json.loads(out)["status"] == "representation"
    k3 = tmp_path / "k3.txt"
    k3.write_text("3 3\n0 1\n1 2\n0 2\n")
    assert run(capsys, "search", "cbu", "--dim", 2, k3)[0] == 1
    assert run(capsys, "search", "cbu", "--dim", 2, data_dir / "c5.g6", "--budget", 5)[0] == 3
    assert run(capsys, "search", "cbu", "--dim", 2, data_dir / "g2_graph.g6")[0] == 2


def test_lift(data_dir, capsys):
    code, out, _ = run(capsys, "lift", data_dir / "g1_boxes.json")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 3
    assert all(b["intervals"][2] == ["0", "1"] for b in doc["boxes"])


def test_render(data_dir, tmp_path, capsys):
    svg = tmp_path / "g1.svg"
    assert run(capsys, "render", data_dir / "g1_boxes.json", "-o", svg)[0] == 0
    assert svg.read_text().count("<rect id=") == 7
    dot = tmp_path / "g1.dot"
    assert run(capsys, "render", data_dir / "g1.g6", "-o", dot)[0] == 0
    assert dot.read_text().count(" -- ") == 9
    lifted = tmp_path / "l.json"
    run(capsys, "lift", data_dir / "g1_boxes.json", "-o", lifted)
    code, _, err = run(capsys, "render", lifted, "-o", tmp_path / "x.svg")
    assert code == 2 and "DOT" in err


def test_certify_shipped_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "certify", "theorem1", "-o", a)[0] == 0
    assert run(capsys, "certify", "theorem1", "-o", b)[0] == 0
    da, db = json.loads(a.read_text()), json.loads(b.read_text())
    assert "timestamp" in da
    assert docs.dumps(canonical_body(da)) == docs.dumps(canonical_body(db))
    assert run(capsys, "certify", "theorem1", "--no-timestamp", "-o", a)[0] == 0
    assert run(capsys, "certify", "theorem1", "--no-timestamp", "-o", b)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_certify_fails_on_widened_box(data_dir, tmp_path, capsys):
    doc = json.loads((data_dir / "g1_boxes.json").read_text())
    doc["boxes"][1]["intervals"][0] = ["1/2", "2"]  # now overlaps the hub on axis 0
    p = tmp_path / "wide.json"
    p.write_text(docs.dumps(doc))
    code, out, _ = run(capsys, "certify", "theorem1", "--g1-boxes", p)
    verdict = json.loads(out)
    assert code == 1 and verdict["overall"] == "fail"
    assert next(c for c in verdict["claims"] if c["id"] == "g1_is_2cbu")["pass"] is False


def test_certify_fails_on_a2_violation(data_dir, tmp_path, capsys):
    fam = docs.load_family(data_dir / "g2_frames.json")
    doc = docs.frames_to_doc(fam)
    # a small extra frame inside the overlap of the crossing frames 1 and 2
    a, b = fam.frames[1].rect, fam.frames[2].rect
    x0, x1 = max(a.x.lo, b.x.lo), min(a.x.hi, b.x.hi)
    y0, y1 = max(a.y.lo, b.y.lo), min(a.y.hi, b.y.hi)
    inner = Rect.of(x0 + (x1 - x0) / 3, x1 - (x1 - x0) / 3, y0 + (y1 - y0) / 3, y1 - (y1 - y0) / 3)
    doc["frames"].append({"id": 13, "x": [str(inner.x.lo), str(inner.x.hi)], "y": [str(inner.y.lo), str(inner.y.hi)]})
    p = tmp_path / "bad_frames.json"
    p.write_text(docs.dumps(doc))
    g = tmp_path / "g.txt"
    fg = docs.load_graph(data_dir / "g2_graph.g6")
    g.write_text(f"14 {fg.m}\n" + "".join(f"{u} {v}\n" for u, v in fg.sorted_edges()))
    code, out, _ = run(capsys, "certify", "theorem1", "--g2-frames", p, "--g2-graph", g)
    verdict = json.loads(out)
    assert code == 1
    claim = next(c for c in verdict["claims"] if c["id"] == "g2_is_burling")
    assert claim["pass"] is False and claim["details"]["axioms"]["a2"] is False


def test_config_and_env(tmp_path, capsys, monkeypatch, data_dir):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"budget": 5}))
    assert run(capsys, "--config", cfg, "search", "cbu", "--dim", 2, data_dir / "c5.g6")[0] == 3
    monkeypatch.setenv("BURLBOX_BUDGET", "5")
    assert run(capsys, "search", "cbu", "--dim", 2, data_dir / "c5.g6")[0] == 3
    monkeypatch.delenv("BURLBOX_BUDGET")
    assert run(capsys, "search", "cbu", "--dim", 2, data_dir / "c5.g6")[0] == 0


def test_console_script(data_dir):
    out = subprocess.run(
        [sys.executable, "-m", "burlbox.cli", "verify", "cbu", str(data_dir / "g1_boxes.json")],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and json.loads(out.stdout)["pass"] is True
