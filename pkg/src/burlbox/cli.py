"""Command line: ``burlbox {gen,verify,analyze,search,lift,certify,render}``.

Exit codes for verify/certify: 0 pass, 1 violations, 2 malformed input.
``search`` exits 0 when a representation is found, 1 when none exists on
the grid, 3 when the budget ran out.
"""
from __future__ import annotations

import argparse
import datetime
import json
import sys
from importlib import resources
from pathlib import Path

from . import documents as docs
from .burling import LevelError, burling_abstract, realize_frames
from .burling import MAX_LEVEL, REALIZE_MAX_LEVEL
from .burling import FrameFamily, verify_burling_axioms
from .cbu import BoxError, BoxFamily, lift_dim, search_cbu, verify_cbu
from .certify import certify_theorem1
from .coloring import analyze, default_budget
from .graph import GraphError
from .graphio import to_dot, to_graph6
from .render import RenderError, to_svg

EXIT_PASS, EXIT_FAIL, EXIT_MALFORMED, EXIT_UNKNOWN = 0, 1, 2, 3


def shipped(name: str) -> Path:
    return Path(str(resources.files("burlbox") / "data" / name))


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _level(text: str) -> int:
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError("level must be at least 1")
    return k


def cmd_gen(args) -> int:
    if args.frames and args.level > REALIZE_MAX_LEVEL:
        raise LevelError(f"--frames supports levels up to {REALIZE_MAX_LEVEL}")
    lv = burling_abstract(args.level, max_level=MAX_LEVEL)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"burling{args.level}"
    written = [out / f"{stem}.json", out / f"{stem}.g6"]
    written[0].write_text(docs.dumps(docs.level_to_doc(lv)), encoding="utf-8")
    written[1].write_text(to_graph6(lv.graph) + "\n", encoding="utf-8")
    if args.frames:
        fam = realize_frames(args.level)
        path = out / f"{stem}_frames.json"
        path.write_text(docs.dumps(docs.frames_to_doc(fam)), encoding="utf-8")
        written.append(path)
    for p in written:
        print(p)
    return EXIT_PASS


def cmd_verify(args) -> int:
    fam = docs.load_family(args.file)
    if args.kind == "burling":
        if not isinstance(fam, FrameFamily):
            raise docs.DocumentError("expected a frame family")
        report = verify_burling_axioms(fam)
        doc, ok = report.to_doc(), report.ok
    else:
        if not isinstance(fam, BoxFamily):
            raise docs.DocumentError("expected a box family")
        report = verify_cbu(fam)
        doc, ok = report.to_doc(), report.valid
    _emit(docs.dumps(doc), args.output)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_analyze(args) -> int:
    g = docs.load_graph(args.file)
    report = analyze(g, budget=args.budget, k=args.k)
    _emit(docs.dumps(report.to_doc()), args.output)
    return EXIT_PASS


def cmd_search(args) -> int:
    g = docs.load_graph(args.file)
    res = search_cbu(g, args.dim, budget=args.budget)
    doc = {"dim": args.dim, "status": res.status, "nodes_explored": res.nodes_explored}
    if res.family is not None:
        doc["representation"] = docs.boxes_to_doc(res.family)
    _emit(docs.dumps(doc), args.output)
    return {"representation": EXIT_PASS, "none-complete": EXIT_FAIL}.get(res.status, EXIT_UNKNOWN)


def cmd_lift(args) -> int:
    fam = docs.load_family(args.file)
    if not isinstance(fam, BoxFamily):
        raise docs.DocumentError("lift needs a box family")
    _emit(docs.dumps(docs.boxes_to_doc(lift_dim(fam))), args.output)
    return EXIT_PASS


def cmd_certify(args) -> int:
    g1 = docs.load_graph(args.g1_graph or shipped("g1.g6"))
    g1_boxes = docs.load_family(args.g1_boxes or shipped("g1_boxes.json"))
    g2 = docs.load_graph(args.g2_graph or shipped("g2_graph.g6"))
    g2_frames = docs.load_family(args.g2_frames or shipped("g2_frames.json"))
    if not isinstance(g1_boxes, BoxFamily) or not isinstance(g2_frames, FrameFamily):
        raise docs.DocumentError("g1 needs a box family and g2 a frame family")
    refute = None if args.refute_dim == 0 else args.refute_dim
    verdict = certify_theorem1(g1, g1_boxes, g2, g2_frames, refute_dim=refute, budget=args.budget)
    doc = verdict.to_doc()
    if not args.no_timestamp:
        doc["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    _emit(docs.dumps(doc), args.output)
    return EXIT_PASS if verdict.overall else EXIT_FAIL


def cmd_render(args) -> int:
    path = Path(args.file)
    if path.suffix == ".json":
        raw = docs.load_json(path)
        if isinstance(raw, dict) and ("frames" in raw or "boxes" in raw):
            _emit(to_svg(docs.load_family(path)), args.output)
            return EXIT_PASS
    _emit(to_dot(docs.load_graph(path)), args.output)
    return EXIT_PASS


def canonical_body(doc: dict) -> dict:
    """Certificate document without its timestamp."""
    return {k: v for k, v in doc.items() if k != "timestamp"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="burlbox", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON document with default values for any flag")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate Burling sequence data")
    gen.add_argument("kind", choices=["burling"])
    gen.add_argument("--level", type=_level, required=True)
    gen.add_argument("--frames", action="store_true", help="also write a frame realization")
    gen.add_argument("--out-dir", default=".")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check frame axioms or CBU contacts")
    ver.add_argument("kind", choices=["burling", "cbu"])
    ver.add_argument("file")
    ver.add_argument("-o", "--output")
    ver.set_defaults(func=cmd_verify)

    ana = sub.add_parser("analyze", help="chi, omega, triangles and wheels of a graph")
    ana.add_argument("file")
    ana.add_argument("--budget", type=int)
    ana.add_argument("--k", type=int)
    ana.add_argument("-o", "--output")
    ana.set_defaults(func=cmd_analyze)

    sea = sub.add_parser("search", help="exhaustive d-CBU representation search")
    sea.add_argument("kind", choices=["cbu"])
    sea.add_argument("file")
    sea.add_argument("--dim", type=int, required=True)
    sea.add_argument("--budget", type=int)
    sea.add_argument("-o", "--output")
    sea.set_defaults(func=cmd_search)

    lif = sub.add_parser("lift", help="append a [0,1] axis to every box")
    lif.add_argument("file")
    lif.add_argument("-o", "--output")
    lif.set_defaults(func=cmd_lift)

    cer = sub.add_parser("certify", help="incomparability certificate")
    cer.add_argument("which", choices=["theorem1"])
    cer.add_argument("--g1-graph")
    cer.add_argument("--g1-boxes")
    cer.add_argument("--g2-graph")
    cer.add_argument("--g2-frames")
    cer.add_argument("--refute-dim", type=int, default=2, help="0 disables the search")
    cer.add_argument("--budget", type=int)
    cer.add_argument("--no-timestamp", action="store_true")
    cer.add_argument("-o", "--output")
    cer.set_defaults(func=cmd_certify)

    ren = sub.add_parser("render", help="SVG for 2-D families, DOT for graphs")
    ren.add_argument("file")
    ren.add_argument("-o", "--output", required=True)
    ren.set_defaults(func=cmd_render)
    return p


def _apply_config(parser, argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    cfg = docs.load_json(known.config)
    if not isinstance(cfg, dict):
        raise docs.DocumentError("config must be a JSON object")
    defaults = {k.replace("-", "_"): v for k, v in cfg.items()}
    parser.set_defaults(**defaults)
    for action in parser._subparsers._group_actions:
        for sp in action.choices.values():
            sp.set_defaults(**{k: v for k, v in defaults.items() if k in {a.dest for a in sp._actions}})


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        _apply_config(parser, argv)
    except (OSError, docs.DocumentError) as exc:
        print(f"burlbox: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    try:
        return args.func(args)
    except (docs.DocumentError, GraphError, BoxError, LevelError, RenderError, json.JSONDecodeError) as exc:
        print(f"burlbox: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"burlbox: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
