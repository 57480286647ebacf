"""Incomparability certificate: a 2-CBU wheel and a Burling frame family.

Claims come in two flavours.  Machine-checked claims are recomputed from
the supplied data and pass or fail.  Cited claims are published results the
argument leans on; they are recorded with their statement and never counted
as checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .burling import FrameFamily, frame_graph, verify_burling_axioms
from .cbu import (
    NONE_COMPLETE,
    REPRESENTATION,
    SEARCH_LIMIT,
    BoxError,
    BoxFamily,
    box_graph,
    lift_dim,
    search_cbu,
    verify_cbu,
)
from .graph import Graph, graphs_equal_by_id, triangle_witness, wheel_witness

MACHINE = "machine-checked"
CITED = "cited-theorem"

CITED_CLAIMS = (
    (
        "wheels_not_burling",
        "No wheel is a Burling graph; hence the 2-CBU wheel G1 is not a Burling graph.",
        "published result on Burling graphs and wheels (frame definition)",
    ),
    (
        "g2_not_cbu",
        "The Burling graph G2 is not a d-CBU graph for any d.",
        "Goncalves, Limouzy and Ochem (2023), Lemma 16",
    ),
    (
        "cbu_hierarchy_strict",
        "For every d >= 1, the d-CBU graphs form a strict subclass of the (d+1)-CBU graphs.",
        "Goncalves, Limouzy and Ochem (2023), Theorem 19",
    ),
)

G2_SCOPE = (
    "holds for the graph constructed in the cited work; a substitute G2 "
    "inherits it only if it is that graph"
)


@dataclass
class Claim:
    id: str
    status: str
    passed: Optional[bool] = None
    details: dict = field(default_factory=dict)

    def to_doc(self) -> dict:
        doc = {"id": self.id, "status": self.status, "details": self.details}
        if self.status == MACHINE:
            doc["pass"] = self.passed
        return doc


@dataclass
class CertificateVerdict:
    claims: list
    notes: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.claims if c.status == MACHINE)

    def to_doc(self) -> dict:
        return {
            "claims": [c.to_doc() for c in self.claims],
            "notes": list(self.notes),
            "overall": "pass" if self.overall else "fail",
        }


def certify_theorem1(
    g1: Graph,
    g1_boxes: BoxFamily,
    g2: Graph,
    g2_frames: FrameFamily,
    refute_dim: Optional[int] = 2,
    budget: Optional[int] = None,
    search_limit: int = SEARCH_LIMIT,
) -> CertificateVerdict:
    claims = []
    notes = []

    # 1. G1 is 2-CBU, witnessed by its boxes
    try:
        report = verify_cbu(g1_boxes)
    except BoxError as exc:
        claims.append(Claim("g1_is_2cbu", MACHINE, False, {"error": str(exc)}))
        report = None
    if report is not None:
        same = graphs_equal_by_id(report.graph, g1)
        claims.append(Claim(
            "g1_is_2cbu",
            MACHINE,
            g1_boxes.dim == 2 and report.valid and same,
            {
                "dim": g1_boxes.dim,
                "contacts_valid": report.valid,
                "violations": len(report.violations),
                "box_graph_matches": same,
            },
        ))
        lifted = lift_dim(g1_boxes)
        lifted_report = verify_cbu(lifted)
        claims.append(Claim(
            "g1_lifts_to_3cbu",
            MACHINE,
            lifted_report.valid and graphs_equal_by_id(box_graph(lifted), g1),
            {"dim": lifted.dim, "contacts_valid": lifted_report.valid},
        ))

    # 2. G1 is a wheel
    w = wheel_witness(g1)
    claims.append(Claim(
        "g1_is_wheel",
        MACHINE,
        w is not None,
        {} if w is None else {"hub": w.hub, "cycle": list(w.cycle)},
    ))

    # 3. both graphs are triangle-free
    t1, t2 = triangle_witness(g1), triangle_witness(g2)
    claims.append(Claim(
        "triangle_free",
        MACHINE,
        t1 is None and t2 is None,
        {"g1_triangle": None if t1 is None else list(t1), "g2_triangle": None if t2 is None else list(t2)},
    ))

    # 4. G2 is a Burling graph, witnessed by its frames
    axioms = verify_burling_axioms(g2_frames)
    same = graphs_equal_by_id(frame_graph(g2_frames), g2)
    claims.append(Claim(
        "g2_is_burling",
        MACHINE,
        axioms.ok and same,
        {
            "axioms": {"triangle_free": axioms.triangle_free, "a1": axioms.a1_ok,
                       "a2": axioms.a2_ok, "a3": axioms.a3_ok},
            "violations": len(axioms.violations),
            "frame_graph_matches": same,
        },
    ))

    # 5. optional bounded refutation of G2 in one fixed dimension
    if refute_dim is not None:
        if g2.n > search_limit:
            notes.append(
                f"refutation search skipped: G2 has {g2.n} vertices, limit is {search_limit}"
            )
        else:
            res = search_cbu(g2, refute_dim, budget=budget, limit=search_limit)
            details = {"dim": refute_dim, "result": res.status, "nodes_explored": res.nodes_explored}
            if res.status == NONE_COMPLETE:
                claims.append(Claim(f"g2_not_{refute_dim}cbu", MACHINE, True, details))
            elif res.status == REPRESENTATION:
                claims.append(Claim(f"g2_not_{refute_dim}cbu", MACHINE, False, details))
            else:
                notes.append(f"refutation search in dimension {refute_dim} ran out of budget")

    for cid, statement, source in CITED_CLAIMS:
        details = {"statement": statement, "source": source}
        if cid == "g2_not_cbu":
            details["scope"] = G2_SCOPE
        claims.append(Claim(cid, CITED, details=details))
    return CertificateVerdict(claims, notes)
