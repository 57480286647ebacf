"""Workbench for Burling graphs and d-CBU box contact graphs."""
from ._backend import BACKEND
from .burling import (
    BurlingLevel,
    Frame,
    FrameFamily,
    ProbeRecord,
    burling_abstract,
    frame_graph,
    level_sizes,
    probe_lemma_check,
    realize_frames,
    verify_burling_axioms,
)
from .cbu import BoxD, BoxFamily, box_graph, family, lift_dim, search_cbu, verify_cbu
from .certify import certify_theorem1
from .coloring import analyze, chromatic_number, clique_number, greedy_coloring, k_colorable
from .exact import Interval, Rect, interval_meet, scalar
from .graph import Graph, graph_from_edges, triangle_witness, wheel_witness

__version__ = "0.1.0"
