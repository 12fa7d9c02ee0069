"""
DOT rendering of the t-root graph.

Nodes are named by their integer coordinate tuple over the painted nodes,
edges are undirected, and both follow the graph's deterministic order, so the
same diagram always renders to the same bytes.
"""

from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from jinja2 import Environment, FileSystemLoader

from mspace_go.geometry.flag import TRootGraph

TEMPLATE_DIR = Path(__file__).parent.parent / "templates"
TEMPLATE_NAME = "troot_graph.dot.j2"


def node_name(xi: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in xi) + ")"


def prepare_graph_context(graph: TRootGraph, diagram: str) -> Dict[str, Any]:
    return {
        "diagram": diagram,
        "nodes": [node_name(xi) for xi in graph.nodes],
        "components": [
            [
                {"name": node_name(xi), "positive": next(c for c in xi if c != 0) > 0}
                for xi in component
            ]
            for component in graph.components
        ],
        "edges": [(node_name(a), node_name(b)) for a, b in graph.edges],
    }


def render_dot(graph: TRootGraph, diagram: str = "R_t", template_dir: Optional[Path] = None) -> str:
    env = Environment(
        loader=FileSystemLoader(template_dir or TEMPLATE_DIR),
        trim_blocks=True,
        lstrip_blocks=True,
    )
    return env.get_template(TEMPLATE_NAME).render(prepare_graph_context(graph, diagram))
