"""Text renderers backed by Jinja2 templates."""

from mspace_go.generator.graph_dot import prepare_graph_context, render_dot

__all__ = ["prepare_graph_context", "render_dot"]
