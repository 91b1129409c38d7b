"""
Graphviz DOT emission
"""

from typing import Optional

from trikit.core.schema import SimpleGraph, Triple, sort_edge


def emit_dot(graph: SimpleGraph, outer: Optional[Triple] = None, name: str = "trikit") -> str:
    """Undirected DOT graph; outer vertices and edges are drawn bold."""
    outer_vertices = set(outer or ())
    outer_edges = set()
    if outer is not None:
        a1, a2, a3 = outer
        outer_edges = {sort_edge(a1, a2), sort_edge(a2, a3), sort_edge(a1, a3)}

    lines = [f"graph {name} {{"]
    for v in graph.vertices:
        style = " [style=bold]" if v in outer_vertices else ""
        lines.append(f'  "{v}"{style};')
    for u, v in graph.edges():
        style = " [style=bold]" if (u, v) in outer_edges else ""
        lines.append(f'  "{u}" -- "{v}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"
