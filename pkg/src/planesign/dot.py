"""DOT export for graphs and face graphs.

Edges carry their sign as a label, negative ones dashed; face-graph nodes
are labeled "(phi,degree)".
"""

from __future__ import annotations

from .embedding import NEGATIVE, sign_char


def graph_dot(graph, name="psg"):
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in graph.vertices():
        lines.append(f"  {v};")
    for e in graph.edge_ids():
        u, v = graph.endpoints(e)
        s = graph.sign(e)
        attrs = f'label="{sign_char(s)}"'
        if s == NEGATIVE:
            attrs += ", style=dashed"
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def face_graph_dot(face_graph, name="dual"):
    lines = [f"graph {name} {{"]
    for f in face_graph.nodes:
        phi, deg = face_graph.label(f)
        lines.append(f'  f{f} [label="({phi},{deg})"];')
    for a, b in face_graph.edges():
        lines.append(f"  f{a} -- f{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
