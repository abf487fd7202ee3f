"""Weak duals, face signs, outerplanarity, and face-vertex elimination.

The weak dual (face graph) has one node per bounded face, adjacent when
two faces share an edge.  Nodes carry (phi, degree) labels where
phi(f) = sign(f) * (boundary length - 2); a node is removable when its
current degree equals |phi| + 1, and eliminating removable nodes until
the remainder is a tree yields a candidate Hamiltonian set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import POSITIVE, make_circle
from .errors import NonPolygonalFace, NotOuterplane, NotTwoConnected, TooSmall


class FaceGraph:
    """Mutable adjacency over bounded faces with (phi, degree) labels."""

    def __init__(self, adjacency, phi):
        self._adj = {f: set(nbrs) for f, nbrs in adjacency.items()}
        self._phi = dict(phi)

    @property
    def nodes(self):
        return sorted(self._adj)

    def __len__(self):
        return len(self._adj)

    def __contains__(self, f):
        return f in self._adj

    def neighbors(self, f):
        return sorted(self._adj[f])

    def degree(self, f):
        return len(self._adj[f])

    def phi(self, f):
        return self._phi[f]

    def label(self, f):
        return (self._phi[f], len(self._adj[f]))

    def edges(self):
        out = []
        for f in sorted(self._adj):
            for g in self._adj[f]:
                if f < g:
                    out.append((f, g))
        return sorted(out)

    def copy(self):
        return FaceGraph(self._adj, self._phi)

    def remove(self, f):
        for g in self._adj.pop(f):
            self._adj[g].discard(f)
        del self._phi[f]

    def is_tree(self):
        if not self._adj:
            return False
        total = sum(len(nbrs) for nbrs in self._adj.values()) // 2
        if total != len(self._adj) - 1:
            return False
        start = next(iter(self._adj))
        seen = {start}
        stack = [start]
        while stack:
            f = stack.pop()
            for g in self._adj[f]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return len(seen) == len(self._adj)


def face_signs(graph):
    """Sign of every bounded face: product of its boundary edge signs."""
    return {f: graph.edge_set_sign(set(graph.face_edges(f))) for f in graph.bounded_faces()}


def face_set_boundary(graph, faces):
    """Edges incident to exactly one face of the set (the outer face never
    counts as inside)."""
    faces = frozenset(faces)
    out = set()
    for e in graph.edge_ids():
        fa, fb = graph.faces_of_edge(e)
        if (fa in faces) != (fb in faces):
            out.add(e)
    return frozenset(out)


def weak_dual(graph):
    """The face graph over bounded faces, labeled (phi, degree)."""
    signs = face_signs(graph)
    adjacency = {f: set() for f in graph.bounded_faces()}
    outer = graph.outer_face
    for e in graph.edge_ids():
        fa, fb = graph.faces_of_edge(e)
        if fa != fb and outer not in (fa, fb):
            adjacency[fa].add(fb)
            adjacency[fb].add(fa)
    phi = {f: signs[f] * (len(graph.face_walk(f)) - 2) for f in adjacency}
    return FaceGraph(adjacency, phi)


def verify_outer_product(graph):
    """Check that the outer boundary sign equals the product of all bounded
    face signs.  Exact; a False return indicates an implementation bug."""
    outer_edges = {h >> 1 for h in graph.face_walk(graph.outer_face)}
    lhs = graph.edge_set_sign(outer_edges)
    rhs = POSITIVE
    for s in face_signs(graph).values():
        rhs *= s
    return lhs == rhs


def is_outerplane(graph):
    """True iff every vertex lies on the outer face."""
    return not graph.classify_vertices().interior


def _require_two_connected(graph):
    if graph.vertex_count < 3:
        raise TooSmall("need at least 3 vertices")
    if not graph.is_two_connected():
        raise NotTwoConnected("graph is not 2-connected")


def outerplane_unique_hamiltonian(graph):
    """The unique Hamiltonian circle of a 2-connected outerplane graph: its
    outer boundary."""
    _require_two_connected(graph)
    if not is_outerplane(graph):
        raise NotOuterplane("graph has an interior vertex")
    return make_circle(graph, {h >> 1 for h in graph.face_walk(graph.outer_face)})


def dual_is_tree(graph):
    """True iff the weak dual is connected and acyclic."""
    _require_two_connected(graph)
    dual = weak_dual(graph)
    if len(dual) == 0:
        raise TooSmall("no bounded face")
    return dual.is_tree()


def face_map(graph):
    """phi(f) = sign(f) * (triangles in any triangulation of f), with the
    triangle count taken as boundary length minus 2.  Every bounded face
    must be a simple polygon."""
    signs = face_signs(graph)
    out = {}
    for f in graph.bounded_faces():
        verts = graph.face_vertices(f)
        if len(set(verts)) != len(verts):
            raise NonPolygonalFace(f"face {f} repeats a vertex")
        out[f] = signs[f] * (len(verts) - 2)
    return out


def removable_vertices(face_graph):
    """Faces whose dual degree equals |phi| + 1."""
    return frozenset(
        f for f in face_graph.nodes if face_graph.degree(f) == abs(face_graph.phi(f)) + 1
    )


@dataclass(frozen=True)
class ReductionTrace:
    """Outcome of the elimination heuristic.

    steps: (face, phi, degree-at-removal) per deletion, in order.
    survivors: the faces left, a *candidate* Hamiltonian set that still
    needs validation.  stuck: stopped with no removable vertex before the
    remainder became a tree.
    """

    steps: tuple
    survivors: frozenset
    reached_tree: bool
    stuck: bool


_POLICIES = ("first-found", "max-degree", "min-phi")


def eliminate(face_graph, order_policy="first-found"):
    """Delete removable face-vertices one at a time until the remaining
    face graph is a tree or no removable vertex exists."""
    if order_policy not in _POLICIES:
        raise ValueError(f"order_policy must be one of {_POLICIES}")
    fg = face_graph.copy()
    steps = []
    while True:
        if fg.is_tree():
            return ReductionTrace(tuple(steps), frozenset(fg.nodes), True, False)
        candidates = sorted(removable_vertices(fg))
        if not candidates:
            return ReductionTrace(tuple(steps), frozenset(fg.nodes), False, True)
        if order_policy == "first-found":
            pick = candidates[0]
        elif order_policy == "max-degree":
            pick = max(candidates, key=lambda f: (fg.degree(f), -f))
        else:  # min-phi
            pick = min(candidates, key=lambda f: (fg.phi(f), f))
        steps.append((pick, fg.phi(pick), fg.degree(pick)))
        fg.remove(pick)
        if len(fg) == 0:
            return ReductionTrace(tuple(steps), frozenset(), False, True)
