"""Co-Hamiltonian sequences: peeling a graph down to the faces a
Hamiltonian circle encloses, and validating user-supplied sequences.

An ordered edge deletion sequence is co-Hamiltonian when every deleted
edge lies on the current outer boundary, every intermediate graph stays
2-connected, and the final graph has all vertices exterior with exactly
one Hamiltonian circle.  The bounded faces that survive form the
Hamiltonian set; their boundary is the determined circle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dual import face_set_boundary, face_signs, is_outerplane, outerplane_unique_hamiltonian
from .embedding import Circle, POSITIVE
from .errors import (
    AlreadyOuterBoundary,
    FinalHasInteriorVertex,
    FinalNotUniquelyHamiltonian,
    InvalidSet,
    NoHamiltonianCircle,
    NotHamiltonian,
    NotOnOuterBoundary,
    NotTwoConnectedAfter,
    OddN,
    PlaneSignError,
)
from .grids import GridSpec, build_grid


@dataclass(frozen=True)
class CoHamSequence:
    """Deleted edges e_1..e_k, the bounded face merged into the outer face
    at each step, and the bounded faces of the final graph."""

    edges: tuple
    faces: tuple
    final_bounded: frozenset

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class HamiltonianSet:
    """Bounded faces surviving a co-Hamiltonian sequence, plus the unique
    Hamiltonian circle they determine."""

    faces: frozenset
    circle: Circle


def _outer_edge_set(graph):
    return frozenset(h >> 1 for h in graph.face_walk(graph.outer_face))


def peel_step(graph, protected_circle):
    """The smallest outer-boundary edge outside the protected Hamiltonian
    circle whose deletion keeps the graph 2-connected."""
    edges = protected_circle.edges if isinstance(protected_circle, Circle) else frozenset(protected_circle)
    if not graph.is_hamiltonian_circle(edges):
        raise NoHamiltonianCircle("protected circle is not a Hamiltonian circle of the graph")
    candidates = sorted(_outer_edge_set(graph) - edges)
    if not candidates:
        raise AlreadyOuterBoundary("protected circle already is the outer boundary")
    for e in candidates:
        fa, fb = graph.faces_of_edge(e)
        if fa == fb:
            continue
        if graph.delete_edge(e).graph.is_two_connected():
            return e
    raise PlaneSignError("no peelable edge found; this cannot happen on valid input")


def coham_from_circle(graph, circle):
    """Peel everything outside a Hamiltonian circle into the outer face.

    Produces the co-Hamiltonian sequence whose final bounded faces are
    exactly the faces the circle encloses; empty iff the circle already is
    the outer boundary."""
    edges = circle.edges if isinstance(circle, Circle) else frozenset(circle)
    if not graph.is_hamiltonian_circle(edges):
        raise NotHamiltonian("not a Hamiltonian circle of the graph")
    target = graph.enclosed_faces(edges)
    g = graph
    seq_edges = []
    seq_faces = []
    while _outer_edge_set(g) != edges:
        e = peel_step(g, Circle(edges))
        deletion = g.delete_edge(e)
        seq_edges.append(e)
        seq_faces.append(deletion.absorbed)
        g = deletion.graph
    final = frozenset(g.bounded_faces())
    if final != target:
        raise PlaneSignError("peeling did not terminate on the enclosed faces")
    return CoHamSequence(tuple(seq_edges), tuple(seq_faces), final)


def _final_circle(graph):
    """Final-graph checks of a sequence: every vertex exterior, then a
    unique Hamiltonian circle.  All-exterior already forces uniqueness
    (outer boundary); the enumeration fallback guards the impossible case."""
    interior = graph.classify_vertices().interior
    if interior:
        raise FinalHasInteriorVertex(f"interior vertices remain: {sorted(interior)}")
    if is_outerplane(graph):
        return outerplane_unique_hamiltonian(graph)
    from .search import enumerate_hamiltonian

    enum = enumerate_hamiltonian(graph, limit=2)
    if len(enum.circles) != 1:
        raise FinalNotUniquelyHamiltonian(f"{len(enum.circles)} Hamiltonian circles in final graph")
    return enum.circles[0]


def apply_coham_detailed(graph, edge_sequence):
    """Like apply_coham, but also returns the induced face sequence."""
    g = graph
    faces = []
    edges = []
    for t, e in enumerate(edge_sequence, start=1):
        if not g.is_outer_edge(e):
            raise NotOnOuterBoundary(t, f"edge {e} is not on the outer boundary")
        fa, fb = g.faces_of_edge(e)
        if fa == fb:
            raise NotTwoConnectedAfter(t, f"edge {e} is a bridge")
        deletion = g.delete_edge(e)
        if not deletion.graph.is_two_connected():
            raise NotTwoConnectedAfter(t, f"deleting edge {e} leaves a cut vertex")
        edges.append(e)
        faces.append(deletion.absorbed)
        g = deletion.graph
    circle = _final_circle(g)
    seq = CoHamSequence(tuple(edges), tuple(faces), frozenset(g.bounded_faces()))
    return seq, HamiltonianSet(seq.final_bounded, circle)


def apply_coham(graph, edge_sequence):
    """Validate a co-Hamiltonian edge sequence stepwise and return the
    Hamiltonian set it determines."""
    return apply_coham_detailed(graph, edge_sequence)[1]


def realize_face_sequence(graph, face_sequence):
    """Realize a co-Hamiltonian face sequence by edge deletions.

    Each face must share at least one edge with the current outer face;
    the smallest such edge id is deleted.  Returns the full validated
    sequence."""
    g = graph
    seq_edges = []
    seq_faces = []
    for t, f in enumerate(face_sequence, start=1):
        if f == g.outer_face or f not in g.face_ids():
            raise NotOnOuterBoundary(t, f"face {f} is not a bounded face at this step")
        outer = g.outer_face
        candidates = sorted(
            e for e in set(g.face_edges(f)) if outer in g.faces_of_edge(e)
        )
        if not candidates:
            raise NotOnOuterBoundary(t, f"face {f} shares no edge with the outer face")
        e = candidates[0]
        deletion = g.delete_edge(e)
        if not deletion.graph.is_two_connected():
            raise NotTwoConnectedAfter(t, f"deleting edge {e} leaves a cut vertex")
        seq_edges.append(e)
        seq_faces.append(f)
        g = deletion.graph
    _final_circle(g)
    return CoHamSequence(tuple(seq_edges), tuple(seq_faces), frozenset(g.bounded_faces()))


def hamiltonian_set_sign(graph, ham_set):
    """Product of the face signs over a Hamiltonian set; always equal to
    the sign of the determined circle."""
    if isinstance(ham_set, HamiltonianSet):
        faces = ham_set.faces
        boundary = ham_set.circle.edges
        if face_set_boundary(graph, faces) != boundary:
            raise InvalidSet("stored circle does not bound the face set")
    else:
        faces = frozenset(ham_set)
        boundary = face_set_boundary(graph, faces)
    if not faces:
        raise InvalidSet("empty face set")
    if graph.outer_face in faces or not faces <= set(graph.face_ids()):
        raise InvalidSet("face set must consist of bounded faces")
    if not graph.is_hamiltonian_circle(boundary):
        raise InvalidSet("face set boundary is not a Hamiltonian circle")
    signs = face_signs(graph)
    product = POSITIVE
    for f in faces:
        product *= signs[f]
    if product != graph.edge_set_sign(boundary):
        raise PlaneSignError("face-sign product disagrees with circle sign")
    return product


def canonical_coham_boxes(m, n):
    """Box labels of the canonical grid sequence: for each row i up to
    m-2, the boxes [i, 2], [i, 4], ..., [i, n-2], row by row."""
    if n % 2 != 0:
        raise OddN(f"n must be even, got {n}")
    return [(i, j) for i in range(1, m - 1) for j in range(2, n - 1, 2)]


def canonical_coham_grid(m, n):
    """The canonical co-Hamiltonian sequence of the m x n grid, of length
    (n/2 - 1)(m - 2), realized as edge deletions and validated.

    Edge and face ids refer to ``build_grid(GridSpec(m, n))``; the same
    ids apply to any signing of the same shape."""
    boxes_seq = canonical_coham_boxes(m, n)
    grid = build_grid(GridSpec(m, n))
    return realize_face_sequence(grid.graph, [grid.box_face(b) for b in boxes_seq])
