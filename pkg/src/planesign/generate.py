"""Seeded random generators for the property suites.

Graphs are grown combinatorially, without coordinates: start from a cycle
and repeatedly split a bounded face, either by a chord or by a path
through fresh interior vertices.  Both operations preserve planarity,
simplicity and 2-connectivity, and never touch the outer face.
"""

from __future__ import annotations

from .embedding import NEGATIVE, POSITIVE, build_graph


def _neighbor_lists(graph):
    return {v: list(graph.rotation(v)) for v in graph.vertices()}


def _split_face(graph, outer_hint, face, a, b, new_count):
    """Split bounded face ``face`` between walk positions a < b, inserting
    ``new_count`` fresh vertices (0 = chord).  Returns the new graph, or
    None when the split would create a loop or parallel edge."""
    walk = graph.face_walk(face)
    length = len(walk)
    u = graph.origin(walk[a])
    v = graph.origin(walk[b])
    if u == v:
        return None
    if new_count == 0:
        if graph.has_edge(u, v):
            return None
        if (b - a) < 2 or (length - (b - a)) < 2:
            return None  # either side would be a 2-gon
    nbrs = _neighbor_lists(graph)
    prev_u = graph.origin(walk[a - 1])
    next_v = graph.head(walk[b])
    n0 = graph.vertex_count
    if new_count == 0:
        chain_at_u, chain_at_v = v, u
    else:
        chain_at_u, chain_at_v = n0, n0 + new_count - 1
        for idx in range(new_count):
            left = u if idx == 0 else n0 + idx - 1
            right = v if idx == new_count - 1 else n0 + idx + 1
            nbrs[n0 + idx] = [left, right]
    nbrs[u].insert(nbrs[u].index(prev_u) + 1, chain_at_u)
    nbrs[v].insert(nbrs[v].index(next_v), chain_at_v)
    return build_graph(nbrs, outer=outer_hint)


def random_plane_two_connected(rng, n_vertices, chord_rounds=3):
    """A random 2-connected simple plane graph with ``n_vertices``
    vertices, grown by path splits, then a few random chords."""
    k = min(n_vertices, rng.randint(3, 6))
    cycle = {i: [(i + 1) % k, (i - 1) % k] for i in range(k)}
    hint = (0, k - 1)
    g = build_graph(cycle, outer=hint)
    guard = 0
    while g.vertex_count < n_vertices and guard < 200:
        guard += 1
        faces = g.bounded_faces()
        f = faces[rng.randrange(len(faces))]
        length = len(g.face_walk(f))
        a = rng.randrange(length)
        b = rng.randrange(length)
        if a == b:
            continue
        a, b = min(a, b), max(a, b)
        new_count = min(rng.randint(1, 2), n_vertices - g.vertex_count)
        nxt = _split_face(g, hint, f, a, b, new_count)
        if nxt is not None:
            g = nxt
    for _ in range(chord_rounds):
        faces = g.bounded_faces()
        f = faces[rng.randrange(len(faces))]
        length = len(g.face_walk(f))
        if length < 4:
            continue
        a = rng.randrange(length)
        b = rng.randrange(length)
        a, b = min(a, b), max(a, b)
        nxt = _split_face(g, hint, f, a, b, 0)
        if nxt is not None:
            g = nxt
    return g


def random_outerplane(rng, n_vertices, chord_rounds=None):
    """A random 2-connected outerplane graph: a cycle plus random
    non-crossing chords (chords split bounded faces only, so every vertex
    stays on the outer face)."""
    n = max(3, n_vertices)
    cycle = {i: [(i + 1) % n, (i - 1) % n] for i in range(n)}
    hint = (0, n - 1)
    g = build_graph(cycle, outer=hint)
    rounds = chord_rounds if chord_rounds is not None else rng.randint(0, 2 * n)
    for _ in range(rounds):
        faces = g.bounded_faces()
        f = faces[rng.randrange(len(faces))]
        length = len(g.face_walk(f))
        if length < 4:
            continue
        a = rng.randrange(length)
        b = rng.randrange(length)
        a, b = min(a, b), max(a, b)
        nxt = _split_face(g, hint, f, a, b, 0)
        if nxt is not None:
            g = nxt
    return g


def random_signing(rng, graph, negative_probability=0.5):
    """The same embedding with each edge sign drawn independently."""
    signs = {
        e: (NEGATIVE if rng.random() < negative_probability else POSITIVE)
        for e in graph.edge_ids()
    }
    return graph.with_signs(signs)
