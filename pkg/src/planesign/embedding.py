"""Plane signed graphs stored as rotation systems.

A graph is a set of vertices 0..n-1, each carrying the counterclockwise
cyclic order of its incident edges, plus a sign per edge and a designated
unbounded face.  Faces are traced combinatorially: the successor of a
half-edge h is the half-edge after twin(h) in the rotation at the head of
h.  With counterclockwise rotations this keeps the traced face on the
right, so bounded faces come out clockwise and the outer face
counterclockwise around the hull of a drawing.

Half-edges are plain ints: edge e contributes half-edges 2e (from the
first stored endpoint) and 2e+1 (the twin, 2e ^ 1).  Edge ids are dense at
build time, assigned in sorted endpoint-pair order, and deletion never
reuses a live id.  Face ids behave the same way: a deletion merges two
faces and the surviving face keeps its id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadOuterHint,
    BridgeDeletion,
    NonPlanarEmbedding,
    NonSimple,
    NotACircle,
    TooSmall,
    UnknownEdge,
)

POSITIVE = 1
NEGATIVE = -1


def sign_char(s):
    """Render a sign as '+' or '-'."""
    if s == POSITIVE:
        return "+"
    if s == NEGATIVE:
        return "-"
    raise ValueError(f"not a sign: {s!r}")


def parse_sign(text):
    if text == "+":
        return POSITIVE
    if text == "-":
        return NEGATIVE
    raise ValueError(f"not a sign: {text!r}")


def _pair(u, v):
    return (u, v) if u <= v else (v, u)


class Circle:
    """A simple closed cycle, identified by its edge set.

    Two circles are equal iff their edge sets are equal; the optional
    vertex order is a convenience for display and is ignored by equality.
    """

    __slots__ = ("edges", "order")

    def __init__(self, edges, order=None):
        self.edges = frozenset(edges)
        self.order = tuple(order) if order is not None else None

    def __eq__(self, other):
        if isinstance(other, Circle):
            return self.edges == other.edges
        return NotImplemented

    def __hash__(self):
        return hash(self.edges)

    def __len__(self):
        return len(self.edges)

    def __repr__(self):
        if self.order is not None:
            return f"Circle({'-'.join(map(str, self.order))})"
        return f"Circle(edges={sorted(self.edges)})"


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of one face, as a tuple of half-edges."""

    face: int
    half_edges: tuple

    def __len__(self):
        return len(self.half_edges)


@dataclass(frozen=True)
class VertexClasses:
    exterior: frozenset
    interior: frozenset


@dataclass(frozen=True)
class EdgeDeletion:
    """Result of deleting an edge: the new graph plus face bookkeeping.

    ``absorbed`` is the face that disappeared; ``into`` is the face it was
    merged into (the outer face whenever the edge was on the outer
    boundary, in which case ``absorbed`` is the bounded face that became
    part of the outer face).
    """

    graph: "PlaneSignedGraph"
    absorbed: int
    into: int


class PlaneSignedGraph:
    """Immutable plane signed graph; mutating operations return new values."""

    __slots__ = ("_n", "_edges", "_signs", "_eid", "_rot", "_faces", "_face_of", "_outer")

    def __init__(self):
        raise TypeError("use build_graph() to construct a PlaneSignedGraph")

    @classmethod
    def _from_parts(cls, n, edges, signs, eid, rot, faces, face_of, outer):
        g = object.__new__(cls)
        g._n = n
        g._edges = edges
        g._signs = signs
        g._eid = eid
        g._rot = rot
        g._faces = faces
        g._face_of = face_of
        g._outer = outer
        return g

    # -- basic queries --------------------------------------------------

    @property
    def vertex_count(self):
        return self._n

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def face_count(self):
        return len(self._faces)

    @property
    def outer_face(self):
        return self._outer

    def vertices(self):
        return range(self._n)

    def edge_ids(self):
        return sorted(self._edges)

    def endpoints(self, e):
        try:
            return self._edges[e]
        except KeyError:
            raise UnknownEdge(f"edge {e}") from None

    def sign(self, e):
        try:
            return self._signs[e]
        except KeyError:
            raise UnknownEdge(f"edge {e}") from None

    def edge_id(self, u, v):
        try:
            return self._eid[_pair(u, v)]
        except KeyError:
            raise UnknownEdge(f"edge {u}-{v}") from None

    def has_edge(self, u, v):
        return _pair(u, v) in self._eid

    def degree(self, v):
        return len(self._rot[v])

    def rotation(self, v):
        """Neighbors of v in counterclockwise order."""
        return tuple(self.head(h) for h in self._rot[v])

    def origin(self, h):
        return self._edges[h >> 1][h & 1]

    def head(self, h):
        return self._edges[h >> 1][1 - (h & 1)]

    # -- faces ----------------------------------------------------------

    def face_ids(self):
        return sorted(self._faces)

    def bounded_faces(self):
        return [f for f in sorted(self._faces) if f != self._outer]

    def face_walk(self, f):
        return self._faces[f]

    def face_vertices(self, f):
        return tuple(self.origin(h) for h in self._faces[f])

    def face_edges(self, f):
        return tuple(h >> 1 for h in self._faces[f])

    def faces_of_edge(self, e):
        if e not in self._edges:
            raise UnknownEdge(f"edge {e}")
        return (self._face_of[2 * e], self._face_of[2 * e + 1])

    def is_outer_edge(self, e):
        return self._outer in self.faces_of_edge(e)

    def outer_edges(self):
        return sorted(h >> 1 for h in self._faces[self._outer])

    def outer_walk_vertices(self):
        return self.face_vertices(self._outer)

    def enclosed_faces(self, circle_edges):
        """Bounded faces strictly inside a simple closed cycle.

        Walks the face adjacency over edges not in the cycle, starting at
        the outer face; everything unreached lies inside.
        """
        circle_edges = frozenset(circle_edges)
        outside = {self._outer}
        stack = [self._outer]
        while stack:
            f = stack.pop()
            for h in self._faces[f]:
                if (h >> 1) in circle_edges:
                    continue
                g = self._face_of[h ^ 1]
                if g not in outside:
                    outside.add(g)
                    stack.append(g)
        return frozenset(self._faces) - outside

    # -- signs ------------------------------------------------------------

    def edge_set_sign(self, edges):
        """Product of the signs of an arbitrary edge set (no shape check)."""
        s = POSITIVE
        for e in edges:
            s *= self.sign(e)
        return s

    def is_circle(self, edges):
        """True iff the edge set forms one simple closed cycle."""
        edges = set(edges)
        if not edges:
            return False
        deg = {}
        for e in edges:
            if e not in self._edges:
                raise UnknownEdge(f"edge {e}")
            u, v = self._edges[e]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            return False
        # 2-regular with equal vertex and edge counts: connected iff one cycle
        adj = {v: [] for v in deg}
        for e in edges:
            u, v = self._edges[e]
            adj[u].append(v)
            adj[v].append(u)
        start = next(iter(deg))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(deg)

    def circle_sign(self, circle):
        """Sign of a circle: the product of its edge signs."""
        edges = circle.edges if isinstance(circle, Circle) else frozenset(circle)
        if not self.is_circle(edges):
            raise NotACircle(f"{sorted(edges)} is not a simple closed cycle")
        return self.edge_set_sign(edges)

    def is_hamiltonian_circle(self, circle):
        edges = circle.edges if isinstance(circle, Circle) else frozenset(circle)
        if len(edges) != self._n:
            return False
        return self.is_circle(edges)

    def outer_circle(self):
        """The outer boundary as a Circle (requires a simple outer walk)."""
        walk = self._faces[self._outer]
        verts = [self.origin(h) for h in walk]
        if len(set(verts)) != len(verts):
            raise NotACircle("outer boundary walk repeats a vertex")
        return Circle((h >> 1 for h in walk), verts)

    # -- connectivity -----------------------------------------------------

    def is_two_connected(self):
        """True iff the graph is connected with no cut vertex."""
        n = self._n
        if n < 3:
            raise TooSmall("2-connectivity needs at least 3 vertices")
        adj = [[] for _ in range(n)]
        for u, v in self._edges.values():
            adj[u].append(v)
            adj[v].append(u)
        if any(not a for a in adj):
            return False
        # iterative Hopcroft-Tarjan articulation scan from vertex 0
        disc = [0] * n
        low = [0] * n
        parent = [-1] * n
        timer = 1
        root_children = 0
        stack = [(0, iter(adj[0]))]
        disc[0] = low[0] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == 0:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == 0:
                        root_children += 1
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
                elif w != parent[v]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != 0 and low[v] >= disc[p]:
                        return False
        if timer - 1 != n:
            return False  # disconnected
        return root_children <= 1

    def classify_vertices(self):
        """Partition vertices into exterior (on the outer walk) and interior."""
        ext = frozenset(self.origin(h) for h in self._faces[self._outer])
        return VertexClasses(ext, frozenset(self.vertices()) - ext)

    # -- mutation ---------------------------------------------------------

    def delete_edge(self, e, validate=False):
        """Delete a non-bridge edge, merging its two incident faces.

        Face bookkeeping is incremental; ``validate=True`` retraces all
        faces from the rotations and checks the incremental result.
        """
        if e not in self._edges:
            raise UnknownEdge(f"edge {e}")
        fa = self._face_of[2 * e]
        fb = self._face_of[2 * e + 1]
        if fa == fb:
            raise BridgeDeletion(f"edge {e} is a bridge")
        if self._outer in (fa, fb):
            survivor = self._outer
        else:
            survivor = min(fa, fb)
        absorbed = fb if survivor == fa else fa
        h_surv = 2 * e if self._face_of[2 * e] == survivor else 2 * e + 1
        h_abs = h_surv ^ 1

        ws = self._faces[survivor]
        wa = self._faces[absorbed]
        i = ws.index(h_surv)
        j = wa.index(h_abs)
        merged = ws[i + 1 :] + ws[:i] + wa[j + 1 :] + wa[:j]

        u, v = self._edges[e]
        rot = dict(self._rot)
        ru = list(rot[u])
        ru.remove(2 * e if self.origin(2 * e) == u else 2 * e + 1)
        rot[u] = ru
        rv = list(rot[v])
        rv.remove(2 * e if self.origin(2 * e) == v else 2 * e + 1)
        rot[v] = rv

        edges = dict(self._edges)
        del edges[e]
        signs = dict(self._signs)
        del signs[e]
        eid = dict(self._eid)
        del eid[_pair(u, v)]

        faces = {f: w for f, w in self._faces.items() if f != absorbed}
        faces[survivor] = merged
        face_of = dict(self._face_of)
        del face_of[2 * e]
        del face_of[2 * e + 1]
        for h in wa:
            if h != h_abs:
                face_of[h] = survivor

        g = PlaneSignedGraph._from_parts(
            self._n, edges, signs, eid, rot, faces, face_of, self._outer
        )
        if validate:
            g._check_against_retrace()
        return EdgeDeletion(g, absorbed, survivor)

    def with_signs(self, signs):
        """Same embedding with a fresh signing (pairs or edge ids as keys)."""
        new = {e: POSITIVE for e in self._edges}
        for key, s in signs.items():
            if isinstance(key, tuple):
                e = self.edge_id(*key)
            else:
                e = key
                if e not in self._edges:
                    raise UnknownEdge(f"edge {e}")
            if s not in (POSITIVE, NEGATIVE):
                raise ValueError(f"not a sign: {s!r}")
            new[e] = s
        return PlaneSignedGraph._from_parts(
            self._n, self._edges, new, self._eid, self._rot, self._faces, self._face_of, self._outer
        )

    # -- internal checks ----------------------------------------------------

    def _check_against_retrace(self):
        walks, face_of = _trace(self._rot, self._edges)
        stored = {frozenset(w) for w in self._faces.values()}
        traced = {frozenset(w) for w in walks}
        if stored != traced:
            raise NonPlanarEmbedding("incremental face bookkeeping diverged from retrace")
        if self._n - len(self._edges) + len(self._faces) != 2:
            raise NonPlanarEmbedding("Euler check failed after deletion")


def _trace(rot, edges):
    """Partition all half-edges into face walks.

    Successor of h = the half-edge after twin(h) in the rotation at the
    head of h.
    """
    pos = {}
    for v, hs in rot.items():
        for idx, h in enumerate(hs):
            pos[h] = idx

    def origin(h):
        return edges[h >> 1][h & 1]

    walks = []
    face_of = {}
    for h0 in sorted(pos):
        if h0 in face_of:
            continue
        walk = []
        h = h0
        while True:
            face_of[h] = len(walks)
            walk.append(h)
            t = h ^ 1
            w = origin(t)
            hs = rot[w]
            h = hs[(pos[t] + 1) % len(hs)]
            if h == h0:
                break
        walks.append(tuple(walk))
    return walks, face_of


def _match_walk(graph_walk_vertices, hint):
    """Does the face's cyclic vertex sequence equal the hint walk (either direction)?"""
    k = len(graph_walk_vertices)
    if len(hint) != k:
        return False
    doubled = graph_walk_vertices * 2
    fwd = tuple(hint)
    rev = tuple(reversed(hint))
    for s in range(k):
        window = tuple(doubled[s : s + k])
        if window == fwd or window == rev:
            return True
    return False


def build_graph(rotations, signs=None, outer=None):
    """Build a plane signed graph from per-vertex neighbor orders.

    rotations: mapping or sequence, vertex -> neighbors in counterclockwise
    order.  Vertex ids must be exactly 0..n-1.  signs: optional mapping
    from endpoint pairs to +1/-1 (default +1 everywhere).  outer: None for
    the default rule (longest walk, ties by smallest contained vertex id),
    a pair (u, v) meaning the face containing the directed half-edge u->v,
    or a closed vertex walk identifying the face.
    """
    if isinstance(rotations, dict):
        items = rotations
    else:
        items = {v: nbrs for v, nbrs in enumerate(rotations)}
    n = len(items)
    if n == 0:
        raise NonSimple("graph has no vertices")
    if sorted(items) != list(range(n)):
        raise NonSimple("vertex ids must be dense from 0")

    neighbor_sets = {}
    for v, nbrs in items.items():
        nbrs = list(nbrs)
        for w in nbrs:
            if not isinstance(w, int) or not (0 <= w < n):
                raise NonSimple(f"vertex {v}: unknown neighbor {w!r}")
            if w == v:
                raise NonSimple(f"loop at vertex {v}")
        if len(set(nbrs)) != len(nbrs):
            raise NonSimple(f"parallel edge at vertex {v}")
        neighbor_sets[v] = set(nbrs)
    for v, nbrs in neighbor_sets.items():
        for w in nbrs:
            if v not in neighbor_sets[w]:
                raise NonSimple(f"edge {v}-{w} listed at only one endpoint")

    pairs = sorted({_pair(v, w) for v, nbrs in neighbor_sets.items() for w in nbrs})
    eid = {p: i for i, p in enumerate(pairs)}
    edges = {i: p for i, p in enumerate(pairs)}

    rot = {}
    for v in range(n):
        hs = []
        for w in items[v]:
            e = eid[_pair(v, w)]
            hs.append(2 * e if edges[e][0] == v else 2 * e + 1)
        rot[v] = hs

    walks, face_of = _trace(rot, edges)
    if n - len(edges) + len(walks) != 2:
        raise NonPlanarEmbedding(
            f"V-E+F = {n}-{len(edges)}+{len(walks)} != 2 "
            "(rotation is disconnected or not plane)"
        )

    faces = {i: w for i, w in enumerate(walks)}

    def walk_vertices(w):
        return tuple(edges[h >> 1][h & 1] for h in w)

    if outer is None:
        best = None
        for f, w in faces.items():
            key = (-len(w), min(walk_vertices(w)), f)
            if best is None or key < best[0]:
                best = (key, f)
        outer_id = best[1]
    elif isinstance(outer, tuple) and len(outer) == 2 and all(isinstance(x, int) for x in outer):
        u, v = outer
        if _pair(u, v) not in eid:
            raise BadOuterHint(f"no edge {u}-{v}")
        e = eid[_pair(u, v)]
        h = 2 * e if edges[e][0] == u else 2 * e + 1
        outer_id = face_of[h]
    else:
        hint = list(outer)
        if len(hint) >= 2 and hint[0] == hint[-1]:
            hint = hint[:-1]
        if len(hint) < 3:
            raise BadOuterHint("outer walk needs at least 3 vertices")
        matches = [f for f, w in faces.items() if _match_walk(walk_vertices(w), hint)]
        if not matches:
            raise BadOuterHint(f"no face matches walk {hint}")
        outer_id = min(matches)

    sgn = {e: POSITIVE for e in edges}
    if signs:
        for key, s in signs.items():
            u, v = key
            p = _pair(u, v)
            if p not in eid:
                raise UnknownEdge(f"sign given for missing edge {u}-{v}")
            if s not in (POSITIVE, NEGATIVE):
                raise ValueError(f"not a sign: {s!r}")
            sgn[eid[p]] = s

    return PlaneSignedGraph._from_parts(n, edges, sgn, eid, rot, faces, face_of, outer_id)


def trace_faces(graph):
    """All face walks of the graph, one FaceWalk per face, sorted by id."""
    return [FaceWalk(f, graph.face_walk(f)) for f in graph.face_ids()]


def circle_vertex_order(graph, edges):
    """Canonical vertex order of a circle: start at the smallest vertex and
    move toward its smaller neighbor."""
    adj = {}
    for e in edges:
        u, v = graph.endpoints(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    nxt = min(adj[start])
    order = [start, nxt]
    while True:
        a, b = order[-2], order[-1]
        c = adj[b][0] if adj[b][0] != a else adj[b][1]
        if c == start:
            break
        order.append(c)
    return tuple(order)


def make_circle(graph, edges):
    """Circle with canonical vertex order; raises NotACircle when malformed."""
    edges = frozenset(edges)
    if not graph.is_circle(edges):
        raise NotACircle(f"{sorted(edges)} is not a simple closed cycle")
    return Circle(edges, circle_vertex_order(graph, edges))


def circle_from_vertices(graph, order):
    """Circle through the given vertex sequence (consecutive pairs must be edges)."""
    order = list(order)
    if len(order) >= 2 and order[0] == order[-1]:
        order = order[:-1]
    if len(order) < 3:
        raise NotACircle("a circle needs at least 3 vertices")
    edges = []
    for a, b in zip(order, order[1:] + order[:1]):
        edges.append(graph.edge_id(a, b))
    circle = Circle(edges, order)
    if not graph.is_circle(circle.edges):
        raise NotACircle("vertex sequence does not form a simple cycle")
    return circle


def rotations_from_points(points, edge_pairs):
    """Counterclockwise rotations of a straight-line drawing.

    points: mapping vertex -> (x, y); edge_pairs: iterable of endpoint
    pairs.  Neighbors are sorted by angle around each vertex.
    """
    nbrs = {v: [] for v in points}
    for u, v in edge_pairs:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = {}
    for v, ws in nbrs.items():
        x0, y0 = points[v]
        rot[v] = sorted(ws, key=lambda w: math.atan2(points[w][1] - y0, points[w][0] - x0))
    return rot
