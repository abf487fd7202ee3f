"""Local configurations that certify Hamiltonian circles of both signs.

Two configurations are supported: a ladder whose top and bottom 4-circles
have opposite signs, and a hexagon crossed by an internal path whose two
bounding circles have opposite signs.  Both work the same way: an explicit
Hamiltonian circle is written down, then toggled (edge-set symmetric
difference) along the two circles, which multiplies the sign by their
product.  Configurations are supplied, not detected; every setup clause is
validated and the first violated clause is named.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import Circle, POSITIVE, circle_from_vertices, make_circle
from .errors import InvalidConfig, NotHamiltonian, NotHamiltonianAfterToggle


@dataclass(frozen=True)
class ToggleResult:
    """New circle plus the factor linking old and new signs."""

    circle: Circle
    sign_relation: int


def toggle(graph, circle, cycles):
    """Replace a Hamiltonian circle's edge set by its symmetric difference
    with the given cycles.

    The result must again be spanning, 2-regular and connected; its sign
    is the old sign times the product of the cycle signs."""
    base = circle.edges if isinstance(circle, Circle) else frozenset(circle)
    if not graph.is_hamiltonian_circle(base):
        raise NotHamiltonian("toggle base is not a Hamiltonian circle")
    relation = POSITIVE
    result = set(base)
    for cyc in cycles:
        edges = cyc.edges if isinstance(cyc, Circle) else frozenset(cyc)
        relation *= graph.circle_sign(edges)
        result ^= edges
    if not graph.is_hamiltonian_circle(result):
        raise NotHamiltonianAfterToggle(
            "toggled edge set is not a spanning simple cycle"
        )
    return ToggleResult(make_circle(graph, result), relation)


def _check_edge(graph, u, v, clause):
    if not graph.has_edge(u, v):
        raise InvalidConfig(f"{clause}: missing edge {u}-{v}")
    return graph.edge_id(u, v)


def _path_edges(graph, vertices, clause):
    return [_check_edge(graph, a, b, clause) for a, b in zip(vertices, vertices[1:])]


def _disk_interior_empty(graph, circle, clause):
    inside = graph.enclosed_faces(circle.edges)
    on_circle = set(circle.order)
    for f in inside:
        extra = set(graph.face_vertices(f)) - on_circle
        if extra:
            raise InvalidConfig(f"{clause}: vertices {sorted(extra)} inside the disk")


def _release(graph, release_edges, clause):
    g = graph
    for e in sorted(release_edges):
        if e not in g.edge_ids():
            raise InvalidConfig(f"{clause}: release edge {e} does not exist")
        fa, fb = g.faces_of_edge(e)
        if fa == fb:
            raise InvalidConfig(f"{clause}: release edge {e} is a bridge")
        g = g.delete_edge(e).graph
    if not g.is_two_connected():
        raise InvalidConfig(f"{clause}: released graph is not 2-connected")
    return g


@dataclass(frozen=True)
class LadderConfig:
    """A ladder: central circle v_1..v_s bounding an empty disk, with a
    pivot splitting it into a top 4-circle v_1 v_2 v_3 v_s and a bottom
    4-circle v_{i-1} v_i v_{i+1} v_{i+2}, plus the two boundary chains.

    circle: the cyclic vertex order, v_1 first.  pivot: 0-based position
    of v_i in ``circle`` (the subscript i, counted from 1, is pivot + 1).
    p_chain runs from the neighbor of v_1 to the neighbor of v_{i+1};
    q_chain from the neighbor of v_2 to the neighbor of v_i.
    """

    circle: tuple
    pivot: int
    p_chain: tuple
    q_chain: tuple
    release_left: frozenset = field(default_factory=frozenset)
    release_right: frozenset = field(default_factory=frozenset)

    def role(self, offset):
        return self.circle[offset]


def _ladder_roles(cfg):
    s = len(cfg.circle)
    piv = cfg.pivot
    c = cfg.circle
    return {
        "v1": c[0],
        "v2": c[1],
        "v3": c[2],
        "vs": c[s - 1],
        "vim1": c[piv - 1],
        "vi": c[piv],
        "vip1": c[piv + 1],
        "vip2": c[piv + 2],
    }


def validate_ladder(graph, cfg):
    """Check every ladder hypothesis; raises InvalidConfig naming the
    first violated clause.  Returns (C, C1, C2, protected-left edges)."""
    c = cfg.circle
    s = len(c)
    if s < 6:
        raise InvalidConfig("circle: need at least 6 vertices on the central circle")
    if len(set(c)) != s:
        raise InvalidConfig("circle: repeated vertex")
    if not (3 <= cfg.pivot <= s - 3):
        raise InvalidConfig("circle: pivot must leave v_3 before it and v_s after it")
    circle = circle_from_vertices(graph, list(c))

    roles = _ladder_roles(cfg)
    chord_top = _check_edge(graph, roles["v3"], roles["vs"], "chords")
    chord_bottom = _check_edge(graph, roles["vim1"], roles["vip2"], "chords")
    c1 = circle_from_vertices(graph, [roles["v1"], roles["v2"], roles["v3"], roles["vs"]])
    c2 = circle_from_vertices(
        graph, [roles["vim1"], roles["vi"], roles["vip1"], roles["vip2"]]
    )

    _disk_interior_empty(graph, circle, "disk")

    p, q = cfg.p_chain, cfg.q_chain
    if not p or not q:
        raise InvalidConfig("chains: both chains must be nonempty")
    names = list(c) + list(p) + list(q)
    if len(set(names)) != len(names):
        raise InvalidConfig("chains: chain vertices overlap the circle or each other")
    chain_edges = _path_edges(graph, p, "chains") + _path_edges(graph, q, "chains")
    connectors = [
        _check_edge(graph, p[0], roles["v1"], "chains"),
        _check_edge(graph, p[-1], roles["vip1"], "chains"),
        _check_edge(graph, q[0], roles["v2"], "chains"),
        _check_edge(graph, q[-1], roles["vi"], "chains"),
    ]

    if set(names) != set(graph.vertices()):
        missing = sorted(set(graph.vertices()) - set(names))
        raise InvalidConfig(f"coverage: vertices {missing} play no role")

    # protected boundary paths: p_1 v_1 v_s ... v_{i+1} p_k and q_1 v_2 ... v_i q_r
    left_path = [p[0], roles["v1"]] + [c[t] for t in range(s - 1, cfg.pivot, -1)] + [p[-1]]
    right_path = [q[0]] + [c[t] for t in range(1, cfg.pivot + 1)] + [q[-1]]
    protected_left = set(_path_edges(graph, left_path, "protected"))
    protected_right = set(_path_edges(graph, right_path, "protected"))
    if cfg.release_left & protected_left:
        raise InvalidConfig("release-protected: release set deletes a protected left edge")
    if cfg.release_right & protected_right:
        raise InvalidConfig("release-protected: release set deletes a protected right edge")
    required = (
        set(circle.edges)
        | {chord_top, chord_bottom}
        | set(chain_edges)
        | set(connectors)
    )
    clash = (cfg.release_left | cfg.release_right) & required
    if clash:
        raise InvalidConfig(f"release-required: release deletes required edges {sorted(clash)}")

    released = _release(graph, cfg.release_left | cfg.release_right, "release")
    stuck = released.classify_vertices().interior - set(c)
    if stuck:
        raise InvalidConfig(f"release: vertices {sorted(stuck)} stay interior after release")
    return circle, c1, c2


def certify_ladder(graph, cfg):
    """When the two 4-circles have opposite signs, return two Hamiltonian
    circles of opposite sign (the explicit circle and its toggle); None
    when the signs agree."""
    _, c1, c2 = validate_ladder(graph, cfg)
    if graph.circle_sign(c1) == graph.circle_sign(c2):
        return None
    c = cfg.circle
    s = len(c)
    piv = cfg.pivot
    roles = _ladder_roles(cfg)
    order = (
        [roles["v1"]]
        + [c[t] for t in range(s - 1, piv + 1, -1)]
        + [c[t] for t in range(piv - 1, 0, -1)]
        + list(cfg.q_chain)
        + [roles["vi"], roles["vip1"]]
        + list(reversed(cfg.p_chain))
    )
    h1 = circle_from_vertices(graph, order)
    if len(h1.order) != graph.vertex_count:
        raise InvalidConfig("coverage: explicit circle is not spanning")
    h2 = toggle(graph, h1, [c1, c2]).circle
    return (h1, h2)


@dataclass(frozen=True)
class HexConfig:
    """A hexagon v_1 v_2 r_t v_3 v_4 r_1 whose interior vertices all lie on
    the internal path r_1..r_t (possibly a single vertex), plus the two
    boundary chains: p_chain from the neighbor of v_1 to the neighbor of
    v_4, q_chain from the neighbor of v_2 to the neighbor of v_3."""

    corners: tuple  # (v1, v2, v3, v4)
    inner_path: tuple  # (r1, ..., rt), t >= 1
    p_chain: tuple
    q_chain: tuple
    release_left: frozenset = field(default_factory=frozenset)
    release_right: frozenset = field(default_factory=frozenset)


def validate_hexagon(graph, cfg):
    """Check every hexagon hypothesis; raises InvalidConfig naming the
    first violated clause.  Returns (C1, C2)."""
    v1, v2, v3, v4 = cfg.corners
    r = cfg.inner_path
    p, q = cfg.p_chain, cfg.q_chain
    if len(r) < 1:
        raise InvalidConfig("roles: inner path needs at least one vertex")
    if not p or not q:
        raise InvalidConfig("roles: both chains must be nonempty")
    names = list(cfg.corners) + list(r) + list(p) + list(q)
    if len(set(names)) != len(names):
        raise InvalidConfig("roles: vertex roles overlap")

    hex_edges = [
        _check_edge(graph, v1, v2, "hexagon"),
        _check_edge(graph, v2, r[-1], "hexagon"),
        _check_edge(graph, r[-1], v3, "hexagon"),
        _check_edge(graph, v3, v4, "hexagon"),
        _check_edge(graph, v4, r[0], "hexagon"),
        _check_edge(graph, r[0], v1, "hexagon"),
    ]
    path_edges = _path_edges(graph, r, "inner-path")
    chain_edges = _path_edges(graph, p, "chains") + _path_edges(graph, q, "chains")
    connectors = [
        _check_edge(graph, p[0], v1, "chains"),
        _check_edge(graph, p[-1], v4, "chains"),
        _check_edge(graph, q[0], v2, "chains"),
        _check_edge(graph, q[-1], v3, "chains"),
    ]

    fixed = {
        graph.edge_id(p[0], v1),
        graph.edge_id(v1, r[0]),
        graph.edge_id(r[0], v4),
        graph.edge_id(v4, p[-1]),
    }
    if cfg.release_left & fixed:
        raise InvalidConfig("fixed: release set deletes a fixed edge")
    required = set(hex_edges) | set(path_edges) | set(chain_edges) | set(connectors)
    clash = (cfg.release_left | cfg.release_right) & required
    if clash:
        raise InvalidConfig(f"release-required: release deletes required edges {sorted(clash)}")

    if len(r) >= 2:
        hexagon = circle_from_vertices(graph, [v1, v2, r[-1], v3, v4, r[0]])
        inside = graph.enclosed_faces(hexagon.edges)
        interior = set()
        for f in inside:
            interior |= set(graph.face_vertices(f))
        interior -= set(hexagon.order)
        if interior != set(r[1:-1]):
            raise InvalidConfig(
                f"interior: hexagon interior is {sorted(interior)}, expected {sorted(r[1:-1])}"
            )
    else:
        for tri in ([v1, v2, r[0]], [r[0], v3, v4]):
            _disk_interior_empty(graph, circle_from_vertices(graph, tri), "interior")

    if set(names) != set(graph.vertices()):
        missing = sorted(set(graph.vertices()) - set(names))
        raise InvalidConfig(f"coverage: vertices {missing} play no role")

    released = _release(graph, cfg.release_left | cfg.release_right, "release")
    stuck = released.classify_vertices().interior - set(r)
    if stuck:
        raise InvalidConfig(f"release: vertices {sorted(stuck)} stay interior after release")

    c1 = circle_from_vertices(graph, [v1, v2] + list(reversed(r)))
    c2 = circle_from_vertices(graph, [v3, v4] + list(r))
    return c1, c2


def certify_hexagon(graph, cfg):
    """When the two circles through the internal path have opposite signs,
    return two Hamiltonian circles of opposite sign; None otherwise."""
    c1, c2 = validate_hexagon(graph, cfg)
    if graph.circle_sign(c1) == graph.circle_sign(c2):
        return None
    v1, v2, v3, v4 = cfg.corners
    order = (
        [v1, v2]
        + list(cfg.q_chain)
        + [v3]
        + list(reversed(cfg.inner_path))
        + [v4]
        + list(reversed(cfg.p_chain))
    )
    h1 = circle_from_vertices(graph, order)
    if len(h1.order) != graph.vertex_count:
        raise InvalidConfig("coverage: explicit circle is not spanning")
    h2 = toggle(graph, h1, [c1, c2]).circle
    return (h1, h2)


def greedy_release(graph, protected_edges, target_vertices):
    """Greedy release-set search: repeatedly delete the smallest
    unprotected outer edge that keeps the graph 2-connected, until every
    target vertex is exterior.  Returns the deleted edge set, or None if
    the greedy order gets stuck (which proves nothing)."""
    protected = frozenset(protected_edges)
    targets = frozenset(target_vertices)
    g = graph
    removed = []
    while True:
        if targets <= g.classify_vertices().exterior:
            return frozenset(removed)
        progress = False
        for e in sorted(set(g.outer_edges()) - protected - set(removed)):
            fa, fb = g.faces_of_edge(e)
            if fa == fb:
                continue
            attempt = g.delete_edge(e)
            if attempt.graph.is_two_connected():
                g = attempt.graph
                removed.append(e)
                progress = True
                break
        if not progress:
            return None
