"""Brute-force Hamiltonian circle enumeration, plus the sign census and the
opposite-sign criterion.

Two independent enumerators are kept deliberately separate: the primary
oracle decides edges in ascending id order (include before exclude, so
results come out in ascending lexicographic order of their sorted edge-id
tuples) with degree-2 forcing, premature-cycle prevention and a
disconnection prune; the secondary one grows vertex walks and exists only
to cross-check the first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dual import face_set_boundary, face_signs
from .embedding import Circle, POSITIVE, circle_vertex_order
from .errors import BadSymmetricDifference, InvalidSet, NoHamiltonianCircle

DEFAULT_LIMIT = 10**6


@dataclass(frozen=True)
class Enumeration:
    circles: tuple
    truncated: bool

    def __iter__(self):
        return iter(self.circles)

    def __len__(self):
        return len(self.circles)


def enumerate_hamiltonian(graph, limit=DEFAULT_LIMIT):
    """All Hamiltonian circles, deduplicated by edge set, deterministic.

    Soft limit: when more than ``limit`` circles exist the result carries
    ``truncated=True`` with the first ``limit`` found.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    n = graph.vertex_count
    if n < 3:
        return Enumeration((), False)
    eids = graph.edge_ids()
    m = len(eids)
    endpoints = [graph.endpoints(e) for e in eids]
    inc = [[] for _ in range(n)]
    for k, (u, v) in enumerate(endpoints):
        inc[u].append(k)
        inc[v].append(k)
    if any(len(a) < 2 for a in inc):
        return Enumeration((), False)

    chosen_deg = [0] * n
    avail_deg = [len(a) for a in inc]
    status = [0] * m  # 0 undecided, 1 in, 2 out
    parent = list(range(n))
    size = [1] * n
    chosen = []
    found = []
    state = {"truncated": False}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def connected_over_live():
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for k2 in inc[x]:
                if status[k2] == 2:
                    continue
                a, b = endpoints[k2]
                y = b if a == x else a
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        return count == n

    def decide(k):
        if state["truncated"] or k == m:
            return
        u, v = endpoints[k]
        cu, cv = chosen_deg[u], chosen_deg[v]
        if cu < 2 and cv < 2:
            ru, rv = find(u), find(v)
            if ru == rv:
                if len(chosen) + 1 == n:
                    found.append(frozenset(eids[i] for i in chosen) | {eids[k]})
                    if limit is not None and len(found) >= limit:
                        state["truncated"] = True
                        return
                # a premature cycle otherwise: include branch dies either way
            else:
                chosen_deg[u] = cu + 1
                chosen_deg[v] = cv + 1
                avail_deg[u] -= 1
                avail_deg[v] -= 1
                status[k] = 1
                chosen.append(k)
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
                decide(k + 1)
                size[ru] -= size[rv]
                parent[rv] = rv
                chosen.pop()
                status[k] = 0
                avail_deg[u] += 1
                avail_deg[v] += 1
                chosen_deg[u] = cu
                chosen_deg[v] = cv
        if state["truncated"]:
            return
        # exclude branch, unless an endpoint needs every remaining edge
        if cu + avail_deg[u] - 1 >= 2 and cv + avail_deg[v] - 1 >= 2:
            avail_deg[u] -= 1
            avail_deg[v] -= 1
            status[k] = 2
            if connected_over_live():
                decide(k + 1)
            status[k] = 0
            avail_deg[u] += 1
            avail_deg[v] += 1

    decide(0)
    circles = tuple(Circle(es, circle_vertex_order(graph, es)) for es in found)
    return Enumeration(circles, state["truncated"])


def enumerate_hamiltonian_by_walks(graph):
    """Independent recount: extend vertex walks from vertex 0 in neighbor
    order and close them; each circle is found once (direction fixed by
    path[1] < path[-1]).  Returns edge sets sorted canonically."""
    n = graph.vertex_count
    if n < 3:
        return []
    adj = {v: sorted(graph.rotation(v)) for v in graph.vertices()}
    adj_set = {v: set(ws) for v, ws in adj.items()}
    found = []
    path = [0]
    used = [False] * n
    used[0] = True

    def extend(cur):
        if len(path) == n:
            if 0 in adj_set[cur] and path[1] < path[-1]:
                found.append(
                    frozenset(graph.edge_id(a, b) for a, b in zip(path, path[1:] + [0]))
                )
            return
        for w in adj[cur]:
            if not used[w]:
                used[w] = True
                path.append(w)
                extend(w)
                path.pop()
                used[w] = False

    extend(0)
    return sorted(found, key=sorted)


@dataclass(frozen=True)
class SignCensus:
    """Counts of positive and negative Hamiltonian circles with up to one
    witness per sign (the first found in enumeration order)."""

    positives: int
    negatives: int
    witness_positive: Circle | None
    witness_negative: Circle | None
    truncated: bool = False

    @property
    def total(self):
        return self.positives + self.negatives

    def both_signs(self):
        return self.positives > 0 and self.negatives > 0


def sign_census(graph, limit=DEFAULT_LIMIT):
    enum = enumerate_hamiltonian(graph, limit)
    pos = neg = 0
    wp = wn = None
    for c in enum.circles:
        if graph.circle_sign(c) == POSITIVE:
            pos += 1
            if wp is None:
                wp = c
        else:
            neg += 1
            if wn is None:
                wn = c
    return SignCensus(pos, neg, wp, wn, enum.truncated)


def opposite_sign_witness(graph, limit=DEFAULT_LIMIT):
    """Two co-Hamiltonian sequences with opposite face-sign products, or
    None when every Hamiltonian circle has the same sign.

    Realizes the criterion constructively: peel one sequence from a
    positive witness circle and one from a negative witness.
    """
    census = sign_census(graph, limit)
    if census.total == 0:
        raise NoHamiltonianCircle("graph has no Hamiltonian circle")
    if not census.both_signs():
        return None
    from .peeling import coham_from_circle

    seq_pos = coham_from_circle(graph, census.witness_positive)
    seq_neg = coham_from_circle(graph, census.witness_negative)
    return (seq_pos, seq_neg)


def _faces_and_circle(graph, ham):
    from .peeling import HamiltonianSet

    if isinstance(ham, HamiltonianSet):
        return ham.faces, ham.circle.edges
    faces = frozenset(ham)
    boundary = face_set_boundary(graph, faces)
    if not graph.is_hamiltonian_circle(boundary):
        raise InvalidSet(f"faces {sorted(faces)} do not determine a Hamiltonian circle")
    return faces, boundary


def symmetric_difference_sign_check(graph, ham1, ham2):
    """For two Hamiltonian sets differing by one face on each side, test
    the biconditional: equal circle signs iff the swapped faces have equal
    signs.  Circle signs are taken from edge products, so this genuinely
    exercises the face/edge sign correspondence; it always holds."""
    faces1, circle1 = _faces_and_circle(graph, ham1)
    faces2, circle2 = _faces_and_circle(graph, ham2)
    only1 = faces1 - faces2
    only2 = faces2 - faces1
    if len(only1) != 1 or len(only2) != 1:
        raise BadSymmetricDifference(
            f"symmetric difference has {len(only1)}+{len(only2)} faces, need 1+1"
        )
    (a,) = only1
    (b,) = only2
    signs = face_signs(graph)
    s1 = graph.edge_set_sign(circle1)
    s2 = graph.edge_set_sign(circle2)
    return (s1 == s2) == (signs[a] == signs[b])
