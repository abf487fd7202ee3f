import itertools
import random

import pytest

import planesign as ps
from planesign.errors import BadDimensions, BadPreconditions, OutOfRange

from graphs import mixed_trigrid


def test_build_grid_counts():
    cases = {(3, 4): (12, 17, 6), (2, 2): (4, 4, 1), (4, 6): (24, 38, 15), (5, 6): (30, 49, 20)}
    for (m, n), (nv, ne, nb) in cases.items():
        grid = ps.build_grid(ps.GridSpec(m, n))
        assert grid.graph.vertex_count == nv == m * n
        assert grid.graph.edge_count == ne == m * (n - 1) + n * (m - 1)
        assert len(grid.graph.bounded_faces()) == nb == (m - 1) * (n - 1)
        assert sorted(grid.box_faces) == ps.boxes(m, n)


def test_grid_label_maps():
    grid = ps.build_grid(ps.GridSpec(4, 6))
    assert grid.vertex(1, 1) == 0
    assert grid.vertex(4, 6) == 23
    u, v = grid.graph.endpoints(grid.edge(("h", 2, 3)))
    assert {u, v} == {grid.vertex(2, 3), grid.vertex(2, 4)}
    u, v = grid.graph.endpoints(grid.edge(("v", 3, 1)))
    assert {u, v} == {grid.vertex(3, 1), grid.vertex(4, 1)}
    face = grid.box_face((2, 5))
    corners = {grid.vertex(2, 5), grid.vertex(2, 6), grid.vertex(3, 5), grid.vertex(3, 6)}
    assert set(grid.graph.face_vertices(face)) == corners


def test_bad_dimensions():
    with pytest.raises(BadDimensions):
        ps.GridSpec(1, 5)
    with pytest.raises(BadDimensions):
        ps.GridSpec(3, 1)
    with pytest.raises(BadDimensions):
        ps.parity_obstruction(1, 4)


def test_signing_out_of_range():
    with pytest.raises(OutOfRange):
        ps.GridSpec(3, 3, {("h", 3, 3): ps.NEGATIVE})
    with pytest.raises(OutOfRange):
        ps.GridSpec(3, 3, {("v", 3, 1): ps.NEGATIVE})


def test_box_sign():
    spec = ps.GridSpec(3, 4)
    assert ps.box_sign(spec, (1, 1)) == ps.POSITIVE
    one = ps.GridSpec(3, 4, {("h", 1, 2): ps.NEGATIVE})
    assert ps.box_sign(one, (1, 2)) == ps.NEGATIVE
    two = ps.GridSpec(3, 4, {("h", 1, 2): ps.NEGATIVE, ("v", 1, 2): ps.NEGATIVE})
    assert ps.box_sign(two, (1, 2)) == ps.POSITIVE
    with pytest.raises(OutOfRange):
        ps.box_sign(spec, (3, 1))


def test_box_signs_match_face_signs():
    rng = random.Random(13)
    for _ in range(20):
        labels = [("h", i, j) for i in range(1, 5) for j in range(1, 5)]
        labels += [("v", i, j) for i in range(1, 4) for j in range(1, 6)]
        signing = {lab: rng.choice((ps.POSITIVE, ps.NEGATIVE)) for lab in labels}
        spec = ps.GridSpec(4, 5, signing)
        grid = ps.build_grid(spec)
        fs = ps.face_signs(grid.graph)
        for box in ps.boxes(4, 5):
            assert fs[grid.box_face(box)] == ps.box_sign(spec, box)


def test_triangulated_grid_counts():
    for m, n in [(2, 2), (3, 3), (4, 4), (2, 4)]:
        grid = ps.build_triangulated_grid(ps.GridSpec(m, n))
        faces = grid.graph.bounded_faces()
        assert len(faces) == 2 * (m - 1) * (n - 1)
        assert all(len(grid.graph.face_walk(f)) == 3 for f in faces)


def test_triangulated_grid_mixed_diagonals():
    grid = mixed_trigrid()
    assert len(grid.graph.bounded_faces()) == 8
    # the flipped box holds the anti-diagonal, the others the main one
    assert grid.graph.has_edge(grid.vertex(2, 1), grid.vertex(1, 2))
    assert grid.graph.has_edge(grid.vertex(1, 2), grid.vertex(2, 3))
    assert grid.graph.has_edge(grid.vertex(2, 1), grid.vertex(3, 2))
    assert grid.graph.has_edge(grid.vertex(2, 2), grid.vertex(3, 3))


def test_triangulated_grid_unique_circle_after_boundary_deletion():
    grid = mixed_trigrid()
    g = grid.graph.delete_edge(grid.edge(("h", 3, 2))).graph
    assert len(ps.enumerate_hamiltonian(g).circles) == 1


def test_triangulated_all_same_direction_2x2():
    grid = ps.build_triangulated_grid(ps.GridSpec(2, 2), "/")
    assert len(grid.graph.bounded_faces()) == 2


def test_parity_obstruction_truth_table():
    assert ps.parity_obstruction(3, 3)
    assert ps.parity_obstruction(5, 5)
    assert ps.parity_obstruction(3, 7)
    assert not ps.parity_obstruction(4, 9)
    assert not ps.parity_obstruction(2, 3)


def test_parity_obstruction_oracle_agreement():
    for m, n in [(3, 3), (3, 5), (5, 3), (5, 5)]:
        g = ps.build_grid(ps.GridSpec(m, n)).graph
        assert ps.parity_obstruction(m, n)
        assert len(ps.enumerate_hamiltonian(g).circles) == 0


def test_signing_for_box_pattern_exact_on_all_4x4_patterns():
    all_boxes = ps.boxes(4, 4)
    rng = random.Random(41)
    patterns = [dict(zip(all_boxes, combo))
                for combo in itertools.product((ps.POSITIVE, ps.NEGATIVE), repeat=9)]
    for pattern in rng.sample(patterns, 40):
        signing = ps.signing_for_box_pattern(4, 4, pattern)
        spec = ps.GridSpec(4, 4, signing)
        for box in all_boxes:
            assert ps.box_sign(spec, box) == pattern[box]


def test_signing_for_box_pattern_out_of_range():
    with pytest.raises(OutOfRange):
        ps.signing_for_box_pattern(3, 3, {(3, 3): ps.NEGATIVE})


def test_all_same_sign_decision_preconditions():
    with pytest.raises(BadPreconditions):
        ps.all_same_sign_decision(ps.GridSpec(5, 4))  # m odd
    with pytest.raises(BadPreconditions):
        ps.all_same_sign_decision(ps.GridSpec(4, 3))  # n too small
    with pytest.raises(BadPreconditions):
        ps.all_same_sign_decision(ps.GridSpec(2, 6))  # m too small


def test_all_same_sign_decision_basics():
    assert ps.all_same_sign_decision(ps.GridSpec(4, 4))
    # a corner box flip is invisible to the decision
    corner = ps.signing_for_box_pattern(4, 4, {(1, 1): ps.NEGATIVE})
    assert ps.all_same_sign_decision(ps.GridSpec(4, 4, corner))
    # a non-corner flip is not
    middle = ps.signing_for_box_pattern(4, 4, {(1, 2): ps.NEGATIVE})
    assert not ps.all_same_sign_decision(ps.GridSpec(4, 4, middle))


def test_all_same_sign_decision_against_oracle_spot_checks():
    base = ps.build_grid(ps.GridSpec(4, 4))
    circles = ps.enumerate_hamiltonian(base.graph).circles
    cases = [
        ({}, True),
        ({(1, 1): ps.NEGATIVE}, True),  # corner exclusion is sharp
        ({(1, 2): ps.NEGATIVE}, False),
        ({(2, 2): ps.NEGATIVE}, False),
        ({b: ps.NEGATIVE for b in ps.boxes(4, 4) if not ps.is_corner_box(4, 4, b)}, True),
    ]
    for pattern, expected in cases:
        signing = ps.signing_for_box_pattern(4, 4, pattern)
        spec = ps.GridSpec(4, 4, signing)
        assert ps.all_same_sign_decision(spec) == expected
        g = ps.build_grid(spec).graph
        signs = {g.circle_sign(c) for c in circles}
        assert (len(signs) == 1) == expected


def test_swapped_decision_is_exposed_but_marked_experimental():
    spec = ps.GridSpec(5, 4)
    assert ps.all_same_sign_decision(spec, experimental_swapped=True) is True
    with pytest.raises(BadPreconditions):
        ps.all_same_sign_decision(spec)


def test_corner_box_predicate():
    assert ps.is_corner_box(4, 4, (1, 1))
    assert ps.is_corner_box(4, 4, (3, 3))
    assert not ps.is_corner_box(4, 4, (2, 2))
    assert not ps.is_corner_box(4, 4, (1, 2))
