import itertools
import random

import pytest

import planesign as ps
from planesign.errors import BadSymmetricDifference, NoHamiltonianCircle

from graphs import small_fixture_graphs


def brute_force_by_permutations(graph):
    """Third, dumbest route: filter raw vertex permutations.  Only usable
    on tiny graphs."""
    n = graph.vertex_count
    found = set()
    for perm in itertools.permutations(range(1, n)):
        order = (0,) + perm
        if all(graph.has_edge(a, b) for a, b in zip(order, order[1:] + order[:1])):
            found.add(frozenset(graph.edge_id(a, b) for a, b in zip(order, order[1:] + order[:1])))
    return sorted(found, key=sorted)


def test_oracle_matches_walk_enumerator_on_fixture_set():
    for name, g in small_fixture_graphs().items():
        assert g.vertex_count <= 12, name
        enum = ps.enumerate_hamiltonian(g)
        assert not enum.truncated
        assert sorted((c.edges for c in enum.circles), key=sorted) == ps.enumerate_hamiltonian_by_walks(g), name


def test_oracle_matches_raw_permutations_on_tiny_graphs():
    fixtures = small_fixture_graphs()
    for name in ("square", "square_chord", "hexagon_chord", "fan", "grid_2x4"):
        g = fixtures[name]
        got = sorted((c.edges for c in ps.enumerate_hamiltonian(g).circles), key=sorted)
        assert got == brute_force_by_permutations(g), name


def test_known_grid_circle_counts():
    # golden values, frozen after the two independent enumerators agreed
    expected = {(2, 2): 1, (2, 6): 1, (3, 3): 0, (3, 4): 2, (3, 5): 0, (4, 4): 6, (4, 5): 14, (4, 6): 37}
    for (m, n), count in expected.items():
        g = ps.build_grid(ps.GridSpec(m, n)).graph
        assert len(ps.enumerate_hamiltonian(g).circles) == count, (m, n)


def test_oracle_deterministic_order():
    g = ps.build_grid(ps.GridSpec(4, 4)).graph
    a = ps.enumerate_hamiltonian(g)
    b = ps.enumerate_hamiltonian(g)
    assert [c.edges for c in a.circles] == [c.edges for c in b.circles]
    assert [c.order for c in a.circles] == [c.order for c in b.circles]
    # ascending lexicographic order of the sorted edge-id tuples
    keys = [tuple(sorted(c.edges)) for c in a.circles]
    assert keys == sorted(keys)


def test_limit_soft_overflow():
    g = ps.build_grid(ps.GridSpec(4, 4)).graph
    enum = ps.enumerate_hamiltonian(g, limit=2)
    assert enum.truncated
    assert len(enum.circles) == 2
    full = ps.enumerate_hamiltonian(g)
    assert [c.edges for c in enum.circles] == [c.edges for c in full.circles[:2]]


def test_sign_census_all_positive():
    g = ps.build_grid(ps.GridSpec(4, 4)).graph
    census = ps.sign_census(g)
    assert census.positives == 6 and census.negatives == 0
    assert census.witness_negative is None
    assert census.witness_positive is not None


def test_sign_census_no_circles():
    g = ps.build_grid(ps.GridSpec(3, 3)).graph
    census = ps.sign_census(g)
    assert (census.positives, census.negatives) == (0, 0)
    assert census.witness_positive is None and census.witness_negative is None


def test_sign_census_mixed_signs():
    # one negative edge on a non-corner box of a 4x5 grid bottom row:
    # circles through and around it get different signs
    grid = ps.build_grid(ps.GridSpec(4, 5, {("h", 1, 2): ps.NEGATIVE}))
    census = ps.sign_census(grid.graph)
    assert census.both_signs()
    assert census.positives + census.negatives == 14
    assert grid.graph.circle_sign(census.witness_positive) == ps.POSITIVE
    assert grid.graph.circle_sign(census.witness_negative) == ps.NEGATIVE


def test_census_counts_match_manual_signs():
    rng = random.Random(19)
    base = ps.build_grid(ps.GridSpec(4, 4)).graph
    for _ in range(20):
        g = ps.random_signing(rng, base)
        circles = ps.enumerate_hamiltonian(g).circles
        census = ps.sign_census(g)
        pos = sum(1 for c in circles if g.circle_sign(c) == ps.POSITIVE)
        assert census.positives == pos
        assert census.negatives == len(circles) - pos


def test_opposite_sign_witness_none_for_all_positive():
    g = ps.build_grid(ps.GridSpec(4, 4)).graph
    assert ps.opposite_sign_witness(g) is None


def test_opposite_sign_witness_none_for_unique_circle():
    g = ps.build_grid(ps.GridSpec(2, 4, {("h", 1, 2): ps.NEGATIVE})).graph
    assert ps.opposite_sign_witness(g) is None


def test_opposite_sign_witness_errors_without_circles():
    g = ps.build_grid(ps.GridSpec(3, 3)).graph
    with pytest.raises(NoHamiltonianCircle):
        ps.opposite_sign_witness(g)


def test_opposite_sign_witness_products_oppose():
    grid = ps.build_grid(ps.GridSpec(4, 5, {("h", 1, 2): ps.NEGATIVE}))
    g = grid.graph
    pair = ps.opposite_sign_witness(g)
    assert pair is not None
    signs = ps.face_signs(g)
    products = []
    for seq in pair:
        p = ps.POSITIVE
        for f in seq.faces:
            p *= signs[f]
        products.append(p)
        ham = ps.apply_coham(g, seq.edges)
        assert ham.faces == seq.final_bounded
    assert products[0] == -products[1]
    c0 = ps.apply_coham(g, pair[0].edges).circle
    c1 = ps.apply_coham(g, pair[1].edges).circle
    assert g.circle_sign(c0) == ps.POSITIVE
    assert g.circle_sign(c1) == ps.NEGATIVE


def test_witness_equivalence_with_census():
    rng = random.Random(23)
    base = ps.build_grid(ps.GridSpec(4, 4)).graph
    for _ in range(25):
        g = ps.random_signing(rng, base)
        census = ps.sign_census(g)
        witness = ps.opposite_sign_witness(g)
        assert (witness is not None) == census.both_signs()


def _swap_pair_4x6():
    """Two valid Hamiltonian sets of the 4x6 grid differing by one box on
    each side: the canonical set, and the same with the column-2 hole
    moved from row 2 to row 3 (so box [2,2] enters, [3,2] leaves)."""
    grid = ps.build_grid(ps.GridSpec(4, 6))
    h1 = frozenset(grid.graph.bounded_faces()) - set(ps.canonical_coham_grid(4, 6).faces)
    a = grid.box_face((3, 2))
    b = grid.box_face((2, 2))
    h2 = (h1 - {a}) | {b}
    return grid, h1, h2, a, b


def test_swap_pair_sets_are_valid():
    grid, h1, h2, _, _ = _swap_pair_4x6()
    g = grid.graph
    for faces in (h1, h2):
        assert g.is_hamiltonian_circle(ps.face_set_boundary(g, faces))


def test_symmetric_difference_sign_check_random_signings():
    rng = random.Random(31)
    grid, h1, h2, _, _ = _swap_pair_4x6()
    for _ in range(40):
        g = ps.random_signing(rng, grid.graph)
        assert ps.symmetric_difference_sign_check(g, h1, h2)


def test_symmetric_difference_equal_and_unequal_signs():
    grid, h1, h2, _, _ = _swap_pair_4x6()
    # both swapped boxes positive: circle signs agree
    g = grid.graph
    assert g.edge_set_sign(ps.face_set_boundary(g, h1)) == g.edge_set_sign(
        ps.face_set_boundary(g, h2)
    )
    # exactly one of them negative: circle signs differ
    signing = ps.signing_for_box_pattern(4, 6, {(2, 2): ps.NEGATIVE})
    gn = ps.build_grid(ps.GridSpec(4, 6, signing)).graph
    assert gn.edge_set_sign(ps.face_set_boundary(gn, h1)) != gn.edge_set_sign(
        ps.face_set_boundary(gn, h2)
    )
    assert ps.symmetric_difference_sign_check(gn, h1, h2)


def test_symmetric_difference_bad_inputs():
    grid, h1, _, _, _ = _swap_pair_4x6()
    with pytest.raises(BadSymmetricDifference):
        ps.symmetric_difference_sign_check(grid.graph, h1, h1)
    a, b = grid.box_face((3, 2)), grid.box_face((3, 4))
    c, d = grid.box_face((2, 2)), grid.box_face((2, 4))
    h2 = (h1 - {a, b}) | {c, d}
    with pytest.raises(BadSymmetricDifference):
        ps.symmetric_difference_sign_check(grid.graph, h1, h2)
