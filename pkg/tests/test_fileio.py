import random

import pytest

import planesign as ps
from planesign.errors import InconsistentRotation, ParseError, UnknownVertex
from planesign.fileio import (
    load_graph,
    parse_diagonals,
    parse_graph,
    parse_hex_config,
    parse_ladder_config,
    parse_sequence,
    parse_signing,
    serialize_graph,
    serialize_signing,
)

from graphs import nine_vertex, square

SQUARE_TEXT = """\
psg 1
# a plain square
vertex 0 : 1 3
vertex 1 : 2 0
vertex 2 : 3 1
vertex 3 : 0 2
edge 0 1 +
edge 1 2 -
outer : 0 3 2 1 0
"""


def test_parse_square():
    g = load_graph(SQUARE_TEXT)
    assert g.vertex_count == 4 and g.face_count == 2
    assert g.sign(g.edge_id(1, 2)) == ps.NEGATIVE
    assert g.sign(g.edge_id(0, 1)) == ps.POSITIVE
    assert g.sign(g.edge_id(2, 3)) == ps.POSITIVE  # default


def test_roundtrip_is_identity_up_to_canonical_form():
    rng = random.Random(8)
    samples = [square(), nine_vertex(), ps.build_grid(ps.GridSpec(3, 4)).graph]
    samples += [ps.random_signing(rng, ps.random_plane_two_connected(rng, 10)) for _ in range(10)]
    for g in samples:
        text = serialize_graph(g)
        again = serialize_graph(load_graph(text))
        assert again == text
        g2 = load_graph(text)
        assert g2.edge_ids() == g.edge_ids()
        assert all(g2.sign(e) == g.sign(e) for e in g.edge_ids())
        assert {frozenset(g2.face_walk(f)) for f in g2.face_ids()} == {
            frozenset(g.face_walk(f)) for f in g.face_ids()
        }
        assert frozenset(g2.face_walk(g2.outer_face)) == frozenset(g.face_walk(g.outer_face))


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("psg 2\n")
    with pytest.raises(ParseError):
        parse_graph("psg 1\nvertex 0 1 2\n")
    with pytest.raises(ParseError):
        parse_graph("psg 1\nedge 1 1 +\nouter : 0 1 2 0\n")
    with pytest.raises(ParseError):
        parse_graph("psg 1\nvertex 0 : 1\nvertex 1 : 0\n")  # no outer
    with pytest.raises(ParseError):
        parse_graph(SQUARE_TEXT + "bogus line\n")
    with pytest.raises(ParseError):
        parse_graph(SQUARE_TEXT.replace("outer : 0 3 2 1 0", "outer : 0 3 2 1"))


def test_parse_unknown_vertex_and_inconsistent_rotation():
    triangle = "psg 1\nvertex 0 : 1 2\nvertex 1 : 2 0\nvertex 2 : 0 1\n"
    with pytest.raises(UnknownVertex):
        parse_graph(triangle + "edge 0 5 +\nouter : 0 1 2 0\n")
    with pytest.raises(UnknownVertex):
        parse_graph(triangle + "outer : 0 1 5 0\n")
    text = """\
psg 1
vertex 0 : 1 3
vertex 1 : 2 0
vertex 2 : 3 1
vertex 3 : 0 2
edge 0 2 +
outer : 0 3 2 1 0
"""
    with pytest.raises(InconsistentRotation):
        parse_graph(text)


def test_signing_files_roundtrip():
    signing = {("h", 1, 2): ps.NEGATIVE, ("v", 2, 3): ps.POSITIVE, ("d", 1, 1): ps.NEGATIVE}
    text = serialize_signing(signing)
    assert parse_signing(text) == signing
    with pytest.raises(ParseError):
        parse_signing("x 1 2 +\n")
    with pytest.raises(ParseError):
        parse_signing("h 1 2 ?\n")


def test_sequence_files():
    steps = parse_sequence("# comment\n3 4\n[1,2]\n5 6\n")
    assert steps == [("edge", 3, 4), ("box", 1, 2), ("edge", 5, 6)]
    with pytest.raises(ParseError):
        parse_sequence("3 4 5\n")
    with pytest.raises(ParseError):
        parse_sequence("[1,2,3]\n")


def test_diagonal_files():
    assert parse_diagonals("1 1 \\\n2 1 /\n") == {(1, 1): "\\", (2, 1): "/"}
    with pytest.raises(ParseError):
        parse_diagonals("1 1 x\n")


def test_ladder_config_file():
    cfg = parse_ladder_config(
        "C = 0,1,2,3,4,5\ni = 4\nP = 8,9,10\nQ = 6,7\nEL = e12\nER =\n"
    )
    assert cfg.circle == (0, 1, 2, 3, 4, 5)
    assert cfg.pivot == 3
    assert cfg.p_chain == (8, 9, 10)
    assert cfg.release_left == frozenset({12})
    assert cfg.release_right == frozenset()
    with pytest.raises(ParseError):
        parse_ladder_config("C = 0,1,2\nP = 1\nQ = 2\n")  # missing i
    with pytest.raises(ParseError):
        parse_ladder_config("C = 0\ni = 4\nP = 1\nQ = 2\nEL = 12\n")  # bare edge id


def test_hex_config_file():
    cfg = parse_hex_config("V = 0,1,2,3\nR = 4,5,6\nP = 7,8\nQ = 9,10\n")
    assert cfg.corners == (0, 1, 2, 3)
    assert cfg.inner_path == (4, 5, 6)
    with pytest.raises(ParseError):
        parse_hex_config("V = 0,1,2\nR = 4\nP = 7\nQ = 9\n")
