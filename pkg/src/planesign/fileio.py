"""Text formats: the ``psg 1`` graph file, signing files, edge/box
sequence files, and the flat key-value configuration files.

Graph file grammar (one record per line, ``#`` starts a comment):

    psg 1
    vertex <id> : <id> <id> ...     neighbors in counterclockwise order
    edge <u> <v> <+|->              sign, default + when omitted
    outer : <v0> <v1> ... <v0>      closed walk designating the outer face

The serializer is canonical (rotations start at the smallest neighbor,
edges sorted, signs explicit) so equal graphs produce identical bytes.
"""

from __future__ import annotations

from .certify import HexConfig, LadderConfig
from .embedding import build_graph, parse_sign, sign_char
from .errors import InconsistentRotation, ParseError, UnknownVertex

MAGIC = "psg 1"


def _tokenize(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"bad {what}: {token!r}") from None


def parse_graph(text):
    """Parse a psg file into (rotations, signs, outer walk)."""
    rotations = {}
    sign_lines = []
    outer = None
    lines = list(_tokenize(text))
    if not lines:
        raise ParseError(0, "empty file")
    lineno0, first = lines[0]
    if first != MAGIC:
        raise ParseError(lineno0, f"expected {MAGIC!r} header, got {first!r}")
    for lineno, line in lines[1:]:
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) < 3 or tokens[2] != ":":
                raise ParseError(lineno, "expected 'vertex <id> : <neighbors>'")
            v = _int(tokens[1], lineno, "vertex id")
            if v in rotations:
                raise ParseError(lineno, f"vertex {v} defined twice")
            rotations[v] = [_int(t, lineno, "neighbor id") for t in tokens[3:]]
        elif tokens[0] == "edge":
            if len(tokens) == 3:
                u, v, s = tokens[1], tokens[2], "+"
            elif len(tokens) == 4:
                u, v, s = tokens[1], tokens[2], tokens[3]
            else:
                raise ParseError(lineno, "expected 'edge <u> <v> [+|-]'")
            u = _int(u, lineno, "vertex id")
            v = _int(v, lineno, "vertex id")
            if u == v:
                raise ParseError(lineno, f"loop edge {u} {v}")
            try:
                sign = parse_sign(s)
            except ValueError:
                raise ParseError(lineno, f"bad sign {s!r}") from None
            sign_lines.append((lineno, u, v, sign))
        elif tokens[0] == "outer":
            if len(tokens) < 2 or tokens[1] != ":":
                raise ParseError(lineno, "expected 'outer : <walk>'")
            if outer is not None:
                raise ParseError(lineno, "outer designated twice")
            walk = [_int(t, lineno, "vertex id") for t in tokens[2:]]
            if len(walk) < 4 or walk[0] != walk[-1]:
                raise ParseError(lineno, "outer walk must be closed: v0 ... v0")
            outer = (lineno, walk)
        else:
            raise ParseError(lineno, f"unknown directive {tokens[0]!r}")
    if outer is None:
        raise ParseError(0, "missing outer designation")

    signs = {}
    for lineno, u, v, sign in sign_lines:
        for w in (u, v):
            if w not in rotations:
                raise UnknownVertex(f"line {lineno}: vertex {w} has no rotation")
        if v not in rotations[u] or u not in rotations[v]:
            raise InconsistentRotation(
                f"line {lineno}: edge {u}-{v} is absent from the rotations"
            )
        signs[(u, v)] = sign
    for w in outer[1]:
        if w not in rotations:
            raise UnknownVertex(f"line {outer[0]}: vertex {w} has no rotation")
    return rotations, signs, outer[1]


def load_graph(text):
    rotations, signs, outer = parse_graph(text)
    return build_graph(rotations, signs, outer=outer)


def _canonical_cycle(seq):
    """Rotate a cyclic sequence to its lexicographically smallest phase."""
    seq = list(seq)
    best = None
    for s in range(len(seq)):
        cand = seq[s:] + seq[:s]
        if best is None or cand < best:
            best = cand
    return best


def serialize_graph(graph):
    lines = [MAGIC]
    for v in graph.vertices():
        nbrs = graph.rotation(v)
        if nbrs:
            k = nbrs.index(min(nbrs))
            nbrs = nbrs[k:] + nbrs[:k]
        lines.append(f"vertex {v} : " + " ".join(map(str, nbrs)))
    for e in graph.edge_ids():
        u, v = graph.endpoints(e)
        lines.append(f"edge {u} {v} {sign_char(graph.sign(e))}")
    walk = _canonical_cycle(graph.outer_walk_vertices())
    lines.append("outer : " + " ".join(map(str, walk + walk[:1])))
    return "\n".join(lines) + "\n"


# -- signing files (grids): "h i j +|-", "v i j +|-", "d i j +|-" --------------

def parse_signing(text):
    signing = {}
    for lineno, line in _tokenize(text):
        tokens = line.split()
        if len(tokens) != 4 or tokens[0] not in ("h", "v", "d"):
            raise ParseError(lineno, "expected '<h|v|d> <i> <j> <+|->'")
        i = _int(tokens[1], lineno, "row")
        j = _int(tokens[2], lineno, "column")
        try:
            sign = parse_sign(tokens[3])
        except ValueError:
            raise ParseError(lineno, f"bad sign {tokens[3]!r}") from None
        signing[(tokens[0], i, j)] = sign
    return signing


def serialize_signing(signing):
    lines = []
    for (kind, i, j) in sorted(signing):
        lines.append(f"{kind} {i} {j} {sign_char(signing[(kind, i, j)])}")
    return "\n".join(lines) + ("\n" if lines else "")


# -- sequence files: "u v" edge lines or "[i,j]" box lines --------------------

def parse_sequence(text):
    """Ordered deletions: ('edge', u, v) or ('box', i, j) entries."""
    steps = []
    for lineno, line in _tokenize(text):
        if line.startswith("["):
            body = line.strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise ParseError(lineno, f"bad box label {line!r}")
            parts = body[1:-1].split(",")
            if len(parts) != 2:
                raise ParseError(lineno, f"bad box label {line!r}")
            steps.append(("box", _int(parts[0].strip(), lineno, "row"),
                          _int(parts[1].strip(), lineno, "column")))
        else:
            tokens = line.split()
            if len(tokens) != 2:
                raise ParseError(lineno, "expected 'u v' or '[i,j]' per line")
            steps.append(("edge", _int(tokens[0], lineno, "vertex id"),
                          _int(tokens[1], lineno, "vertex id")))
    return steps


# -- diagonal policy files: "i j /" or "i j \\" --------------------------------

def parse_diagonals(text):
    policy = {}
    for lineno, line in _tokenize(text):
        tokens = line.split()
        if len(tokens) != 3 or tokens[2] not in ("/", "\\"):
            raise ParseError(lineno, "expected '<i> <j> </|\\>'")
        policy[(_int(tokens[0], lineno, "row"), _int(tokens[1], lineno, "column"))] = tokens[2]
    return policy


# -- flat key-value configuration files ----------------------------------------

def _parse_kv(text):
    out = {}
    for lineno, line in _tokenize(text):
        if "=" not in line:
            raise ParseError(lineno, "expected 'key = value'")
        key, _, value = line.partition("=")
        out[key.strip().lower()] = (lineno, value.strip())
    return out


def _int_list(entry, what):
    lineno, value = entry
    if not value:
        return ()
    return tuple(_int(t.strip(), lineno, what) for t in value.split(","))


def _edge_set(entry):
    lineno, value = entry
    if not value:
        return frozenset()
    ids = []
    for token in value.split(","):
        token = token.strip()
        if not token.startswith("e"):
            raise ParseError(lineno, f"edge ids look like e<N>, got {token!r}")
        ids.append(_int(token[1:], lineno, "edge id"))
    return frozenset(ids)


def parse_ladder_config(text):
    """Keys: C (central circle order), i (1-based subscript of the pivot),
    P, Q (chains), EL, ER (release edge ids as eN)."""
    kv = _parse_kv(text)
    for key in ("c", "i", "p", "q"):
        if key not in kv:
            raise ParseError(0, f"missing key {key!r}")
    lineno, ivalue = kv["i"]
    pivot = _int(ivalue, lineno, "pivot subscript") - 1
    return LadderConfig(
        circle=_int_list(kv["c"], "vertex id"),
        pivot=pivot,
        p_chain=_int_list(kv["p"], "vertex id"),
        q_chain=_int_list(kv["q"], "vertex id"),
        release_left=_edge_set(kv.get("el", (0, ""))),
        release_right=_edge_set(kv.get("er", (0, ""))),
    )


def parse_hex_config(text):
    """Keys: V (the four corners), R (inner path), P, Q (chains), EL, ER."""
    kv = _parse_kv(text)
    for key in ("v", "r", "p", "q"):
        if key not in kv:
            raise ParseError(0, f"missing key {key!r}")
    corners = _int_list(kv["v"], "vertex id")
    if len(corners) != 4:
        raise ParseError(kv["v"][0], "V needs exactly four corners")
    return HexConfig(
        corners=corners,
        inner_path=_int_list(kv["r"], "vertex id"),
        p_chain=_int_list(kv["p"], "vertex id"),
        q_chain=_int_list(kv["q"], "vertex id"),
        release_left=_edge_set(kv.get("el", (0, ""))),
        release_right=_edge_set(kv.get("er", (0, ""))),
    )
