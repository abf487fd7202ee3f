#!/usr/bin/env python3
"""Regenerate the committed test fixtures and golden CLI outputs.

Run from the repository root:  python3 tools/regen_fixtures.py
"""

import io
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import planesign as ps
from planesign.cli import main as cli_main

import graphs

FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "tests" / "golden"

GOLDEN_COMMANDS = {
    "faces": ["faces"],
    "dual-dot": ["dual", "--dot"],
    "ham": ["ham"],
    "census": ["census"],
}


def fixture_graphs():
    return {
        "square": graphs.square(),
        "square_chord": graphs.square_with_chord(),
        "hexagon_chord": graphs.hexagon_with_chord(),
        "grid_2x5": ps.build_grid(ps.GridSpec(2, 5)).graph,
        "grid_3x4": ps.build_grid(ps.GridSpec(3, 4)).graph,
        "grid_4x3_two_negative": graphs.two_negative_4x3().graph,
        "trigrid_3x3": graphs.mixed_trigrid().graph,
        "nine_vertex": graphs.nine_vertex(),
        "ladder": graphs.ladder_fixture(),
        "hexagon": graphs.hexagon_fixture(),
    }


def config_files():
    ladder = graphs.ladder_fixture()
    shortcut = ladder.edge_id(8, 10)
    return {
        "ladder.cfg": f"C = 0,1,2,3,4,5\ni = 4\nP = 8,9,10\nQ = 6,7\nEL = e{shortcut}\nER =\n",
        "hexagon.cfg": "V = 0,1,2,3\nR = 4,5,6\nP = 7,8\nQ = 9,10\n",
        "hexagon_degenerate.cfg": "V = 0,1,2,3\nR = 4\nP = 5,6\nQ = 7,8\n",
    }


def run_cli(argv):
    out = io.StringIO()
    status = cli_main(argv, out=out)
    if status != 0:
        raise SystemExit(f"cli {argv} exited {status}")
    return out.getvalue()


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    GOLDEN.mkdir(parents=True, exist_ok=True)

    names = fixture_graphs()
    for name, graph in names.items():
        (FIXTURES / f"{name}.psg").write_text(ps.serialize_graph(graph), encoding="utf-8")
    (FIXTURES / "hexagon_degenerate.psg").write_text(
        ps.serialize_graph(graphs.hexagon_degenerate()), encoding="utf-8"
    )
    for name, text in config_files().items():
        (FIXTURES / name).write_text(text, encoding="utf-8")

    for name in names:
        path = str(FIXTURES / f"{name}.psg")
        for label, argv in GOLDEN_COMMANDS.items():
            text = run_cli(argv[:1] + [path] + argv[1:])
            (GOLDEN / f"{name}.{label}.txt").write_text(text, encoding="utf-8")

    # residual of the 4x6 grid after the canonical co-Hamiltonian sequence
    text = run_cli(["grid", "4", "6", "--coham"])
    (GOLDEN / "grid_4x6_coham.psg").write_text(text, encoding="utf-8")
    print(f"wrote {len(names) + 1} fixtures and {4 * len(names) + 1} golden files")


if __name__ == "__main__":
    main()
