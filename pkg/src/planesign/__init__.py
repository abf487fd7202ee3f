"""planesign: simple plane signed graphs, their faces, weak duals,
Hamiltonian circle signs, and co-Hamiltonian sequences."""

from . import errors
from .certify import (
    HexConfig,
    LadderConfig,
    ToggleResult,
    certify_hexagon,
    certify_ladder,
    greedy_release,
    toggle,
)
from .dual import (
    FaceGraph,
    ReductionTrace,
    dual_is_tree,
    eliminate,
    face_map,
    face_set_boundary,
    face_signs,
    is_outerplane,
    outerplane_unique_hamiltonian,
    removable_vertices,
    verify_outer_product,
    weak_dual,
)
from .embedding import (
    NEGATIVE,
    POSITIVE,
    Circle,
    EdgeDeletion,
    FaceWalk,
    PlaneSignedGraph,
    VertexClasses,
    build_graph,
    circle_from_vertices,
    make_circle,
    rotations_from_points,
    trace_faces,
)
from .fileio import load_graph, serialize_graph
from .generate import random_outerplane, random_plane_two_connected, random_signing
from .grids import (
    Grid,
    GridSpec,
    all_same_sign_decision,
    box_sign,
    boxes,
    build_grid,
    build_triangulated_grid,
    is_corner_box,
    parity_obstruction,
    signing_for_box_pattern,
)
from .peeling import (
    CoHamSequence,
    HamiltonianSet,
    apply_coham,
    apply_coham_detailed,
    canonical_coham_boxes,
    canonical_coham_grid,
    coham_from_circle,
    hamiltonian_set_sign,
    peel_step,
    realize_face_sequence,
)
from .search import (
    Enumeration,
    SignCensus,
    enumerate_hamiltonian,
    enumerate_hamiltonian_by_walks,
    opposite_sign_witness,
    sign_census,
    symmetric_difference_sign_check,
)

__version__ = "0.1.0"
