"""Generalized Rubik puzzles on oriented 3-valent maps.

Build a map as a rotation system, attach one side movement per face, and
work with the resulting permutation group exactly: order, membership,
factorization, the kernel chain down to the vertex action, the mod-3 twist
invariant, and a playable puzzle over HTTP.
"""

from .errors import RubikMapError
from .maps import (
    MapM,
    catalog_map,
    catalog_names,
    from_face_cycles,
    from_rotation_system,
    hex_torus,
    load,
    platonic,
    prism,
    relabeled,
    save,
    suite_names,
    theta,
    truncate,
)
from .perm import Permutation, Word, format_cycles, parse_cycles
from .groups import PermutationGroup, Projection, enumerate_all, group_from_generators
from .presentation import (
    RubikPresentation,
    export_script,
    export_script_text,
    rubik_generators,
    side_movement,
)
from .shift import (
    canonical_selection,
    corner_action,
    is_ormap,
    rotation,
    sh,
    sh_pair,
    single_vertex_twist,
)
from .verifier import ChainOrders, ConjectureReport, predicted_order, run_suite, verify
from .puzzle import PuzzleState, format_word, new_state

__version__ = "0.1.0"

__all__ = [
    "RubikMapError",
    "MapM", "catalog_map", "catalog_names", "from_face_cycles",
    "from_rotation_system", "hex_torus", "load", "platonic", "prism",
    "relabeled", "save", "suite_names", "theta", "truncate",
    "Permutation", "Word", "format_cycles", "parse_cycles",
    "PermutationGroup", "Projection", "enumerate_all", "group_from_generators",
    "RubikPresentation", "export_script", "export_script_text",
    "rubik_generators", "side_movement",
    "canonical_selection", "corner_action", "is_ormap", "rotation",
    "sh", "sh_pair", "single_vertex_twist",
    "ChainOrders", "ConjectureReport", "predicted_order", "run_suite", "verify",
    "PuzzleState", "format_word", "new_state",
    "__version__",
]
