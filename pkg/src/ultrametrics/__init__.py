"""Exact tools for finite ultrametric and semimetric spaces.

The package decides and constructs everything around the extremal case of
the Gomory-Hu inequality |Sp X| <= |X| for finite ultrametric spaces:
spectra and validity checks, diametrical decompositions, representing trees
with canonical codes (isometry and weak similarity), characteristic
Hamiltonian paths and cycles with exact reconstruction, the census of
extremal spaces up to weak similarity, ball posets with their Hasse
diagrams, and the lift/approximation pipeline that writes any finite
semimetric space as the image of an extremal space under a ball-preserving
map composed with a bijective epsilon-isometry.

All distances are exact rationals; every public operation is a pure
function over immutable values.
"""

from .balls import (
    Ball,
    HasseDiagram,
    HomVerdict,
    PointMap,
    all_balls,
    check_arc_surjective_hom,
    check_ball_preserving,
    hasse_diagram,
)
from .census import ENUM_LIMIT_ENV, enumerate_extremal, kappa
from .diametrical import DiametricalDecomposition, diametrical_decompose
from .errors import (
    AxiomViolation,
    BadEpsilon,
    EmptySpace,
    InternalError,
    NotCharacteristic,
    NotExtremal,
    NotHamiltonian,
    NotInjective,
    NotStrictlyBinary,
    NotSurjective,
    NotUltrametric,
    Oversize,
    ParseError,
    TooSmall,
    UltrametricsError,
    UnknownPoint,
)
from .extremal import (
    CharacteristicCycle,
    CharacteristicPath,
    characteristic_ham_path,
    is_characteristic_cycle,
    is_extremal,
    path_to_cycle,
    reconstruct_from_cycle,
    reconstruct_from_path,
    two_max_cycle_for_subset,
)
from .generate import random_nonextremal_ultrametric, random_semimetric, random_ultrametric
from .io import (
    diametrical_dot,
    format_value,
    hasse_dot,
    load_space,
    parse_path_text,
    parse_space,
    save_space,
    space_to_csv,
    space_to_json,
    tree_dot,
    tree_to_text,
)
from .spaces import (
    Space,
    as_fraction,
    check_ultrametric,
    gomory_hu_margin,
    require_ultrametric,
    spectrum_of,
)
from .transforms import (
    EpsIsometryWitness,
    LiftResult,
    approximate_extremal,
    compose_pipeline,
    eps_isometry_deviation,
    lift_semimetric,
)
from .trees import (
    CanonicalCode,
    Node,
    RepTree,
    WeakSimilarityWitness,
    are_isometric,
    are_weakly_similar,
    build_representing_tree,
    canonical_code,
    has_equilateral_triangle,
    is_strictly_binary,
    leaf_order,
    tree_distance,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BadEpsilon",
    "Ball",
    "CanonicalCode",
    "CharacteristicCycle",
    "CharacteristicPath",
    "DiametricalDecomposition",
    "EmptySpace",
    "EpsIsometryWitness",
    "ENUM_LIMIT_ENV",
    "HasseDiagram",
    "HomVerdict",
    "InternalError",
    "LiftResult",
    "Node",
    "NotCharacteristic",
    "NotExtremal",
    "NotHamiltonian",
    "NotInjective",
    "NotStrictlyBinary",
    "NotSurjective",
    "NotUltrametric",
    "Oversize",
    "ParseError",
    "PointMap",
    "RepTree",
    "Space",
    "TooSmall",
    "UltrametricsError",
    "UnknownPoint",
    "WeakSimilarityWitness",
    "all_balls",
    "approximate_extremal",
    "are_isometric",
    "are_weakly_similar",
    "as_fraction",
    "build_representing_tree",
    "canonical_code",
    "characteristic_ham_path",
    "check_arc_surjective_hom",
    "check_ball_preserving",
    "check_ultrametric",
    "compose_pipeline",
    "diametrical_decompose",
    "diametrical_dot",
    "enumerate_extremal",
    "eps_isometry_deviation",
    "format_value",
    "gomory_hu_margin",
    "has_equilateral_triangle",
    "hasse_diagram",
    "hasse_dot",
    "is_characteristic_cycle",
    "is_extremal",
    "is_strictly_binary",
    "kappa",
    "leaf_order",
    "lift_semimetric",
    "load_space",
    "parse_path_text",
    "parse_space",
    "path_to_cycle",
    "random_nonextremal_ultrametric",
    "random_semimetric",
    "random_ultrametric",
    "reconstruct_from_cycle",
    "reconstruct_from_path",
    "require_ultrametric",
    "save_space",
    "space_to_csv",
    "space_to_json",
    "spectrum_of",
    "tree_distance",
    "tree_dot",
    "tree_to_text",
    "two_max_cycle_for_subset",
]
