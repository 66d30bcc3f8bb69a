"""Exact toric and lattice geometry: fans, star subdivisions, Cartier data,
base point freeness and nefness of invariant divisors, and Picard-lattice
bookkeeping for surface blow-ups."""

from .constructions import (
    BundleSpec,
    blow_up_invariant,
    catalog,
    hirzebruch_fan,
    product_fan,
    projective_line_bundle,
    projective_space_fan,
    sato_base_fan,
    sato_fan,
    split_bundle_fan,
)
from .divisor import (
    CartierData,
    HPolytope,
    InvariantDivisor,
    anticanonical,
    basepoint_witness,
    cartier_data,
    contains,
    count_lattice_points,
    is_basepoint_free,
    kodaira_dimension,
    polytope,
    principal,
    pullback,
)
from .fan import (
    Fan,
    FanMap,
    WallCurve,
    check_fan_map,
    is_complete,
    is_smooth,
    star_subdivision,
    validate,
    walls,
)
from .intersection import is_ample, is_nef, min_wall, wall_number
from .lattice import primitive, smith_normal_form, solve_rational

__version__ = "0.1.0"
