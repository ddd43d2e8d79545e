"""Tetrahedron-equation and higher-simplex operators: construction, lifts, unitary families and gates."""
from .clifford import CliffordCoeffs, clifford_tetra, solve_constraints
from .hietarinta import GaugeTransform, HClass, UnitaryFamilyPoint, build_yb, gauge_conjugate, lift, unitary_family
from .simplex import (
    anti_four_simplex, anti_tetra_vertex, check_relation, five_simplex, four_simplex,
    tetra_edge, tetra_vertex, ybe_braided, ybe_vertex,
)
from .tensalg import EmbeddedOperator, apply_embedded, embed
from .unitary import certify, spectrum

__version__ = "0.1.0"
