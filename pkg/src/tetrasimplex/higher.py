"""4- and 5-simplex operators built from Yang-Baxter and tetrahedron solutions.

A lift places the base operator (4x4 ``Y`` or 8x8 ``T``) on consecutive legs
starting at ``position`` (1-based) and fills the remaining legs with the
appended one-qubit matrices, in order. Each appended ``M`` must satisfy the
commutant condition against the base.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import abc_word
from .errors import CommutantError, ConstraintError, DimensionError
from .hietarinta import commutant_residual
from .simplex import anti_four_simplex, tetra_vertex, ybe_vertex
from .tensalg import I2, X, Y, Z, as_matrix, kron

LIFT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class LiftSpec:
    base: np.ndarray
    appended: tuple
    position: int = 1

    def __post_init__(self):
        base = as_matrix(self.base, "base")
        if base.shape not in ((4, 4), (8, 8)):
            raise DimensionError(f"base must be 4x4 or 8x8, got {base.shape}")
        ms = tuple(as_matrix(m, "M") for m in self.appended)
        if any(m.shape != (2, 2) for m in ms):
            raise DimensionError("appended matrices must be 2x2")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "appended", ms)
        if not 1 <= self.position <= len(ms) + 1:
            raise ValueError(f"position {self.position} out of range for {self.legs} legs")

    @property
    def base_legs(self):
        return 2 if self.base.shape[0] == 4 else 3

    @property
    def legs(self):
        return self.base_legs + len(self.appended)

    def commutant_residuals(self):
        return tuple(commutant_residual(self.base, m) for m in self.appended)


def placements(base_legs, total_legs):
    """All admissible base positions (1-based) for a lift."""
    return tuple(range(1, total_legs - base_legs + 2))


def build_lift(spec: LiftSpec, check=True, tol=LIFT_TOL):
    if check:
        for c in spec.commutant_residuals():
            if c > tol:
                raise CommutantError(f"base does not commute with M^(x){spec.base_legs}: {c:.3e}", c)
        own = ybe_vertex(spec.base) if spec.base_legs == 2 else tetra_vertex(spec.base)
        if own > tol:
            raise ConstraintError("base relation", own)
    before = spec.appended[:spec.position - 1]
    after = spec.appended[spec.position - 1:]
    return kron(*before, spec.base, *after)


def lift_4simplex(spec: LiftSpec, check=True):
    if spec.legs != 4:
        raise DimensionError(f"a 4-simplex lift needs 4 legs, spec has {spec.legs}")
    return build_lift(spec, check)


def lift_5simplex(spec: LiftSpec, check=True):
    if spec.legs != 5:
        raise DimensionError(f"a 5-simplex lift needs 5 legs, spec has {spec.legs}")
    return build_lift(spec, check)


def anti_4simplex(R):
    return anti_four_simplex(R)


def a3c_word(alpha=1 / np.sqrt(2), beta=1 / np.sqrt(2), triple=(X, Z, Y)):
    """``alpha AAAC + beta BBBC``."""
    return abc_word(alpha, beta, "AAAC", "BBBC", triple)


def a4c_word(alpha=1 / np.sqrt(2), beta=1 / np.sqrt(2), triple=(X, Z, Y)):
    """``alpha AAAAC + beta BBBBC``."""
    return abc_word(alpha, beta, "AAAAC", "BBBBC", triple)


T_CANDIDATES = {"I": I2, "X": X, "Y": Y, "Z": Z}


def t_lift_candidates(T, tol=LIFT_TOL):
    """Commutant residual of an 8x8 tetrahedron operator against each Pauli candidate."""
    T = as_matrix(T)
    if T.shape != (8, 8):
        raise DimensionError("t_lift_candidates needs an 8x8 operator")
    out = {}
    for name, m in T_CANDIDATES.items():
        c = commutant_residual(T, m)
        out[name] = (c, c <= tol)
    return out
