import numpy as np
import pytest

from conftest import cgauss
from tetrasimplex.clifford import CliffordCoeffs, clifford_tetra, table1_solution
from tetrasimplex.errors import CommutantError, ConstraintError, DimensionError
from tetrasimplex.hietarinta import HClass, build_yb, vertex_form
from tetrasimplex.higher import (
    LiftSpec, a3c_word, a4c_word, anti_4simplex, lift_4simplex, lift_5simplex, placements,
    t_lift_candidates,
)
from tetrasimplex.simplex import five_simplex, four_simplex
from tetrasimplex.tensalg import I2, P, Y, Z, kron


def h31_phases(rng):
    ph = np.exp(1j * rng.uniform(-np.pi, np.pi, 3))
    return vertex_form(build_yb(HClass("H31", {"k": 1, "p": ph[0], "q": ph[1], "s": ph[2]})))


def test_trivial_lifts():
    R = lift_4simplex(LiftSpec(P, (I2, I2)))
    assert np.array_equal(R, kron(P, I2, I2)) and four_simplex(R) == 0
    R = lift_5simplex(LiftSpec(P, (I2, I2, I2)))
    assert five_simplex(R) <= 1e-12


def test_placements_layout():
    Yb = np.arange(16).reshape(4, 4) + 1.0
    M = np.diag([2.0, 3.0])
    assert np.array_equal(lift_4simplex(LiftSpec(Yb, (M, M), 2), check=False), kron(M, Yb, M))
    assert np.array_equal(lift_4simplex(LiftSpec(Yb, (M, M), 3), check=False), kron(M, M, Yb))
    assert placements(2, 4) == (1, 2, 3) and placements(3, 5) == (1, 2, 3)


def test_y_lifts_all_placements():
    rng = np.random.default_rng(40)
    for _ in range(5):
        Yv = h31_phases(rng)
        M = np.diag(cgauss(rng, 2))
        res = [four_simplex(lift_4simplex(LiftSpec(Yv, (M, M), pos))) for pos in (1, 2, 3)]
        # placement covariance: all pass together
        assert max(res) <= 1e-10


def test_t_lifts():
    T = clifford_tetra(table1_solution(2, 0.4, -0.9))
    cands = t_lift_candidates(T)
    assert cands["I"][1] and cands["Z"][1]
    assert not cands["X"][1] and not cands["Y"][1]
    for pos in (1, 2):
        assert four_simplex(lift_4simplex(LiftSpec(T, (Z,), pos))) <= 1e-10
    with pytest.raises(CommutantError) as err:
        lift_4simplex(LiftSpec(T, (Y,), 1))
    assert err.value.residual > 1e-3
    with pytest.raises(DimensionError):
        t_lift_candidates(np.eye(4))


def test_five_simplex_lifts():
    rng = np.random.default_rng(41)
    Yv = h31_phases(rng)
    for pos in (1, 2, 3, 4):
        R = lift_5simplex(LiftSpec(Yv, (Z, Z, Z), pos))
        assert five_simplex(R, probes=20, seed=pos) <= 1e-8
    T = clifford_tetra(CliffordCoeffs((0.5,) * 4))
    for pos in (1, 2, 3):
        assert five_simplex(lift_5simplex(LiftSpec(T, (Z, Z), pos))) <= 1e-8
    assert five_simplex(a4c_word()) <= 1e-8


def test_lift_errors():
    with pytest.raises(DimensionError):
        lift_4simplex(LiftSpec(P, (I2,)))
    with pytest.raises(DimensionError):
        LiftSpec(np.eye(2), (I2,))
    with pytest.raises(DimensionError):
        LiftSpec(P, (np.eye(3),))
    with pytest.raises(ValueError):
        LiftSpec(P, (I2, I2), 4)
    with pytest.raises(ConstraintError):
        lift_4simplex(LiftSpec(np.diag([1, 2, 3, 4]) + np.eye(4)[[1, 0, 2, 3]], (I2, I2)))


def test_anti_4simplex():
    assert anti_4simplex(a3c_word()) <= 1e-10
    assert anti_4simplex(np.eye(16)) > 1
    rng = np.random.default_rng(42)
    R = a3c_word(0.3 + 0.1j, 0.3 + 0.1j)
    base = anti_4simplex(R)
    R2 = a3c_word(1, 2)
    base2 = anti_4simplex(R2)
    for theta in rng.uniform(-np.pi, np.pi, 10):
        assert abs(anti_4simplex(np.exp(1j * theta) * R) - base) <= 1e-12
        assert abs(anti_4simplex(np.exp(1j * theta) * R2) - base2) <= 1e-12


def test_commutant_violations_are_detected():
    rng = np.random.default_rng(43)
    detected = 0
    for _ in range(100):
        Yv = h31_phases(rng)
        M = cgauss(rng, 2, 2)
        spec = LiftSpec(Yv, (M, M), int(rng.integers(1, 4)))
        assert max(spec.commutant_residuals()) > 1e-6
        if four_simplex(lift_4simplex(spec, check=False)) > 1e-6:
            detected += 1
    assert detected >= 95
