"""Unitarity certificates and spectrum utilities."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import DimensionError, SpectrumError
from .tensalg import DEFAULT_TOL, as_matrix, residual


@dataclass(frozen=True)
class UnitarityReport:
    residual_RRdag: float
    eigen_moduli_max_dev: float
    is_unitary: bool


def certify(R, tol=DEFAULT_TOL) -> UnitarityReport:
    R = as_matrix(R)
    if R.shape[0] != R.shape[1]:
        raise DimensionError(f"certify needs a square matrix, got {R.shape}")
    eye = np.eye(R.shape[0])
    res = residual(R.conj().T @ R, eye)
    dev = float(np.max(np.abs(np.abs(spectrum(R)) - 1.0)))
    return UnitarityReport(res, dev, bool(res <= tol and dev <= tol))


def spectrum(R):
    """Eigenvalues sorted by phase in (-pi, pi], ties broken by modulus."""
    R = as_matrix(R)
    try:
        ev = np.linalg.eigvals(R)
    except np.linalg.LinAlgError as exc:
        raise SpectrumError(f"eigenvalue iteration failed for {R.shape} matrix: {exc}") from exc
    order = np.lexsort((np.abs(ev), np.angle(ev)))
    return ev[order]


def spectrum_distance(a, b):
    """Largest pairwise gap after optimally pairing two eigenvalue multisets."""
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.shape != b.shape:
        raise DimensionError(f"multisets differ in size: {a.size} vs {b.size}")
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def spectra_match(a, b, tol=DEFAULT_TOL):
    return spectrum_distance(a, b) <= tol
