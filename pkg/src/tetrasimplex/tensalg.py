"""Dense complex linear algebra and the tensor-leg embedding engine.

Operators are plain ``numpy`` complex arrays. A register of ``n`` qubits is
ordered with site 1 as the most significant tensor factor, so placing ``X`` at
site 1 of two qubits gives ``kron(X, I2)``. Inside an :class:`EmbeddedOperator`
the order of ``sites`` matters: operator leg ``t`` acts on ``sites[t]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np
from scipy.stats import unitary_group

from .errors import DimensionError, InvalidSiteError, SingularMatrixError

__all__ = [
    "I2", "X", "Y", "Z", "H", "P", "PI_PLUS", "PI_MINUS",
    "EmbeddedOperator", "kron", "embed", "apply_embedded", "dagger",
    "inverse", "frobenius", "residual", "commutator_norm", "random_unitary",
    "DENSE_LIMIT", "DEFAULT_TOL",
]

DENSE_LIMIT = 4096
DEFAULT_TOL = 1e-10

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
# SWAP on two qubits
P = np.eye(4, dtype=complex)[[0, 2, 1, 3]]
PI_PLUS = (I2 + Z) / 2
PI_MINUS = (I2 - Z) / 2


def as_matrix(a, name="matrix"):
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(f"{name} must be 2-dimensional, got shape {m.shape}")
    return m


def _num_legs(side, local_dim):
    k, size = 0, 1
    while size < side:
        size *= local_dim
        k += 1
    if size != side:
        raise DimensionError(f"side {side} is not a power of {local_dim}")
    return k


@dataclass(frozen=True, eq=False)
class EmbeddedOperator:
    """A k-local operator together with the register sites it acts on.

    Parameters
    ----------
    op : array_like
        Square matrix of side ``local_dim**k``.
    sites : sequence of int
        ``k`` distinct 1-based site indices; leg ``t`` of ``op`` acts on
        ``sites[t]``.
    n_sites : int
        Register size.
    local_dim : int
        Local Hilbert space dimension (2 throughout this package).
    """

    op: np.ndarray
    sites: tuple
    n_sites: int
    local_dim: int = 2

    def __post_init__(self):
        op = as_matrix(self.op, "op")
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "sites", tuple(int(s) for s in self.sites))
        if op.shape[0] != op.shape[1]:
            raise DimensionError(f"op must be square, got {op.shape}")
        sites = self.sites
        if (len(set(sites)) != len(sites)
                or any(s < 1 or s > self.n_sites for s in sites)):
            raise InvalidSiteError(f"invalid site list {sites} for {self.n_sites} sites")
        if op.shape[0] != self.local_dim ** len(sites):
            raise DimensionError(
                f"op of side {op.shape[0]} cannot act on {len(sites)} sites")

    @property
    def dim(self):
        return self.local_dim ** self.n_sites


def kron(a, b, *more):
    """Kronecker product of two or more matrices."""
    return reduce(np.kron, (as_matrix(m) for m in (a, b, *more)))


def _site_offsets(sites, n_sites, local_dim):
    """Full-register index offsets contributed by each local basis state."""
    strides = [local_dim ** (n_sites - s) for s in sites]
    offsets = np.zeros(1, dtype=np.int64)
    for stride in strides:
        offsets = (offsets[:, None] + stride * np.arange(local_dim)[None, :]).ravel()
    return offsets


def embed(e: EmbeddedOperator) -> np.ndarray:
    """Dense matrix of ``e`` on the whole register.

    Built by basis-index arithmetic: for local basis states ``a, b`` the
    entry ``op[a, b]`` lands on every (row, col) pair that agrees on the
    spectator sites.
    """
    dim = e.dim
    if dim > DENSE_LIMIT:
        raise DimensionError(f"dense embedding limited to {DENSE_LIMIT}, got {dim}")
    rest = [s for s in range(1, e.n_sites + 1) if s not in e.sites]
    local = _site_offsets(e.sites, e.n_sites, e.local_dim)
    spectator = _site_offsets(rest, e.n_sites, e.local_dim)
    idx = local[:, None] + spectator[None, :]  # (local state, spectator state)
    out = np.zeros((dim, dim), dtype=complex)
    nz_rows, nz_cols = np.nonzero(e.op)
    for a, b in zip(nz_rows, nz_cols):
        out[idx[a], idx[b]] = e.op[a, b]
    return out


def apply_embedded(e: EmbeddedOperator, v) -> np.ndarray:
    """Compute ``embed(e) @ v`` by contracting tensor legs.

    ``v`` may be a vector of length ``local_dim**n_sites`` or a matrix whose
    columns are such vectors.
    """
    v = np.asarray(v, dtype=complex)
    dim = e.dim
    if v.shape[0] != dim or v.ndim not in (1, 2):
        raise DimensionError(f"state of shape {v.shape} does not fit register dim {dim}")
    batch = v.shape[1:]
    k = len(e.sites)
    d = e.local_dim
    psi = v.reshape((d,) * e.n_sites + batch)
    axes = [s - 1 for s in e.sites]
    op_t = e.op.reshape((d,) * (2 * k))
    out = np.tensordot(op_t, psi, axes=(list(range(k, 2 * k)), axes))
    out = np.moveaxis(out, list(range(k)), axes)
    return out.reshape(v.shape)


def dagger(a):
    return as_matrix(a).conj().T


def inverse(a):
    """Inverse of a square matrix; raises if it is numerically singular."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"inverse needs a square matrix, got {a.shape}")
    sv = np.linalg.svd(a, compute_uv=False)
    if sv[0] == 0 or sv[-1] < 1e-12 * sv[0]:
        raise SingularMatrixError("singular matrix")
    return np.linalg.inv(a)


def frobenius(a):
    return float(np.linalg.norm(as_matrix(a)))


def residual(a, b):
    """Relative Frobenius distance ``|a - b| / max(1, |b|)``."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    return frobenius(a - b) / max(1.0, frobenius(b))


def commutator_norm(a, b):
    a, b = as_matrix(a), as_matrix(b)
    return frobenius(a @ b - b @ a)


def random_unitary(dim, rng):
    """Haar-random unitary drawn from ``rng`` (a numpy Generator)."""
    if dim == 1:
        return np.exp(2j * np.pi * rng.random()).reshape(1, 1)
    return unitary_group.rvs(dim, random_state=rng)
