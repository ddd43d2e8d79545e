"""Simplex-type relations and their residual checkers.

A relation is a word identity ``prod(lhs) = rhs_scale * prod(rhs)`` where
each factor is an operator slot placed on a tuple of register sites. Slot
matrices are supplied at check time, so one declarative relation serves any
candidate operator.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import CommutantError, DimensionError, InvalidSiteError
from .tensalg import (
    DENSE_LIMIT, EmbeddedOperator, apply_embedded, as_matrix, commutator_norm,
    kron, residual,
)

DEFAULT_PROBES = 20
COMMUTANT_TOL = 1e-10


@dataclass(frozen=True)
class SimplexRelation:
    name: str
    n_sites: int
    lhs: tuple
    rhs: tuple
    rhs_scale: complex = 1.0
    local_dim: int = 2

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple((s, tuple(t)) for s, t in self.lhs))
        object.__setattr__(self, "rhs", tuple((s, tuple(t)) for s, t in self.rhs))
        for _, sites in self.lhs + self.rhs:
            if (len(set(sites)) != len(sites)
                    or any(s < 1 or s > self.n_sites for s in sites)):
                raise InvalidSiteError(f"invalid site list {sites} in relation {self.name}")

    @property
    def dim(self):
        return self.local_dim ** self.n_sites

    def slot_ids(self):
        return sorted({s for s, _ in self.lhs + self.rhs})

    def scaled(self, rhs_scale):
        return replace(self, rhs_scale=rhs_scale)


def _reverse_word(word):
    return tuple(reversed(word))


def _word_relation(name, n_sites, word, rhs_scale=1.0, slot="R"):
    lhs = tuple((slot, s) for s in word)
    return SimplexRelation(name, n_sites, lhs, _reverse_word(lhs), rhs_scale)


TETRA_VERTEX_SITES = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6))
TETRA_EDGE_SITES = ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))
FOUR_SIMPLEX_SITES = ((1, 2, 3, 4), (1, 5, 6, 7), (2, 5, 8, 9), (3, 6, 8, 10), (4, 7, 9, 10))
FIVE_SIMPLEX_SITES = (
    (1, 2, 3, 4, 5), (1, 6, 7, 8, 9), (2, 6, 10, 11, 12),
    (3, 7, 10, 13, 14), (4, 8, 11, 13, 15), (5, 9, 12, 14, 15),
)

TETRA_VERTEX = _word_relation("tetra-vertex", 6, TETRA_VERTEX_SITES)
TETRA_EDGE = _word_relation("tetra-edge", 4, TETRA_EDGE_SITES)
ANTI_TETRA_VERTEX = _word_relation("anti-tetra", 6, TETRA_VERTEX_SITES, -1.0)
YBE_BRAIDED = SimplexRelation(
    "ybe-braided", 3,
    (("Y", (1, 2)), ("Y", (2, 3)), ("Y", (1, 2))),
    (("Y", (2, 3)), ("Y", (1, 2)), ("Y", (2, 3))),
)
YBE_VERTEX = _word_relation("ybe-vertex", 3, ((1, 2), (1, 3), (2, 3)), slot="Y")
# R123 R145 R246 R356 = s * R356 Rm246 Rm145 R123
SIGNED_WORD = SimplexRelation(
    "signed-word", 6,
    tuple(("R", s) for s in TETRA_VERTEX_SITES),
    (("R", (3, 5, 6)), ("Rm", (2, 4, 6)), ("Rm", (1, 4, 5)), ("R", (1, 2, 3))),
)
FOUR_SIMPLEX = _word_relation("4simplex", 10, FOUR_SIMPLEX_SITES)
ANTI_FOUR_SIMPLEX = _word_relation("anti4", 10, FOUR_SIMPLEX_SITES, -1.0)
FIVE_SIMPLEX = _word_relation("5simplex", 15, FIVE_SIMPLEX_SITES)
SPECTRAL_TETRA = SimplexRelation(
    "spectral-tetra", 6,
    tuple((f"T{''.join(map(str, s))}", s) for s in TETRA_VERTEX_SITES),
    tuple((f"T{''.join(map(str, s))}", s) for s in reversed(TETRA_VERTEX_SITES)),
)

BUILTIN_RELATIONS = {
    r.name: r for r in (
        TETRA_VERTEX, TETRA_EDGE, ANTI_TETRA_VERTEX, YBE_BRAIDED, YBE_VERTEX,
        SIGNED_WORD, FOUR_SIMPLEX, ANTI_FOUR_SIMPLEX, FIVE_SIMPLEX, SPECTRAL_TETRA,
    )
}


def _factors(rel, word, slots):
    out = []
    for slot, sites in word:
        if slot not in slots:
            raise KeyError(f"relation {rel.name} needs slot {slot!r}")
        op = as_matrix(slots[slot], slot)
        if op.shape != (rel.local_dim ** len(sites),) * 2:
            raise DimensionError(
                f"slot {slot!r} has shape {op.shape}, expected side "
                f"{rel.local_dim ** len(sites)} for sites {sites}")
        out.append(EmbeddedOperator(op, sites, rel.n_sites, rel.local_dim))
    return out


def _apply_word(factors, block):
    # rightmost factor acts first
    for f in reversed(factors):
        block = apply_embedded(f, block)
    return block


def probe_vectors(dim, probes, seed):
    """Normalized complex Gaussian probes; column ``i`` comes from rng([seed, i])."""
    cols = []
    for i in range(probes):
        g = np.random.default_rng([seed, i])
        v = g.standard_normal(dim) + 1j * g.standard_normal(dim)
        cols.append(v / np.linalg.norm(v))
    return np.stack(cols, axis=1)


def check_relation(rel: SimplexRelation, slots, mode="dense", probes=DEFAULT_PROBES, seed=0):
    """Residual of ``rel`` for the given slot matrices.

    ``mode="dense"`` forms both sides as full matrices and returns
    ``residual(lhs, rhs_scale * rhs)``. ``mode="matrix-free"`` applies both
    words to ``probes`` random unit vectors and returns the worst relative
    mismatch ``|L v - s R v| / max(1, |R v|)``.
    """
    lhs = _factors(rel, rel.lhs, slots)
    rhs = _factors(rel, rel.rhs, slots)
    dim = rel.dim
    if mode == "dense":
        if dim > DENSE_LIMIT:
            raise DimensionError(f"dense check limited to dim {DENSE_LIMIT}, relation has {dim}")
        eye = np.eye(dim, dtype=complex)
        left = _apply_word(lhs, eye)
        right = _apply_word(rhs, eye)
        return residual(left, rel.rhs_scale * right)
    if mode == "matrix-free":
        if probes < 1:
            raise ValueError("need at least one probe vector")
        v = probe_vectors(dim, probes, seed)
        left = _apply_word(lhs, v)
        right = _apply_word(rhs, v)
        diff = np.linalg.norm(left - rel.rhs_scale * right, axis=0)
        scale = np.maximum(1.0, np.linalg.norm(right, axis=0))
        return float(np.max(diff / scale))
    raise ValueError(f"unknown mode {mode!r}")


def tetra_vertex(R):
    return check_relation(TETRA_VERTEX, {"R": R})


def tetra_edge(R):
    return check_relation(TETRA_EDGE, {"R": R})


def anti_tetra_vertex(R):
    return check_relation(ANTI_TETRA_VERTEX, {"R": R})


def signed_word_tetra(R, Rminus, rhs_scale=1.0):
    """Mixed relation with ``Rminus`` in the 246 and 145 slots of the right side."""
    return check_relation(SIGNED_WORD.scaled(rhs_scale), {"R": R, "Rm": Rminus})


def ybe_braided(Y):
    return check_relation(YBE_BRAIDED, {"Y": Y})


def ybe_vertex(Y):
    return check_relation(YBE_VERTEX, {"Y": Y})


def generalized_ybe(Y, M, alpha):
    """Residuals of ``Y12 Y13 Y23 = a Y23 Y13 Y12`` and ``M1 M2 Y = (1/a) Y M1 M2``."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    Y, M = as_matrix(Y), as_matrix(M)
    if Y.shape != (4, 4) or M.shape != (2, 2):
        raise DimensionError("generalized_ybe needs a 4x4 Y and a 2x2 M")
    res_yb = check_relation(YBE_VERTEX.scaled(alpha), {"Y": Y})
    mm = kron(M, M)
    res_mm = residual(mm @ Y, (1.0 / alpha) * (Y @ mm))
    return res_yb, res_mm


def four_simplex(R):
    return check_relation(FOUR_SIMPLEX, {"R": R})


def anti_four_simplex(R):
    return check_relation(ANTI_FOUR_SIMPLEX, {"R": R})


def five_simplex(R, probes=DEFAULT_PROBES, seed=0):
    """5-simplex residual; always matrix-free since the register has 2**15 states."""
    if probes < 1:
        raise ValueError("five_simplex needs probes >= 1")
    return check_relation(FIVE_SIMPLEX, {"R": R}, mode="matrix-free", probes=probes, seed=seed)


def spectral_tetra(family, M, mu_123, mu_145, mu_246, mu_356=0.0):
    """Residual of the spectral tetrahedron equation for ``T(mu) = Y(mu) (x) M``.

    ``family(mu)`` returns the 4x4 vertex-form Yang-Baxter matrix. The first
    three parameters play the roles of ``mu_12, mu_13, mu_23`` of the
    underlying Yang-Baxter triple on sites {1, 2, 4}; ``mu_356`` never meets
    another Y factor and may be anything.
    """
    M = as_matrix(M)
    mm = kron(M, M)
    slots = {}
    for sites, mu in zip(TETRA_VERTEX_SITES, (mu_123, mu_145, mu_246, mu_356)):
        Y = as_matrix(family(mu))
        if Y.shape != (4, 4):
            raise DimensionError(f"family({mu}) returned shape {Y.shape}")
        c = commutator_norm(Y, mm)
        if c > COMMUTANT_TOL:
            raise CommutantError("M incompatible with Y(μ)", c)
        slots["T" + "".join(map(str, sites))] = kron(Y, M)
    return check_relation(SPECTRAL_TETRA, slots)
