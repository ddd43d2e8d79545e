"""Tetrahedron operators built from Clifford-algebra words.

Three regimes are covered:

* Case 1: ``A**2 = B**2 = 1`` with ``AB = -BA``. Four three-letter words with
  complex weights; unitarity reduces to a small bilinear constraint system.
* Case 2: ``A**2 = 1``, ``B**2 = 0``. Never unitary unless only the pure
  ``AAA`` word survives.
* Case 3: diagonal combinations of the identity and the Z-projectors.

Canonical representatives are ``(A, B) = (X, Z)`` for Case 1, ``(Z, X+iY)``
for Case 2 and ``(A, B, C) = (X, Z, Y)`` for the ABC words.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from .errors import AnticommutationError, ConvergenceError
from .tensalg import I2, PI_MINUS, PI_PLUS, X, Y, Z, as_matrix, frobenius, kron

VARIANTS = ("BBB_AAB", "AAA_BBA")
ANTICOMM_TOL = 1e-12

# letter patterns of the four weighted words, per variant
_WORDS = {
    "BBB_AAB": ("BBB", "AAB", "ABA", "BAA"),
    "AAA_BBA": ("AAA", "BBA", "BAB", "ABB"),
}


@dataclass(frozen=True)
class PauliVector:
    a1: complex
    a2: complex
    a3: complex

    def materialize(self):
        return self.a1 * X + self.a2 * Y + self.a3 * Z

    def admissible(self, tol=1e-12):
        return abs(self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2 - 1) <= tol


@dataclass(frozen=True)
class CliffordCoeffs:
    alpha: tuple
    variant: str = "BBB_AAB"

    def __post_init__(self):
        a = tuple(complex(x) for x in self.alpha)
        if len(a) != 4:
            raise ValueError("need exactly four coefficients")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "alpha", a)

    def as_array(self):
        return np.array(self.alpha, dtype=complex)


def _check_anticommute(*ops):
    for a, b in itertools.combinations(ops, 2):
        scale = max(1.0, frobenius(a) * frobenius(b))
        if frobenius(a @ b + b @ a) > ANTICOMM_TOL * scale:
            raise AnticommutationError("operators do not anticommute")


def _word(letters, table):
    return kron(*(table[ch] for ch in letters))


def clifford_tetra(c: CliffordCoeffs, A=X, B=Z):
    """``sum_t alpha_t * word_t`` for the variant's four words."""
    A, B = as_matrix(A), as_matrix(B)
    _check_anticommute(A, B)
    table = {"A": A, "B": B}
    return sum(a * _word(w, table) for a, w in zip(c.alpha, _WORDS[c.variant]))


def constraint_residual(c: CliffordCoeffs):
    """Absolute values of the three bilinear unitarity constraints and the norm defect."""
    a = c.as_array()
    b = a.conj()
    c1 = a[0] * b[1] - a[3] * b[2] - a[2] * b[3] + a[1] * b[0]
    c2 = -a[3] * b[1] + a[0] * b[2] - a[1] * b[3] + a[2] * b[0]
    c3 = -a[2] * b[1] - a[1] * b[2] + a[0] * b[3] + a[3] * b[0]
    c4 = np.sum(np.abs(a) ** 2) - 1.0
    return np.abs(np.array([c1, c2, c3, c4]))


def case1_eigenvalues(c: CliffordCoeffs):
    """Closed-form spectrum of a Case-1 operator.

    The four words commute, square to one and multiply to ``-1``, so the joint
    eigenvalues are ``sum_t s_t alpha_t`` over sign patterns with an odd
    number of minus signs.
    """
    a = c.as_array()
    out = []
    for signs in itertools.product((1, -1), repeat=4):
        if np.prod(signs) == -1:
            out.append(np.dot(signs, a))
    return np.array(out)


def table1_solution(row, psi, phi, variant="BBB_AAB"):
    """Equal-modulus solutions (all moduli 1/2); rows differ in where the phases sit."""
    p, f = np.exp(1j * psi), np.exp(1j * phi)
    rows = {1: (p, p, f, f), 2: (p, f, p, f), 3: (p, f, f, p)}
    if row not in rows:
        raise ValueError("row must be 1, 2 or 3")
    return CliffordCoeffs(tuple(x / 2 for x in rows[row]), variant)


def table2_solution(kind, t=None, gamma=0.0, s=None, branch=1, variant="BBB_AAB"):
    """Solutions with three or two equal moduli.

    ``kind="three-equal"``: ``(t e^{ig}, w e^{ith}, t e^{ig}, t e^{ig})`` with
    ``w = sqrt(1 - 3 t**2)``. The constraints pin ``cos(g - th) = t / w``;
    ``branch`` picks the sign of ``g - th``. Needs ``|t| <= 1/2``.

    ``kind="two-equal"``: ``(s, -i c, i s, -c) / sqrt(2)`` with ``c = sqrt(1 - s**2)``.
    """
    if kind == "three-equal":
        if t is None:
            raise ValueError("three-equal needs t")
        if 1 - 3 * t * t < 0 or abs(t) > 0.5:
            raise ValueError(f"t={t} outside the domain |t| <= 1/2")
        w = np.sqrt(1 - 3 * t * t)
        theta = gamma - branch * np.arccos(np.clip(t / w, -1.0, 1.0))
        g = t * np.exp(1j * gamma)
        return CliffordCoeffs((g, w * np.exp(1j * theta), g, g), variant)
    if kind == "two-equal":
        if s is None or abs(s) > 1:
            raise ValueError("two-equal needs |s| <= 1")
        c = np.sqrt(1 - s * s)
        a = np.array([s, c * np.exp(-0.5j * np.pi), s * np.exp(0.5j * np.pi), c * np.exp(1j * np.pi)])
        return CliffordCoeffs(tuple(a / np.sqrt(2)), variant)
    raise ValueError(f"unknown kind {kind!r}")


def two_zero_solution(phi, theta, variant="BBB_AAB"):
    return CliffordCoeffs(
        (np.cos(phi) * np.exp(1j * theta), 0, 0, np.sin(phi) * np.exp(1j * (theta + np.pi / 2))),
        variant)


def _unpack(v):
    return v[:4] ** 2 * np.exp(1j * v[4:])


def _constraint_vector(v):
    a = _unpack(v)
    b = a.conj()
    return np.array([
        (a[0] * b[1] - a[3] * b[2] - a[2] * b[3] + a[1] * b[0]).real,
        (-a[3] * b[1] + a[0] * b[2] - a[1] * b[3] + a[2] * b[0]).real,
        (-a[2] * b[1] - a[1] * b[2] + a[0] * b[3] + a[3] * b[0]).real,
        np.sum(np.abs(a) ** 2) - 1.0,
    ])


def solve_constraints(seed=0, max_iter=200, tol=1e-10, start=None, variant="BBB_AAB",
                      restarts=10, full_output=False):
    """Find Case-1 coefficients satisfying all four constraints to ``tol``.

    Unknowns are four square-rooted moduli and four phases (modulus =
    root**2 keeps it nonnegative). Each attempt is a trust-region least
    squares run of at most ``max_iter`` evaluations; failed attempts restart
    from a fresh seeded point.
    """
    rng = np.random.default_rng(seed)
    if start is not None:
        c0 = start if isinstance(start, CliffordCoeffs) else CliffordCoeffs(tuple(start), variant)
        if constraint_residual(c0).max() <= tol:
            return (c0, {"nfev": 0, "residual": float(constraint_residual(c0).max())}) if full_output else c0
        a0 = c0.as_array()
        v0 = np.concatenate([np.sqrt(np.abs(a0)), np.angle(a0)])
    else:
        v0 = np.concatenate([rng.uniform(0.2, 0.9, 4), rng.uniform(-np.pi, np.pi, 4)])

    best, best_res, nfev = None, np.inf, 0
    for attempt in range(max(1, restarts)):
        # roots at exactly zero have zero gradient; nudge them
        v0 = v0 + 1e-3 * rng.standard_normal(8) * (np.abs(v0) < 1e-6)
        sol = least_squares(_constraint_vector, v0, method="trf", max_nfev=max_iter,
                            xtol=1e-15, ftol=1e-15, gtol=1e-15)
        nfev += sol.nfev
        c = CliffordCoeffs(tuple(_unpack(sol.x)), variant)
        res = float(constraint_residual(c).max())
        if res < best_res:
            best, best_res = c, res
        if res <= tol:
            return (c, {"nfev": nfev, "residual": res, "attempts": attempt + 1}) if full_output else c
        v0 = np.concatenate([rng.uniform(0.2, 0.9, 4), rng.uniform(-np.pi, np.pi, 4)])
    raise ConvergenceError("constraint solver did not reach tolerance", best_res, best)


# -- Case 2 -----------------------------------------------------------------

CASE2_A = Z
CASE2_B = X + 1j * Y


def case2_tetra(a, b, c, d, phases=(0.0, 0.0, 0.0, 0.0), variant="AAA_BBA"):
    """Case-2 operator with ``A = Z``, ``B = X + iY``.

    ``d`` weights the variant's pure word (``AAA`` or ``BBB``); ``a, b, c``
    weight the three mixed words in the variant's order.
    """
    coeffs = [r * np.exp(1j * t) for r, t in zip((a, b, c, d), phases)]
    words = _WORDS[variant]
    # words[0] is the pure word
    ordered = (coeffs[3], coeffs[0], coeffs[1], coeffs[2])
    table = {"A": CASE2_A, "B": CASE2_B}
    return sum(w * _word(word, table) for w, word in zip(ordered, words))


def nilpotency_check(R, max_power=8, tol=1e-12):
    """Smallest ``n <= max_power`` with ``|R^n| <= tol * max(1, |R|)^n``, else None."""
    R = as_matrix(R)
    scale = max(1.0, frobenius(R))
    P = np.eye(R.shape[0], dtype=complex)
    for n in range(1, max_power + 1):
        P = P @ R
        if frobenius(P) <= tol * scale ** n:
            return n
    return None


# -- Case 3 -----------------------------------------------------------------

_PROJ = (I2, PI_MINUS, PI_PLUS)


@dataclass(frozen=True, eq=False)
class ProjectorCoeffs:
    """27 weights indexed by (identity, Pi-minus, Pi-plus) on each of three legs."""

    alpha: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.alpha, dtype=complex)
        if a.size != 27:
            raise ValueError("need 27 coefficients")
        object.__setattr__(self, "alpha", a.reshape(3, 3, 3))

    @classmethod
    def single(cls, m, n, l, value=1.0):
        a = np.zeros((3, 3, 3), dtype=complex)
        a[m, n, l] = value
        return cls(a)


def case3_diagonal(p: ProjectorCoeffs):
    d = np.zeros(8, dtype=complex)
    for m, n, l in itertools.product(range(3), repeat=3):
        w = p.alpha[m, n, l]
        if w != 0:
            d += w * np.kron(np.kron(np.diag(_PROJ[m]), np.diag(_PROJ[n])), np.diag(_PROJ[l]))
    return d


def case3_tetra(p: ProjectorCoeffs):
    return np.diag(case3_diagonal(p))


def projector_coeffs_from_diagonal(diag):
    """Coefficients reproducing a given diagonal using only the pure projector words."""
    diag = np.asarray(diag, dtype=complex).ravel()
    if diag.size != 8:
        raise ValueError("need 8 diagonal entries")
    a = np.zeros((3, 3, 3), dtype=complex)
    for idx in range(8):
        bits = [(idx >> (2 - t)) & 1 for t in range(3)]
        # basis bit 0 is picked by Pi-plus (slot 2), bit 1 by Pi-minus (slot 1)
        m, n, l = (1 if bit else 2 for bit in bits)
        a[m, n, l] = diag[idx]
    return ProjectorCoeffs(a)


# -- ABC words ----------------------------------------------------------------

def abc_tetra(alpha, beta, triple=(X, Z, Y), placement="C-last"):
    """``alpha A A C + beta B B C`` (C-last) or ``alpha C A A + beta C B B`` (C-first)."""
    A, B, C = (as_matrix(m) for m in triple)
    _check_anticommute(A, B, C)
    if placement == "C-last":
        return alpha * kron(A, A, C) + beta * kron(B, B, C)
    if placement == "C-first":
        return alpha * kron(C, A, A) + beta * kron(C, B, B)
    raise ValueError(f"unknown placement {placement!r}")


def abc_word(alpha, beta, letters_a, letters_b, triple=(X, Z, Y)):
    """General two-term word ``alpha * word_a + beta * word_b`` in letters A, B, C."""
    A, B, C = (as_matrix(m) for m in triple)
    table = {"A": A, "B": B, "C": C}
    return alpha * _word(letters_a, table) + beta * _word(letters_b, table)
