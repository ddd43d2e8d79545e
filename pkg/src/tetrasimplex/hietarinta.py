"""Hietarinta Yang-Baxter classes, their compatible single-qubit M's, and lifts.

A lift appends a one-qubit operator ``M`` to a 4x4 vertex-form Yang-Baxter
matrix ``Y``: ``T = Y (x) M`` ("YM") or ``T = M (x) Y`` ("MY"). Whenever
``[Y, M (x) M] = 0`` the result solves the vertex tetrahedron equation.

The class constructors return the braided form; lifts expect the vertex form
``P @ Y`` and :func:`vertex_form` applies that explicitly.

Unitary families are indexed ``row2`` .. ``row7`` (row 1 is the Clifford
family in :mod:`tetrasimplex.clifford`); each row comes in both placements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .archive import CatalogRecord
from .clifford import CliffordCoeffs, case1_eigenvalues, clifford_tetra
from .errors import CommutantError, ConstraintError, SingularMatrixError
from .simplex import ybe_vertex
from .tensalg import I2, P, X, Y as PAULI_Y, Z, as_matrix, commutator_norm, frobenius, inverse, kron, random_unitary, residual

CLASS_IDS = ("H31", "H21", "H22", "H23", "H11", "H12", "H13", "H14", "H01", "H02", "PERM")
CLASS_PARAMS = {
    "H31": ("k", "p", "q", "s"),
    "H21": ("k", "p", "q"),
    "H22": ("k", "p", "q"),
    "H23": ("k", "p", "q", "s"),
    "H11": ("p", "q"),
    "H12": ("k", "p", "q"),
    "H13": ("k", "p", "q"),
    "H14": ("k", "p", "q"),
    "H01": (),
    "H02": (),
    "PERM": (),
}
LIFT_TOL = 1e-10
CONSTRAINT_TOL = 1e-12


def _cgauss(rng, size=None):
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


@dataclass(frozen=True)
class HClass:
    id: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.id not in CLASS_IDS:
            raise ValueError(f"unknown Hietarinta class {self.id!r}")
        missing = [n for n in CLASS_PARAMS[self.id] if n not in self.params]
        if missing:
            raise ValueError(f"class {self.id} needs parameters {missing}")

    @classmethod
    def sample(cls, id, rng):
        """Class with generic complex parameters drawn from ``rng``."""
        return cls(id, {n: complex(_cgauss(rng)) for n in CLASS_PARAMS[id]})


def build_yb(c: HClass, require_invertible=False):
    """Braided-form 4x4 matrix of class ``c``."""
    g = c.params.get
    k, p, q, s = g("k"), g("p"), g("q"), g("s")
    if c.id == "H31":
        m = [[k, 0, 0, 0], [0, 0, p, 0], [0, q, 0, 0], [0, 0, 0, s]]
    elif c.id == "H21":
        m = [[k * k, 0, 0, 0], [0, k * k - p * q, k * p, 0], [0, k * q, 0, 0], [0, 0, 0, k * k]]
    elif c.id == "H22":
        m = [[k * k, 0, 0, 0], [0, k * k - p * q, k * p, 0], [0, k * q, 0, 0], [0, 0, 0, -p * q]]
    elif c.id == "H23":
        m = [[k, p, q, s], [0, 0, k, p], [0, k, 0, q], [0, 0, 0, k]]
    elif c.id == "H11":
        m = [[p * p + 2 * p * q - q * q, 0, 0, p * p - q * q],
             [0, p * p - q * q, p * p + q * q, 0],
             [0, p * p + q * q, p * p - q * q, 0],
             [p * p - q * q, 0, 0, p * p - 2 * p * q - q * q]]
    elif c.id == "H12":
        m = [[p, 0, 0, k], [0, p - q, p, 0], [0, q, 0, 0], [0, 0, 0, -q]]
    elif c.id == "H13":
        m = [[k * k, -k * p, k * p, p * q], [0, 0, k * k, k * q], [0, k * k, 0, -k * q], [0, 0, 0, k * k]]
    elif c.id == "H14":
        m = [[0, 0, 0, p], [0, k, 0, 0], [0, 0, k, 0], [q, 0, 0, 0]]
    elif c.id == "H01":
        m = [[1, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [0, 0, 0, 1]]
    elif c.id == "H02":
        m = [[1, 0, 0, 1], [0, 1, 1, 0], [0, -1, 1, 0], [-1, 0, 0, 1]]
    else:
        m = P
    Y = np.array(m, dtype=complex)
    if require_invertible:
        inverse(Y)
    return Y


def vertex_form(Y_braided):
    return P @ as_matrix(Y_braided)


@dataclass(frozen=True)
class MOption:
    """One entry of a class's compatible-M list.

    ``free`` names the entries left arbitrary (subset of m1..m4); ``matrix``
    fills them in.
    """

    label: str
    invertible: bool
    free: tuple
    build: Callable = field(repr=False, compare=False)

    def matrix(self, **values):
        missing = [n for n in self.free if n not in values]
        if missing:
            raise ValueError(f"M option {self.label!r} needs {missing}")
        return np.array(self.build(**{n: values[n] for n in self.free}), dtype=complex)

    def sample(self, rng):
        return self.matrix(**{n: complex(_cgauss(rng)) for n in self.free})


def _const(label, m, invertible=True):
    arr = np.array(m, dtype=complex)
    return MOption(label, invertible, (), lambda: arr)


def compatible_m(c: HClass):
    """Single-qubit M's with ``[Y, M (x) M] = 0`` for class ``c``.

    Projector-type options are normalized to be idempotent; see the package
    notes for the cases where a printed form needed correcting.
    """
    g = c.params.get
    diag = MOption("diag(m1,m4)", True, ("m1", "m4"), lambda m1, m4: [[m1, 0], [0, m4]])
    upper_equal = MOption("(m1,m2;0,m1)", True, ("m1", "m2"), lambda m1, m2: [[m1, m2], [0, m1]])
    zed = _const("Z", Z)
    if c.id in ("H31", "H22"):
        return [diag]
    if c.id == "H21":
        return [diag,
                MOption("(0,0;m3,0)", False, ("m3",), lambda m3: [[0, 0], [m3, 0]]),
                MOption("(0,m2;0,0)", False, ("m2",), lambda m2: [[0, m2], [0, 0]])]
    if c.id == "H23":
        p, q, s = g("p"), g("q"), g("s")
        return [upper_equal, _const("(1,-2s/(p+q);0,1)", [[1, -2 * s / (p + q)], [0, 1]])]
    if c.id == "H11":
        p, q = g("p"), g("q")
        a = np.sqrt(p - q) / np.sqrt(p + q)
        b = (p - q) / (p + q)
        opts = [zed]
        for e in (1, -1):
            opts.append(_const(f"projector(+b,{'+' if e > 0 else '-'})",
                               np.array([[1, e * a], [e * a, b]]) / (1 + b), False))
        for e in (1, -1):
            opts.append(_const(f"projector(-b,{'+' if e > 0 else '-'})",
                               np.array([[1, e * a], [-e * a, -b]]) / (1 - b), False))
        return opts
    if c.id == "H12":
        k, p, q = g("k"), g("p"), g("q")
        opts = [zed]
        for e in (1, -1):
            a = e * np.sqrt(p + q) / np.sqrt(k)
            opts.append(_const(f"projector({'+' if e > 0 else '-'})", [[1, 1 / a], [0, 0]], False))
        return opts
    if c.id == "H13":
        return [upper_equal, MOption("(0,m2;0,0)", False, ("m2",), lambda m2: [[0, m2], [0, 0]])]
    if c.id == "H14":
        p, q = g("p"), g("q")
        opts = [zed]
        for e in (1, -1):
            opts.append(_const(f"(0,1;{'+' if e > 0 else '-'}sqrt(q/p),0)",
                               [[0, 1], [e * np.sqrt(q) / np.sqrt(p), 0]]))
        return opts
    if c.id == "H01":
        return [zed, _const("(0,1;0,0)", [[0, 1], [0, 0]], False)]
    if c.id == "H02":
        return [zed]
    return [MOption("(m1,m2;m3,m4)", True, ("m1", "m2", "m3", "m4"),
                    lambda m1, m2, m3, m4: [[m1, m2], [m3, m4]])]


def commutant_residual(Y, M):
    """Relative size of ``[Y, M (x) M]`` (or ``[T, M (x) M (x) M]`` for 8x8 T)."""
    Y, M = as_matrix(Y), as_matrix(M)
    legs = int(round(np.log2(Y.shape[0])))
    mm = kron(*([M] * legs)) if legs > 1 else M
    return commutator_norm(Y, mm) / max(1.0, frobenius(Y) * frobenius(mm))


def lift(Y, M, placement="YM", tol=LIFT_TOL, check=True):
    """``Y (x) M`` or ``M (x) Y`` for a vertex-form Y."""
    Y, M = as_matrix(Y), as_matrix(M)
    if check:
        c = commutant_residual(Y, M)
        if c > tol:
            raise CommutantError(f"[Y, M(x)M] = {c:.3e} exceeds {tol:g}", c)
        r = ybe_vertex(Y)
        if r > tol:
            raise ConstraintError("vertex Yang-Baxter equation", r)
    if placement == "YM":
        return kron(Y, M)
    if placement == "MY":
        return kron(M, Y)
    raise ValueError(f"unknown placement {placement!r}")


@dataclass(frozen=True, eq=False)
class GaugeTransform:
    Q: np.ndarray
    kappa: complex = 1.0

    def __post_init__(self):
        Q = as_matrix(self.Q)
        if Q.shape != (2, 2):
            raise ValueError("Q must be 2x2")
        if abs(np.linalg.det(Q)) <= 1e-12:
            raise SingularMatrixError("singular matrix")
        object.__setattr__(self, "Q", Q)


def gauge_conjugate(R, g: GaugeTransform):
    """``kappa (Q x Q x Q) R (Q x Q x Q)^-1``."""
    R = as_matrix(R)
    qi = inverse(g.Q)
    legs = int(round(np.log2(R.shape[0])))
    return g.kappa * kron(*([g.Q] * legs)) @ R @ kron(*([qi] * legs))


# -- unitary families ---------------------------------------------------------

Y_TILDE_H02 = build_yb(HClass("H02")) / np.sqrt(2)
ROWS = (2, 3, 4, 5, 6, 7)
PLACEMENTS = ("YM", "MY")
ROW_PARAMS = {2: ("p", "q", "r"), 3: (), 4: ("p", "q"), 5: ("thetap", "thetaq"), 6: (), 7: ("m1", "m2", "m3", "m4")}


@dataclass(frozen=True, eq=False)
class UnitaryFamilyPoint:
    """One point of a lifted unitary family.

    ``Q`` is the 2x2 gauge matrix (entries q1 q2 / q3 q4, row-major) and
    ``kappa`` the overall phase. ``branch`` (+1/-1) selects the sign choice
    in rows 5 and 6.
    """

    row: int
    placement: str = "YM"
    branch: int = 1
    params: dict = field(default_factory=dict)
    Q: np.ndarray = field(default_factory=lambda: I2.copy())
    kappa: complex = 1.0

    def __post_init__(self):
        if self.row not in ROWS:
            raise ValueError(f"row must be one of {ROWS}")
        if self.placement not in PLACEMENTS:
            raise ValueError(f"placement must be one of {PLACEMENTS}")
        if self.branch not in (1, -1):
            raise ValueError("branch must be +1 or -1")
        object.__setattr__(self, "Q", as_matrix(self.Q))
        missing = [n for n in ROW_PARAMS[self.row] if n not in self.params]
        if missing:
            raise ValueError(f"row {self.row} needs parameters {missing}")

    @property
    def family_id(self):
        return f"row{self.row}-{self.placement}"


def _principal_sqrt(z):
    return np.sqrt(complex(z))


def _unit_phase(theta):
    # principal argument in (-pi, pi] so sqrt(e^{i t}) = e^{i t / 2}
    t = np.angle(np.exp(1j * theta))
    if t == -np.pi:
        t = np.pi
    return t


def family_operands(pt: UnitaryFamilyPoint):
    """Vertex-form Y and the appended M of a family point (before gauging)."""
    prm = pt.params
    if pt.row == 2:
        return np.diag([1, prm["p"], prm["q"], prm["r"]]).astype(complex), Z.copy()
    if pt.row == 3:
        return vertex_form(Y_TILDE_H02), Z.copy()
    if pt.row == 4:
        return vertex_form(build_yb(HClass("H14", {"k": 1, "p": prm["p"], "q": prm["q"]}))), Z.copy()
    if pt.row == 5:
        tp, tq = _unit_phase(prm["thetap"]), _unit_phase(prm["thetaq"])
        ep, eq = np.exp(1j * tp), np.exp(1j * tq)
        Y = vertex_form(build_yb(HClass("H14", {"k": 1, "p": ep, "q": eq})))
        m = pt.branch * _principal_sqrt(eq) / _principal_sqrt(ep)
        return Y, np.array([[0, 1], [m, 0]], dtype=complex)
    if pt.row == 6:
        return kron(X, X), np.array([[0, 1], [pt.branch, 0]], dtype=complex)
    M = np.array([[prm["m1"], prm["m2"]], [prm["m3"], prm["m4"]]], dtype=complex)
    return P.copy(), M


def family_constraints(pt: UnitaryFamilyPoint):
    """Named residuals of every constraint the row imposes."""
    Q = pt.Q
    q1, q2, q3, q4 = Q.ravel()
    scale = max(1.0, frobenius(Q) ** 2)
    z = q1 * np.conj(q2) + q3 * np.conj(q4)
    x = abs(q1) ** 2 + abs(q3) ** 2
    y = abs(q2) ** 2 + abs(q4) ** 2
    out = {"|kappa|=1": abs(abs(pt.kappa) - 1)}
    zero_z = abs(z) / scale
    prm = pt.params
    if pt.row == 2:
        for n in ("p", "q", "r"):
            out[f"|{n}|=1"] = abs(abs(prm[n]) - 1)
        out["q3=-q1*conj(q2)/conj(q4)"] = zero_z
    elif pt.row == 3:
        out["q3=-q1*conj(q2)/conj(q4)"] = zero_z
        out["|q1|=|q4|"] = abs(abs(q1) - abs(q4)) / np.sqrt(scale)
    elif pt.row == 4:
        out["q3=-q1*conj(q2)/conj(q4)"] = zero_z
        out["|q1|^2=|q||q4|^2"] = abs(abs(q1) ** 2 - abs(prm["q"]) * abs(q4) ** 2) / scale
        out["|q4|^2=|p||q1|^2"] = abs(abs(q4) ** 2 - abs(prm["p"]) * abs(q1) ** 2) / scale
    elif pt.row == 5:
        # Q = (|a| e^{i t1}, b; -conj(b) e^{i(t1+t4)}, |a| e^{i t4}) <=> z = 0 and |q1| = |q4|
        out["q3=-conj(q2)e^{i(theta1+theta4)}"] = zero_z
        out["|q1|=|q4|"] = abs(abs(q1) - abs(q4)) / np.sqrt(scale)
        for n in ("thetap", "thetaq"):
            out[f"{n} real"] = abs(np.imag(prm[n]))
    elif pt.row == 6:
        out["|q1|^2+|q3|^2=|q2|^2+|q4|^2"] = abs(x - y) / scale
        if pt.branch == 1:
            out["conj(q2)q1-conj(q1)q2=conj(q3)q4-conj(q4)q3"] = abs(z.imag) / scale
        else:
            out["z=0"] = zero_z
    else:
        M = family_operands(pt)[1]
        out["Q in U(2)"] = residual(Q.conj().T @ Q, I2)
        out["M in U(2)"] = residual(M.conj().T @ M, I2)
    return out


def unitary_family(pt: UnitaryFamilyPoint, tol=CONSTRAINT_TOL):
    """Gauge-conjugated lift for a family point, plus its constraint certificate.

    Raises :class:`ConstraintError` naming the first violated constraint.
    """
    cert = family_constraints(pt)
    for name, res in cert.items():
        if not res <= tol:
            raise ConstraintError(name, res)
    Y, M = family_operands(pt)
    T = lift(Y, M, pt.placement)
    return gauge_conjugate(T, GaugeTransform(pt.Q, pt.kappa)), cert


def family_eigenvalues(pt: UnitaryFamilyPoint):
    """Closed-form eigenvalue multiset of the row (times kappa)."""
    prm = pt.params
    pm = np.array([1, -1])
    if pt.row == 2:
        ev = np.concatenate([pm * v for v in (1, prm["p"], prm["q"], prm["r"])])
    elif pt.row == 3:
        ev = np.concatenate([pm, pm, pm * (1 + 1j) / np.sqrt(2), pm * (1 - 1j) / np.sqrt(2)])
    elif pt.row == 4:
        w = _principal_sqrt(prm["p"] * prm["q"])
        ev = np.concatenate([pm, pm, pm * w, pm * w])
    elif pt.row == 5:
        tp, tq = _unit_phase(prm["thetap"]), _unit_phase(prm["thetaq"])
        c = 1 if pt.branch == 1 else 1j
        a = c * np.exp(-0.25j * (tp - tq))
        b = c * np.exp(0.25j * (tp + 3 * tq))
        ev = np.concatenate([pm * a, pm * a, pm * b, pm * b])
    elif pt.row == 6:
        c = 1 if pt.branch == 1 else 1j
        ev = np.concatenate([pm * c] * 4)
    else:
        m1, m2, m3, m4 = (complex(prm[n]) for n in ("m1", "m2", "m3", "m4"))
        d = _principal_sqrt((m1 - m4) ** 2 + 4 * m2 * m3)
        x1 = (pm * d + m1 + m4) / 2
        x2 = (pm * d - m1 - m4) / 2
        ev = np.concatenate([x1, x1, x1, x2])
    return pt.kappa * ev.astype(complex)


def _z_free_q(rng):
    q1, q2, q4 = _cgauss(rng, 3)
    return np.array([[q1, q2], [-q1 * np.conj(q2) / np.conj(q4), q4]])


def sample_family_point(row, rng, placement="YM", branch=1):
    """Random admissible point of ``row`` drawn from ``rng``."""
    kappa = np.exp(1j * rng.uniform(-np.pi, np.pi))
    phase = lambda: np.exp(1j * rng.uniform(-np.pi, np.pi))
    if row == 2:
        params = {"p": phase(), "q": phase(), "r": phase()}
        Q = _z_free_q(rng)
    elif row == 3:
        params = {}
        q1, q2 = _cgauss(rng, 2)
        q4 = abs(q1) * phase()
        Q = np.array([[q1, q2], [-q1 * np.conj(q2) / np.conj(q4), q4]])
    elif row == 4:
        rho = np.exp(0.5 * rng.standard_normal())
        params = {"p": rho * phase(), "q": phase() / rho}
        q1, q2 = _cgauss(rng, 2)
        q4 = abs(q1) * np.sqrt(rho) * phase()
        Q = np.array([[q1, q2], [-q1 * np.conj(q2) / np.conj(q4), q4]])
    elif row == 5:
        params = {"thetap": rng.uniform(-np.pi, np.pi), "thetaq": rng.uniform(-np.pi, np.pi)}
        a = abs(_cgauss(rng)) + 0.1
        t1, t4 = rng.uniform(-np.pi, np.pi, 2)
        q2 = _cgauss(rng)
        Q = np.array([[a * np.exp(1j * t1), q2], [-np.conj(q2) * np.exp(1j * (t1 + t4)), a * np.exp(1j * t4)]])
    elif row == 6:
        params = {}
        W = random_unitary(2, rng)
        x = 1.0 + rng.exponential()
        if branch == 1:
            zr = rng.uniform(-0.9, 0.9) * x
            w, U = np.linalg.eigh(np.array([[x, zr], [zr, x]]))
            Q = W @ U @ np.diag(np.sqrt(w)) @ U.conj().T
        else:
            Q = np.sqrt(x) * W
    elif row == 7:
        M = random_unitary(2, rng)
        params = dict(zip(("m1", "m2", "m3", "m4"), M.ravel()))
        Q = random_unitary(2, rng)
    else:
        raise ValueError(f"row must be one of {ROWS}")
    return UnitaryFamilyPoint(row, placement, branch, params, Q, kappa)


def branches(row):
    return (1, -1) if row in (5, 6) else (1,)


# -- unitarity deviation and the structure of Q'Q ----------------------------

def deviation(R, Q):
    """``H R^-1 - R^dag H`` with ``H = (Q^dag Q)^{(x)3}``; zero iff the gauged R is unitary."""
    R, Q = as_matrix(R), as_matrix(Q)
    G = Q.conj().T @ Q
    H = kron(G, G, G)
    return H @ inverse(R) - R.conj().T @ H


@dataclass(frozen=True)
class HReport:
    z: complex
    qdagq_diagonal: bool
    H_diag_nonzero: bool
    H_offdiag_all_or_none: bool
    H_offdiag_zero: bool


def h_propositions(Q, tol=1e-12):
    Q = as_matrix(Q)
    inverse(Q)
    q1, q2, q3, q4 = Q.ravel()
    z = q1 * np.conj(q2) + q3 * np.conj(q4)
    G = Q.conj().T @ Q
    H = kron(G, G, G)
    scale = np.max(np.abs(H))
    off = np.abs(H[~np.eye(8, dtype=bool)])
    zero = off <= tol * scale
    return HReport(
        complex(z),
        bool(abs(z) <= tol * max(G[0, 0].real, G[1, 1].real)),
        bool(np.all(np.diag(H).real > tol * scale)),
        bool(zero.all() or not zero.any()),
        bool(zero.all()),
    )


def remark41_equivalences(alpha=1.0, beta=0.0, p=1.0, projector_alphas=None, q_diag=(1.0, 1.0), q_anti=(1.0, 1.0)):
    """Residuals of the two Clifford-YB to Hietarinta reductions.

    (i) ``alpha XX + beta ZZ`` is conjugated into the H1,4 form and Pauli Y is
    sent to ``-Z``. (ii) the projector Yang-Baxter operator (nine weights) is
    conjugated by a diagonal and an antidiagonal Q into H3,1 diagonal form.
    """
    if alpha == beta:
        raise ValueError("branch singularity: alpha == beta")
    s = np.sqrt(complex(p)) / np.sqrt(complex(alpha - beta))
    Q = 0.5 * np.array([[s, 1j * s], [1j, 1]])
    qq = kron(Q, Q)
    yb = alpha * kron(X, X) + beta * kron(Z, Z)
    target = np.array([[0, 0, 0, p], [0, 0, alpha + beta, 0], [0, alpha + beta, 0, 0],
                       [(alpha - beta) ** 2 / p, 0, 0, 0]], dtype=complex)
    res_h14 = residual(qq @ yb @ inverse(qq), target)
    res_y = residual(Q @ PAULI_Y @ inverse(Q), -Z)

    a = np.zeros(9, dtype=complex)
    if projector_alphas is None:
        a[0] = 1
    else:
        a[:] = projector_alphas
    a1, a2, a3, a4, a5, a6, a7, a8, a9 = a
    pp, pm = (I2 + Z) / 2, (I2 - Z) / 2
    proj_yb = (a1 * np.eye(4) + a2 * kron(pp, I2) + a3 * kron(I2, pp) + a4 * kron(pm, I2)
               + a5 * kron(I2, pm) + a6 * kron(pp, pp) + a7 * kron(pm, pm)
               + a8 * kron(pp, pm) + a9 * kron(pm, pp))
    natural = np.diag([a1 + a2 + a3 + a6, a1 + a2 + a5 + a8, a1 + a3 + a4 + a9, a1 + a4 + a5 + a7])
    Qd = np.diag(q_diag).astype(complex)
    Qa = np.array([[0, q_anti[0]], [q_anti[1], 0]], dtype=complex)
    res_diag = residual(kron(Qd, Qd) @ proj_yb @ inverse(kron(Qd, Qd)), natural)
    res_anti = residual(kron(Qa, Qa) @ proj_yb @ inverse(kron(Qa, Qa)), natural[::-1, ::-1])
    return {
        "h14_conjugation": res_h14,
        "pauli_y_to_minus_z": res_y,
        "h31_diagonal_q": res_diag,
        "h31_antidiagonal_q": res_anti,
    }


# -- catalog ---------------------------------------------------------------

_ROW_INFO = {
    2: (("Family1", "F1"), "P*H3,1 phases diag(1,p,q,r) with M = Z",
        ("p: unit complex", "q: unit complex", "r: unit complex"),
        ("|p|=|q|=|r|=1", "q3=-q1*conj(q2)/conj(q4)"), "{±1, ±p, ±q, ±r}"),
    3: (("Family2", "F2"), "P*H0,2/sqrt(2) with M = Z", (),
        ("q3=-q1*conj(q2)/conj(q4)", "|q1|=|q4|"), "{±1, ±1, ±(1+i)/√2, ±(1-i)/√2}"),
    4: (("Family3", "F3"), "P*H1,4 (k=1) with M = Z", ("p: complex", "q: complex"),
        ("q3=-q1*conj(q2)/conj(q4)", "|q1|^2=|q||q4|^2", "|q4|^2=|p||q1|^2"),
        "{±1, ±1, ±√(pq), ±√(pq)}"),
    5: (("Family3-offdiag", "F3b"), "P*H1,4 phases with M = (0,1;±√(e^{iθq})/√(e^{iθp}),0)",
        ("thetap: real", "thetaq: real", "branch: ±"),
        ("q3=-conj(q2)e^{i(theta1+theta4)}", "|q1|=|q4|"),
        "c·{±e^{-i(θp-θq)/4} ×2, ±e^{+i(θp+3θq)/4} ×2}, c=1 (+), c=i (-)"),
    6: (("Family4", "F4"), "X⊗X with M = (0,1;±1,0)", ("branch: ±",),
        ("|q1|^2+|q3|^2=|q2|^2+|q4|^2", "branch +: Im(z)=0", "branch -: z=0"),
        "{±1}×4 (+), {±i}×4 (-)"),
    7: (("Family5", "F5"), "permutation P with M in U(2)", ("m1..m4: entries of M in U(2)",),
        ("Q in U(2)", "M in U(2)"), "{X1±, X1±, X1±, X2±}"),
}


def catalog():
    """All catalog records: 13 unitary families plus auxiliary constructions."""
    recs = [CatalogRecord(
        "row1", "unitary", ("clifford-case1",), "BBB_AAB|AAA_BBA",
        ("alpha0..alpha3: complex",),
        ("three bilinear relations", "sum |alpha_t|^2 = 1"),
        "{±(α0-α1-α2-α3), ±(α1-α0-α2-α3), ±(α2-α0-α1-α3), ±(α3-α0-α1-α2)}",
        "Clifford case 1, A=X, B=Z")]
    for row in ROWS:
        aliases, ref, params, cons, eig = _ROW_INFO[row]
        for pl in PLACEMENTS:
            recs.append(CatalogRecord(
                f"row{row}-{pl}", "unitary", aliases, pl, params,
                ("|kappa|=1",) + cons, "kappa·" + eig, ref))
    recs += [
        CatalogRecord("clifford-case2", "non-unitary", (), "BBB_AAB|AAA_BBA",
                      ("a,b,c,d: real", "theta_a..theta_d: real"), ("A=Z", "B=X+iY"),
                      "BBB_AAB: nilpotent", "Clifford case 2"),
        CatalogRecord("clifford-case3", "auxiliary", (), "",
                      ("27 projector-word weights",), ("unitary iff all diagonal entries are phases",),
                      "diagonal entries", "Clifford case 3"),
        CatalogRecord("abc-tetra", "auxiliary", (), "C-last|C-first", ("alpha, beta: complex",),
                      ("|alpha|^2+|beta|^2=1", "cos(arg alpha - arg beta)=0"), "", "ABC words"),
        CatalogRecord("lift-4simplex", "auxiliary", (), "Y at legs (1,2)|(2,3)|(3,4)",
                      ("Y: vertex YB", "M: 2x2"), ("[Y, M(x)M]=0",), "", "4-simplex lift"),
        CatalogRecord("lift-5simplex", "auxiliary", (), "Y at legs (1,2)..(4,5)",
                      ("Y: vertex YB", "M: 2x2"), ("[Y, M(x)M]=0",), "", "5-simplex lift"),
        CatalogRecord("anti-4simplex", "auxiliary", (), "", (), (), "", "AAAC+BBBC word"),
    ]
    return recs


ALIASES = {}
for _rec in catalog():
    for _a in _rec.aliases:
        ALIASES.setdefault(_a.lower(), _rec.family_id.split("-")[0])


def row1_operator(c: CliffordCoeffs):
    return clifford_tetra(c)


def row1_eigenvalues(c: CliffordCoeffs):
    return case1_eigenvalues(c)
