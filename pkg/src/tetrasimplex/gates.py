"""Quantum gates written as products of three-qubit tetrahedron operators.

Every factor is an 8x8 operator on a register of three sites ``(i, j, k)``
(default ``(1, 2, 3)``) that solves the vertex tetrahedron equation on its
own. A recipe stores its factors in written order: ``compose`` returns
``F[0] @ F[1] @ ...``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DimensionError
from .simplex import tetra_vertex
from .tensalg import H, I2, P, PI_MINUS, PI_PLUS, EmbeddedOperator, Z, as_matrix, embed, kron, residual
from .unitary import certify

DEFAULT_SITES = (1, 2, 3)
EYE8 = np.eye(8, dtype=complex)
EYE4 = np.eye(4, dtype=complex)


@dataclass(frozen=True, eq=False)
class GateRecipe:
    name: str
    factors: tuple
    target: np.ndarray
    labels: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "target", as_matrix(self.target, "target"))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"F{n}" for n in range(len(self.factors))))
        if len(self.labels) != len(self.factors):
            raise ValueError("one label per factor")

    @cached_property
    def factor_certificates(self):
        return tuple(tetra_vertex(f.op) for f in self.factors)


@dataclass(frozen=True)
class GateReport:
    name: str
    n_factors: int
    factor_residuals: tuple
    factor_unitary: tuple
    product_residual: float
    passed: bool = field(default=False)

    def items(self):
        out = {"gate": self.name, "factors": self.n_factors,
               "product_residual": self.product_residual}
        for n, (r, u) in enumerate(zip(self.factor_residuals, self.factor_unitary)):
            out[f"factor{n}_tetra_vertex"] = r
            out[f"factor{n}_unitary"] = u
        out["status"] = "ok" if self.passed else "FAIL"
        return out


def _on_register(local, sites):
    return EmbeddedOperator(as_matrix(local), tuple(sites), 3)


def _sites_ok(sites):
    if sorted(sites) != [1, 2, 3]:
        raise ValueError(f"sites must be a permutation of (1, 2, 3), got {sites}")
    return tuple(sites)


def compose(recipe: GateRecipe):
    out = EYE8.copy()
    for f in recipe.factors:
        if f.n_sites != 3 or f.dim != 8:
            raise DimensionError(f"factor on {f.n_sites} sites of dim {f.dim}; gates live on 3 qubits")
        out = out @ embed(f)
    return out


def verify(recipe: GateRecipe, tol=1e-10):
    """Per-factor tetrahedron residuals and unitarity, plus product vs target."""
    res = recipe.factor_certificates
    uni = tuple(certify(f.op, tol).is_unitary for f in recipe.factors)
    prod = residual(compose(recipe), recipe.target)
    ok = all(r <= tol for r in res) and all(uni) and prod <= tol
    return GateReport(recipe.name, len(res), res, uni, prod, ok)


def gphase(phi, psi):
    """``diag(e^{i(phi+psi)}, e^{i(psi-phi+pi)})``."""
    return np.diag([np.exp(1j * (phi + psi)), np.exp(1j * (psi - phi + np.pi))])


def u_phi_psi(phi, psi):
    c, s = np.cos(phi), np.sin(phi)
    return np.exp(1j * psi) * np.array([[c, 1j * s], [1j * s, c]])


def controlled(u, controls=1):
    """``|1..1><1..1| (x) u + rest (x) 1`` with the controls on the leading qubits."""
    u = as_matrix(u)
    n = 2 ** controls * u.shape[0]
    out = np.eye(n, dtype=complex)
    out[-u.shape[0]:, -u.shape[0]:] = u
    return out


def _hadamard(pos):
    ops = [I2, I2, I2]
    ops[pos] = H
    return kron(*ops)


def _recipe(name, locals_, target, labels, sites):
    sites = _sites_ok(sites)
    # targets are written on the logical (i, j, k) order and moved like the factors
    tgt = embed(_on_register(target, sites))
    return GateRecipe(name, [_on_register(m, sites) for m in locals_], tgt, labels)


def single_qubit_gate(U, site=1):
    """Recipe ``U = l_plus 1 + (l_minus - l_plus) Gamma_minus`` on one site."""
    U = as_matrix(U)
    if U.shape != (2, 2):
        raise DimensionError("single_qubit_gate needs a 2x2 matrix")
    if not certify(U).is_unitary:
        raise ValueError("U is not unitary")
    if site not in (1, 2, 3):
        raise ValueError("site must be 1, 2 or 3")
    ev = np.linalg.eigvals(U)
    lp, lm = sorted(ev, key=lambda z: (-z.real, -z.imag))
    if abs(lp - lm) <= 1e-12:
        R = lp * I2
        labels = ("scalar",)
    else:
        gamma_minus = (U - lp * I2) / (lm - lp)
        R = lp * I2 + (lm - lp) * gamma_minus
        labels = (f"U{site}",)
    ops = [I2, I2, I2]
    ops[site - 1] = R
    tgt = [I2, I2, I2]
    tgt[site - 1] = U
    return GateRecipe("single", [_on_register(kron(*ops), DEFAULT_SITES)], kron(*tgt), labels)


CZ4 = np.diag([1, 1, 1, -1]).astype(complex)
CNOT4 = controlled(np.array([[0, 1], [1, 0]]))
SWAP4 = P.copy()
ISWAP4 = np.array([[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]])
TOFFOLI8 = controlled(np.array([[0, 1], [1, 0]]), 2)
CCZ8 = np.diag([1] * 7 + [-1]).astype(complex)
FREDKIN8 = EYE8[[0, 1, 2, 3, 4, 6, 5, 7]]


def _cz_local():
    return EYE8 - 2 * kron(PI_MINUS, PI_MINUS, I2)


def _ccz_local():
    return EYE8 - 2 * kron(PI_MINUS, PI_MINUS, PI_MINUS)


def cz(sites=DEFAULT_SITES):
    return _recipe("cz", [_cz_local()], kron(CZ4, I2), ("CZ",), sites)


def cnot(sites=DEFAULT_SITES):
    Hj = _hadamard(1)
    return _recipe("cnot", [Hj, _cz_local(), Hj], kron(CNOT4, I2), ("H_j", "CZ", "H_j"), sites)


def calr(phi, psi):
    """``1 - (1/2)(1 - Z) (x) (1 - G Z)`` on the first two sites, times 1."""
    return kron(EYE4 - 0.5 * kron(I2 - Z, I2 - gphase(phi, psi) @ Z), I2)


def controlled_u(phi, psi, sites=DEFAULT_SITES):
    Hj = _hadamard(1)
    return _recipe("controlled_u", [Hj, calr(phi, psi), Hj],
                   kron(controlled(u_phi_psi(phi, psi)), I2), ("H_j", "R(phi,psi)", "H_j"), sites)


def swap(sites=DEFAULT_SITES):
    return _recipe("swap", [kron(P, I2)], kron(SWAP4, I2), ("P_ij",), sites)


def iswap_phase():
    d = (EYE4 + (-1 + 1j) * kron(PI_MINUS, I2) + (-1 + 1j) * kron(I2, PI_MINUS)
         + (2 - 2j) * kron(PI_MINUS, PI_MINUS))
    return kron(d, I2)


def iswap(sites=DEFAULT_SITES):
    return _recipe("iswap", [kron(P, I2), iswap_phase()], kron(ISWAP4, I2), ("P_ij", "phase"), sites)


def ccz(sites=DEFAULT_SITES):
    return _recipe("ccz", [_ccz_local()], CCZ8, ("CCZ",), sites)


def toffoli(sites=DEFAULT_SITES):
    Hk = _hadamard(2)
    return _recipe("toffoli", [Hk, _ccz_local(), Hk], TOFFOLI8, ("H_k", "CCZ", "H_k"), sites)


def deutsch_block(lam):
    return np.array([[1j * np.cos(lam), np.sin(lam)], [np.sin(lam), 1j * np.cos(lam)]])


def deutsch(lam, sites=DEFAULT_SITES):
    Hk = _hadamard(2)
    mid = EYE8 - kron(PI_MINUS, PI_MINUS, I2 - gphase(-lam, np.pi / 2) @ Z)
    return _recipe("deutsch", [Hk, mid, Hk], controlled(deutsch_block(lam), 2),
                   ("H_k", "D(lambda)", "H_k"), sites)


def margolus_phase():
    return EYE8 - 2 * kron(PI_MINUS, PI_PLUS, PI_MINUS)


def margolus(sites=DEFAULT_SITES):
    """Toffoli up to a sign on ``|101>``; the target is the factor product itself."""
    Hk = _hadamard(2)
    locals_ = [margolus_phase(), Hk, _ccz_local(), Hk]
    target = margolus_phase() @ TOFFOLI8
    return _recipe("margolus", locals_, target, ("phase", "H_k", "CCZ", "H_k"), sites)


def fredkin(sites=DEFAULT_SITES):
    Hj, Hk, c = _hadamard(1), _hadamard(2), _ccz_local()
    locals_ = [Hj, c, Hj, Hk, c, Hk, Hj, c, Hj]
    labels = ("H_j", "CCZ", "H_j", "H_k", "CCZ", "H_k", "H_j", "CCZ", "H_j")
    return _recipe("fredkin", locals_, FREDKIN8, labels, sites)


GATES = {
    "cz": cz, "cnot": cnot, "controlled_u": controlled_u, "swap": swap, "iswap": iswap,
    "ccz": ccz, "toffoli": toffoli, "deutsch": deutsch, "margolus": margolus, "fredkin": fredkin,
}
GATE_PARAMS = {"controlled_u": ("phi", "psi"), "deutsch": ("lambda",)}
