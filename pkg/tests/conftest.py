import numpy as np
import pytest


def naive_embed(op, sites, n_sites):
    """Independent oracle: op (x) 1 on the leading legs, then a leg permutation."""
    op = np.asarray(op, dtype=complex)
    k = len(sites)
    full = np.kron(op, np.eye(2 ** (n_sites - k)))
    rest = [s for s in range(1, n_sites + 1) if s not in sites]
    order = list(sites) + rest  # leg t of `full` sits on register site order[t]
    t = full.reshape((2,) * (2 * n_sites))
    perm = [order.index(s) for s in range(1, n_sites + 1)]
    t = t.transpose(perm + [n_sites + p for p in perm])
    return t.reshape(2 ** n_sites, 2 ** n_sites)


def naive_word(word, slots, n_sites):
    out = np.eye(2 ** n_sites, dtype=complex)
    for slot, sites in word:
        out = out @ naive_embed(slots[slot], sites, n_sites)
    return out


def naive_residual(rel, slots):
    left = naive_word(rel.lhs, slots, rel.n_sites)
    right = rel.rhs_scale * naive_word(rel.rhs, slots, rel.n_sites)
    return np.linalg.norm(left - right) / max(1.0, np.linalg.norm(right))


def cgauss(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
