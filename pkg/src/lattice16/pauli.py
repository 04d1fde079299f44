"""Pauli tensor algebra on C^2, C^4 and C^16.

All matrices built here have entries in {0, +-1, +-i, +-1/2, +-1/4}.
Every such value is exactly representable in binary floating point, so
numpy complex arrays double as exact objects: sums and products of them
incur no rounding as long as no division by a non-power-of-two occurs.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "pauli",
    "sigma_pair",
    "psi_plus",
    "psi_pair",
    "projector",
    "eta",
    "index_map",
    "flip_operator",
    "EPSILON",
    "ALL_SITES",
]

# Sites of the 4x4 lattice L16, ordered by bit position 4*alpha + beta.
ALL_SITES = tuple((alpha, beta) for alpha in range(4) for beta in range(4))

_SIGMA = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# Transposition acts diagonally on the Pauli basis: T[s_a] = eps_aa s_a.
EPSILON = np.diag([1.0, 1.0, -1.0, 1.0])


def pauli(alpha: int) -> np.ndarray:
    """The 2x2 Pauli matrix s_alpha, with s_0 the identity."""
    return _SIGMA[alpha].copy()


@lru_cache(maxsize=None)
def _sigma_pair(alpha: int, beta: int) -> np.ndarray:
    m = np.kron(_SIGMA[alpha], _SIGMA[beta])
    m.setflags(write=False)
    return m


def sigma_pair(alpha: int, beta: int) -> np.ndarray:
    """The 4x4 tensor product s_alpha (x) s_beta."""
    return _sigma_pair(alpha, beta).copy()


def psi_plus() -> np.ndarray:
    """Maximally entangled unit vector in C^16: reshaped to 4x4 it is I/2."""
    v = np.zeros(16, dtype=complex)
    for i in range(4):
        v[4 * i + i] = 0.5
    return v


@lru_cache(maxsize=None)
def _psi_pair(alpha: int, beta: int) -> np.ndarray:
    v = np.kron(np.eye(4), _sigma_pair(alpha, beta)) @ psi_plus()
    v.setflags(write=False)
    return v


def psi_pair(alpha: int, beta: int) -> np.ndarray:
    """Basis vector (I_4 (x) s_ab) |psi_plus>."""
    return _psi_pair(alpha, beta).copy()


@lru_cache(maxsize=None)
def _projector(alpha: int, beta: int) -> np.ndarray:
    v = _psi_pair(alpha, beta)
    p = np.outer(v, v.conj())
    p.setflags(write=False)
    return p


def projector(alpha: int, beta: int) -> np.ndarray:
    """Rank-1 projector P_ab onto psi_pair(alpha, beta)."""
    return _projector(alpha, beta).copy()


@lru_cache(maxsize=None)
def _eta(alpha: int) -> np.ndarray:
    """eta^a_{bm} = Tr(s_a s_b s_m) / 2; Hermitian and unitary as a 4x4."""
    t = np.empty((4, 4), dtype=complex)
    for b in range(4):
        for m in range(4):
            t[b, m] = np.trace(_SIGMA[alpha] @ _SIGMA[b] @ _SIGMA[m]) / 2.0
    t.setflags(write=False)
    return t


def eta(alpha: int) -> np.ndarray:
    return _eta(alpha).copy()


@lru_cache(maxsize=None)
def index_map(alpha: int) -> tuple[int, int, int, int]:
    """i_alpha(beta): the unique m with s_a s_b proportional to s_m."""
    t = _eta(alpha)
    out = []
    for b in range(4):
        nz = [m for m in range(4) if abs(t[b, m]) > 0.5]
        if len(nz) != 1:
            raise AssertionError(f"eta^{alpha} row {b} not a monomial")
        out.append(nz[0])
    return tuple(out)


def flip_operator() -> np.ndarray:
    """F on C^16 with F(x (x) y) = y (x) x for 4-vectors x, y."""
    f = np.zeros((16, 16), dtype=complex)
    for a in range(4):
        for b in range(4):
            f[4 * b + a, 4 * a + b] = 1.0
    return f
