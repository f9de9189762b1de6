"""Reduced density matrices, Bloch vectors, and two-qubit correlation blocks.

The production path reduces the amplitude vector directly (``2**n`` work per
marginal, no ``2**n x 2**n`` outer product). ``correlation_component`` is a
deliberately independent cross-check that expands the full operator Kronecker
product; it exists to validate the fast path and is capped at 10 qubits.

Pauli index convention throughout: 0 = identity, 1 = x, 2 = y, 3 = z.
Correlation values are mathematically real; a residual imaginary part above
``IMAG_TOL`` always indicates an implementation bug and raises.
"""
from __future__ import annotations

from functools import reduce
from typing import Sequence

import numpy as np

from .statevec import PureState

HERMITIAN_TOL = 1e-10
IMAG_TOL = 1e-10
ORACLE_MAX_QUBITS = 10

PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)

# PAULI_KRON[i, j] = sigma_{i+1} (x) sigma_{j+1}, for the pair-block traces
PAULI_KRON = np.empty((3, 3, 4, 4), dtype=np.complex128)
for _i in range(3):
    for _j in range(3):
        PAULI_KRON[_i, _j] = np.kron(PAULI[_i + 1], PAULI[_j + 1])
del _i, _j


def _check_hermitian(rho: np.ndarray, what: str) -> np.ndarray:
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"{what} must be a square matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise ValueError(f"{what} is not Hermitian within {HERMITIAN_TOL}")
    return rho


def _real(values: np.ndarray, what: str) -> np.ndarray:
    imag = np.max(np.abs(np.imag(values)))
    if imag > IMAG_TOL:
        raise ValueError(
            f"{what} has imaginary residue {imag:.3e} > {IMAG_TOL}; this indicates a bug"
        )
    return np.real(values)


def reduced_density_single(state: PureState, k: int) -> np.ndarray:
    """2x2 reduced density matrix of qubit ``k`` (trace over all others)."""
    if not 0 <= k < state.n:
        raise ValueError(f"qubit index {k} out of range for n={state.n}")
    psi = state.amplitudes.reshape((2,) * state.n)
    m = np.moveaxis(psi, k, 0).reshape(2, -1)
    return m @ m.conj().T


def reduced_density_pair(state: PureState, k: int, l: int) -> np.ndarray:
    """4x4 reduced density matrix of qubits ``k < l``.

    Qubit ``k`` indexes the more significant factor of the 4-dim space.
    """
    if k == l:
        raise ValueError("pair indices must be distinct")
    if not 0 <= k < l < state.n:
        raise ValueError(f"pair indices must satisfy 0 <= k < l < {state.n}, got ({k}, {l})")
    psi = state.amplitudes.reshape((2,) * state.n)
    m = np.moveaxis(psi, (k, l), (0, 1)).reshape(4, -1)
    return m @ m.conj().T


def bloch_vector(rho: np.ndarray) -> np.ndarray:
    """Bloch components (tr(rho sigma_x), tr(rho sigma_y), tr(rho sigma_z))."""
    rho = _check_hermitian(rho, "density matrix")
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {rho.shape}")
    b = np.einsum("ab,iba->i", rho, PAULI[1:])
    return _real(b, "Bloch vector")


def pair_block(rho: np.ndarray) -> np.ndarray:
    """3x3 block T[i][j] = tr(rho sigma_i (x) sigma_j) of a two-qubit state."""
    rho = _check_hermitian(rho, "density matrix")
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    T = np.einsum("ab,ijba->ij", rho, PAULI_KRON)
    return _real(T, "correlation block")


def correlation_component(state: PureState, mu: Sequence[int]) -> float:
    """Exact component <psi| sigma_mu1 (x) ... (x) sigma_mun |psi>.

    Cross-validation oracle: builds the full Kronecker product, so it is
    restricted to ``n <= 10``.
    """
    if len(mu) != state.n:
        raise ValueError(f"index vector has length {len(mu)}, expected {state.n}")
    if state.n > ORACLE_MAX_QUBITS:
        raise ValueError(
            f"full-tensor oracle supports at most {ORACLE_MAX_QUBITS} qubits, got {state.n}"
        )
    if any(not 0 <= int(m) <= 3 for m in mu):
        raise ValueError(f"indices must be in 0..3, got {tuple(mu)}")
    op = reduce(np.kron, (PAULI[int(m)] for m in mu))
    value = np.vdot(state.amplitudes, op @ state.amplitudes)
    return float(_real(np.asarray(value), "correlation component"))


def is_valid_density(rho: np.ndarray, tol: float = 1e-10) -> bool:
    """Hermitian within tol, unit trace within tol, eigenvalues >= -tol."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        return False
    if abs(np.trace(rho).real - 1.0) > tol or abs(np.trace(rho).imag) > tol:
        return False
    return bool(np.min(np.linalg.eigvalsh(rho)) >= -tol)
