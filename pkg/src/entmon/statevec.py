"""Construction and manipulation of pure n-qubit states.

Amplitude vectors are dense, length ``2**n``, and indexed so that qubit 0 is
the most significant bit of the basis index (qubit 0 is the leftmost tensor
factor). Every state is normalized at construction and immutable afterwards,
so states can be shared freely across threads; all operations return new
states.

The dense representation caps the qubit count at 20 by default; set the
``ENTMON_MAX_QUBITS`` environment variable to override.
"""
from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass

import numpy as np

DEFAULT_MAX_QUBITS = 20
MAX_QUBITS_ENV = "ENTMON_MAX_QUBITS"

# squared-norm slack tolerated on any constructed state
NORM_TOL = 1e-12
# slack for the unitarity check in apply_local_unitary
UNITARY_TOL = 1e-10

# state-file norm policy: silently accept within LOAD_NORM_TOL, renormalize
# with a warning up to LOAD_RENORM_TOL, reject beyond that
LOAD_NORM_TOL = 1e-9
LOAD_RENORM_TOL = 1e-6


def max_qubits() -> int:
    """Current dense-amplitude qubit cap (ENTMON_MAX_QUBITS or 20)."""
    raw = os.environ.get(MAX_QUBITS_ENV)
    if raw is None:
        return DEFAULT_MAX_QUBITS
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_QUBITS_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{MAX_QUBITS_ENV} must be >= 1, got {cap}")
    return cap


def _check_qubit_count(n: int) -> None:
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    cap = max_qubits()
    if n > cap:
        raise ValueError(
            f"qubit count {n} exceeds the cap of {cap} "
            f"(set {MAX_QUBITS_ENV} to raise it)"
        )


@dataclass(frozen=True)
class PureState:
    """Normalized pure state of ``n`` qubits as a dense complex amplitude vector.

    The amplitude array is copied and marked read-only; construction fails if
    the squared norm deviates from 1 by more than ``NORM_TOL``.
    """

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        _check_qubit_count(self.n)
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (2**self.n,):
            raise ValueError(
                f"amplitude vector must have length 2**{self.n} = {2**self.n}, "
                f"got shape {amps.shape}"
            )
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: |psi|^2 = {norm_sq!r}")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 2**self.n


def _normalized(n: int, amps: np.ndarray) -> PureState:
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return PureState(n, amps / norm)


def make_basis_state(n: int, bits: str) -> PureState:
    """Computational basis state for a bit string; bits[0] is qubit 0 (MSB)."""
    _check_qubit_count(n)
    if len(bits) != n:
        raise ValueError(f"bit string {bits!r} has length {len(bits)}, expected {n}")
    if any(c not in "01" for c in bits):
        raise ValueError(f"bit string {bits!r} may contain only '0' and '1'")
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return PureState(n, amps)


def make_dicke(n: int, e: int) -> PureState:
    """Symmetric state with equal amplitude on every basis index of Hamming
    weight ``e`` (bit value 1 = excitation)."""
    _check_qubit_count(n)
    if not 0 <= e <= n:
        raise ValueError(f"excitation count must satisfy 0 <= e <= {n}, got {e}")
    idx = [i for i in range(2**n) if i.bit_count() == e]
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[idx] = 1.0 / math.sqrt(len(idx))
    return PureState(n, amps)


def make_ghz(n: int) -> PureState:
    """(|0...0> + |1...1>)/sqrt(2)."""
    if n < 2:
        raise ValueError(f"GHZ state needs at least 2 qubits, got {n}")
    _check_qubit_count(n)
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[0] = amps[-1] = 1.0 / math.sqrt(2.0)
    return PureState(n, amps)


def make_plus_product(n: int) -> PureState:
    """Product of |+> on every qubit: uniform amplitude 2**(-n/2)."""
    _check_qubit_count(n)
    amps = np.full(2**n, 2.0 ** (-n / 2.0), dtype=np.complex128)
    return PureState(n, amps)


def make_random_haar(n: int, seed: int) -> PureState:
    """State drawn from the unitarily invariant distribution.

    Draws 2**n complex entries with independent standard-normal real and
    imaginary parts and normalizes; deterministic for a given seed.
    """
    _check_qubit_count(n)
    rng = np.random.default_rng(seed)
    dim = 2**n
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return _normalized(n, z)


def tensor_product(a: PureState, b: PureState) -> PureState:
    """Joint state with a's qubits first (most significant)."""
    return PureState(a.n + b.n, np.kron(a.amplitudes, b.amplitudes))


def apply_local_unitary(state: PureState, qubit: int, U: np.ndarray) -> PureState:
    """Apply a 2x2 unitary to one tensor factor."""
    if not 0 <= qubit < state.n:
        raise ValueError(f"qubit index {qubit} out of range for n={state.n}")
    U = np.asarray(U, dtype=np.complex128)
    if U.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {U.shape}")
    if np.max(np.abs(U.conj().T @ U - np.eye(2))) > UNITARY_TOL:
        raise ValueError("matrix is not unitary")
    psi = state.amplitudes.reshape((2,) * state.n)
    psi = np.moveaxis(np.tensordot(U, psi, axes=([1], [qubit])), 0, qubit)
    return PureState(state.n, psi.reshape(-1))


def state_from_json_dict(obj: dict) -> PureState:
    """Parse the state-file JSON object {"n": int, "amplitudes": [[re, im], ...]}.

    The norm is validated on load: deviations up to 1e-9 are accepted, up to
    1e-6 the state is renormalized with a warning, anything beyond is
    rejected.
    """
    if not isinstance(obj, dict):
        raise ValueError("state file must contain a JSON object")
    try:
        n = int(obj["n"])
        pairs = obj["amplitudes"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"state file is missing or has malformed fields: {exc}") from None
    _check_qubit_count(n)
    if not isinstance(pairs, list) or len(pairs) != 2**n:
        raise ValueError(
            f"state file must list exactly 2**{n} = {2**n} amplitude pairs"
        )
    try:
        arr = np.asarray(pairs, dtype=float)
    except (TypeError, ValueError):
        raise ValueError("amplitudes must be [re, im] number pairs") from None
    if arr.shape != (2**n, 2):
        raise ValueError("amplitudes must be [re, im] number pairs")
    amps = arr[:, 0] + 1j * arr[:, 1]
    norm = float(np.linalg.norm(amps))
    err = abs(norm - 1.0)
    if err > LOAD_RENORM_TOL:
        raise ValueError(f"state norm {norm!r} deviates from 1 by {err:.3e} (> {LOAD_RENORM_TOL})")
    if err > LOAD_NORM_TOL:
        warnings.warn(
            f"state norm deviates from 1 by {err:.3e}; renormalizing",
            stacklevel=2,
        )
    return _normalized(n, amps)


def state_to_json_dict(state: PureState) -> dict:
    """Inverse of state_from_json_dict (useful for writing state files)."""
    return {
        "n": state.n,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
