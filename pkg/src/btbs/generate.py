"""Generators for the state batches the visualizations are built from:
a parameterized Bell circuit, Hamiltonian time evolution from spectral
superpositions, and amplitude/angle data encodings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .core import StateBatch, StateVector
from .errors import ConvergenceError, DomainError, ShapeError, ZeroStateError

EIGEN_RESIDUAL_BOUND = 1e-8
ORTHONORMALITY_BOUND = 1e-10
HERMITICITY_BOUND = 1e-14


def bell_circuit_state(t: float) -> StateVector:
    """Two-qubit state of the parameterized Bell preparation circuit.

    Qubit 0 is put into |+> and then controls a Y rotation by pi*t on
    qubit 1, so t=0 gives the product state |+>|0> and t=1 the Bell
    state (|00> + |11>)/sqrt(2).
    """
    t = float(t)
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"t={t} outside [0, 1]")
    half = math.pi * t / 2.0
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    amps = np.array(
        [inv_sqrt2, 0.0, inv_sqrt2 * math.cos(half), inv_sqrt2 * math.sin(half)],
        dtype=np.complex128,
    )
    return StateVector(amps, 2)


def random_hermitian(n_qubits: int, seed: int) -> np.ndarray:
    """Seed-deterministic random Hermitian matrix (A + A^dagger)/2 with
    independent complex Gaussian entries (GUE-style)."""
    if n_qubits < 1:
        raise DomainError(f"n_qubits={n_qubits} must be >= 1")
    dim = 1 << n_qubits
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (a + a.conj().T) / 2.0


@dataclass(eq=False)
class SpectralDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


def eigendecompose(matrix: np.ndarray) -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian matrix.

    The result is validated, not the algorithm: eigenvector residuals
    must stay below 1e-8 * ||H|| and pairwise overlaps within 1e-10 of
    the identity, else ConvergenceError.
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {matrix.shape}")
    scale = max(1.0, float(np.abs(matrix).max()))
    if float(np.abs(matrix - matrix.conj().T).max()) > HERMITICITY_BOUND * scale:
        raise DomainError("matrix is not Hermitian")

    eigenvalues, eigenvectors = np.linalg.eigh(matrix)

    norm = max(float(np.abs(eigenvalues).max()), np.finfo(float).tiny)
    residual = float(
        np.linalg.norm(matrix @ eigenvectors - eigenvectors * eigenvalues, axis=0).max()
    )
    if residual > EIGEN_RESIDUAL_BOUND * norm:
        raise ConvergenceError(
            f"eigenvector residual {residual:.3e} exceeds {EIGEN_RESIDUAL_BOUND:g} * ||H||"
        )
    gram = eigenvectors.conj().T @ eigenvectors
    if float(np.abs(gram - np.eye(gram.shape[0])).max()) > ORTHONORMALITY_BOUND:
        raise ConvergenceError("eigenvectors are not orthonormal to 1e-10")
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def superpose_eigenstates(
    spec: SpectralDecomposition,
    indices: Sequence[int],
    coeffs: Sequence[complex],
) -> StateVector:
    """Normalized linear combination of the selected eigenvectors."""
    indices = [int(i) for i in indices]
    if len(set(indices)) != len(indices):
        raise DomainError(f"repeated eigenstate indices in {indices}")
    if any(i < 0 or i >= spec.dim for i in indices):
        raise DomainError(f"eigenstate index out of range 0..{spec.dim - 1}")
    if len(indices) != len(coeffs):
        raise ShapeError(f"{len(indices)} indices but {len(coeffs)} coefficients")
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    if not np.any(coeffs):
        raise DomainError("coefficient vector is zero")
    psi = spec.eigenvectors[:, indices] @ coeffs
    return StateVector(psi / np.linalg.norm(psi))


def evolve(
    spec: SpectralDecomposition,
    psi0: StateVector,
    times: Sequence[float],
) -> StateBatch:
    """Unitary time evolution of psi0 in the eigenbasis of spec.

    psi(t) = sum_k <v_k|psi0> e^{-i lambda_k t} |v_k>, one output state
    per entry of ``times``, in order.
    """
    if spec.dim != 1 << psi0.n_qubits:
        raise ShapeError(
            f"spectral dimension {spec.dim} does not match a {psi0.n_qubits}-qubit state"
        )
    if abs(psi0.norm - 1.0) > 1e-6:
        raise DomainError(f"psi0 must be unit norm, got {psi0.norm}")
    times = np.asarray(times, dtype=float)
    if not np.all(np.isfinite(times)):
        raise DomainError("times contain NaN or Inf")
    overlaps = spec.eigenvectors.conj().T @ psi0.amplitudes
    states = []
    for t in times:
        amps = spec.eigenvectors @ (overlaps * np.exp(-1j * spec.eigenvalues * t))
        states.append(StateVector(amps, psi0.n_qubits))
    return StateBatch(states)


def amplitude_encode(u: Sequence[float]) -> StateVector:
    """Load a classical vector into normalized state amplitudes."""
    u = np.asarray(u, dtype=float)
    if u.ndim != 1:
        raise ShapeError(f"expected a flat vector, got shape {u.shape}")
    size = u.shape[0]
    if size < 2 or size & (size - 1):
        raise ShapeError(f"vector length {size} is not a power of two >= 2")
    if not np.all(np.isfinite(u)):
        raise DomainError("vector contains NaN or Inf")
    norm = float(np.linalg.norm(u))
    if norm == 0.0:
        raise ZeroStateError("cannot encode the zero vector")
    return StateVector(u / norm)


def angle_encode(features: Sequence[float]) -> StateVector:
    """Product-state Y-rotation encoding: qubit i carries
    cos(x_i/2)|0> + sin(x_i/2)|1>."""
    features = np.asarray(features, dtype=float)
    if features.ndim != 1 or features.shape[0] < 1:
        raise ShapeError(f"expected at least one feature, got shape {features.shape}")
    if not np.all(np.isfinite(features)):
        raise DomainError("features contain NaN or Inf")
    factors = [
        np.array([math.cos(x / 2.0), math.sin(x / 2.0)], dtype=np.complex128)
        for x in features
    ]
    return StateVector(reduce(np.kron, factors), len(factors))
