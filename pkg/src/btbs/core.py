"""Binary tree of Bloch spheres: decomposition and reconstruction.

A pure N-qubit state is split recursively into nested one-qubit-versus-rest
Schmidt factors.  Every tree node (addressed by a binary string, "" at the
root) carries one Bloch coordinate pair (theta, phi) per sample; norm and
global phase are propagated upward during the recursion and discarded at
the root, making the map bijective up to global phase.

Index convention: qubit 0 is the MOST significant bit of the basis index,
so the first half of an amplitude vector is the qubit-0 |0> block.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DomainError, InvariantError, ShapeError, ZeroStateError

TWO_PI = 2.0 * math.pi

# Relative threshold for the theta in {0, pi} singularity and dead-branch
# detection: double-precision amplitude noise floor with headroom.
EPS_ZERO = 1e-12


def _wrap_phase(phi: float) -> float:
    """Map an angle into [0, 2pi). The fmod of a tiny negative angle can
    round to exactly 2pi, which must collapse to 0."""
    w = phi % TWO_PI
    return 0.0 if w >= TWO_PI else w


class BlochCoord(NamedTuple):
    """One Bloch-sphere point: polar angle theta in [0, pi], azimuth phi
    in [0, 2pi)."""

    theta: float
    phi: float


class SplitResult(NamedTuple):
    """Polar form of a two-amplitude split:
    (r0 e^{i phi0}, r1 e^{i phi1}) = norm e^{i phi_global}
    (cos(theta/2), sin(theta/2) e^{i phi_local})."""

    norm: float
    theta: float
    phi_local: float
    phi_global: float


def bloch_split(r0: float, phi0: float, r1: float, phi1: float) -> SplitResult:
    """Convert a pair of polar amplitudes into norm, Bloch angles and a
    global phase.

    Total function for r0, r1 >= 0.  When one magnitude vanishes
    (relative to the pair's norm) the azimuth is undefined; the
    convention is then theta exactly 0 or pi, phi_local = 0, and the
    surviving input phase becomes the global phase.  Both magnitudes
    zero yields the all-zero placeholder a caller overwrites via the
    sibling-copy rule in :func:`decompose`.
    """
    norm = math.hypot(r0, r1)
    if norm == 0.0:
        return SplitResult(0.0, 0.0, 0.0, 0.0)
    if r1 <= EPS_ZERO * norm:
        return SplitResult(norm, 0.0, 0.0, _wrap_phase(phi0))
    if r0 <= EPS_ZERO * norm:
        return SplitResult(norm, math.pi, 0.0, _wrap_phase(phi1))
    theta = 2.0 * math.atan2(r1, r0)
    return SplitResult(norm, theta, _wrap_phase(phi1 - phi0), _wrap_phase(phi0))


def normalize_order(order: Sequence[int] | None, n_qubits: int) -> tuple[int, ...]:
    """Validate a qubit permutation, defaulting to identity when None."""
    if order is None:
        return tuple(range(n_qubits))
    order = tuple(int(q) for q in order)
    if len(order) != n_qubits:
        raise ShapeError(
            f"qubit order has length {len(order)}, expected {n_qubits}"
        )
    if sorted(order) != list(range(n_qubits)):
        raise ShapeError(f"qubit order {order} is not a permutation of 0..{n_qubits - 1}")
    return order


def invert_order(order: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(order)
    for k, p in enumerate(order):
        inv[p] = k
    return tuple(inv)


@dataclass(eq=False)
class StateVector:
    """A pure state of ``n_qubits`` qubits as 2^N complex amplitudes.

    Amplitudes need not be normalized (the decomposition is scale
    invariant) but the zero vector and non-finite entries are rejected
    here, at the API boundary.
    """

    amplitudes: np.ndarray
    n_qubits: int = 0

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1:
            raise ShapeError(f"amplitudes must be one-dimensional, got shape {amps.shape}")
        size = amps.shape[0]
        if size < 2 or size & (size - 1):
            raise ShapeError(f"amplitude count {size} is not a power of two >= 2")
        n = size.bit_length() - 1
        if self.n_qubits and self.n_qubits != n:
            raise ShapeError(
                f"amplitude count {size} does not match n_qubits={self.n_qubits}"
            )
        if not np.all(np.isfinite(amps.real)) or not np.all(np.isfinite(amps.imag)):
            raise DomainError("amplitudes contain NaN or Inf")
        if float(np.linalg.norm(amps)) == 0.0:
            raise ZeroStateError("state vector has zero norm")
        self.amplitudes = amps
        self.n_qubits = n

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        return StateVector(self.amplitudes / self.norm, self.n_qubits)


@dataclass(eq=False)
class StateBatch:
    """A sequence of state vectors sharing one qubit count."""

    states: list[StateVector]

    def __post_init__(self):
        if not self.states:
            raise ShapeError("state batch is empty")
        self.states = list(self.states)
        n = self.states[0].n_qubits
        for i, s in enumerate(self.states):
            if s.n_qubits != n:
                raise ShapeError(
                    f"heterogeneous batch: sample {i} has {s.n_qubits} qubits, expected {n}"
                )

    @property
    def n_qubits(self) -> int:
        return self.states[0].n_qubits

    @property
    def n_samples(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __len__(self) -> int:
        return len(self.states)


def tree_coords(n_qubits: int) -> list[str]:
    """All 2^N - 1 node coordinates, by depth then lexicographically."""
    coords = [""]
    for depth in range(1, n_qubits):
        coords.extend(format(i, f"0{depth}b") for i in range(1 << depth))
    return coords


@dataclass
class DataRegister:
    """Decomposition output: per node, one BlochCoord for each sample."""

    n_qubits: int
    n_samples: int
    order: tuple[int, ...]
    nodes: dict[str, list[BlochCoord]] = field(default_factory=dict)

    def validate(self) -> "DataRegister":
        """Check the register invariants: complete node set, one entry per
        sample everywhere, angles in range, zero azimuth at the poles.
        Raises InvariantError (a ShapeError) on the first violation."""
        expected = tree_coords(self.n_qubits)
        if set(self.nodes) != set(expected):
            missing = sorted(set(expected) - set(self.nodes), key=lambda c: (len(c), c))
            extra = sorted(set(self.nodes) - set(expected), key=lambda c: (len(c), c))
            raise InvariantError(
                f"register node set is not the complete depth-{self.n_qubits} tree"
                + (f"; missing {missing[:4]}" if missing else "")
                + (f"; unexpected {extra[:4]}" if extra else "")
            )
        try:
            normalize_order(self.order, self.n_qubits)
        except ShapeError as exc:
            raise InvariantError(str(exc)) from None
        for coord in expected:
            entries = self.nodes[coord]
            if len(entries) != self.n_samples:
                raise InvariantError(
                    f"node {coord!r} holds {len(entries)} entries, "
                    f"expected {self.n_samples}"
                )
            for i, (theta, phi) in enumerate(entries):
                if not (math.isfinite(theta) and math.isfinite(phi)):
                    raise InvariantError(f"node {coord!r} sample {i}: non-finite angle")
                if not 0.0 <= theta <= math.pi:
                    raise InvariantError(
                        f"node {coord!r} sample {i}: theta={theta} outside [0, pi]"
                    )
                if not 0.0 <= phi < TWO_PI:
                    raise InvariantError(
                        f"node {coord!r} sample {i}: phi={phi} outside [0, 2pi)"
                    )
                if min(theta, math.pi - theta) <= EPS_ZERO and phi != 0.0:
                    raise InvariantError(
                        f"node {coord!r} sample {i}: phi must be 0 at the poles"
                    )
        return self


def _source_indices(order: tuple[int, ...], n_qubits: int) -> Sequence[int]:
    """Index map: logical (reordered) amplitude j comes from amps[src[j]].

    Keeping the permutation in index space lets :func:`decompose` read
    each input amplitude exactly once, whatever the order.
    """
    dim = 1 << n_qubits
    if order == tuple(range(n_qubits)):
        return range(dim)
    src = [0] * dim
    for i in range(dim):
        j = 0
        for k in range(n_qubits):
            bit = (i >> (n_qubits - 1 - k)) & 1
            j |= bit << (n_qubits - 1 - order[k])
        src[j] = i
    return src


def _copy_subtree(out: dict[str, BlochCoord], src: str, dst: str, n_qubits: int) -> None:
    """Overwrite the dst subtree's coordinates with its mirrored sibling's."""
    out[dst] = out[src]
    if len(src) < n_qubits - 1:
        _copy_subtree(out, src + "0", dst + "0", n_qubits)
        _copy_subtree(out, src + "1", dst + "1", n_qubits)


def _decompose_sample(
    amps, src: Sequence[int], n_qubits: int
) -> tuple[dict[str, BlochCoord], float]:
    """Run the recursion for one sample; returns (node map, state norm).

    Only the two leaf-level reads touch ``amps``, so each amplitude is
    queried exactly once.
    """
    out: dict[str, BlochCoord] = {}

    def descend(offset: int, length: int, coord: str) -> tuple[float, float]:
        if length == 2:
            a0 = complex(amps[src[offset]])
            a1 = complex(amps[src[offset + 1]])
            r0, p0 = abs(a0), cmath.phase(a0)
            r1, p1 = abs(a1), cmath.phase(a1)
        else:
            half = length >> 1
            r0, p0 = descend(offset, half, coord + "0")
            r1, p1 = descend(offset + half, half, coord + "1")
        norm, theta, phi_local, phi_global = bloch_split(r0, p0, r1, p1)
        out[coord] = BlochCoord(theta, phi_local)
        if length > 2 and norm > 0.0:
            # A dead half carries no information; mirror the live sibling so
            # the node reads as a product with a basis-state parent.
            if r1 <= EPS_ZERO * norm:
                _copy_subtree(out, coord + "0", coord + "1", n_qubits)
            elif r0 <= EPS_ZERO * norm:
                _copy_subtree(out, coord + "1", coord + "0", n_qubits)
        return norm, phi_global

    norm, _ = descend(0, 1 << n_qubits, "")
    return out, norm


def decompose(batch: StateBatch | StateVector, order: Sequence[int] | None = None) -> DataRegister:
    """Map a batch of states onto the binary tree of Bloch spheres.

    The recursion halves the amplitude block at every node (splitting on
    the currently most significant qubit), combines the child norms and
    global phases with :func:`bloch_split`, records (theta, phi_local)
    for the node, and hands (norm, phi_global) upward.  The root norm
    and global phase are discarded.

    ``order`` permutes the qubits before decomposition (identity when
    omitted); it changes which qubit each tree level splits on and is
    recorded in the register so :func:`reconstruct` can undo it.
    """
    if isinstance(batch, StateVector):
        batch = StateBatch([batch])
    n = batch.n_qubits
    order = normalize_order(order, n)
    src = _source_indices(order, n)

    nodes: dict[str, list[BlochCoord]] = {c: [] for c in tree_coords(n)}
    for i, state in enumerate(batch):
        sample, norm = _decompose_sample(state.amplitudes, src, n)
        if norm <= EPS_ZERO:
            raise ZeroStateError(f"sample {i} has norm {norm:g} <= {EPS_ZERO:g}")
        for coord, coords in nodes.items():
            coords.append(sample[coord])
    return DataRegister(n_qubits=n, n_samples=batch.n_samples, order=order, nodes=nodes)


def reconstruct(register: DataRegister) -> StateBatch:
    """Rebuild unit-norm state vectors from a register.

    Walking the tree top-down multiplies cos(theta/2) onto the |0> half
    and sin(theta/2) e^{i phi} onto the |1> half of every block; with no
    global phase stored, the result carries zero accumulated phase at
    the root.  The register's qubit order is inverted at the end.
    """
    register.validate()
    n, m = register.n_qubits, register.n_samples
    coords = tree_coords(n)
    inverse = invert_order(register.order)
    identity = register.order == tuple(range(n))

    states = []
    for s in range(m):
        amps = np.ones(1, dtype=np.complex128)
        for depth in range(n):
            level = coords[(1 << depth) - 1 : (1 << (depth + 1)) - 1]
            theta = np.array([register.nodes[c][s].theta for c in level])
            phi = np.array([register.nodes[c][s].phi for c in level])
            nxt = np.empty(2 << depth, dtype=np.complex128)
            nxt[0::2] = amps * np.cos(theta / 2.0)
            nxt[1::2] = amps * np.sin(theta / 2.0) * np.exp(1j * phi)
            amps = nxt
        state = StateVector(amps, n)
        if not identity:
            state = permute_qubits(state, inverse)
        states.append(state)
    return StateBatch(states)


def permute_qubits(state: StateVector, order: Sequence[int]) -> StateVector:
    """Reorder qubits: the qubit at position k moves to position order[k].

    With qubit 0 as the most significant bit, the amplitude at old basis
    index i lands on the new index whose bit order[k] equals bit k of i.
    A pure entry permutation, so the norm is preserved exactly.
    """
    n = state.n_qubits
    order = normalize_order(order, n)
    if order == tuple(range(n)):
        return StateVector(state.amplitudes.copy(), n)
    dim = 1 << n
    idx = np.arange(dim)
    dest = np.zeros(dim, dtype=np.int64)
    for k in range(n):
        bits = (idx >> (n - 1 - k)) & 1
        dest |= bits << (n - 1 - order[k])
    out = np.empty(dim, dtype=np.complex128)
    out[dest] = state.amplitudes
    return StateVector(out, n)


def circular_delta(a: float, b: float) -> float:
    """Distance between two azimuths on the circle."""
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def is_product_at(register: DataRegister, coord: str, tol: float) -> list[bool]:
    """Per-sample test that the state factorizes at a tree node.

    The signature of a product split is that the two subtrees hanging
    off ``coord`` are mirror-equal: every pair coord+"0"+s versus
    coord+"1"+s agrees within ``tol`` in theta and (circularly) in phi.
    Only internal nodes (depth < N-1) have subtrees to compare.
    """
    if coord not in register.nodes:
        raise KeyError(coord)
    n = register.n_qubits
    if len(coord) >= n - 1:
        raise DomainError(
            f"node {coord!r} has no subtrees to compare (depth must be < {n - 1})"
        )
    result = [True] * register.n_samples
    suffixes: Iterable[str] = [""]
    while suffixes:
        next_suffixes = []
        for s in suffixes:
            left = register.nodes[coord + "0" + s]
            right = register.nodes[coord + "1" + s]
            for m in range(register.n_samples):
                if not result[m]:
                    continue
                if (
                    abs(left[m].theta - right[m].theta) > tol
                    or circular_delta(left[m].phi, right[m].phi) > tol
                ):
                    result[m] = False
            if len(coord) + 1 + len(s) < n - 1:
                next_suffixes.extend((s + "0", s + "1"))
        suffixes = next_suffixes
    return result
