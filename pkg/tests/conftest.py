import numpy as np

from btbs import StateVector, circular_delta


def haar_state(rng, n_qubits: int) -> StateVector:
    """Normalized complex Gaussian vector = Haar-random pure state."""
    dim = 1 << n_qubits
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector(amps / np.linalg.norm(amps))


def fidelity(a: StateVector, b: StateVector) -> float:
    return abs(np.vdot(a.amplitudes, b.amplitudes)) / (a.norm * b.norm)


def register_max_delta(reg_a, reg_b) -> float:
    """Largest node-wise difference in theta or (circular) phi."""
    assert set(reg_a.nodes) == set(reg_b.nodes)
    worst = 0.0
    for coord, entries in reg_a.nodes.items():
        for ca, cb in zip(entries, reg_b.nodes[coord]):
            worst = max(worst, abs(ca.theta - cb.theta), circular_delta(ca.phi, cb.phi))
    return worst


def mirror_max_delta(register, coord: str = "") -> float:
    """Largest mismatch between the two subtrees hanging off ``coord``."""
    n = register.n_qubits
    worst = 0.0
    suffixes = [""]
    while suffixes:
        nxt = []
        for s in suffixes:
            left = register.nodes[coord + "0" + s]
            right = register.nodes[coord + "1" + s]
            for ca, cb in zip(left, right):
                worst = max(
                    worst, abs(ca.theta - cb.theta), circular_delta(ca.phi, cb.phi)
                )
            if len(coord) + 1 + len(s) < n - 1:
                nxt.extend((s + "0", s + "1"))
        suffixes = nxt
    return worst
