"""Acceptance suite: every criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line
per criterion (a failed assertion never reaches its PASS line).
"""

import math
import xml.etree.ElementTree as ET

import numpy as np

from btbs import (
    StateBatch,
    StateVector,
    bell_circuit_state,
    bloch_split,
    decompose,
    eigendecompose,
    evolve,
    export_register,
    export_states,
    parse_register,
    parse_states,
    permute_qubits,
    project_point,
    random_hermitian,
    reconstruct,
    superpose_eigenstates,
    tree_coords,
)
from btbs.cli import cli_main
from conftest import fidelity, haar_state, mirror_max_delta, register_max_delta

SVG = "{http://www.w3.org/2000/svg}"


def test_bijectivity():
    # 100 random unit states per N in 1..10, round-trip fidelity >= 1 - 1e-10
    rng = np.random.default_rng(101)
    worst = 1.0
    for n in range(1, 11):
        batch = StateBatch([haar_state(rng, n) for _ in range(100)])
        rebuilt = reconstruct(decompose(batch))
        for orig, rec in zip(batch, rebuilt):
            worst = min(worst, fidelity(orig, rec))
    assert worst >= 1 - 1e-10
    print(f"\nPASS bijectivity: min round-trip fidelity {worst:.2e} over 1000 states")


def test_single_query():
    # decompose reads each of the 2^N amplitudes exactly once per sample
    class CountingAmps:
        def __init__(self, amps):
            self.amps = list(amps)
            self.counts = [0] * len(amps)

        def __getitem__(self, i):
            self.counts[i] += 1
            return self.amps[i]

        def __len__(self):
            return len(self.amps)

    rng = np.random.default_rng(102)
    for n, order in [(1, None), (3, None), (3, (2, 0, 1)), (6, None)]:
        counters = []
        states = []
        for _ in range(3):
            sv = haar_state(rng, n)
            counter = CountingAmps(sv.amplitudes)
            sv.amplitudes = counter
            counters.append(counter)
            states.append(sv)
        decompose(StateBatch(states), order)
        for counter in counters:
            assert counter.counts == [1] * (1 << n)
    print("PASS single-query: every amplitude read exactly once per sample")


def test_tree_shape():
    # exactly 2^N - 1 coords = all binary strings of length < N, M entries each
    rng = np.random.default_rng(103)
    for n, m in [(1, 1), (3, 7), (6, 4)]:
        reg = decompose(StateBatch([haar_state(rng, n) for _ in range(m)]))
        expected = {format(i, f"0{d}b") for d in range(1, n) for i in range(1 << d)}
        expected.add("")
        assert set(reg.nodes) == expected
        assert len(reg.nodes) == (1 << n) - 1
        assert all(len(entries) == m for entries in reg.nodes.values())
        assert set(tree_coords(n)) == expected
    print("PASS tree-shape: full binary coordinate set with M entries per node")


def test_singularity_rule():
    # vanishing r0 or r1 gives phi_local = 0 and the surviving phase as
    # the global phase, exactly
    rng = np.random.default_rng(104)
    for _ in range(100):
        phi_dead = rng.uniform(0, 2 * math.pi)
        phi_live = rng.uniform(0, 2 * math.pi)
        r = rng.uniform(0.1, 3.0)
        n, theta, phi_l, phi_g = bloch_split(r, phi_live, 0.0, phi_dead)
        assert theta == 0.0 and phi_l == 0.0 and phi_g == phi_live
        n, theta, phi_l, phi_g = bloch_split(0.0, phi_dead, r, phi_live)
        assert theta == math.pi and phi_l == 0.0 and phi_g == phi_live
    # and through the full decomposition
    reg = decompose(StateVector([0.0, np.exp(0.9j)]))
    assert reg.nodes[""][0] == (math.pi, 0.0)
    reg = decompose(StateVector([np.exp(2.2j), 0.0]))
    assert reg.nodes[""][0] == (0.0, 0.0)
    print("PASS singularity-rule: poles carry zero local phase, surviving phase global")


def _with_factor_at(rng, n, position):
    """Random product state with a 1-qubit factor at the given position,
    plus a qubit order that brings that position to the front."""
    single = haar_state(rng, 1)
    rest = haar_state(rng, n - 1)
    front = StateVector(np.kron(single.amplitudes, rest.amplitudes))
    placement = [position] + [q for q in range(n) if q != position]
    # placement[k] = new position of old qubit k; build sigma accordingly
    sigma = [0] * n
    for old, new in enumerate(placement):
        sigma[old] = new
    psi = permute_qubits(front, sigma)
    tau = [0] * n
    slot = 1
    for q in range(n):
        if q == position:
            tau[q] = 0
        else:
            tau[q] = slot
            slot += 1
    return psi, tuple(tau)


def test_product_signature():
    # 50 product states across N = 2..6 and every split position agree in
    # mirrored subtrees within 1e-10; 50 Haar states disagree
    rng = np.random.default_rng(105)
    cases = 0
    while cases < 50:
        for n in range(2, 7):
            for position in range(n):
                if cases >= 50:
                    break
                psi, order = _with_factor_at(rng, n, position)
                reg = decompose(psi, order)
                assert mirror_max_delta(reg) < 1e-10, (n, position)
                cases += 1
    entangled = 0
    while entangled < 50:
        n = 2 + entangled % 5
        reg = decompose(haar_state(rng, n))
        if mirror_max_delta(reg) < 1e-3:
            continue  # product within tolerance: reject the draw
        assert mirror_max_delta(reg) > 1e-10
        entangled += 1
    print("PASS product-signature: 50 products mirror-equal, 50 Haar states split")


def test_bell_trajectory():
    # root (pi/2, 0), node "0" (0, 0), node "1" (pi t, 0), all within 1e-10
    for t in np.linspace(0.0, 1.0, 21):
        reg = decompose(bell_circuit_state(float(t)))
        root, n0, n1 = reg.nodes[""][0], reg.nodes["0"][0], reg.nodes["1"][0]
        assert abs(root.theta - math.pi / 2) <= 1e-10 and abs(root.phi) <= 1e-10
        assert abs(n0.theta) <= 1e-10 and abs(n0.phi) <= 1e-10
        assert abs(n1.theta - math.pi * t) <= 1e-10 and abs(n1.phi) <= 1e-10
    print("PASS bell-trajectory: 21 steps reproduce the analytic tree")


def test_two_eigenstate_periodicity():
    spec = eigendecompose(random_hermitian(4, seed=7))
    i, j = 3, 9
    psi0 = superpose_eigenstates(spec, [i, j], [1.0, 1.0])
    period = 2 * math.pi / abs(spec.eigenvalues[i] - spec.eigenvalues[j])
    t0 = 0.37 * period
    state_a, state_b = evolve(spec, psi0, [t0, t0 + period]).states
    assert fidelity(state_a, state_b) >= 1 - 1e-8
    delta = register_max_delta(decompose(state_a), decompose(state_b))
    assert delta <= 1e-6
    print(f"PASS two-eigenstate periodicity: node delta {delta:.2e}, period {period:.3f}")


def test_three_eigenstate_non_recurrence():
    spec = eigendecompose(random_hermitian(4, seed=7))
    idx = [2, 7, 12]
    psi0 = superpose_eigenstates(spec, idx, [1.0, 1.0, 1.0])
    lam = spec.eigenvalues[idx]
    gaps = [abs(lam[0] - lam[1]), abs(lam[0] - lam[2]), abs(lam[1] - lam[2])]
    t_min, t_max = 2 * math.pi / max(gaps), 2 * math.pi / min(gaps)
    # fidelity leaves 1 quadratically, crossing 1 - 1e-3 near 0.017 T_min
    # for these gaps; the window starts past that departure at 0.05 T_min
    times = np.linspace(0.05 * t_min, 8 * t_max, 500)
    fids = [fidelity(psi0, s) for s in evolve(spec, psi0, times)]
    assert max(fids) < 1 - 1e-3
    print(f"PASS three-eigenstate non-recurrence: max fidelity {max(fids):.6f} < 0.999")


def test_scale_phase_invariance():
    rng = np.random.default_rng(106)
    psi = haar_state(rng, 4)
    base = decompose(psi)
    worst = 0.0
    for _ in range(20):
        magnitude = 10.0 ** rng.uniform(-3, 3)
        c = magnitude * np.exp(1j * rng.uniform(0, 2 * math.pi))
        scaled = decompose(StateVector(c * psi.amplitudes))
        worst = max(worst, register_max_delta(base, scaled))
    assert worst <= 1e-12
    print(f"PASS scale/phase invariance: max node delta {worst:.2e} over 20 rescales")


def test_serialization_and_cli_pipeline(tmp_path):
    # round trips exact + canonical bytes
    rng = np.random.default_rng(107)
    reg = decompose(StateBatch([haar_state(rng, 3) for _ in range(5)]), order=(1, 0, 2))
    for fmt in ("json", "csv"):
        blob = export_register(reg, fmt)
        assert parse_register(blob, fmt) == reg
        assert export_register(reg, fmt) == blob
        assert export_register(parse_register(blob, fmt), fmt) == blob
    batch = StateBatch([haar_state(rng, 2) for _ in range(3)])
    for fmt in ("json", "csv"):
        blob = export_states(batch, fmt)
        back = parse_states(blob, fmt)
        assert all(
            np.array_equal(a.amplitudes, b.amplitudes) for a, b in zip(batch, back)
        )
        assert export_states(back, fmt) == blob

    # CLI end to end: demo bell -> decompose -> render
    states = tmp_path / "states.json"
    register = tmp_path / "register.json"
    figure = tmp_path / "figure.svg"
    assert cli_main(["demo", "bell", "--steps", "21", "--output", str(states)]) == 0
    assert cli_main(["decompose", "--input", str(states), "--output", str(register)]) == 0
    assert cli_main(["render", "--input", str(register), "--output", str(figure)]) == 0

    root = ET.fromstring(figure.read_bytes())
    groups = {
        g.get("data-coord"): g
        for g in root.iter(f"{SVG}g")
        if g.get("class") == "node"
    }
    assert set(groups) == {"", "0", "1"}
    ts = np.linspace(0.0, 1.0, 21)
    for coord, thetas in [("", [math.pi / 2] * 21), ("0", [0.0] * 21), ("1", math.pi * ts)]:
        group = groups[coord]
        outline = next(c for c in group if c.get("class") == "outline")
        cx, cy = float(outline.get("cx")), float(outline.get("cy"))
        radius = float(outline.get("r"))
        points = [c for c in group if c.get("class") == "pt"]
        assert len(points) == 21
        for theta, pt in zip(thetas, points):
            sx, sy, _ = project_point(theta, 0.0)
            assert abs(float(pt.get("cx")) - (cx + radius * sx)) <= 0.5
            assert abs(float(pt.get("cy")) - (cy - radius * sy)) <= 0.5
    print("PASS serialization & CLI pipeline: exact round trips, SVG matches projection")
