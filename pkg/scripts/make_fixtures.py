#!/usr/bin/env python3
"""Regenerate the viewer's test fixtures from the real HTTP API.

Each register fixture is the literal response body of POST /api/decompose
for the matching states fixture, so viewer tests assert against the same
bytes a live service would return.
"""

import json
import math
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from btbs import StateBatch, angle_encode, bell_circuit_state, export_states
from btbs.service import create_app

OUT = Path(__file__).resolve().parent.parent / "frontend" / "src" / "test" / "fixtures"


def states_doc(batch: StateBatch) -> dict:
    return json.loads(export_states(batch, "json"))


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    def save(name: str, payload: bytes | str) -> None:
        path = OUT / name
        if isinstance(payload, str):
            payload = payload.encode()
        path.write_bytes(payload)
        print(f"wrote {path}")

    def decomposed(doc: dict, order=None) -> bytes:
        body = dict(doc)
        if order is not None:
            body["order"] = order
        resp = client.post("/api/decompose", json=body)
        resp.raise_for_status()
        return resp.content

    bell = states_doc(StateBatch([bell_circuit_state(t) for t in np.linspace(0, 1, 21)]))
    save("bell_states.json", json.dumps(bell, indent=1))
    save("bell_register.json", decomposed(bell))
    save("bell_register_swapped.json", decomposed(bell, order=[1, 0]))

    rng = np.random.default_rng(7)
    angle = states_doc(
        StateBatch([angle_encode(rng.uniform(0, math.pi, 4)) for _ in range(6)])
    )
    save("angle_states.json", json.dumps(angle, indent=1))
    save("angle_register.json", decomposed(angle))

    plus_zero = states_doc(StateBatch([bell_circuit_state(0.0)]))
    save("plus_zero_states.json", json.dumps(plus_zero, indent=1))
    save("plus_zero_register.json", decomposed(plus_zero))
    save("plus_zero_register_swapped.json", decomposed(plus_zero, order=[1, 0]))


if __name__ == "__main__":
    main()
