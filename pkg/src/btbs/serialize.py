"""Canonical JSON/CSV serialization for state batches and registers.

Documents are emitted with a fixed layout and floats printed at 17
significant digits, so exporting the same object twice yields identical
bytes and export -> parse -> export is a byte-level fixed point.

Register JSON            {"n_qubits": N, "n_samples": M, "order": [..],
                          "nodes": [{"coord": "b", "theta": [M], "phi": [M]}, ..]}
                         nodes sorted by (depth, lexicographic coordinate).
Register CSV             header ``coord,sample,theta,phi``, one row per
                         (node, sample) in the same node order; a trailing
                         ``# order: ...`` comment appears only for a
                         non-identity qubit order.
States JSON              {"n_qubits": N, "states": [[[re, im] x 2^N] x M]}
States CSV               header ``sample,index,re,im``.
"""

from __future__ import annotations

import csv
import io
import json

from .core import BlochCoord, DataRegister, StateBatch, StateVector, tree_coords
from .errors import BtbsError, DomainError, InvariantError, ParseError, ShapeError

FORMATS = ("json", "csv")


def _f(x: float) -> str:
    return f"{float(x):.17g}"


def _as_text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not valid UTF-8: {exc}") from None
    return data


def _check_format(format: str) -> str:
    if format not in FORMATS:
        raise DomainError(f"unknown format {format!r}, expected one of {FORMATS}")
    return format


# ---------------------------------------------------------------------------
# registers


def export_register(register: DataRegister, format: str = "json") -> bytes:
    register.validate()
    _check_format(format)
    coords = tree_coords(register.n_qubits)
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["coord", "sample", "theta", "phi"])
        for coord in coords:
            for i, (theta, phi) in enumerate(register.nodes[coord]):
                writer.writerow([coord, i, _f(theta), _f(phi)])
        if register.order != tuple(range(register.n_qubits)):
            buf.write("# order: " + ",".join(str(q) for q in register.order) + "\n")
        return buf.getvalue().encode("utf-8")

    lines = [
        "{",
        f'  "n_qubits": {register.n_qubits},',
        f'  "n_samples": {register.n_samples},',
        '  "order": [' + ", ".join(str(q) for q in register.order) + "],",
        '  "nodes": [',
    ]
    for k, coord in enumerate(coords):
        entries = register.nodes[coord]
        thetas = ", ".join(_f(c.theta) for c in entries)
        phis = ", ".join(_f(c.phi) for c in entries)
        tail = "," if k < len(coords) - 1 else ""
        lines.append(
            f'    {{"coord": "{coord}", "theta": [{thetas}], "phi": [{phis}]}}{tail}'
        )
    lines += ["  ]", "}", ""]
    return "\n".join(lines).encode("utf-8")


def _require(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    value = obj[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ParseError(f"{where}: field {key!r} must be a number")
        return float(value)
    if not isinstance(value, kind):
        raise ParseError(f"{where}: field {key!r} must be {kind.__name__}")
    return value


def _number_list(values, where: str) -> list[float]:
    if not isinstance(values, list):
        raise ParseError(f"{where}: expected a list of numbers")
    out = []
    for v in values:
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise ParseError(f"{where}: expected a list of numbers")
        out.append(float(v))
    return out


def parse_register(data: bytes | str, format: str = "json") -> DataRegister:
    """Inverse of :func:`export_register`; validates every register
    invariant on load."""
    _check_format(format)
    text = _as_text(data)
    if format == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise ParseError("register document must be a JSON object")
        n_qubits = _require(doc, "n_qubits", int, "register")
        n_samples = _require(doc, "n_samples", int, "register")
        order = _require(doc, "order", list, "register")
        if not all(isinstance(q, int) and not isinstance(q, bool) for q in order):
            raise ParseError("register: field 'order' must be a list of integers")
        records = _require(doc, "nodes", list, "register")
        nodes: dict[str, list[BlochCoord]] = {}
        for k, rec in enumerate(records):
            where = f"nodes[{k}]"
            if not isinstance(rec, dict):
                raise ParseError(f"{where}: expected an object")
            coord = _require(rec, "coord", str, where)
            if coord.strip("01"):
                raise ParseError(f"{where}: coordinate {coord!r} has characters other than 0/1")
            if coord in nodes:
                raise ParseError(f"{where}: duplicate coordinate {coord!r}")
            thetas = _number_list(rec.get("theta"), f"{where}.theta")
            phis = _number_list(rec.get("phi"), f"{where}.phi")
            if len(thetas) != len(phis):
                raise ParseError(f"{where}: theta and phi lengths differ")
            nodes[coord] = [BlochCoord(t, p) for t, p in zip(thetas, phis)]
        register = DataRegister(
            n_qubits=n_qubits, n_samples=n_samples, order=tuple(order), nodes=nodes
        )
        return register.validate()

    rows: dict[str, dict[int, BlochCoord]] = {}
    order: tuple[int, ...] | None = None
    lines = text.splitlines()
    if not lines or lines[0].strip() != "coord,sample,theta,phi":
        raise ParseError("line 1: expected header 'coord,sample,theta,phi'")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if line.startswith("#"):
            meta = line[1:].strip()
            if meta.startswith("order:"):
                try:
                    order = tuple(int(q) for q in meta[len("order:"):].split(","))
                except ValueError:
                    raise ParseError(f"line {lineno}: malformed order comment") from None
            continue
        fields = next(csv.reader([line]))
        if len(fields) != 4:
            raise ParseError(f"line {lineno}: expected 4 fields, got {len(fields)}")
        coord = fields[0]
        if coord.strip("01"):
            raise ParseError(f"line {lineno}: coordinate {coord!r} has characters other than 0/1")
        try:
            sample = int(fields[1])
            theta, phi = float(fields[2]), float(fields[3])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if sample < 0:
            raise ParseError(f"line {lineno}: negative sample index")
        per_node = rows.setdefault(coord, {})
        if sample in per_node:
            raise ParseError(f"line {lineno}: duplicate entry for node {coord!r} sample {sample}")
        per_node[sample] = BlochCoord(theta, phi)
    if not rows:
        raise ParseError("document has no data rows")
    n_qubits = max(len(c) for c in rows) + 1
    n_samples = max(max(per.keys()) for per in rows.values()) + 1
    nodes = {}
    for coord, per in rows.items():
        missing = [s for s in range(n_samples) if s not in per]
        if missing:
            raise InvariantError(f"node {coord!r} missing sample {missing[0]}")
        nodes[coord] = [per[s] for s in range(n_samples)]
    if order is None:
        order = tuple(range(n_qubits))
    register = DataRegister(
        n_qubits=n_qubits, n_samples=n_samples, order=order, nodes=nodes
    )
    return register.validate()


# ---------------------------------------------------------------------------
# state batches


def states_from_pairs(n_qubits: int, samples: list, where: str = "states") -> StateBatch:
    """Build a StateBatch from [[re, im], ...] rows, enforcing the 2^N
    length and rejecting zero-norm samples."""
    if n_qubits < 1:
        raise ParseError(f"{where}: n_qubits must be >= 1")
    dim = 1 << n_qubits
    states = []
    for i, row in enumerate(samples):
        if not isinstance(row, (list, tuple)):
            raise ParseError(f"{where}[{i}]: expected a list of [re, im] pairs")
        if len(row) != dim:
            raise ShapeError(
                f"{where}[{i}]: {len(row)} amplitudes, expected 2^{n_qubits} = {dim}"
            )
        amps = []
        for k, pair in enumerate(row):
            if (
                not isinstance(pair, (list, tuple))
                or len(pair) != 2
                or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in pair)
            ):
                raise ParseError(f"{where}[{i}][{k}]: expected an [re, im] pair")
            amps.append(complex(pair[0], pair[1]))
        try:
            states.append(StateVector(amps, n_qubits))
        except BtbsError as exc:
            raise type(exc)(f"{where}[{i}]: {exc}") from None
    if not states:
        raise ParseError(f"{where}: no samples")
    return StateBatch(states)


def export_states(batch: StateBatch, format: str = "json") -> bytes:
    _check_format(format)
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["sample", "index", "re", "im"])
        for i, state in enumerate(batch):
            for k, amp in enumerate(state.amplitudes):
                writer.writerow([i, k, _f(amp.real), _f(amp.imag)])
        return buf.getvalue().encode("utf-8")

    lines = ["{", f'  "n_qubits": {batch.n_qubits},', '  "states": [']
    for i, state in enumerate(batch):
        pairs = ", ".join(
            f"[{_f(a.real)}, {_f(a.imag)}]" for a in state.amplitudes
        )
        tail = "," if i < batch.n_samples - 1 else ""
        lines.append(f"    [{pairs}]{tail}")
    lines += ["  ]", "}", ""]
    return "\n".join(lines).encode("utf-8")


def parse_states(data: bytes | str, format: str = "json") -> StateBatch:
    """Read a states document; rejects non-power-of-two amplitude counts
    and zero-norm samples."""
    _check_format(format)
    text = _as_text(data)
    if format == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise ParseError("states document must be a JSON object")
        n_qubits = _require(doc, "n_qubits", int, "states")
        samples = _require(doc, "states", list, "states")
        return states_from_pairs(n_qubits, samples)

    lines = text.splitlines()
    if not lines or lines[0].strip() != "sample,index,re,im":
        raise ParseError("line 1: expected header 'sample,index,re,im'")
    rows: dict[int, dict[int, complex]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("#"):
            continue
        fields = next(csv.reader([line]))
        if len(fields) != 4:
            raise ParseError(f"line {lineno}: expected 4 fields, got {len(fields)}")
        try:
            sample, index = int(fields[0]), int(fields[1])
            re, im = float(fields[2]), float(fields[3])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if sample < 0 or index < 0:
            raise ParseError(f"line {lineno}: negative sample or index")
        per = rows.setdefault(sample, {})
        if index in per:
            raise ParseError(f"line {lineno}: duplicate amplitude for sample {sample}")
        per[index] = complex(re, im)
    if not rows:
        raise ParseError("document has no data rows")
    n_samples = max(rows) + 1
    dim = max(max(per.keys()) for per in rows.values()) + 1
    if dim < 2 or dim & (dim - 1):
        raise ShapeError(f"amplitude count {dim} is not a power of two >= 2")
    n_qubits = dim.bit_length() - 1
    samples = []
    for i in range(n_samples):
        per = rows.get(i)
        if per is None:
            raise ShapeError(f"missing sample {i}")
        missing = [k for k in range(dim) if k not in per]
        if missing:
            raise ShapeError(f"sample {i} missing amplitude index {missing[0]}")
        samples.append([[per[k].real, per[k].imag] for k in range(dim)])
    return states_from_pairs(n_qubits, samples)
