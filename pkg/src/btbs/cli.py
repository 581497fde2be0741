"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error.  All error messages
go to stderr with an ``error:`` prefix.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import core, generate, render, serialize
from .errors import BtbsError

DEMO_SEED = 7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map usage to 1
        raise UsageError(message)


def _parse_order(text: str) -> tuple[int, ...]:
    try:
        order = tuple(int(q) for q in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"order {text!r} is not a comma-separated integer list")
    if len(set(order)) != len(order):
        raise argparse.ArgumentTypeError(f"order {text!r} is not a permutation (repeated index)")
    if any(q < 0 for q in order):
        raise argparse.ArgumentTypeError(f"order {text!r} contains a negative index")
    return order


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list")


def _parse_complex_list(text: str) -> list[complex]:
    try:
        return [complex(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated number list")


def _format_of(path: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix == ".csv":
        return "csv"
    raise UsageError(f"cannot infer format from {path!r}; use a .json or .csv extension")


def build_parser() -> _Parser:
    parser = _Parser(prog="btbs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a states file into a register file")
    p.add_argument("--input", required=True, help="states file (.json or .csv)")
    p.add_argument("--order", type=_parse_order, default=None,
                   help='qubit order, e.g. "0,1,2" (default: identity)')
    p.add_argument("--output", required=True, help="register file (.json or .csv)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("render", help="render a register file as an SVG figure")
    p.add_argument("--input", required=True, help="register file (.json or .csv)")
    p.add_argument("--output", required=True, help="SVG output path")
    p.add_argument("--sphere-radius", type=int, default=None, help="sphere radius in px")
    p.add_argument("--point-radius", type=int, default=None, help="sample point radius in px")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("evolve", help="evolve an eigenstate superposition of a random Hamiltonian")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEMO_SEED)
    p.add_argument("--excite", type=_parse_int_list, default=[0, 1],
                   help='eigenstate indices, e.g. "1,2"')
    p.add_argument("--coeffs", type=_parse_complex_list, default=[1, 1],
                   help='superposition coefficients, e.g. "1,1" or "1,0.5j"')
    p.add_argument("--t-start", type=float, default=0.0)
    p.add_argument("--t-end", type=float, default=1.0)
    p.add_argument("--t-steps", type=int, default=50)
    p.add_argument("--output", required=True, help="states file (.json or .csv)")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("demo", help="generate a demonstration state batch")
    p.add_argument("kind", choices=["bell", "amplitude", "angle"])
    p.add_argument("--steps", type=int, default=21, help="number of samples")
    p.add_argument("--seed", type=int, default=DEMO_SEED)
    p.add_argument("--output", required=True, help="states file (.json or .csv)")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=None,
                   help="port (default: BTBS_PORT env var, else 8000)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static-dir", default=None, help="viewer asset directory")
    p.set_defaults(func=cmd_serve)
    return parser


def cmd_decompose(args) -> int:
    data = Path(args.input).read_bytes()
    batch = serialize.parse_states(data, _format_of(args.input))
    if args.order is not None and len(args.order) != batch.n_qubits:
        raise UsageError(
            f"--order has {len(args.order)} entries but the input has {batch.n_qubits} qubits"
        )
    register = core.decompose(batch, args.order)
    out_format = _format_of(args.output)
    Path(args.output).write_bytes(serialize.export_register(register, out_format))
    return 0


def cmd_render(args) -> int:
    data = Path(args.input).read_bytes()
    register = serialize.parse_register(data, _format_of(args.input))
    spec = render.RenderSpec()
    if args.sphere_radius is not None:
        spec.sphere_radius_px = args.sphere_radius
    if args.point_radius is not None:
        spec.point_radius_px = args.point_radius
    Path(args.output).write_bytes(render.render_svg(register, spec))
    return 0


def cmd_evolve(args) -> int:
    if args.t_steps < 1:
        raise UsageError("--t-steps must be >= 1")
    if len(args.excite) != len(args.coeffs):
        raise UsageError("--excite and --coeffs must have the same length")
    hamiltonian = generate.random_hermitian(args.qubits, args.seed)
    spectrum = generate.eigendecompose(hamiltonian)
    psi0 = generate.superpose_eigenstates(spectrum, args.excite, args.coeffs)
    times = np.linspace(args.t_start, args.t_end, args.t_steps)
    batch = generate.evolve(spectrum, psi0, times)
    Path(args.output).write_bytes(serialize.export_states(batch, _format_of(args.output)))
    return 0


def cmd_demo(args) -> int:
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    m = args.steps
    states = []
    if args.kind == "bell":
        for t in np.linspace(0.0, 1.0, m):
            states.append(generate.bell_circuit_state(float(t)))
    elif args.kind == "amplitude":
        # one random base vector in [0,1]^8; entry 5 sweeps 0 -> 1 across samples
        rng = np.random.default_rng(args.seed)
        base = rng.random(8)
        for i in range(m):
            u = base.copy()
            u[5] = i / (m - 1) if m > 1 else 0.0
            states.append(generate.amplitude_encode(u))
    else:
        rng = np.random.default_rng(args.seed)
        features = rng.uniform(0.0, math.pi, size=(m, 4))
        for row in features:
            states.append(generate.angle_encode(row))
    batch = core.StateBatch(states)
    Path(args.output).write_bytes(serialize.export_states(batch, _format_of(args.output)))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = args.port
    if port is None:
        env = os.environ.get("BTBS_PORT")
        try:
            port = int(env) if env else 8000
        except ValueError:
            raise UsageError(f"BTBS_PORT={env!r} is not a port number")
    app = create_app(static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=port)
    return 0


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BtbsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
