import json
import math

import numpy as np

from btbs import parse_register, parse_states
from btbs.cli import cli_main


def run(args):
    return cli_main(list(args))


def test_demo_decompose_render_pipeline(tmp_path):
    states = tmp_path / "states.json"
    register = tmp_path / "register.json"
    figure = tmp_path / "figure.svg"
    assert run(["demo", "bell", "--steps", "21", "--output", str(states)]) == 0
    assert run(["decompose", "--input", str(states), "--output", str(register)]) == 0
    assert run(["render", "--input", str(register), "--output", str(figure)]) == 0

    batch = parse_states(states.read_bytes(), "json")
    assert batch.n_samples == 21 and batch.n_qubits == 2
    reg = parse_register(register.read_bytes(), "json")
    assert reg.n_samples == 21
    for k, t in enumerate(np.linspace(0, 1, 21)):
        assert abs(reg.nodes["1"][k].theta - math.pi * t) < 1e-10
    svg = figure.read_bytes()
    assert svg.startswith(b"<?xml") and b"<svg" in svg


def test_cli_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert run(["demo", "amplitude", "--steps", "9", "--output", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_decompose_with_order_and_csv(tmp_path):
    states = tmp_path / "states.json"
    register = tmp_path / "register.csv"
    assert run(["demo", "angle", "--steps", "3", "--output", str(states)]) == 0
    assert run([
        "decompose", "--input", str(states), "--order", "3,1,0,2",
        "--output", str(register),
    ]) == 0
    reg = parse_register(register.read_bytes(), "csv")
    assert reg.order == (3, 1, 0, 2)
    assert reg.n_samples == 3


def test_order_not_a_permutation_is_usage_error(tmp_path, capsys):
    states = tmp_path / "states.json"
    run(["demo", "bell", "--steps", "2", "--output", str(states)])
    code = run([
        "decompose", "--input", str(states), "--order", "0,0,1",
        "--output", str(tmp_path / "r.json"),
    ])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_order_length_mismatch_is_usage_error(tmp_path, capsys):
    states = tmp_path / "states.json"
    run(["demo", "bell", "--steps", "2", "--output", str(states)])
    code = run([
        "decompose", "--input", str(states), "--order", "0,1,2",
        "--output", str(tmp_path / "r.json"),
    ])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_zero_state_is_data_error(tmp_path, capsys):
    bad = tmp_path / "zero.json"
    bad.write_text(json.dumps({"n_qubits": 1, "states": [[[0, 0], [0, 0]]]}))
    code = run(["decompose", "--input", str(bad), "--output", str(tmp_path / "r.json")])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_missing_input_file_is_data_error(tmp_path, capsys):
    code = run([
        "decompose", "--input", str(tmp_path / "nope.json"),
        "--output", str(tmp_path / "r.json"),
    ])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_extension_is_usage_error(tmp_path, capsys):
    states = tmp_path / "states.json"
    run(["demo", "bell", "--steps", "2", "--output", str(states)])
    code = run(["decompose", "--input", str(states), "--output", str(tmp_path / "r.xml")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_missing_subcommand_is_usage_error(capsys):
    assert run([]) == 1
    assert "error:" in capsys.readouterr().err


def test_bad_flag_value_is_usage_error(tmp_path, capsys):
    code = run(["demo", "bell", "--steps", "x", "--output", str(tmp_path / "s.json")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_evolve_emits_parseable_states(tmp_path):
    out = tmp_path / "evolved.json"
    assert run([
        "evolve", "--qubits", "3", "--seed", "5", "--excite", "1,2",
        "--coeffs", "1,1", "--t-start", "0", "--t-end", "2", "--t-steps", "7",
        "--output", str(out),
    ]) == 0
    batch = parse_states(out.read_bytes(), "json")
    assert batch.n_samples == 7 and batch.n_qubits == 3
    for s in batch:
        assert abs(s.norm - 1) < 1e-10


def test_evolve_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["evolve", "--qubits", "2", "--seed", "3", "--t-steps", "5"]
    assert run(args + ["--output", str(a)]) == 0
    assert run(args + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_render_respects_radius_flags(tmp_path):
    states = tmp_path / "s.json"
    register = tmp_path / "r.json"
    run(["demo", "bell", "--steps", "2", "--output", str(states)])
    run(["decompose", "--input", str(states), "--output", str(register)])
    fig = tmp_path / "f.svg"
    assert run([
        "render", "--input", str(register), "--output", str(fig),
        "--sphere-radius", "40", "--point-radius", "5",
    ]) == 0
    assert b'r="40"' in fig.read_bytes()


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()


def test_negative_order_index_is_usage_error(tmp_path, capsys):
    states = tmp_path / "states.json"
    run(["demo", "bell", "--steps", "2", "--output", str(states)])
    code = run([
        "decompose", "--input", str(states), "--order=-1,0",
        "--output", str(tmp_path / "r.json"),
    ])
    assert code == 1
    assert "error:" in capsys.readouterr().err
