"""Binary tree of Bloch spheres: decompose sets of multi-qubit pure
states into per-node Bloch coordinates, reconstruct them, render the
tree as SVG, and serve the decomposition over HTTP."""

from .core import (
    EPS_ZERO,
    BlochCoord,
    DataRegister,
    SplitResult,
    StateBatch,
    StateVector,
    bloch_split,
    circular_delta,
    decompose,
    invert_order,
    is_product_at,
    normalize_order,
    permute_qubits,
    reconstruct,
    tree_coords,
)
from .errors import (
    BtbsError,
    ConvergenceError,
    DomainError,
    InvariantError,
    ParseError,
    RenderError,
    ShapeError,
    ZeroStateError,
)
from .generate import (
    SpectralDecomposition,
    amplitude_encode,
    angle_encode,
    bell_circuit_state,
    eigendecompose,
    evolve,
    random_hermitian,
    superpose_eigenstates,
)
from .render import RenderSpec, project_point, render_svg
from .serialize import export_register, export_states, parse_register, parse_states

__version__ = "0.1.0"

__all__ = [
    "EPS_ZERO",
    "BlochCoord",
    "DataRegister",
    "SplitResult",
    "StateBatch",
    "StateVector",
    "SpectralDecomposition",
    "RenderSpec",
    "bloch_split",
    "decompose",
    "reconstruct",
    "permute_qubits",
    "is_product_at",
    "circular_delta",
    "normalize_order",
    "invert_order",
    "tree_coords",
    "bell_circuit_state",
    "random_hermitian",
    "eigendecompose",
    "superpose_eigenstates",
    "evolve",
    "amplitude_encode",
    "angle_encode",
    "export_register",
    "parse_register",
    "export_states",
    "parse_states",
    "render_svg",
    "project_point",
    "BtbsError",
    "ShapeError",
    "InvariantError",
    "ZeroStateError",
    "DomainError",
    "ParseError",
    "RenderError",
    "ConvergenceError",
    "__version__",
]
