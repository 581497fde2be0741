"""SVG rendering of a register as a binary tree of Bloch spheres.

One sphere per tree node, laid out in rows by depth with node b centered
over its subtree.  Points are the orthographic projection of
(sin t cos p, sin t sin p, cos t) onto a camera sitting on the +x axis,
tilted 20 degrees up and 20 degrees toward +y, with the z axis drawn
vertically.  Sample colors blend linearly from blue to red.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DataRegister, tree_coords
from .errors import DomainError, RenderError

MAX_RENDER_QUBITS = 8  # 2^8 - 1 = 255 spheres; beyond that the figure is unreadable

RGB = tuple[int, int, int]


@dataclass
class RenderSpec:
    """Layout, color and projection parameters for the figure."""

    sphere_radius_px: int = 60
    h_gap_px: int = 24
    v_gap_px: int = 48
    point_radius_px: int = 3
    colormap: tuple[RGB, RGB] = ((0, 0, 255), (255, 0, 0))
    azimuth_deg: float = 20.0
    elevation_deg: float = 20.0
    hidden_opacity: float = 0.35

    def validate(self) -> "RenderSpec":
        if self.sphere_radius_px <= 0:
            raise DomainError("sphere_radius_px must be positive")
        if self.point_radius_px <= 0:
            raise DomainError("point_radius_px must be positive")
        if self.h_gap_px < 0 or self.v_gap_px < 0:
            raise DomainError("gaps must be non-negative")
        return self


def camera_frame(azimuth_deg: float, elevation_deg: float):
    """Unit camera direction plus the screen right/up axes (z vertical)."""
    az, el = math.radians(azimuth_deg), math.radians(elevation_deg)
    camera = (math.cos(el) * math.cos(az), math.cos(el) * math.sin(az), math.sin(el))
    right = (-math.sin(az), math.cos(az), 0.0)
    up = (-math.sin(el) * math.cos(az), -math.sin(el) * math.sin(az), math.cos(el))
    return camera, right, up


def project_point(theta: float, phi: float, azimuth_deg: float = 20.0,
                  elevation_deg: float = 20.0) -> tuple[float, float, bool]:
    """Screen offsets (x right, y up, unit sphere) and a front-facing flag."""
    camera, right, up = camera_frame(azimuth_deg, elevation_deg)
    p = (
        math.sin(theta) * math.cos(phi),
        math.sin(theta) * math.sin(phi),
        math.cos(theta),
    )
    sx = sum(a * b for a, b in zip(p, right))
    sy = sum(a * b for a, b in zip(p, up))
    facing = sum(a * b for a, b in zip(p, camera)) >= 0.0
    return sx, sy, facing


def sample_color(index: int, n_samples: int, colormap: tuple[RGB, RGB]) -> str:
    (r0, g0, b0), (r1, g1, b1) = colormap
    f = index / (n_samples - 1) if n_samples > 1 else 0.0
    return "rgb({},{},{})".format(
        round(r0 + f * (r1 - r0)),
        round(g0 + f * (g1 - g0)),
        round(b0 + f * (b1 - b0)),
    )


def _px(x: float) -> str:
    return f"{x:.2f}"


def render_svg(register: DataRegister, spec: RenderSpec | None = None) -> bytes:
    """Render the full tree as an SVG document (bytes, UTF-8)."""
    spec = (spec or RenderSpec()).validate()
    register.validate()
    n = register.n_qubits
    if n > MAX_RENDER_QUBITS:
        raise RenderError(
            f"{n} qubits means {(1 << n) - 1} spheres; render guard is {MAX_RENDER_QUBITS} qubits"
        )

    radius = spec.sphere_radius_px
    cell_w = 2 * radius + spec.h_gap_px
    width = (1 << (n - 1)) * cell_w
    margin_v = 20
    row_h = 2 * radius + spec.v_gap_px
    height = 2 * margin_v + n * 2 * radius + (n - 1) * spec.v_gap_px

    el_sin = abs(math.sin(math.radians(spec.elevation_deg)))
    el_cos = math.cos(math.radians(spec.elevation_deg))

    def center(coord: str) -> tuple[float, float]:
        depth = len(coord)
        index = int(coord, 2) if coord else 0
        cx = width * (index + 0.5) / (1 << depth)
        cy = margin_v + depth * row_h + radius
        return cx, cy

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]

    coords = tree_coords(n)
    out.append('<g class="edges" stroke="#cccccc" stroke-width="1">')
    for coord in coords:
        if len(coord) >= n - 1:
            continue
        cx, cy = center(coord)
        for child in (coord + "0", coord + "1"):
            ccx, ccy = center(child)
            out.append(
                f'<line x1="{_px(cx)}" y1="{_px(cy + radius)}" '
                f'x2="{_px(ccx)}" y2="{_px(ccy - radius)}"/>'
            )
    out.append("</g>")

    for coord in coords:
        cx, cy = center(coord)
        out.append(f'<g class="node" data-coord="{coord}" data-depth="{len(coord)}">')
        out.append(
            f'<circle class="outline" cx="{_px(cx)}" cy="{_px(cy)}" r="{radius}" '
            'fill="none" stroke="#555555" stroke-width="1.5"/>'
        )
        out.append(
            f'<ellipse class="equator" cx="{_px(cx)}" cy="{_px(cy)}" '
            f'rx="{radius}" ry="{_px(radius * el_sin)}" fill="none" '
            'stroke="#999999" stroke-width="1" stroke-dasharray="4 3"/>'
        )
        out.append(
            f'<line class="axis-z" x1="{_px(cx)}" y1="{_px(cy - radius * el_cos)}" '
            f'x2="{_px(cx)}" y2="{_px(cy + radius * el_cos)}" '
            'stroke="#999999" stroke-width="1"/>'
        )
        # x axis runs front-to-back; both endpoints land near the middle.
        x_sx, x_sy, _ = project_point(math.pi / 2, 0.0, spec.azimuth_deg, spec.elevation_deg)
        out.append(
            f'<line class="axis-x" x1="{_px(cx - radius * x_sx)}" y1="{_px(cy + radius * x_sy)}" '
            f'x2="{_px(cx + radius * x_sx)}" y2="{_px(cy - radius * x_sy)}" '
            'stroke="#bbbbbb" stroke-width="1"/>'
        )
        out.append(
            f'<text class="label-0" x="{_px(cx)}" y="{_px(cy - radius - 5)}" '
            'text-anchor="middle" font-size="11" fill="#333333">|0&#10217;</text>'
        )
        out.append(
            f'<text class="label-1" x="{_px(cx)}" y="{_px(cy + radius + 13)}" '
            'text-anchor="middle" font-size="11" fill="#333333">|1&#10217;</text>'
        )
        entries = register.nodes[coord]
        for i, (theta, phi) in enumerate(entries):
            sx, sy, facing = project_point(theta, phi, spec.azimuth_deg, spec.elevation_deg)
            opacity = "1" if facing else f"{spec.hidden_opacity:g}"
            out.append(
                f'<circle class="pt" data-sample="{i}" '
                f'cx="{_px(cx + radius * sx)}" cy="{_px(cy - radius * sy)}" '
                f'r="{spec.point_radius_px}" '
                f'fill="{sample_color(i, len(entries), spec.colormap)}" '
                f'fill-opacity="{opacity}"/>'
            )
        out.append("</g>")

    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
