import { EQUATOR_FLATTENING, POLE_OFFSET, projectPoint } from "./projection";
import type { RegisterDoc } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface RenderOptions {
  sphereRadius: number;
  hGap: number;
  vGap: number;
  pointRadius: number;
  selectedSample: number;
  highlightCoord: string | null;
  onNodeClick?: (coord: string) => void;
}

export const DEFAULT_OPTIONS: RenderOptions = {
  sphereRadius: 56,
  hGap: 22,
  vGap: 46,
  pointRadius: 3,
  selectedSample: 0,
  highlightCoord: null,
};

export function sampleColor(index: number, total: number): string {
  const f = total > 1 ? index / (total - 1) : 0;
  return `rgb(${Math.round(255 * f)},0,${Math.round(255 * (1 - f))})`;
}

function el(tag: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

function treeCoords(nQubits: number): string[] {
  const coords = [""];
  for (let depth = 1; depth < nQubits; depth++) {
    for (let i = 0; i < 1 << depth; i++) {
      coords.push(i.toString(2).padStart(depth, "0"));
    }
  }
  return coords;
}

/** Rebuild the tree-of-spheres figure inside `svg` from scratch. */
export function renderTree(
  svg: SVGSVGElement,
  register: RegisterDoc,
  options: Partial<RenderOptions> = {},
): void {
  const opt = { ...DEFAULT_OPTIONS, ...options };
  const n = register.n_qubits;
  const m = register.n_samples;
  const radius = opt.sphereRadius;
  const cellW = 2 * radius + opt.hGap;
  const width = (1 << (n - 1)) * cellW;
  const marginV = 20;
  const rowH = 2 * radius + opt.vGap;
  const height = 2 * marginV + n * 2 * radius + (n - 1) * opt.vGap;

  svg.replaceChildren();
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));

  const nodes = new Map(register.nodes.map((rec) => [rec.coord, rec]));
  const center = (coord: string): [number, number] => {
    const depth = coord.length;
    const index = coord ? parseInt(coord, 2) : 0;
    return [(width * (index + 0.5)) / (1 << depth), marginV + depth * rowH + radius];
  };

  const edges = el("g", { class: "edges", stroke: "#cccccc", "stroke-width": 1 });
  for (const coord of treeCoords(n)) {
    if (coord.length >= n - 1) continue;
    const [cx, cy] = center(coord);
    for (const child of [coord + "0", coord + "1"]) {
      const [ccx, ccy] = center(child);
      edges.appendChild(el("line", { x1: cx, y1: cy + radius, x2: ccx, y2: ccy - radius }));
    }
  }
  svg.appendChild(edges);

  for (const coord of treeCoords(n)) {
    const rec = nodes.get(coord);
    if (!rec) throw new Error(`register is missing node "${coord}"`);
    const [cx, cy] = center(coord);
    const group = el("g", { class: "node", "data-coord": coord, "data-depth": coord.length });
    if (opt.highlightCoord === coord) group.classList.add("inspected");
    group.appendChild(
      el("circle", {
        class: "outline",
        cx,
        cy,
        r: radius,
        fill: "none",
        stroke: opt.highlightCoord === coord ? "#1a73e8" : "#555555",
        "stroke-width": opt.highlightCoord === coord ? 2.5 : 1.5,
      }),
    );
    group.appendChild(
      el("ellipse", {
        class: "equator",
        cx,
        cy,
        rx: radius,
        ry: radius * EQUATOR_FLATTENING,
        fill: "none",
        stroke: "#999999",
        "stroke-width": 1,
        "stroke-dasharray": "4 3",
      }),
    );
    group.appendChild(
      el("line", {
        class: "axis-z",
        x1: cx,
        y1: cy - radius * POLE_OFFSET,
        x2: cx,
        y2: cy + radius * POLE_OFFSET,
        stroke: "#999999",
        "stroke-width": 1,
      }),
    );
    const zero = el("text", {
      class: "label-0",
      x: cx,
      y: cy - radius - 5,
      "text-anchor": "middle",
      "font-size": 11,
      fill: "#333333",
    });
    zero.textContent = "|0⟩";
    group.appendChild(zero);
    const one = el("text", {
      class: "label-1",
      x: cx,
      y: cy + radius + 13,
      "text-anchor": "middle",
      "font-size": 11,
      fill: "#333333",
    });
    one.textContent = "|1⟩";
    group.appendChild(one);

    for (let i = 0; i < m; i++) {
      const { sx, sy, facing } = projectPoint(rec.theta[i], rec.phi[i]);
      const px = cx + radius * sx;
      const py = cy - radius * sy;
      const selected = i === opt.selectedSample;
      if (selected) {
        group.appendChild(
          el("circle", {
            class: "halo",
            cx: px,
            cy: py,
            r: opt.pointRadius * 2.6,
            fill: "none",
            stroke: "#222222",
            "stroke-width": 1.2,
          }),
        );
      }
      group.appendChild(
        el("circle", {
          class: "pt",
          "data-sample": i,
          cx: px,
          cy: py,
          r: selected ? opt.pointRadius * 1.8 : opt.pointRadius,
          fill: sampleColor(i, m),
          "fill-opacity": facing ? "1" : "0.35",
        }),
      );
    }
    if (opt.onNodeClick) {
      group.addEventListener("click", () => opt.onNodeClick!(coord));
    }
    svg.appendChild(group);
  }
}
