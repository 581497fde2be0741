import type { RegisterDoc } from "./types";

const TWO_PI = 2 * Math.PI;
export const PRODUCT_TOL = 1e-6;

function circularDelta(a: number, b: number): number {
  const d = Math.abs(a - b) % TWO_PI;
  return Math.min(d, TWO_PI - d);
}

function nodeMap(register: RegisterDoc): Map<string, { theta: number[]; phi: number[] }> {
  return new Map(register.nodes.map((n) => [n.coord, { theta: n.theta, phi: n.phi }]));
}

/**
 * Client-side product check for one sample: the two subtrees under
 * `coord` must agree pairwise (coord+"0"+s vs coord+"1"+s) within tol
 * in theta and circularly in phi.  Returns null for leaf nodes, which
 * have no subtrees to compare (the badge is omitted there).
 */
export function isProductAt(
  register: RegisterDoc,
  coord: string,
  sample: number,
  tol: number = PRODUCT_TOL,
): boolean | null {
  if (coord.length >= register.n_qubits - 1) return null;
  const nodes = nodeMap(register);
  let suffixes: string[] = [""];
  while (suffixes.length > 0) {
    const next: string[] = [];
    for (const s of suffixes) {
      const left = nodes.get(coord + "0" + s);
      const right = nodes.get(coord + "1" + s);
      if (!left || !right) throw new Error(`register is missing node ${coord}?${s}`);
      if (
        Math.abs(left.theta[sample] - right.theta[sample]) > tol ||
        circularDelta(left.phi[sample], right.phi[sample]) > tol
      ) {
        return false;
      }
      if (coord.length + 1 + s.length < register.n_qubits - 1) {
        next.push(s + "0", s + "1");
      }
    }
    suffixes = next;
  }
  return true;
}
