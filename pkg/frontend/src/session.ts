import { ApiError, DecomposeQueue } from "./api";
import type { RegisterDoc, StatesDoc, ViewerSession } from "./types";
import { emptySession, identityOrder } from "./types";

export type SessionListener = (session: ViewerSession) => void;

function parseStatesDoc(text: string): StatesDoc {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch {
    throw new ApiError("file is not valid JSON");
  }
  const candidate = doc as StatesDoc;
  if (
    typeof candidate !== "object" ||
    candidate === null ||
    typeof candidate.n_qubits !== "number" ||
    !Array.isArray(candidate.states)
  ) {
    throw new ApiError("file does not match the states schema (n_qubits, states)");
  }
  return { n_qubits: candidate.n_qubits, states: candidate.states };
}

/**
 * Holds the viewer state and funnels every decomposition through the
 * API; the session is replaced atomically only when a current (non
 * stale) response lands, so failed or superseded requests leave the
 * view untouched.
 */
export class SessionController {
  session: ViewerSession = emptySession();
  private queue = new DecomposeQueue();
  private listeners: SessionListener[] = [];

  onChange(listener: SessionListener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.session);
  }

  /** Parse a states file and decompose it with the identity order. */
  async loadStates(text: string): Promise<void> {
    const states = parseStatesDoc(text);
    const order = identityOrder(states.n_qubits);
    const register = await this.queue.submit(states, order);
    if (register === null) return; // a newer load superseded this one
    this.session = {
      states,
      register,
      order,
      selectedSample: 0,
      highlight: null,
    };
    this.emit();
  }

  /** Re-decompose the stored states under a new qubit order. */
  async reorder(order: number[]): Promise<void> {
    const { states } = this.session;
    if (!states) throw new ApiError("no states loaded");
    if (!isPermutation(order, states.n_qubits)) {
      throw new ApiError(`order ${JSON.stringify(order)} is not a permutation`);
    }
    const register = await this.queue.submit(states, order);
    if (register === null) return;
    this.session = {
      ...this.session,
      register,
      order: [...order],
      // sample selection survives reordering; the register shape is unchanged
      selectedSample: Math.min(this.session.selectedSample, register.n_samples - 1),
    };
    this.emit();
  }

  /** Select the sample to highlight on every sphere. */
  scrub(sample: number): void {
    const register = this.session.register;
    if (!register) return;
    const clamped = Math.max(0, Math.min(register.n_samples - 1, Math.floor(sample)));
    this.session = { ...this.session, selectedSample: clamped };
    this.emit();
  }

  /** Focus a node for the detail panel. */
  inspectNode(coord: string | null): void {
    if (coord !== null && this.session.register) {
      const known = this.session.register.nodes.some((n) => n.coord === coord);
      if (!known) return;
    }
    this.session = { ...this.session, highlight: coord };
    this.emit();
  }

  nodeRecord(coord: string): RegisterDoc["nodes"][number] | null {
    const register = this.session.register;
    if (!register) return null;
    return register.nodes.find((n) => n.coord === coord) ?? null;
  }
}

export function isPermutation(order: number[], n: number): boolean {
  if (order.length !== n) return false;
  const seen = new Set(order);
  if (seen.size !== n) return false;
  for (let q = 0; q < n; q++) if (!seen.has(q)) return false;
  return true;
}
