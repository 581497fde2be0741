/** Wire formats of the decomposition service, plus the viewer's session state. */

/** Amplitude pair [re, im]. */
export type Amplitude = [number, number];

/** Body of POST /api/decompose (the states JSON schema). */
export interface StatesDoc {
  n_qubits: number;
  states: Amplitude[][];
  order?: number[];
}

export interface NodeRecord {
  coord: string;
  theta: number[];
  phi: number[];
}

/** Response of POST /api/decompose (the register JSON schema). */
export interface RegisterDoc {
  n_qubits: number;
  n_samples: number;
  order: number[];
  nodes: NodeRecord[];
}

export interface ViewerSession {
  /** Last loaded raw states, kept for re-decomposition requests. */
  states: StatesDoc | null;
  /** Register currently on screen, exactly as received from the API. */
  register: RegisterDoc | null;
  order: number[];
  selectedSample: number;
  highlight: string | null;
}

export function emptySession(): ViewerSession {
  return { states: null, register: null, order: [], selectedSample: 0, highlight: null };
}

export function identityOrder(n: number): number[] {
  return Array.from({ length: n }, (_, k) => k);
}
