import type { RegisterDoc, StatesDoc } from "./types";

export class ApiError extends Error {}

async function postDecompose(states: StatesDoc, order: number[] | null): Promise<RegisterDoc> {
  const body: StatesDoc = order ? { ...states, order } : { ...states };
  const resp = await fetch("/api/decompose", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!resp.ok) {
    let message = `decompose failed (${resp.status})`;
    try {
      const doc = await resp.json();
      if (doc && typeof doc.error === "string") message = doc.error;
    } catch {
      // non-JSON error body; keep the status message
    }
    throw new ApiError(message);
  }
  return (await resp.json()) as RegisterDoc;
}

/**
 * Serializes decompose requests: at most one logical request is "current",
 * and responses that arrive after a newer request was issued are dropped
 * (resolved as null) so the view never regresses to stale data.
 */
export class DecomposeQueue {
  private seq = 0;

  async submit(states: StatesDoc, order: number[] | null): Promise<RegisterDoc | null> {
    const mine = ++this.seq;
    const register = await postDecompose(states, order);
    return mine === this.seq ? register : null;
  }
}
