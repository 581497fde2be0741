import { vi } from "vitest";
import type { RegisterDoc, StatesDoc } from "../types";

/**
 * Stub global fetch with a decompose endpoint that picks a canned
 * register by the requested qubit order.  Returns the call log.
 */
export function stubDecompose(byOrder: Record<string, RegisterDoc | { error: string }>) {
  const calls: StatesDoc[] = [];
  vi.stubGlobal(
    "fetch",
    vi.fn(async (_url: string, init?: RequestInit) => {
      const body = JSON.parse(String(init?.body)) as StatesDoc;
      calls.push(body);
      const key = (body.order ?? []).join(",");
      const doc = byOrder[key];
      if (!doc) throw new Error(`no canned response for order [${key}]`);
      const failed = "error" in doc;
      return {
        ok: !failed,
        status: failed ? 400 : 200,
        json: async () => doc,
      } as Response;
    }),
  );
  return calls;
}

export function deferred<T>() {
  let resolve!: (value: T) => void;
  const promise = new Promise<T>((r) => (resolve = r));
  return { promise, resolve };
}
