/** Test doubles: a scriptable fetch and convenience store builders. */

import { ApiClient, FetchLike } from "../src/api.js";
import { EditorStore } from "../src/state.js";
import type { DrawingJson, EnumerateResponse } from "../src/types.js";
import fixtures from "./fixtures.json";

export const alternatingK7 = fixtures.alternatingK7 as unknown as DrawingJson;
export const enumerateK7Q3 = {
  ...fixtures.enumerateK7Q3,
  elapsed_ms: 0,
} as unknown as EnumerateResponse;

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export interface PendingCall {
  input: string;
  body: unknown;
  signal: AbortSignal | undefined;
  resolve: (r: Response) => void;
  reject: (err: unknown) => void;
}

/** A fetch whose responses the test resolves by hand, in any order. */
export function manualFetch(): { fetch: FetchLike; calls: PendingCall[] } {
  const calls: PendingCall[] = [];
  const fetchFn: FetchLike = (input, init) =>
    new Promise<Response>((resolve, reject) => {
      const call: PendingCall = {
        input,
        body: init?.body ? JSON.parse(init.body as string) : undefined,
        signal: init?.signal ?? undefined,
        resolve,
        reject,
      };
      init?.signal?.addEventListener("abort", () =>
        reject(new DOMException("aborted", "AbortError")),
      );
      calls.push(call);
    });
  return { fetch: fetchFn, calls };
}

/** A fetch that answers the two fixture endpoints immediately. */
export function fixtureFetch(): FetchLike {
  return async (input, init) => {
    if (input.startsWith("/api/generate/alternating")) {
      return jsonResponse(alternatingK7);
    }
    if (input === "/api/winding/enumerate") {
      const body = JSON.parse((init?.body as string) ?? "{}");
      if (body.q === 3 && body.drawing.n === 7) return jsonResponse(enumerateK7Q3);
      return jsonResponse({ detail: "unexpected request" }, 422);
    }
    throw new Error(`unexpected fetch ${input}`);
  };
}

export function storeWith(fetchFn: FetchLike): EditorStore {
  return new EditorStore(new ApiClient("", fetchFn));
}
