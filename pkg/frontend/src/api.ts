/**
 * Typed client for the qwind service.  All requests accept an
 * AbortSignal so the editor can cancel superseded enumerations.
 */

import type {
  BoundsResponse,
  CheckResponse,
  DrawingJson,
  EnumerateResponse,
  FaceJson,
  GpReportJson,
  HuntStepResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function readDetail(response: Response): Promise<string> {
  const text = await response.text();
  try {
    const payload = JSON.parse(text);
    if (payload && typeof payload === "object" && "detail" in payload) {
      return typeof payload.detail === "string"
        ? payload.detail
        : JSON.stringify(payload.detail);
    }
  } catch {
    /* fall through to raw text */
  }
  return text.slice(0, 200) || response.statusText;
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(`${status}: ${detail}`);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await readDetail(response));
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    return this.json<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  }

  generateAlternating(n: number, signal?: AbortSignal): Promise<DrawingJson> {
    return this.json(`/api/generate/alternating?n=${n}`, { signal });
  }

  enumerate(drawing: DrawingJson, q: number, signal?: AbortSignal): Promise<EnumerateResponse> {
    return this.post("/api/winding/enumerate", { drawing, q }, signal);
  }

  check(drawing: DrawingJson, family: FaceJson[], signal?: AbortSignal): Promise<CheckResponse> {
    return this.post("/api/winding/check", { drawing, family }, signal);
  }

  gpCheck(drawing: DrawingJson, signal?: AbortSignal): Promise<GpReportJson> {
    return this.post("/api/gp-check", { drawing }, signal);
  }

  huntStep(
    req: {
      drawing: DrawingJson;
      q: number;
      seed: number;
      steps: number;
      temperature?: number;
      pinned?: number[];
    },
    signal?: AbortSignal,
  ): Promise<HuntStepResponse> {
    return this.post("/api/hunt/step", req, signal);
  }

  bounds(d: number, q: number, signal?: AbortSignal): Promise<BoundsResponse> {
    return this.json(`/api/bounds?d=${d}&q=${q}`, { signal });
  }
}
