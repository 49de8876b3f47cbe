/** Typed client for the /v1 JSON API. No local recomputation of anything:
 * every list shown in the UI is exactly what the service returned. */

export interface FunctionPayload {
  p: number;
  clauses: number[][];
  sets: string;
  expr: string;
}

export interface FunctionInfo {
  function: FunctionPayload;
  signs: string;
  trueSetSize: number;
}

export type RuleTag = "R1" | "R2" | "R3";
export type Direction = "parent" | "child";

export interface NeighborPayload {
  function: FunctionPayload;
  rule: RuleTag;
  trueSetDelta: number;
}

export interface NeighborhoodPayload {
  origin: FunctionPayload;
  direction: Direction;
  results: NeighborPayload[];
}

export interface CountRowPayload {
  p: number;
  M: string;
  N: string;
  enumerated: number | null;
}

export interface WalkStepPayload {
  from: FunctionPayload;
  ruleCounts: { R1: number; R2: number; R3: number };
  chosen: NeighborPayload;
}

export interface WalkPayload {
  p: number;
  direction: string;
  seed: number;
  length: number;
  start: FunctionPayload;
  steps: WalkStepPayload[];
  end: FunctionPayload;
  durationMs: number;
}

interface ErrorEnvelope {
  error: { code: string; message: string; details: Record<string, unknown> };
}

/** A structured rejection from the service (4xx with an error envelope). */
export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly details: Record<string, unknown>;

  constructor(status: number, code: string, message: string, details: Record<string, unknown>) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
    this.details = details;
  }
}

export type FetchLike = (url: string) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.base = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((url) => fetch(url));
  }

  private async get<T>(path: string, params: Record<string, string | number | undefined>): Promise<T> {
    const query = new URLSearchParams();
    for (const [key, value] of Object.entries(params)) {
      if (value !== undefined) query.set(key, String(value));
    }
    const response = await this.fetchImpl(`${this.base}${path}?${query}`);
    if (!response.ok) {
      let envelope: ErrorEnvelope | null = null;
      try {
        envelope = (await response.json()) as ErrorEnvelope;
      } catch {
        // fall through to the generic error below
      }
      if (envelope?.error) {
        throw new ApiError(response.status, envelope.error.code, envelope.error.message, envelope.error.details);
      }
      throw new ApiError(response.status, "http_error", `HTTP ${response.status}`, {});
    }
    return (await response.json()) as T;
  }

  getFunction(f: string, p: number, signs?: string): Promise<FunctionInfo> {
    return this.get("/v1/function", { f, p, signs });
  }

  getParents(f: string, p: number, signs?: string): Promise<NeighborhoodPayload> {
    return this.get("/v1/parents", { f, p, signs });
  }

  getChildren(f: string, p: number, signs?: string): Promise<NeighborhoodPayload> {
    return this.get("/v1/children", { f, p, signs });
  }

  getWalk(p: number, dir: "up" | "down" = "up", seed = 0): Promise<WalkPayload> {
    return this.get("/v1/walk", { p, dir, seed });
  }

  getCounts(maxp: number, long = false): Promise<{ rows: CountRowPayload[] }> {
    return this.get("/v1/counts", { maxp, long: long ? "true" : "false" });
  }
}
