import { inject } from "vitest";
import { ApiClient } from "../src/api.js";
import type { Direction, FunctionInfo, FunctionPayload, NeighborhoodPayload, RuleTag } from "../src/api.js";

export function serviceUrl(): string {
  return inject("apiBase");
}

export function realClient(): ApiClient {
  return new ApiClient(serviceUrl());
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/* Minimal payload builders for fake-fetch tests. The stub values only need to
 * satisfy the state machine; correctness of real payloads is covered by the
 * tests that talk to the live service. */

export function stubFunction(sets: string, p = 2): FunctionPayload {
  return { p, clauses: [], sets, expr: sets };
}

export function stubInfo(sets: string, p = 2): FunctionInfo {
  return { function: stubFunction(sets, p), signs: "+".repeat(p), trueSetSize: 1 };
}

export function stubHood(
  origin: string,
  direction: Direction,
  neighborSets: string,
  rule: RuleTag = "R1",
): NeighborhoodPayload {
  return {
    origin: stubFunction(origin),
    direction,
    results: [{ function: stubFunction(neighborSets), rule, trueSetDelta: direction === "parent" ? 1 : -1 }],
  };
}
