import comparisonJson from "./fixtures/comparison.json";
import pairsJson from "./fixtures/pairs.json";
import timelineJson from "./fixtures/timeline.json";

import type { ComparisonDocument, PairInfo, TimelineSeries } from "../src/types.js";

export const pairsFixture = (): PairInfo[] =>
  structuredClone(pairsJson) as PairInfo[];
export const timelineFixture = (): TimelineSeries =>
  structuredClone(timelineJson) as TimelineSeries;
export const comparisonFixture = (): ComparisonDocument =>
  structuredClone(comparisonJson) as unknown as ComparisonDocument;

export function panel(): HTMLElement {
  const node = document.createElement("div");
  document.body.appendChild(node);
  return node;
}

type Handler = (url: string) => unknown;

/** fetch stub: first matching prefix wins; records every requested URL. */
export function stubFetch(routes: Record<string, Handler>): string[] {
  const calls: string[] = [];
  globalThis.fetch = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    calls.push(url);
    if (init?.method && init.method !== "GET") {
      throw new Error(`non-GET request to ${url}`);
    }
    for (const [prefix, handler] of Object.entries(routes)) {
      if (url.startsWith(prefix)) {
        const body = handler(url);
        if (body instanceof Error) {
          return {
            ok: false,
            status: 404,
            json: async () => ({ code: "not_found", message: body.message }),
          } as Response;
        }
        return { ok: true, status: 200, json: async () => body } as Response;
      }
    }
    throw new Error(`unrouted fetch: ${url}`);
  }) as typeof fetch;
  return calls;
}
