/** Typed client for the read-only comparison API. GET only, timelines cached. */

import type { ComparisonDocument, PairInfo, TimelineSeries } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, readonly code: string, message: string) {
    super(message);
  }
}

async function fetchJson<T>(url: string, signal?: AbortSignal): Promise<T> {
  const response = await fetch(url, { signal });
  if (!response.ok) {
    let code = "http_error";
    let message = `${response.status} for ${url}`;
    try {
      const body = await response.json();
      code = body.code ?? code;
      message = body.message ?? message;
    } catch {
      // non-JSON error body; keep the fallback message
    }
    throw new ApiError(response.status, code, message);
  }
  return response.json() as Promise<T>;
}

export class ApiClient {
  private timelines = new Map<string, TimelineSeries>();

  constructor(private baseUrl: string = "") {}

  async pairs(signal?: AbortSignal): Promise<PairInfo[]> {
    return fetchJson(`${this.baseUrl}/api/pairs`, signal);
  }

  async timeline(pairId: string, signal?: AbortSignal): Promise<TimelineSeries> {
    const cached = this.timelines.get(pairId);
    if (cached) {
      return cached;
    }
    const series = await fetchJson<TimelineSeries>(
      `${this.baseUrl}/api/pairs/${encodeURIComponent(pairId)}/timeline`, signal);
    this.timelines.set(pairId, series);
    return series;
  }

  async comparison(pairId: string, time: string | null,
                   signal?: AbortSignal): Promise<ComparisonDocument> {
    const query = time === null ? "" : `?time=${encodeURIComponent(time)}`;
    return fetchJson(
      `${this.baseUrl}/api/pairs/${encodeURIComponent(pairId)}/comparison${query}`,
      signal);
  }
}
