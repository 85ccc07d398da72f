// Thin client over the three map-server endpoints. Neighborhood requests
// go through a latest-wins gate: the panel fires one request per
// interaction and only the newest response is allowed to land.

import type { TopicMapData } from "./types";

export interface NeighborNode {
  id: string;
  level: number;
  sim: number;
}

export interface NeighborLink {
  source: string;
  target: string;
  raw: number;
}

export interface Neighborhood {
  term: string;
  k: number;
  depth: number;
  nodes: NeighborNode[];
  links: NeighborLink[];
}

export interface CompoundResult {
  terms: string[];
  k: number;
  neighbors: { term: string; sim: number }[];
}

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message?: string) {
    super(message ?? `${code} (HTTP ${status})`);
    this.status = status;
    this.code = code;
  }
}

type FetchLike = (url: string) => Promise<Response>;

async function getJson(fetchFn: FetchLike, url: string): Promise<unknown> {
  const response = await fetchFn(url);
  if (!response.ok) {
    let code = `HTTP ${response.status}`;
    try {
      const body = (await response.json()) as { error?: string };
      if (body && typeof body.error === "string") code = body.error;
    } catch {
      // non-JSON error body, keep the status code
    }
    throw new ApiError(response.status, code);
  }
  return response.json();
}

export async function fetchMap(fetchFn: FetchLike = fetch): Promise<TopicMapData> {
  return (await getJson(fetchFn, "api/map")) as TopicMapData;
}

export async function fetchCompound(
  terms: readonly string[],
  k: number,
  fetchFn: FetchLike = fetch,
): Promise<CompoundResult> {
  const joined = encodeURIComponent(terms.join(","));
  return (await getJson(fetchFn, `api/compound?terms=${joined}&k=${k}`)) as CompoundResult;
}

/** At most one neighborhood request is live at a time; stale responses
 *  resolve to null instead of overwriting newer state. */
export class NeighborsClient {
  private ticket = 0;

  constructor(private readonly fetchFn: FetchLike = fetch) {}

  async fetch(term: string, k: number, depth: number): Promise<Neighborhood | null> {
    const mine = ++this.ticket;
    const url = `api/neighbors/${encodeURIComponent(term)}?k=${k}&depth=${depth}`;
    const result = (await getJson(this.fetchFn, url)) as Neighborhood;
    return mine === this.ticket ? result : null;
  }
}
