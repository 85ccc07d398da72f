// URL round-trip and clamping of the live pruning controls.

import { describe, expect, it } from "vitest";

import {
  clampLiveL,
  clampLiveP,
  initialViewState,
  stateQueryString,
} from "../src/viewstate";

describe("initialViewState", () => {
  it("reads ?p= and ?l= from the query string", () => {
    const state = initialViewState("?p=0.992&l=5", 0.95, 0.985, 12, 40);
    expect(state.liveP).toBe(0.992);
    expect(state.liveL).toBe(5);
  });

  it("defaults to the map's own percentile and cap", () => {
    const state = initialViewState("", 0.95, 0.985, 12, 40);
    expect(state.liveP).toBe(0.985);
    expect(state.liveL).toBe(12);
    expect(state.zoom).toBe(1);
    expect(state.selectedTerm).toBeNull();
    expect(state.communityColoring).toBe(true);
  });

  it("clamps out-of-range and garbage parameters", () => {
    expect(initialViewState("?p=0.5", 0.95, 0.985, 12, 40).liveP).toBe(0.95);
    expect(initialViewState("?p=2", 0.95, 0.985, 12, 40).liveP).toBe(0.999);
    expect(initialViewState("?p=abc", 0.95, 0.985, 12, 40).liveP).toBe(0.95);
    expect(initialViewState("?l=0", 0.95, 0.985, 12, 40).liveL).toBe(1);
    expect(initialViewState("?l=100", 0.95, 0.985, 12, 40).liveL).toBe(40);
    expect(initialViewState("?l=x", 0.95, 0.985, 12, 40).liveL).toBe(40);
  });
});

describe("clamping", () => {
  it("keeps liveP within [baseP, 0.999]", () => {
    expect(clampLiveP(0.97, 0.95)).toBe(0.97);
    expect(clampLiveP(0.1, 0.95)).toBe(0.95);
    expect(clampLiveP(1.0, 0.95)).toBe(0.999);
    expect(clampLiveP(NaN, 0.95)).toBe(0.95);
  });

  it("keeps liveL a positive integer within the degree range", () => {
    expect(clampLiveL(3.6, 10)).toBe(4);
    expect(clampLiveL(-2, 10)).toBe(1);
    expect(clampLiveL(25, 10)).toBe(10);
  });
});

describe("stateQueryString", () => {
  it("writes compact p and l, preserving other params", () => {
    const state = initialViewState("?p=0.99&l=3&theme=dark", 0.95, 0.985, 12, 40);
    const query = stateQueryString(state, "?p=0.99&l=3&theme=dark");
    expect(query).toContain("p=0.99");
    expect(query).toContain("l=3");
    expect(query).toContain("theme=dark");
    expect(query).not.toContain("0.9900");
  });

  it("round-trips through initialViewState", () => {
    const state = initialViewState("?p=0.9735&l=7", 0.95, 0.985, 12, 40);
    const again = initialViewState(stateQueryString(state, ""), 0.95, 0.985, 12, 40);
    expect(again.liveP).toBe(state.liveP);
    expect(again.liveL).toBe(state.liveL);
  });
});
