// Parity of the client-side pruning with the engine: the fixture file is
// generated by scripts/generate-fixtures.py, which runs the engine's prune
// over the same inputs. Plus direct properties of the threshold math.

import { describe, expect, it } from "vitest";

import { applyLivePruning, nodeCaps, percentileThreshold } from "../src/pruning";
import type { MapLink } from "../src/types";
import parity from "./fixtures/pruning-parity.json";

interface Fixture {
  name: string;
  links: [string, string, number][];
  cases: { p: number; l: number; survivors: string[] }[];
}

const fixtures = (parity as { fixtures: Fixture[] }).fixtures;

function toLinks(rows: [string, string, number][]): MapLink[] {
  return rows.map(([source, target, raw]) => ({
    source,
    target,
    raw,
    weight: 0.5,
    primary: true,
  }));
}

function keysOf(links: MapLink[]): string[] {
  return links.map((l) => `${l.source}|${l.target}`).sort();
}

describe("engine parity", () => {
  it("replays every fixture case identically", () => {
    expect(fixtures.length).toBe(21);
    for (const fixture of fixtures) {
      const links = toLinks(fixture.links);
      for (const { p, l, survivors } of fixture.cases) {
        expect(keysOf(applyLivePruning(links, p, l)), `${fixture.name} p=${p} l=${l}`).toEqual(
          survivors,
        );
      }
    }
  });

  it("keeps the four-node worked example", () => {
    const fourNode = fixtures[0]!;
    expect(fourNode.name).toContain("four-node");
    const links = toLinks(fourNode.links);
    expect(keysOf(applyLivePruning(links, 0.5, 2))).toEqual(["a|b", "a|d", "b|c", "c|d"]);
  });
});

function randomLinks(seed: number): MapLink[] {
  // deterministic LCG so failures reproduce
  let s = seed >>> 0;
  const next = () => ((s = (s * 1664525 + 1013904223) >>> 0), s / 2 ** 32);
  const n = 6 + Math.floor(next() * 12);
  const links: MapLink[] = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      if (next() < 0.5) continue;
      links.push({
        source: `n${String(i).padStart(2, "0")}`,
        target: `n${String(j).padStart(2, "0")}`,
        raw: Math.round((next() * 2 - 1) * 1e6) / 1e6,
        weight: 0,
        primary: true,
      });
    }
  }
  return links;
}

describe("pruning properties", () => {
  it("raising P never adds links", () => {
    for (let seed = 1; seed <= 15; seed++) {
      const links = randomLinks(seed);
      if (links.length === 0) continue;
      let previous = Infinity;
      for (const p of [0, 0.2, 0.4, 0.6, 0.8, 0.95, 1]) {
        const count = applyLivePruning(links, p, 5).length;
        expect(count).toBeLessThanOrEqual(previous);
        previous = count;
      }
    }
  });

  it("lowering L never adds links", () => {
    for (let seed = 20; seed <= 30; seed++) {
      const links = randomLinks(seed);
      let previous = -1;
      for (const l of [1, 2, 3, 5, 8, 13, 99]) {
        const count = applyLivePruning(links, 0.3, l).length;
        expect(count).toBeGreaterThanOrEqual(previous);
        previous = count;
      }
    }
  });

  it("P at the floor with a generous cap keeps the whole base layer", () => {
    const links = randomLinks(77);
    expect(applyLivePruning(links, 0, 999)).toHaveLength(links.length);
  });

  it("empty base layer stays empty", () => {
    expect(applyLivePruning([], 0.5, 3)).toEqual([]);
  });
});

describe("percentileThreshold", () => {
  it("matches a count-based reference on random multisets", () => {
    let s = 42 >>> 0;
    const next = () => ((s = (s * 1664525 + 1013904223) >>> 0), s / 2 ** 32);
    for (let trial = 0; trial < 300; trial++) {
      const n = 1 + Math.floor(next() * 40);
      const values = Array.from({ length: n }, () =>
        trial % 2 === 0 ? next() * 10 : Math.floor(next() * 4),
      );
      const p = trial % 5 === 0 ? (trial % 10 === 0 ? 0 : 1) : next();
      const sorted = [...values].sort((a, b) => a - b);
      let want = sorted[n - 1]!;
      for (const v of sorted) {
        if (sorted.filter((x) => x <= v).length / n >= p) {
          want = v;
          break;
        }
      }
      expect(percentileThreshold(values, p)).toBe(want);
    }
  });

  it("rejects out-of-range p and empty input", () => {
    expect(() => percentileThreshold([1], -0.1)).toThrow(RangeError);
    expect(() => percentileThreshold([1], 1.1)).toThrow(RangeError);
    expect(() => percentileThreshold([], 0.5)).toThrow(RangeError);
  });
});

describe("nodeCaps", () => {
  it("is the L-th largest incident raw, -Infinity under the cap", () => {
    const links = toLinks([
      ["a", "b", 0.9],
      ["a", "c", 0.5],
      ["a", "d", 0.7],
      ["b", "c", 0.1],
    ]);
    const caps = nodeCaps(links, 2);
    expect(caps.get("a")).toBe(0.7);
    expect(caps.get("b")).toBe(0.1);
    expect(caps.get("d")).toBe(-Infinity);
  });
});
