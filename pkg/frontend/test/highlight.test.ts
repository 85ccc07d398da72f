// Hover highlighting must equal recomputed adjacency, and search is a
// case-insensitive prefix filter.

import { describe, expect, it } from "vitest";

import { adjacency, highlightSets, searchMatches } from "../src/highlight";
import { linkKey } from "../src/pruning";
import type { MapLink } from "../src/types";

function link(source: string, target: string): MapLink {
  return { source, target, raw: 0.5, weight: 0.5, primary: true };
}

const LINKS = [link("ant", "bee"), link("bee", "cow"), link("ant", "cow"), link("doe", "elk")];

describe("highlightSets", () => {
  it("equals the term's adjacency over displayed links", () => {
    const adj = adjacency(LINKS);
    for (const term of ["ant", "bee", "cow", "doe", "elk"]) {
      const { nodes } = highlightSets(term, LINKS);
      const expected = new Set([term, ...(adj.get(term) ?? [])]);
      expect(nodes).toEqual(expected);
    }
  });

  it("collects exactly the incident link keys", () => {
    const { links } = highlightSets("bee", LINKS);
    expect(links).toEqual(new Set([linkKey("ant", "bee"), linkKey("bee", "cow")]));
  });

  it("an isolated term highlights no links", () => {
    const { nodes, links } = highlightSets("fox", LINKS);
    expect(nodes).toEqual(new Set(["fox"]));
    expect(links.size).toBe(0);
  });

  it("reacts to the displayed subset, not the full map", () => {
    const displayed = LINKS.slice(1); // ant-bee filtered out
    const { links } = highlightSets("ant", displayed);
    expect(links).toEqual(new Set([linkKey("ant", "cow")]));
  });
});

describe("searchMatches", () => {
  const ids = ["market", "Marketing", "mars", "rover", "marsupial"];

  it("is a case-insensitive prefix filter, sorted", () => {
    expect(searchMatches("mar", ids)).toEqual(["Marketing", "market", "mars", "marsupial"]);
    expect(searchMatches("MARS", ids)).toEqual(["mars", "marsupial"]);
  });

  it("no match yields an empty list", () => {
    expect(searchMatches("zebra", ids)).toEqual([]);
  });

  it("blank input matches nothing", () => {
    expect(searchMatches("   ", ids)).toEqual([]);
  });
});
