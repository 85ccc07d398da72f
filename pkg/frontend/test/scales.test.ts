// Visual encoding contracts: label sizing, link opacity, the zoom-to-label
// budget, and the community palette.

import { describe, expect, it } from "vitest";

import {
  LABEL_PX_MAX,
  LABEL_PX_MIN,
  NEUTRAL_COLOR,
  OPACITY_MAX,
  OPACITY_MIN,
  PALETTE_SIZE,
  communityColor,
  labelSize,
  labeledIds,
  linkOpacity,
  zoomLabelBudget,
} from "../src/scales";
import type { MapNode } from "../src/types";

function nodes(freqs: number[]): MapNode[] {
  return freqs.map((freq, i) => ({ id: `w${String(i).padStart(3, "0")}`, freq, community: null }));
}

describe("labelSize", () => {
  it("maps the frequency extremes onto the pixel extremes", () => {
    expect(labelSize(4, 4, 400)).toBe(LABEL_PX_MIN);
    expect(labelSize(400, 4, 400)).toBe(LABEL_PX_MAX);
  });

  it("is affine in sqrt(freq)", () => {
    // midpoint of the sqrt range lands on the midpoint of the pixel range
    const mid = Math.pow((Math.sqrt(4) + Math.sqrt(400)) / 2, 2);
    expect(labelSize(mid, 4, 400)).toBeCloseTo((LABEL_PX_MIN + LABEL_PX_MAX) / 2, 10);
  });

  it("orders sizes exactly like frequencies", () => {
    const freqs = [3, 17, 17, 120, 9000, 41];
    const sizes = freqs.map((f) => labelSize(f, 3, 9000));
    for (let i = 0; i < freqs.length; i++) {
      for (let j = 0; j < freqs.length; j++) {
        if (freqs[i]! < freqs[j]!) expect(sizes[i]!).toBeLessThan(sizes[j]!);
        if (freqs[i] === freqs[j]) expect(sizes[i]).toBe(sizes[j]);
      }
    }
  });

  it("degenerates to the midpoint when all frequencies are equal", () => {
    expect(labelSize(7, 7, 7)).toBe((LABEL_PX_MIN + LABEL_PX_MAX) / 2);
  });
});

describe("linkOpacity", () => {
  it("maps weight 0 and 1 onto the opacity extremes", () => {
    expect(linkOpacity(0)).toBe(OPACITY_MIN);
    expect(linkOpacity(1)).toBe(OPACITY_MAX);
  });

  it("max-weight link is more opaque than min-weight link", () => {
    const weights = [0.2, 0.9, 0.4, 0.0, 0.77];
    const max = Math.max(...weights);
    const min = Math.min(...weights);
    expect(linkOpacity(max)).toBeGreaterThan(linkOpacity(min));
    // and the whole ordering matches
    const sorted = [...weights].sort((a, b) => a - b).map(linkOpacity);
    expect(sorted).toEqual([...sorted].sort((a, b) => a - b));
  });
});

describe("zoom filtering", () => {
  it("gives 30 labels at zoom 0.2", () => {
    expect(zoomLabelBudget(0.2, 500)).toBe(30);
  });

  it("follows round(150 * zoom) between floor and total", () => {
    expect(zoomLabelBudget(0.5, 500)).toBe(75);
    expect(zoomLabelBudget(0.31, 500)).toBe(Math.round(150 * 0.31));
  });

  it("labels everything at zoom >= 1", () => {
    expect(zoomLabelBudget(1, 500)).toBe(500);
    expect(zoomLabelBudget(3.7, 500)).toBe(500);
  });

  it("never exceeds the node count", () => {
    expect(zoomLabelBudget(0.9, 40)).toBe(40);
  });

  it("zooming in only ever adds labels", () => {
    const all = nodes(Array.from({ length: 300 }, (_, i) => 1 + ((i * 37) % 991)));
    let previous = new Set<string>();
    for (const zoom of [0.1, 0.2, 0.35, 0.5, 0.8, 1.0, 2.0]) {
      const labeled = labeledIds(all, zoom);
      for (const id of previous) expect(labeled.has(id), `${id} lost at zoom ${zoom}`).toBe(true);
      previous = labeled;
    }
    expect(previous.size).toBe(300);
  });

  it("picks the most frequent nodes first", () => {
    const all = nodes(Array.from({ length: 40 }, (_, i) => 10 * (i + 1)));
    const labeled = labeledIds(all, 0.0001); // budget floors at 30
    expect(labeled.size).toBe(30);
    const byFreq = [...all].sort((a, b) => b.freq - a.freq);
    for (const node of byFreq.slice(0, 30)) expect(labeled.has(node.id)).toBe(true);
    for (const node of byFreq.slice(30)) expect(labeled.has(node.id)).toBe(false);
  });
});

describe("communityColor", () => {
  it("cycles 12 hues by community id", () => {
    expect(PALETTE_SIZE).toBe(12);
    expect(communityColor(0, true)).toBe(communityColor(12, true));
    expect(communityColor(3, true)).not.toBe(communityColor(4, true));
  });

  it("falls back to neutral when disabled or unassigned", () => {
    expect(communityColor(5, false)).toBe(NEUTRAL_COLOR);
    expect(communityColor(null, true)).toBe(NEUTRAL_COLOR);
  });
});
