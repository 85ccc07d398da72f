// Visual encodings. Every mapping here is an exposed constant of the
// explorer: label size tracks sqrt(frequency), link opacity tracks the
// normalized weight, and the zoom level decides how many top-frequency
// labels are shown.

import type { MapNode } from "./types";

export const LABEL_PX_MIN = 10;
export const LABEL_PX_MAX = 42;
export const OPACITY_MIN = 0.08;
export const OPACITY_MAX = 0.9;
export const DIMMED_OPACITY = 0.03;
export const ZOOM_LABEL_RATE = 150;
export const ZOOM_LABEL_FLOOR = 30;

/** Affine map of sqrt(freq) onto [LABEL_PX_MIN, LABEL_PX_MAX] over the
 *  frequency range present in the map. A single-frequency map sits at the
 *  midpoint. */
export function labelSize(freq: number, minFreq: number, maxFreq: number): number {
  const lo = Math.sqrt(minFreq);
  const hi = Math.sqrt(maxFreq);
  if (hi <= lo) return (LABEL_PX_MIN + LABEL_PX_MAX) / 2;
  const t = (Math.sqrt(freq) - lo) / (hi - lo);
  return LABEL_PX_MIN + t * (LABEL_PX_MAX - LABEL_PX_MIN);
}

/** Affine map of weight in [0, 1] onto [OPACITY_MIN, OPACITY_MAX]. */
export function linkOpacity(weight: number): number {
  return OPACITY_MIN + weight * (OPACITY_MAX - OPACITY_MIN);
}

/** How many labels a zoom level supports: round(150 * zoom), never below
 *  30, and everything once zoomed to scale 1 or beyond. */
export function zoomLabelBudget(zoom: number, totalNodes: number): number {
  if (zoom >= 1) return totalNodes;
  return Math.min(totalNodes, Math.max(ZOOM_LABEL_FLOOR, Math.round(ZOOM_LABEL_RATE * zoom)));
}

/** The ids labeled at a zoom level: the top-K by frequency, ties broken by
 *  term so label sets nest as the budget grows. */
export function labeledIds(nodes: readonly MapNode[], zoom: number): Set<string> {
  const budget = zoomLabelBudget(zoom, nodes.length);
  const ranked = [...nodes].sort((a, b) => b.freq - a.freq || (a.id < b.id ? -1 : 1));
  return new Set(ranked.slice(0, budget).map((n) => n.id));
}

// 12 well-separated hues; community id cycles through them.
const PALETTE = [
  "#4269d0", "#efb118", "#ff725c", "#6cc5b0", "#3ca951", "#ff8ab7",
  "#a463f2", "#97bbf5", "#9c6b4e", "#d4af0e", "#00b2c5", "#94748c",
];
export const NEUTRAL_COLOR = "#5b6470";

export function communityColor(community: number | null, enabled: boolean): string {
  if (!enabled || community === null) return NEUTRAL_COLOR;
  return PALETTE[((community % PALETTE.length) + PALETTE.length) % PALETTE.length]!;
}

export const PALETTE_SIZE = PALETTE.length;
