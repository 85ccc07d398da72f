// Hover highlighting works on recomputed adjacency of the currently
// displayed links, so it always matches exactly what is on screen.

import type { MapLink } from "./types";
import { linkKey } from "./pruning";

export interface HighlightSets {
  nodes: Set<string>;
  links: Set<string>;
}

export function adjacency(links: readonly MapLink[]): Map<string, Set<string>> {
  const adj = new Map<string, Set<string>>();
  for (const link of links) {
    if (!adj.has(link.source)) adj.set(link.source, new Set());
    if (!adj.has(link.target)) adj.set(link.target, new Set());
    adj.get(link.source)!.add(link.target);
    adj.get(link.target)!.add(link.source);
  }
  return adj;
}

/** The term, its displayed neighbors, and the incident displayed links. */
export function highlightSets(term: string, links: readonly MapLink[]): HighlightSets {
  const nodes = new Set<string>([term]);
  const keys = new Set<string>();
  for (const link of links) {
    if (link.source === term || link.target === term) {
      nodes.add(link.source);
      nodes.add(link.target);
      keys.add(linkKey(link.source, link.target));
    }
  }
  return { nodes, links: keys };
}

/** Case-insensitive prefix search over node ids, in id order. */
export function searchMatches(prefix: string, ids: readonly string[]): string[] {
  const needle = prefix.trim().toLowerCase();
  if (!needle) return [];
  return ids.filter((id) => id.toLowerCase().startsWith(needle)).sort();
}
