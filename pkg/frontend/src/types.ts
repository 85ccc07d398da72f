// Shapes of the map export served at /api/map, plus a structural validator.
// The explorer refuses to render anything that fails validation: a partial
// render of a half-broken file is worse than an error banner.

export interface MapNode {
  id: string;
  freq: number;
  community: number | null;
}

export interface MapLink {
  source: string;
  target: string;
  raw: number;
  weight: number;
  primary: boolean;
}

export interface MapMeta {
  vectorSize: number;
  contextSize: number;
  epochs: number;
  terms: number;
  percentile: number;
  cap: number;
  basePercentile: number;
  seed: number;
  corpus: { documents: number; tokens: number; vocab: number };
}

export interface TopicMapData {
  meta: MapMeta;
  nodes: MapNode[];
  links: MapLink[];
}

function isInt(x: unknown): x is number {
  return typeof x === "number" && Number.isInteger(x);
}

function isNum(x: unknown): x is number {
  return typeof x === "number" && Number.isFinite(x);
}

/** Validate a parsed /api/map payload. Returns problems, empty when clean. */
export function validateMap(data: unknown): string[] {
  const errors: string[] = [];
  const bad = (msg: string) => {
    if (errors.length < 20) errors.push(msg);
  };
  if (typeof data !== "object" || data === null) return ["map is not an object"];
  const m = data as Record<string, unknown>;

  const meta = m.meta as Record<string, unknown> | undefined;
  if (typeof meta !== "object" || meta === null) {
    bad("meta missing");
  } else {
    for (const key of ["vectorSize", "contextSize", "epochs", "terms", "cap", "seed"]) {
      if (!isInt(meta[key])) bad(`meta.${key} must be an integer`);
    }
    for (const key of ["percentile", "basePercentile"]) {
      const v = meta[key];
      if (!isNum(v) || v <= 0 || v >= 1) bad(`meta.${key} must be in (0, 1)`);
    }
    const corpus = meta.corpus as Record<string, unknown> | undefined;
    if (typeof corpus !== "object" || corpus === null) {
      bad("meta.corpus missing");
    } else {
      for (const key of ["documents", "tokens", "vocab"]) {
        if (!isInt(corpus[key])) bad(`meta.corpus.${key} must be an integer`);
      }
    }
  }

  if (!Array.isArray(m.nodes)) {
    bad("nodes must be an array");
  } else {
    const seen = new Set<string>();
    m.nodes.forEach((n: unknown, i: number) => {
      const node = n as Record<string, unknown>;
      if (typeof node?.id !== "string" || node.id.length === 0) {
        bad(`nodes[${i}].id must be a non-empty string`);
        return;
      }
      if (!isInt(node.freq) || (node.freq as number) < 1) bad(`nodes[${i}].freq must be a positive integer`);
      if (node.community !== null && !isInt(node.community)) bad(`nodes[${i}].community must be an integer or null`);
      if (seen.has(node.id)) bad(`duplicate node id ${node.id}`);
      seen.add(node.id);
    });

    if (Array.isArray(m.links)) {
      m.links.forEach((l: unknown, i: number) => {
        const link = l as Record<string, unknown>;
        if (typeof link?.source !== "string" || typeof link?.target !== "string") {
          bad(`links[${i}] needs string source and target`);
          return;
        }
        if (!seen.has(link.source) || !seen.has(link.target)) bad(`links[${i}] references a missing node`);
        if (link.source >= link.target) bad(`links[${i}] must have source < target`);
        if (!isNum(link.raw) || link.raw < -1 || link.raw > 1) bad(`links[${i}].raw must be in [-1, 1]`);
        if (!isNum(link.weight) || link.weight < 0 || link.weight > 1) bad(`links[${i}].weight must be in [0, 1]`);
        if (typeof link.primary !== "boolean") bad(`links[${i}].primary must be boolean`);
      });
    } else {
      bad("links must be an array");
    }
  }
  return errors;
}
