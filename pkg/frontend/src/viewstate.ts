// View state and its URL round-trip. The sliders are bookmarkable:
// ?p=0.99&l=8 restores the same pruning level on reload.

export interface ViewState {
  zoom: number;
  liveP: number;
  liveL: number;
  selectedTerm: string | null;
  communityColoring: boolean;
}

export const LIVE_P_MAX = 0.999;

export function clampLiveP(p: number, baseP: number): number {
  if (!Number.isFinite(p)) return baseP;
  return Math.min(LIVE_P_MAX, Math.max(baseP, p));
}

export function clampLiveL(l: number, maxDegree: number): number {
  if (!Number.isFinite(l)) return maxDegree;
  return Math.max(1, Math.min(Math.round(l), Math.max(1, maxDegree)));
}

export function initialViewState(
  search: string,
  baseP: number,
  defaultP: number,
  defaultL: number,
  maxDegree: number,
): ViewState {
  const params = new URLSearchParams(search);
  const p = params.has("p") ? Number(params.get("p")) : defaultP;
  const l = params.has("l") ? Number(params.get("l")) : defaultL;
  return {
    zoom: 1,
    liveP: clampLiveP(p, baseP),
    liveL: clampLiveL(l, maxDegree),
    selectedTerm: null,
    communityColoring: true,
  };
}

/** Query string for the current sliders, preserving unrelated params. */
export function stateQueryString(state: ViewState, search: string): string {
  const params = new URLSearchParams(search);
  params.set("p", state.liveP.toFixed(4).replace(/0+$/, "").replace(/\.$/, ""));
  params.set("l", String(state.liveL));
  return `?${params.toString()}`;
}
