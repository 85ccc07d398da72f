// Application wiring: load the map, validate it, then connect the force
// view, the pruning sliders, zoom-responsive labeling, search, and the
// neighborhood panel.

import "./style.css";

import { ApiError, NeighborsClient, fetchCompound, fetchMap } from "./api";
import { searchMatches } from "./highlight";
import { applyLivePruning } from "./pruning";
import { renderCompound, renderNeighborhood, renderPanelError } from "./panel";
import { GraphView } from "./render";
import { labeledIds } from "./scales";
import type { MapLink, TopicMapData } from "./types";
import { validateMap } from "./types";
import { clampLiveL, clampLiveP, initialViewState, stateQueryString } from "./viewstate";
import type { ViewState } from "./viewstate";

function showBanner(message: string): void {
  const banner = document.getElementById("banner")!;
  banner.textContent = message;
  banner.classList.add("visible");
}

function maxDegree(links: readonly MapLink[]): number {
  const degree = new Map<string, number>();
  for (const link of links) {
    degree.set(link.source, (degree.get(link.source) ?? 0) + 1);
    degree.set(link.target, (degree.get(link.target) ?? 0) + 1);
  }
  return Math.max(1, ...degree.values());
}

function start(data: TopicMapData): void {
  const deg = maxDegree(data.links);
  const state: ViewState = initialViewState(
    location.search,
    data.meta.basePercentile,
    data.meta.percentile,
    data.meta.cap,
    deg,
  );

  const panel = document.getElementById("panel")!;
  const neighborsOut = document.getElementById("neighbors")!;
  const compoundOut = document.getElementById("compound-results")!;
  const depthSelect = document.getElementById("depth") as HTMLSelectElement;
  const kInput = document.getElementById("k") as HTMLInputElement;
  const neighbors = new NeighborsClient();

  const view = new GraphView(
    document.getElementById("graph") as unknown as SVGSVGElement,
    data,
    {
      onZoom: (scale) => {
        state.zoom = scale;
        view.setLabeled(labeledIds(data.nodes, scale));
      },
      onHover: (term) => view.hover(term),
      onSelect: (term) => selectTerm(term),
    },
  );

  function refreshLinks(): void {
    const displayed = applyLivePruning(data.links, state.liveP, state.liveL);
    view.setLinks(displayed);
    document.getElementById("link-count")!.textContent =
      `${displayed.length}/${data.links.length} links`;
    history.replaceState(null, "", stateQueryString(state, location.search));
  }

  async function loadNeighborhood(term: string): Promise<void> {
    try {
      const depth = Number(depthSelect.value);
      const k = Number(kInput.value);
      const result = await neighbors.fetch(term, k, depth);
      if (result) renderNeighborhood(neighborsOut, result);
    } catch (err) {
      renderPanelError(
        neighborsOut,
        err instanceof ApiError ? err.code : "request failed",
      );
    }
  }

  function selectTerm(term: string | null): void {
    state.selectedTerm = term;
    view.select(term);
    if (!term) {
      panel.classList.remove("visible");
      return;
    }
    panel.classList.add("visible");
    document.getElementById("panel-term")!.textContent = term;
    void loadNeighborhood(term);
  }

  // --- toolbar: pruning sliders ---
  const pSlider = document.getElementById("live-p") as HTMLInputElement;
  const lSlider = document.getElementById("live-l") as HTMLInputElement;
  pSlider.min = String(data.meta.basePercentile);
  pSlider.max = "0.999";
  pSlider.step = "0.0005";
  pSlider.value = String(state.liveP);
  lSlider.min = "1";
  lSlider.max = String(deg);
  lSlider.step = "1";
  lSlider.value = String(state.liveL);

  const pValue = document.getElementById("live-p-value")!;
  const lValue = document.getElementById("live-l-value")!;
  pValue.textContent = state.liveP.toFixed(4);
  lValue.textContent = String(state.liveL);

  pSlider.addEventListener("input", () => {
    state.liveP = clampLiveP(Number(pSlider.value), data.meta.basePercentile);
    pValue.textContent = state.liveP.toFixed(4);
    refreshLinks();
  });
  lSlider.addEventListener("input", () => {
    state.liveL = clampLiveL(Number(lSlider.value), deg);
    lValue.textContent = String(state.liveL);
    refreshLinks();
  });

  // --- toolbar: community coloring toggle ---
  const coloring = document.getElementById("coloring") as HTMLInputElement;
  coloring.checked = state.communityColoring;
  coloring.addEventListener("change", () => {
    state.communityColoring = coloring.checked;
    view.setCommunityColoring(coloring.checked);
  });

  // --- toolbar: search ---
  const search = document.getElementById("search") as HTMLInputElement;
  const searchStatus = document.getElementById("search-status")!;
  search.addEventListener("input", () => {
    const matches = searchMatches(search.value, data.nodes.map((n) => n.id));
    if (search.value.trim() === "") {
      searchStatus.textContent = "";
    } else if (matches.length === 0) {
      searchStatus.textContent = "no match";
    } else if (matches.length === 1) {
      searchStatus.textContent = matches[0]!;
      view.centerOn(matches[0]!);
      view.hover(matches[0]!);
    } else {
      searchStatus.textContent = `${matches.length} matches`;
    }
  });

  // --- panel controls ---
  depthSelect.addEventListener("change", () => {
    if (state.selectedTerm) void loadNeighborhood(state.selectedTerm);
  });
  kInput.addEventListener("change", () => {
    if (state.selectedTerm) void loadNeighborhood(state.selectedTerm);
  });
  document.getElementById("close-panel")!.addEventListener("click", () => selectTerm(null));

  const compoundInput = document.getElementById("compound-input") as HTMLInputElement;
  compoundInput.addEventListener("keydown", (event: KeyboardEvent) => {
    if (event.key !== "Enter") return;
    const terms = compoundInput.value.split(",").map((t) => t.trim()).filter(Boolean);
    if (terms.length === 0) return;
    fetchCompound(terms, 10)
      .then((result) => renderCompound(compoundOut, result))
      .catch((err) =>
        renderPanelError(
          compoundOut,
          err instanceof ApiError ? err.code : "request failed",
        ),
      );
  });

  // initial paint
  view.setCommunityColoring(state.communityColoring);
  view.setLabeled(labeledIds(data.nodes, state.zoom));
  refreshLinks();
  const meta = data.meta;
  document.title = `topic map (${meta.terms} terms)`;
}

fetchMap()
  .then((data) => {
    const problems = validateMap(data);
    if (problems.length > 0) {
      showBanner(`map file failed validation:\n${problems.join("\n")}`);
      return;
    }
    if (data.nodes.length === 0) {
      showBanner("map has no nodes");
      return;
    }
    start(data);
  })
  .catch((err: unknown) => {
    showBanner(
      err instanceof ApiError
        ? `map not available: ${err.code}`
        : "map not available: request failed",
    );
  });
