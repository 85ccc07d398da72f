// Side panel: neighborhood close-up of the selected term (depth 1-3 via
// the embedding, straight from the server) plus a compound query box for
// "what sits between these words" questions.

import type { CompoundResult, Neighborhood } from "./api";

export function renderNeighborhood(container: HTMLElement, data: Neighborhood): void {
  container.replaceChildren();
  const byLevel = new Map<number, { id: string; sim: number }[]>();
  for (const node of data.nodes) {
    if (node.level === 0) continue;
    let bucket = byLevel.get(node.level);
    if (!bucket) byLevel.set(node.level, (bucket = []));
    bucket.push({ id: node.id, sim: node.sim });
  }
  if (byLevel.size === 0) {
    const p = document.createElement("p");
    p.className = "empty";
    p.textContent = "no neighbors at this depth";
    container.append(p);
    return;
  }
  for (const level of [...byLevel.keys()].sort((a, b) => a - b)) {
    const heading = document.createElement("h3");
    heading.textContent = level === 1 ? "nearest" : `depth ${level}`;
    container.append(heading);
    const list = document.createElement("ul");
    for (const { id, sim } of byLevel.get(level)!) {
      const item = document.createElement("li");
      const name = document.createElement("span");
      name.className = "term";
      name.textContent = id;
      const score = document.createElement("span");
      score.className = "sim";
      score.textContent = sim.toFixed(3);
      item.append(name, score);
      list.append(item);
    }
    container.append(list);
  }
}

export function renderCompound(container: HTMLElement, data: CompoundResult): void {
  container.replaceChildren();
  const list = document.createElement("ul");
  for (const { term, sim } of data.neighbors) {
    const item = document.createElement("li");
    const name = document.createElement("span");
    name.className = "term";
    name.textContent = term;
    const score = document.createElement("span");
    score.className = "sim";
    score.textContent = sim.toFixed(3);
    item.append(name, score);
    list.append(item);
  }
  container.append(list);
}

export function renderPanelError(container: HTMLElement, message: string): void {
  container.replaceChildren();
  const p = document.createElement("p");
  p.className = "panel-error";
  p.textContent = message;
  container.append(p);
}
