// Force-directed rendering. Terms are drawn as sized words (with a small
// anchor dot), links as lines whose opacity encodes the normalized weight.
// The simulation keeps running while the user drags nodes around, so the
// layout can be nudged out of a local optimum by hand.

import * as d3 from "d3";

import type { MapLink, MapNode, TopicMapData } from "./types";
import { linkKey } from "./pruning";
import {
  DIMMED_OPACITY,
  communityColor,
  labelSize,
  linkOpacity,
} from "./scales";
import { highlightSets } from "./highlight";

export interface SimNode extends d3.SimulationNodeDatum {
  id: string;
  freq: number;
  community: number | null;
  labelPx: number;
}

export interface SimLink extends d3.SimulationLinkDatum<SimNode> {
  key: string;
  raw: number;
  weight: number;
  primary: boolean;
}

// Force constants, tuned once on the 500-node reference map. The contract
// is behavioral (interactive rates, labels apart at rest), not these exact
// numbers.
export const CHARGE_STRENGTH = -180;
export const LINK_DISTANCE = 70;
export const LINK_STRENGTH_SCALE = 0.6;
export const COLLIDE_PADDING = 2;

/** Rough half-extent of a rendered label, used as collision radius so
 *  resting labels do not sit on top of each other. */
export function collideRadius(node: Pick<SimNode, "id" | "labelPx">): number {
  const halfWidth = 0.27 * node.labelPx * node.id.length * 0.5;
  const halfHeight = node.labelPx * 0.6;
  return Math.max(halfHeight, halfWidth) + COLLIDE_PADDING;
}

export interface GraphViewOptions {
  onSelect?: (term: string | null) => void;
  onHover?: (term: string | null) => void;
  onZoom?: (scale: number) => void;
}

export class GraphView {
  readonly nodes: SimNode[];
  readonly simulation: d3.Simulation<SimNode, SimLink>;

  private links: SimLink[] = [];
  private readonly byId = new Map<string, SimNode>();
  private readonly svg: d3.Selection<SVGSVGElement, unknown, null, undefined>;
  private readonly root: d3.Selection<SVGGElement, unknown, null, undefined>;
  private readonly linkGroup: d3.Selection<SVGGElement, unknown, null, undefined>;
  private readonly nodeGroup: d3.Selection<SVGGElement, unknown, null, undefined>;
  private readonly zoomBehavior: d3.ZoomBehavior<SVGSVGElement, unknown>;
  private readonly opts: GraphViewOptions;
  private coloring = true;
  private hovered: string | null = null;
  private selected: string | null = null;

  constructor(svgEl: SVGSVGElement, data: TopicMapData, opts: GraphViewOptions = {}) {
    this.opts = opts;
    const freqs = data.nodes.map((n) => n.freq);
    const minFreq = Math.min(...freqs);
    const maxFreq = Math.max(...freqs);
    this.nodes = data.nodes.map((n) => ({
      id: n.id,
      freq: n.freq,
      community: n.community,
      labelPx: labelSize(n.freq, minFreq, maxFreq),
    }));
    for (const node of this.nodes) this.byId.set(node.id, node);

    this.svg = d3.select(svgEl);
    this.root = this.svg.append("g").attr("class", "viewport");
    this.linkGroup = this.root.append("g").attr("class", "links");
    this.nodeGroup = this.root.append("g").attr("class", "nodes");

    this.simulation = d3
      .forceSimulation<SimNode>(this.nodes)
      .force("charge", d3.forceManyBody<SimNode>().strength(CHARGE_STRENGTH))
      .force("collide", d3.forceCollide<SimNode>((d) => collideRadius(d)).strength(0.9))
      .force("x", d3.forceX<SimNode>(0).strength(0.04))
      .force("y", d3.forceY<SimNode>(0).strength(0.04))
      .on("tick", () => this.tick());

    this.zoomBehavior = d3
      .zoom<SVGSVGElement, unknown>()
      .scaleExtent([0.05, 8])
      .on("zoom", (event: d3.D3ZoomEvent<SVGSVGElement, unknown>) => {
        this.root.attr("transform", event.transform.toString());
        this.opts.onZoom?.(event.transform.k);
      });
    this.svg.call(this.zoomBehavior);
    this.svg.on("click.background", (event: MouseEvent) => {
      if (event.target === svgEl) this.opts.onSelect?.(null);
    });

    this.renderNodes();
  }

  /** Replace the displayed link set (after a pruning change). */
  setLinks(displayed: readonly MapLink[]): void {
    this.links = displayed.map((l) => ({
      key: linkKey(l.source, l.target),
      source: this.byId.get(l.source)!,
      target: this.byId.get(l.target)!,
      raw: l.raw,
      weight: l.weight,
      primary: l.primary,
    }));
    this.simulation.force(
      "link",
      d3
        .forceLink<SimNode, SimLink>(this.links)
        .id((d) => d.id)
        .distance(LINK_DISTANCE)
        .strength((l) => LINK_STRENGTH_SCALE * l.weight),
    );
    const lines = this.linkGroup
      .selectAll<SVGLineElement, SimLink>("line")
      .data(this.links, (d) => d.key);
    lines.exit().remove();
    lines
      .enter()
      .append("line")
      .attr("class", "link")
      .merge(lines)
      .attr("data-key", (d) => d.key)
      .attr("stroke", "currentColor");
    this.applyLinkOpacity();
    this.simulation.alpha(0.5).restart();
  }

  /** Show labels only for the given ids (zoom-responsive filtering).
   *  Anchor dots stay visible so the map keeps its shape. */
  setLabeled(ids: ReadonlySet<string>): void {
    this.nodeGroup
      .selectAll<SVGTextElement, SimNode>("text")
      .style("display", (d) => (ids.has(d.id) ? null : "none"));
  }

  setCommunityColoring(enabled: boolean): void {
    this.coloring = enabled;
    this.nodeGroup
      .selectAll<SVGTextElement, SimNode>("text")
      .attr("fill", (d) => communityColor(d.community, enabled));
    this.nodeGroup
      .selectAll<SVGCircleElement, SimNode>("circle")
      .attr("fill", (d) => communityColor(d.community, enabled));
  }

  /** Dim links not incident to the hovered term; null restores. */
  hover(term: string | null): void {
    this.hovered = term;
    this.applyLinkOpacity();
    this.nodeGroup
      .selectAll<SVGGElement, SimNode>("g.node")
      .classed("hovered", (d) => d.id === term);
  }

  select(term: string | null): void {
    this.selected = term;
    this.nodeGroup
      .selectAll<SVGGElement, SimNode>("g.node")
      .classed("selected", (d) => d.id === term);
  }

  /** Pan/zoom so the term sits centered at a label-revealing scale. */
  centerOn(term: string, scale = 1.2): void {
    const node = this.byId.get(term);
    if (!node || node.x === undefined || node.y === undefined) return;
    const el = this.svg.node()!;
    const width = el.clientWidth || Number(el.getAttribute("width")) || 800;
    const height = el.clientHeight || Number(el.getAttribute("height")) || 600;
    const transform = d3.zoomIdentity
      .translate(width / 2, height / 2)
      .scale(scale)
      .translate(-node.x, -node.y);
    this.svg.call(this.zoomBehavior.transform, transform);
  }

  displayedLinkCount(): number {
    return this.links.length;
  }

  private applyLinkOpacity(): void {
    const active = this.hovered ?? this.selected;
    const highlight = active
      ? highlightSets(
          active,
          this.links.map((l) => ({
            source: (l.source as SimNode).id,
            target: (l.target as SimNode).id,
            raw: l.raw,
            weight: l.weight,
            primary: l.primary,
          })),
        )
      : null;
    this.linkGroup
      .selectAll<SVGLineElement, SimLink>("line")
      .attr("stroke-opacity", (d) =>
        highlight && !highlight.links.has(d.key) ? DIMMED_OPACITY : linkOpacity(d.weight),
      );
  }

  private renderNodes(): void {
    const groups = this.nodeGroup
      .selectAll<SVGGElement, SimNode>("g.node")
      .data(this.nodes, (d) => d.id)
      .enter()
      .append("g")
      .attr("class", "node")
      .attr("data-id", (d) => d.id);

    groups
      .append("circle")
      .attr("r", 3)
      .attr("fill", (d) => communityColor(d.community, this.coloring));
    groups
      .append("text")
      .text((d) => d.id)
      .attr("font-size", (d) => `${d.labelPx.toFixed(1)}px`)
      .attr("dy", (d) => -d.labelPx * 0.25)
      .attr("text-anchor", "middle")
      .attr("fill", (d) => communityColor(d.community, this.coloring));

    groups
      .on("mouseenter", (_e: MouseEvent, d: SimNode) => this.opts.onHover?.(d.id))
      .on("mouseleave", () => this.opts.onHover?.(null))
      .on("click", (event: MouseEvent, d: SimNode) => {
        event.stopPropagation();
        this.opts.onSelect?.(d.id);
      });

    groups.call(
      d3
        .drag<SVGGElement, SimNode>()
        .on("start", (event, d) => this.dragStarted(event, d))
        .on("drag", (event, d) => this.dragged(event, d))
        .on("end", (event, d) => this.dragEnded(event, d)),
    );
  }

  dragStarted(event: { active: number }, node: SimNode): void {
    if (!event.active) this.simulation.alphaTarget(0.3).restart();
    node.fx = node.x;
    node.fy = node.y;
  }

  dragged(event: { x: number; y: number }, node: SimNode): void {
    node.fx = event.x;
    node.fy = event.y;
  }

  dragEnded(event: { active: number }, node: SimNode): void {
    if (!event.active) this.simulation.alphaTarget(0);
    node.fx = null;
    node.fy = null;
  }

  private tick(): void {
    this.linkGroup
      .selectAll<SVGLineElement, SimLink>("line")
      .attr("x1", (d) => (d.source as SimNode).x ?? 0)
      .attr("y1", (d) => (d.source as SimNode).y ?? 0)
      .attr("x2", (d) => (d.target as SimNode).x ?? 0)
      .attr("y2", (d) => (d.target as SimNode).y ?? 0);
    this.nodeGroup
      .selectAll<SVGGElement, SimNode>("g.node")
      .attr("transform", (d) => `translate(${d.x ?? 0},${d.y ?? 0})`);
  }
}
