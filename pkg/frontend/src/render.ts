import type { GameController } from "./controller.js";
import { circularLayout, parseHeader, Point } from "./layout.js";
import { canonical, Dir, Edge, EdgeView, sameEdge } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const STYLE: Record<string, { stroke: string; dash: string; width: number }> = {
  open: { stroke: "#9aa3ab", dash: "", width: 2 },
  queried: { stroke: "#1769aa", dash: "", width: 3 },
  forced: { stroke: "#c77700", dash: "6 4", width: 3 },
};

function svgEl<K extends keyof SVGElementTagNameMap>(tag: K): SVGElementTagNameMap[K] {
  return document.createElementNS(SVG_NS, tag);
}

export class BoardRenderer {
  private points: Point[] = [];

  constructor(
    private svg: SVGSVGElement,
    private controller: GameController,
    private onEdgeClick: (edge: Edge) => void,
  ) {}

  private arrowMarker(): SVGMarkerElement {
    const marker = svgEl("marker");
    marker.setAttribute("id", "arrow");
    marker.setAttribute("viewBox", "0 0 10 10");
    marker.setAttribute("refX", "24");
    marker.setAttribute("refY", "5");
    marker.setAttribute("markerWidth", "7");
    marker.setAttribute("markerHeight", "7");
    marker.setAttribute("orient", "auto-start-reverse");
    const tip = svgEl("path");
    tip.setAttribute("d", "M 0 0 L 10 5 L 0 10 z");
    tip.setAttribute("fill", "context-stroke");
    marker.appendChild(tip);
    return marker;
  }

  /** Full repaint from the latest server view; statuses never computed here. */
  draw(): void {
    const view = this.controller.view;
    if (!view) return;
    const { n } = parseHeader(this.controller.graphText);
    const width = this.svg.clientWidth || 640;
    const height = this.svg.clientHeight || 480;
    this.points = circularLayout(n, this.controller.graphText, width, height);
    this.svg.replaceChildren();
    const defs = svgEl("defs");
    defs.appendChild(this.arrowMarker());
    this.svg.appendChild(defs);
    for (const ev of view.edges) {
      this.svg.appendChild(this.edgeLine(ev));
    }
    for (let v = 0; v < n; v++) {
      this.svg.appendChild(this.vertexDot(v));
    }
  }

  private edgeLine(ev: EdgeView): SVGLineElement {
    const line = svgEl("line");
    // draw from the arc's tail when the direction is known
    const [a, b] = ev.dir ?? ev.e;
    const pa = this.points[a];
    const pb = this.points[b];
    line.setAttribute("x1", String(pa.x));
    line.setAttribute("y1", String(pa.y));
    line.setAttribute("x2", String(pb.x));
    line.setAttribute("y2", String(pb.y));
    const style = STYLE[ev.status];
    line.setAttribute("stroke", style.stroke);
    line.setAttribute("stroke-width", String(style.width));
    if (style.dash) line.setAttribute("stroke-dasharray", style.dash);
    if (ev.dir) line.setAttribute("marker-end", "url(#arrow)");
    const pending = this.controller.pending;
    if (pending && sameEdge(canonical(pending), ev.e)) {
      line.setAttribute("stroke", "#b02a2a");
      line.setAttribute("stroke-width", "4");
    }
    line.style.cursor = ev.status === "open" ? "pointer" : "default";
    line.addEventListener("click", () => this.onEdgeClick(ev.e));
    return line;
  }

  private vertexDot(v: number): SVGGElement {
    const group = svgEl("g");
    const point = this.points[v];
    const circle = svgEl("circle");
    circle.setAttribute("cx", String(point.x));
    circle.setAttribute("cy", String(point.y));
    circle.setAttribute("r", "14");
    circle.setAttribute("fill", "#24323f");
    const label = svgEl("text");
    label.setAttribute("x", String(point.x));
    label.setAttribute("y", String(point.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("fill", "#fff");
    label.setAttribute("font-size", "12");
    label.textContent = String(v);
    group.append(circle, label);
    return group;
  }
}

export function describeDir(dir: Dir): string {
  return `${dir[0]} → ${dir[1]}`;
}
