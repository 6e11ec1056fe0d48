// SVG board rendering and guard animation.

import { BoardModel, edgeKey, normalizeLayout } from "./board.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 640;

export type VertexHandler = (v: number) => void;
export type EdgeHandler = (u: number, v: number) => void;

export class BoardView {
  private svg: SVGSVGElement;
  private positions: Map<number, [number, number]> = new Map();
  private guardMarks: SVGCircleElement[] = [];
  private edgeEls = new Map<string, SVGLineElement>();
  private vertexEls = new Map<number, SVGCircleElement>();
  private guardLayer: SVGGElement | null = null;
  onVertexClick: VertexHandler = () => undefined;
  onEdgeClick: EdgeHandler = () => undefined;

  constructor(private host: HTMLElement) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    this.svg.classList.add("board");
    host.replaceChildren(this.svg);
  }

  draw(model: BoardModel, evictMode: boolean): void {
    this.positions = normalizeLayout(model.descriptor.layout, SIZE);
    this.svg.replaceChildren();
    this.edgeEls.clear();
    this.vertexEls.clear();

    const edgeLayer = document.createElementNS(SVG_NS, "g");
    for (const [u, v] of model.descriptor.edges) {
      const [x1, y1] = this.positions.get(u)!;
      const [x2, y2] = this.positions.get(v)!;
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(x1));
      line.setAttribute("y1", String(y1));
      line.setAttribute("x2", String(x2));
      line.setAttribute("y2", String(y2));
      line.classList.add("edge");
      const cyclic = model.isCycleEdge(u, v);
      if (cyclic) line.classList.add("cycle-edge");
      const clickable = evictMode && model.evictionsAllowed && cyclic;
      if (clickable) {
        line.classList.add("clickable");
        line.addEventListener("click", () => this.onEdgeClick(u, v));
      }
      this.edgeEls.set(edgeKey(u, v), line);
      edgeLayer.appendChild(line);
    }
    this.svg.appendChild(edgeLayer);

    const vertexLayer = document.createElementNS(SVG_NS, "g");
    for (const [v, [x, y]] of this.positions) {
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(x));
      circle.setAttribute("cy", String(y));
      circle.setAttribute("r", "14");
      circle.classList.add("vertex");
      circle.addEventListener("click", () => this.onVertexClick(v));
      vertexLayer.appendChild(circle);
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(x));
      label.setAttribute("y", String(y + 4));
      label.setAttribute("text-anchor", "middle");
      label.classList.add("vertex-label");
      label.textContent = String(v);
      vertexLayer.appendChild(label);
      this.vertexEls.set(v, circle);
    }
    this.svg.appendChild(vertexLayer);

    this.guardLayer = document.createElementNS(SVG_NS, "g");
    this.svg.appendChild(this.guardLayer);
    this.placeGuards(model.shownConfiguration());
  }

  /** Snap guard markers to a configuration with no animation. */
  placeGuards(configuration: number[]): void {
    if (!this.guardLayer) return;
    this.guardLayer.replaceChildren();
    this.guardMarks = configuration.map((v) => {
      const [x, y] = this.positions.get(v)!;
      const mark = document.createElementNS(SVG_NS, "circle");
      mark.setAttribute("cx", String(x));
      mark.setAttribute("cy", String(y));
      mark.setAttribute("r", "9");
      mark.classList.add("guard");
      this.guardLayer!.appendChild(mark);
      return mark;
    });
  }

  /** Animate each movement pair, then settle exactly on the configuration. */
  animateMoves(moves: { from: number; to: number }[], configuration: number[], done: () => void): void {
    if (!this.guardLayer) return done();
    this.placeGuards(moves.map((m) => m.from));
    const marks = this.guardMarks;
    requestAnimationFrame(() => {
      marks.forEach((mark, i) => {
        const [x, y] = this.positions.get(moves[i].to)!;
        mark.style.transition = "cx 0.35s ease, cy 0.35s ease";
        mark.setAttribute("cx", String(x));
        mark.setAttribute("cy", String(y));
      });
      window.setTimeout(() => {
        this.placeGuards(configuration);
        done();
      }, 380);
    });
  }

  flashVertex(v: number): void {
    const el = this.vertexEls.get(v);
    if (el) {
      el.classList.add("attacked");
      window.setTimeout(() => el.classList.remove("attacked"), 350);
    }
  }

  shake(): void {
    this.svg.classList.add("shake");
    window.setTimeout(() => this.svg.classList.remove("shake"), 400);
  }
}

export function toast(message: string): void {
  const el = document.createElement("div");
  el.className = "toast";
  el.textContent = message;
  document.body.appendChild(el);
  window.setTimeout(() => el.remove(), 2600);
}
