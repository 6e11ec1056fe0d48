// Board state: the session descriptor, the attack history, and a replay
// cursor. Guard positions are always byte-equal copies of server responses;
// the model never invents a configuration.

import { AttackRequest, MoveResult, SessionDescriptor, Variant } from "./api.js";

export interface HistoryEntry {
  attack: AttackRequest;
  configuration: number[];
  moves: { from: number; to: number }[];
}

export interface ReplayFile {
  graph: string;
  variant: Variant;
  attacks: AttackRequest[];
}

export function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

export class BoardModel {
  readonly descriptor: SessionDescriptor;
  readonly initial: number[];
  readonly history: HistoryEntry[] = [];
  /** null = live view; k = showing the configuration after k attacks */
  cursor: number | null = null;
  private cycleEdges: Set<string>;

  constructor(descriptor: SessionDescriptor) {
    this.descriptor = descriptor;
    this.initial = [...descriptor.configuration];
    this.cycleEdges = new Set(descriptor.cycle_edges.map(([u, v]) => edgeKey(u, v)));
  }

  get variant(): Variant {
    return this.descriptor.variant;
  }

  get evictionsAllowed(): boolean {
    return this.variant === "ede";
  }

  isCycleEdge(u: number, v: number): boolean {
    return this.cycleEdges.has(edgeKey(u, v));
  }

  /** Exhaustive gating: a request the current variant cannot legally emit
   * is rejected here, before any network traffic. */
  attackAllowed(attack: AttackRequest): boolean {
    if (attack.type !== "vertex" && !this.evictionsAllowed) {
      return false;
    }
    if (attack.type === "evict-edge") {
      return attack.u != null && this.isCycleEdge(attack.u, attack.v);
    }
    return attack.v >= 0 && attack.v < this.descriptor.n;
  }

  /** Record a server response; the stored configuration is the server's. */
  applyResult(attack: AttackRequest, result: MoveResult): void {
    this.history.push({
      attack,
      configuration: [...result.configuration],
      moves: result.moves.map((m) => ({ ...m })),
    });
    this.cursor = null;
  }

  /** Configuration currently shown: live, or the replay point. */
  shownConfiguration(): number[] {
    if (this.cursor === null) {
      return this.history.length ? [...this.history[this.history.length - 1].configuration] : [...this.initial];
    }
    return this.cursor === 0 ? [...this.initial] : [...this.history[this.cursor - 1].configuration];
  }

  get isLive(): boolean {
    return this.cursor === null || this.cursor === this.history.length;
  }

  replayTo(step: number): number[] {
    if (step < 0 || step > this.history.length) {
      throw new RangeError(`replay step ${step} out of range 0..${this.history.length}`);
    }
    this.cursor = step === this.history.length ? null : step;
    return this.shownConfiguration();
  }

  reset(): void {
    this.history.length = 0;
    this.cursor = null;
  }

  exportReplay(): ReplayFile {
    const lines = [`${this.descriptor.n} ${this.descriptor.edges.length}`];
    for (const [u, v] of this.descriptor.edges) {
      lines.push(`${u} ${v}`);
    }
    return {
      graph: lines.join("\n") + "\n",
      variant: this.variant,
      attacks: this.history.map((h) => ({ ...h.attack })),
    };
  }

  static parseReplay(text: string): ReplayFile {
    const doc = JSON.parse(text);
    if (typeof doc.graph !== "string" || !Array.isArray(doc.attacks)) {
      throw new Error("not a replay file: needs graph text and an attack list");
    }
    const variant: Variant = doc.variant === "egc" || doc.variant === "edn" ? doc.variant : "ede";
    return { graph: doc.graph, variant, attacks: doc.attacks };
  }
}

/** Viewport-normalized layout: scales the server's radial hint into a
 * [margin, size-margin] box, preserving aspect ratio. */
export function normalizeLayout(
  layout: Record<string, [number, number]>,
  size = 640,
  margin = 48,
): Map<number, [number, number]> {
  const entries = Object.entries(layout);
  const xs = entries.map(([, p]) => p[0]);
  const ys = entries.map(([, p]) => p[1]);
  const minX = Math.min(...xs), maxX = Math.max(...xs);
  const minY = Math.min(...ys), maxY = Math.max(...ys);
  const span = Math.max(maxX - minX, maxY - minY, 1e-9);
  const scale = (size - 2 * margin) / span;
  const offX = (size - (maxX - minX) * scale) / 2;
  const offY = (size - (maxY - minY) * scale) / 2;
  const out = new Map<number, [number, number]>();
  for (const [k, [x, y]] of entries) {
    out.set(Number(k), [(x - minX) * scale + offX, (y - minY) * scale + offY]);
  }
  return out;
}
