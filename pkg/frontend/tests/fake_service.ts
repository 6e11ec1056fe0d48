// A scripted stand-in for the attack service implementing the documented
// contract on the C6 preset: two guards three apart, whole-configuration
// rotations toward vertex attacks, the gap-slide / peel-outward rule for
// edge evictions. Responses are deterministic and game-valid, so board
// tests exercise the same shapes the real server produces.

import { AttackRequest, MoveResult, SessionDescriptor } from "../src/api.js";

const N = 6;

export const C6_TEXT = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";

export function c6Descriptor(id: string, variant: "egc" | "edn" | "ede"): SessionDescriptor {
  const edges: [number, number][] = [
    [0, 1],
    [1, 2],
    [2, 3],
    [3, 4],
    [4, 5],
    [0, 5],
  ];
  const layout: Record<string, [number, number]> = {};
  for (let v = 0; v < N; v++) {
    const th = (2 * Math.PI * v) / N;
    layout[String(v)] = [Math.cos(th), Math.sin(th)];
  }
  return {
    id,
    n: N,
    edges,
    cycle_edges: edges,
    layout,
    guards: 2,
    configuration: [0, 3],
    variant,
  };
}

const mod = (x: number) => ((x % N) + N) % N;

export class FakeC6Service {
  private pos: Set<number> = new Set([0, 3]);
  readonly responses: MoveResult[] = [];

  private rotate(d: number): void {
    this.pos = new Set([...this.pos].map((p) => mod(p + d)));
  }

  private config(): number[] {
    return [...this.pos].sort((a, b) => a - b);
  }

  respond(attack: AttackRequest): MoveResult {
    const before = this.config();
    if (attack.type === "vertex") {
      if (!this.pos.has(attack.v)) {
        if (this.pos.has(mod(attack.v - 1))) this.rotate(1);
        else this.rotate(-1);
      }
    } else if (attack.type === "evict-vertex") {
      if (this.pos.has(attack.v)) this.evictEdge(attack.v, mod(attack.v + 1));
    } else {
      this.evictEdge(attack.u!, attack.v);
    }
    const after = this.config();
    // movement pairs: guards matched in ascending order (both configs are
    // rotations, so index-wise pairing is traversable)
    const moves = before.map((f, i) => ({ from: f, to: after[i] }));
    const result = { configuration: after, moves };
    this.responses.push(result);
    return result;
  }

  private evictEdge(a: number, b: number): void {
    let [e, f] = mod(a + 1) === b ? [a, b] : [b, a];
    if (!this.pos.has(e) && !this.pos.has(f)) return;
    const d = mod(e - 1);
    const g = mod(f + 1);
    if (!this.pos.has(d) && !this.pos.has(e)) {
      this.rotate(1);
    } else if (!this.pos.has(f) && !this.pos.has(g)) {
      this.rotate(-1);
    } else {
      if (this.pos.has(e)) {
        this.pos.delete(e);
        this.pos.add(d);
      }
      if (this.pos.has(f)) {
        this.pos.delete(f);
        this.pos.add(g);
      }
    }
  }
}
