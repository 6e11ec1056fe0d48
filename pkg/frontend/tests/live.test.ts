// End-to-end round trip against a live service. Gated on
// CACTUSGUARD_SERVICE_URL so the suite passes without a server; run the
// service (`cactusguard serve --port 8123`) and set the variable to enable.

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { BoardModel } from "../src/board.js";
import { PRESETS } from "../src/presets.js";

const base = process.env.CACTUSGUARD_SERVICE_URL;

describe.skipIf(!base)("live service round trip", () => {
  it("C6 session: attack, evict, export, replay", async () => {
    const api = new ApiClient(base!);
    const descriptor = await api.createSession(PRESETS["C6"], "ede");
    const model = new BoardModel(descriptor);
    expect(descriptor.guards).toBe(2);

    const a1 = { type: "vertex" as const, v: 1 };
    const r1 = await api.attack(descriptor.id, a1);
    model.applyResult(a1, r1);
    expect(model.shownConfiguration()).toContain(1);
    expect(model.shownConfiguration()).toEqual(r1.configuration);

    const a2 = { type: "evict-edge" as const, v: 1, u: 0 };
    const r2 = await api.attack(descriptor.id, a2);
    model.applyResult(a2, r2);
    expect(model.shownConfiguration()).not.toContain(0);
    expect(model.shownConfiguration()).not.toContain(1);

    // replay the exported log against a fresh session
    const replay = model.exportReplay();
    const fresh = await api.createSession(replay.graph, replay.variant);
    const again = new BoardModel(fresh);
    for (const attack of replay.attacks) {
      expect(again.attackAllowed(attack)).toBe(true);
      again.applyResult(attack, await api.attack(fresh.id, attack));
    }
    expect(again.history.map((h) => h.configuration)).toEqual(model.history.map((h) => h.configuration));
  });

  it("EDN sessions reject evictions with 409", async () => {
    const api = new ApiClient(base!);
    const descriptor = await api.createSession(PRESETS["C6"], "edn");
    const model = new BoardModel(descriptor);
    expect(model.attackAllowed({ type: "evict-vertex", v: 0 })).toBe(false);
    await expect(api.attack(descriptor.id, { type: "evict-vertex", v: 0 })).rejects.toMatchObject({ status: 409 });
  });
});
