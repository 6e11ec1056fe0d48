import { describe, expect, it } from "vitest";

import { BoardModel } from "../src/board.js";
import { C6_TEXT, FakeC6Service, c6Descriptor } from "./fake_service.js";

describe("replay round trip", () => {
  it("an exported replay drives a fresh session to identical configurations", () => {
    // play a session
    const first = new BoardModel(c6Descriptor("one", "ede"));
    const firstService = new FakeC6Service();
    const attacks = [
      { type: "vertex" as const, v: 2 },
      { type: "evict-edge" as const, v: 1, u: 0 },
      { type: "evict-vertex" as const, v: 4 },
      { type: "vertex" as const, v: 0 },
      { type: "evict-edge" as const, v: 4, u: 3 },
    ];
    for (const attack of attacks) {
      first.applyResult(attack, firstService.respond(attack));
    }
    const exported = first.exportReplay();
    expect(exported.graph).toBe(C6_TEXT);

    // re-import against a fresh session: the service is deterministic, so
    // the configuration sequence must match byte for byte
    const parsed = BoardModel.parseReplay(JSON.stringify(exported));
    const second = new BoardModel(c6Descriptor("two", parsed.variant));
    const secondService = new FakeC6Service();
    for (const attack of parsed.attacks) {
      expect(second.attackAllowed(attack)).toBe(true);
      second.applyResult(attack, secondService.respond(attack));
    }
    const firstConfigs = first.history.map((h) => h.configuration);
    const secondConfigs = second.history.map((h) => h.configuration);
    expect(secondConfigs).toEqual(firstConfigs);
  });

  it("rejects files that are not replays", () => {
    expect(() => BoardModel.parseReplay("{}")).toThrow(/not a replay/);
  });
});
