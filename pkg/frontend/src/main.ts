// Attack console wiring: load a graph, click to attack, watch guards move.

import { ApiClient, ApiError, AttackRequest } from "./api.js";
import { BoardModel } from "./board.js";
import { PRESETS } from "./presets.js";
import { BoardView, toast } from "./render.js";

const api = new ApiClient("");
let model: BoardModel | null = null;
let view: BoardView | null = null;
let busy = false;

const $ = <T extends HTMLElement>(id: string): T => document.getElementById(id) as T;

function status(text: string): void {
  $("status").textContent = text;
}

function banner(text: string | null): void {
  const el = $("banner");
  el.textContent = text ?? "";
  el.style.display = text ? "block" : "none";
}

function evictMode(): boolean {
  return ($("mode") as HTMLInputElement).checked;
}

function redraw(): void {
  if (!model || !view) return;
  view.draw(model, evictMode());
  const slider = $("replay") as HTMLInputElement;
  slider.max = String(model.history.length);
  if (model.cursor === null) slider.value = String(model.history.length);
  $("history-count").textContent = `${model.history.length} attacks`;
  status(
    `${model.variant.toUpperCase()} session, ${model.descriptor.guards} guards on ${model.descriptor.n} vertices` +
      (model.isLive ? "" : ` (replay ${model.cursor}/${model.history.length})`),
  );
}

async function startSession(graphText: string): Promise<void> {
  banner(null);
  const variant = ($("variant") as HTMLSelectElement).value as "egc" | "edn" | "ede";
  try {
    const descriptor = await api.createSession(graphText, variant);
    model = new BoardModel(descriptor);
    view = new BoardView($("board-host"));
    view.onVertexClick = (v) => sendAttack(evictMode() ? { type: "evict-vertex", v } : { type: "vertex", v });
    view.onEdgeClick = (u, v) => sendAttack({ type: "evict-edge", v, u });
    redraw();
  } catch (err) {
    banner(err instanceof ApiError ? `server rejected the graph: ${err.detail}` : `cannot parse or load: ${err}`);
  }
}

async function sendAttack(attack: AttackRequest): Promise<void> {
  if (!model || !view || busy) return;
  if (!model.isLive) {
    toast("leave replay mode to keep playing");
    return;
  }
  if (!model.attackAllowed(attack)) {
    return; // gated interactions are not even sent
  }
  busy = true;
  try {
    const result = await api.attack(model.descriptor.id, attack);
    model.applyResult(attack, result);
    const v = view;
    if (attack.type === "vertex") view.flashVertex(attack.v);
    await new Promise<void>((resolve) => v.animateMoves(result.moves, result.configuration, resolve));
    redraw();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      view.shake();
      toast(err.detail);
    } else {
      toast(String(err));
    }
  } finally {
    busy = false;
  }
}

function wireToolbar(): void {
  const presetSel = $("preset") as HTMLSelectElement;
  for (const name of Object.keys(PRESETS)) {
    const opt = document.createElement("option");
    opt.value = name;
    opt.textContent = name;
    presetSel.appendChild(opt);
  }
  presetSel.value = "C6";

  $("load").addEventListener("click", () => startSession(PRESETS[presetSel.value]));

  ($("upload") as HTMLInputElement).addEventListener("change", async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (file) await startSession(await file.text());
    input.value = "";
  });

  $("mode").addEventListener("change", redraw);

  $("reset").addEventListener("click", async () => {
    if (!model) return;
    await api.reset(model.descriptor.id);
    model.reset();
    redraw();
  });

  ($("replay") as HTMLInputElement).addEventListener("input", (ev) => {
    if (!model || !view) return;
    const step = Number((ev.target as HTMLInputElement).value);
    view.placeGuards(model.replayTo(step));
    redraw();
  });

  $("export").addEventListener("click", () => {
    if (!model) return;
    const blob = new Blob([JSON.stringify(model.exportReplay(), null, 2)], { type: "application/json" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "replay.json";
    a.click();
    URL.revokeObjectURL(a.href);
  });

  ($("import") as HTMLInputElement).addEventListener("change", async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    input.value = "";
    if (!file) return;
    try {
      const replay = BoardModel.parseReplay(await file.text());
      ($("variant") as HTMLSelectElement).value = replay.variant;
      await startSession(replay.graph);
      for (const attack of replay.attacks) {
        await sendAttack(attack);
      }
      toast(`replayed ${replay.attacks.length} attacks`);
    } catch (err) {
      banner(`replay import failed: ${err}`);
    }
  });
}

wireToolbar();
startSession(PRESETS["C6"]);
