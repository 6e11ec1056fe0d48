// Typed client for the attack service JSON API.

export type Variant = "egc" | "edn" | "ede";
export type AttackType = "vertex" | "evict-vertex" | "evict-edge";

export interface SessionDescriptor {
  id: string;
  n: number;
  edges: [number, number][];
  cycle_edges: [number, number][];
  layout: Record<string, [number, number]>;
  guards: number;
  configuration: number[];
  variant: Variant;
}

export interface SessionSnapshot extends SessionDescriptor {
  history_length: number;
  history: { attack: AttackRequest; configuration: number[] }[];
  initial: number[];
}

export interface AttackRequest {
  type: AttackType;
  v: number;
  u?: number | null;
}

export interface MoveResult {
  configuration: number[];
  moves: { from: number; to: number }[];
}

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`${status}: ${detail}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private base: string = "",
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.base + path, init);
    const body = await resp.json().catch(() => ({}));
    if (!resp.ok) {
      const detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body);
      throw new ApiError(resp.status, detail);
    }
    return body as T;
  }

  private post<T>(path: string, payload?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
  }

  createSession(graph: string, variant: Variant, mode = "auto"): Promise<SessionDescriptor> {
    return this.post("/sessions", { graph, variant, mode });
  }

  attack(id: string, attack: AttackRequest): Promise<MoveResult> {
    return this.post(`/sessions/${id}/attack`, attack);
  }

  getState(id: string): Promise<SessionSnapshot> {
    return this.request(`/sessions/${id}`);
  }

  reset(id: string): Promise<SessionDescriptor> {
    return this.post(`/sessions/${id}/reset`);
  }

  health(): Promise<{ status: string }> {
    return this.request("/health");
  }
}
