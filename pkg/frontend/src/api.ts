// Typed client for the game service. The UI never computes game rules
// itself; everything it shows comes from these responses.

export interface EdgeJson {
  id: number;
  u: number;
  v: number;
  color: "blue" | "red";
}

export interface PendingJson {
  edge: number;
  cycle: number[];
  cut: number[];
  candidates: number[];
  forced: boolean;
}

export interface StateJson {
  n: number;
  edges: EdgeJson[];
  phase: "alice-turn" | "bob-must-fix" | "won";
  history: [number, number][];
  won: boolean;
  target_distance: number;
  pending?: PendingJson;
}

export interface NamedGraphJson {
  name: string;
  n: number;
  m: number;
  edges: EdgeJson[];
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function unwrap<T>(res: Response): Promise<T> {
  const body = await res.json();
  if (!res.ok) {
    throw new ApiError(res.status, body.detail ?? res.statusText);
  }
  return body as T;
}

export class GameClient {
  constructor(
    private base: string = "",
    private fetchFn: typeof fetch = fetch,
  ) {}

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    }).then((r) => unwrap<T>(r));
  }

  private get<T>(path: string): Promise<T> {
    return this.fetchFn(this.base + path).then((r) => unwrap<T>(r));
  }

  newGame(req: {
    named?: string;
    graph?: string;
    policy?: string;
    seed?: number;
  }): Promise<{ id: string; state: StateJson }> {
    return this.post("/game", req);
  }

  state(id: string): Promise<StateJson> {
    return this.get(`/game/${id}`);
  }

  flip(id: string, edge: number): Promise<StateJson> {
    return this.post(`/game/${id}/flip`, { edge });
  }

  fix(id: string, edge: number): Promise<StateJson> {
    return this.post(`/game/${id}/fix`, { edge });
  }

  auto(id: string): Promise<StateJson & { fixed: number }> {
    return this.post(`/game/${id}/auto`);
  }

  undo(id: string): Promise<StateJson> {
    return this.post(`/game/${id}/undo`);
  }

  hint(id: string): Promise<{ edge: number | null }> {
    return this.get(`/game/${id}/hint`);
  }

  namedGraphs(): Promise<NamedGraphJson[]> {
    return this.get("/graphs/named");
  }
}
