// Browser wiring: menu, SVG board, click dispatch, auto-Bob, hint, undo.
// A single request is in flight at a time; the board is redrawn only from
// API responses.

import { GameClient, type StateJson, type NamedGraphJson } from "./api.js";
import { layout, type Point } from "./layout.js";
import { clickAction, deriveViewModel } from "./viewmodel.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export class App {
  private client: GameClient;
  private sessionId: string | null = null;
  private state: StateJson | null = null;
  private points: Point[] = [];
  private busy = false;
  autoBob = true; // forced replies play themselves by default

  constructor(private root: Document, base = "") {
    this.client = new GameClient(base);
  }

  async start(): Promise<void> {
    const menu = this.el<HTMLSelectElement>("graph-menu");
    const named = await this.client.namedGraphs();
    for (const g of named) {
      const opt = this.root.createElement("option");
      opt.value = g.name;
      opt.textContent = `${g.name} (${g.n} vertices)`;
      menu.appendChild(opt);
    }
    menu.value = "W5";
    menu.addEventListener("change", () => void this.load(menu.value));
    this.el<HTMLInputElement>("auto-bob").addEventListener("change", (ev) => {
      this.autoBob = (ev.target as HTMLInputElement).checked;
    });
    this.el("hint-btn").addEventListener("click", () => void this.hint());
    this.el("undo-btn").addEventListener("click", () => void this.undo());
    this.el("reset-btn").addEventListener("click", () =>
      void this.load(menu.value),
    );
    await this.load("W5");
  }

  private el<T extends HTMLElement = HTMLElement>(id: string): T {
    const e = this.root.getElementById(id);
    if (!e) throw new Error(`missing #${id}`);
    return e as T;
  }

  private async load(name: string): Promise<void> {
    const { id, state } = await this.client.newGame({ named: name });
    this.sessionId = id;
    this.apply(state);
    this.points = layout(state.n, state.edges, 100);
    this.render();
  }

  private apply(state: StateJson): void {
    this.state = state;
  }

  private async onEdgeClick(edge: number): Promise<void> {
    if (!this.state || !this.sessionId || this.busy) return;
    const action = clickAction(this.state, edge);
    if (!action) return;
    this.busy = true;
    try {
      let next =
        action.kind === "flip"
          ? await this.client.flip(this.sessionId, edge)
          : await this.client.fix(this.sessionId, edge);
      if (this.autoBob && next.pending?.forced) {
        next = await this.client.auto(this.sessionId);
      }
      this.apply(next);
      this.render();
    } finally {
      this.busy = false;
    }
  }

  private async hint(): Promise<void> {
    if (!this.sessionId) return;
    const { edge } = await this.client.hint(this.sessionId);
    const notice = this.el("notice");
    if (edge === null) {
      notice.textContent = "no short win found";
      return;
    }
    notice.textContent = `try edge ${edge}`;
    const line = this.root.querySelector(`[data-edge="${edge}"]`);
    line?.classList.add("pulse");
    setTimeout(() => line?.classList.remove("pulse"), 1200);
  }

  private async undo(): Promise<void> {
    if (!this.sessionId) return;
    try {
      this.apply(await this.client.undo(this.sessionId));
      this.render();
    } catch {
      this.el("notice").textContent = "nothing to undo";
    }
  }

  private render(): void {
    if (!this.state) return;
    const vm = deriveViewModel(this.state);
    this.el("banner").textContent = vm.banner;
    this.el("banner").classList.toggle("won", vm.won);
    this.el("log").textContent = vm.moveLog.join("\n");
    this.el("notice").textContent = "";

    const svg = this.el("board");
    while (svg.firstChild) svg.removeChild(svg.firstChild);
    // parallel edges bow apart so both stay clickable
    const seen = new Map<string, number>();
    for (const e of this.state.edges) {
      const key = e.u < e.v ? `${e.u}-${e.v}` : `${e.v}-${e.u}`;
      const k = seen.get(key) ?? 0;
      seen.set(key, k + 1);
      const st = vm.edgeStates.get(e.id)!;
      const path = this.root.createElementNS(SVG_NS, "path");
      const a = this.points[e.u];
      const b = this.points[e.v];
      const mx = (a.x + b.x) / 2 - (b.y - a.y) * 0.15 * k;
      const my = (a.y + b.y) / 2 + (b.x - a.x) * 0.15 * k;
      path.setAttribute("d", `M ${a.x} ${a.y} Q ${mx} ${my} ${b.x} ${b.y}`);
      path.setAttribute("data-edge", String(e.id));
      path.setAttribute("class", ["edge", st.color, ...st.marks].join(" "));
      path.addEventListener("click", () => void this.onEdgeClick(e.id));
      svg.appendChild(path);
    }
    this.points.forEach((p, i) => {
      const c = this.root.createElementNS(SVG_NS, "circle");
      c.setAttribute("cx", String(p.x));
      c.setAttribute("cy", String(p.y));
      c.setAttribute("r", "2.5");
      c.setAttribute("class", "vertex");
      svg.appendChild(c);
      const t = this.root.createElementNS(SVG_NS, "text");
      t.setAttribute("x", String(p.x + 3));
      t.setAttribute("y", String(p.y - 3));
      t.setAttribute("class", "vlabel");
      t.textContent = String(i);
      svg.appendChild(t);
    });
  }
}

declare global {
  interface Window {
    bispanApp?: App;
  }
}

if (typeof window !== "undefined" && typeof document !== "undefined") {
  const app = new App(document);
  window.bispanApp = app;
  window.addEventListener("DOMContentLoaded", () => void app.start());
}

export type { NamedGraphJson };
