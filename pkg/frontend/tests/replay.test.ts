// The winning wheel-graph sequence, replayed through the typed client
// against a stub server that answers verbatim from recorded responses.

import { describe, expect, it } from "vitest";
import replay from "./fixtures/w5_replay.json";
import named from "./fixtures/named.json";
import { ApiError, GameClient, type StateJson } from "../src/api.js";

const steps = replay as { action: string; edge?: number; state: StateJson }[];

function stubFetch(): typeof fetch {
  let cursor = 0;
  return (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const respond = (status: number, body: unknown) =>
      new Response(JSON.stringify(body), {
        status,
        headers: { "Content-Type": "application/json" },
      });
    if (url.endsWith("/graphs/named")) return respond(200, named);
    if (url.endsWith("/game") && init?.method === "POST") {
      cursor = 1;
      return respond(200, { id: "fixture", state: steps[0].state });
    }
    if (url.includes("/game/fixture/")) {
      const step = steps[cursor];
      if (!step) return respond(409, { detail: "no more recorded moves" });
      if (url.endsWith("/flip")) {
        const { edge } = JSON.parse(String(init?.body));
        expect(step.action).toBe("flip");
        expect(edge).toBe(step.edge);
      } else {
        expect(url.endsWith("/auto")).toBe(true);
      }
      cursor += 1;
      return respond(200, step.state);
    }
    return respond(404, { detail: "unknown session" });
  }) as typeof fetch;
}

describe("W5 replay through the client", () => {
  it("wins in exactly 4 rounds", async () => {
    const client = new GameClient("", stubFetch());
    const { id, state } = await client.newGame({ named: "W5" });
    expect(state.phase).toBe("alice-turn");
    let s: StateJson = state;
    for (const e of [0, 1, 2, 6]) {
      s = await client.flip(id, e);
      expect(s.pending?.forced).toBe(true);
      s = await client.auto(id);
    }
    expect(s.won).toBe(true);
    expect(s.phase).toBe("won");
    expect(s.history).toEqual([
      [0, 7],
      [1, 3],
      [2, 4],
      [6, 5],
    ]);
    expect(s.target_distance).toBe(0);
  });

  it("lists every named graph for the menu", async () => {
    const client = new GameClient("", stubFetch());
    const list = await client.namedGraphs();
    expect(list.length).toBeGreaterThanOrEqual(35);
    const w5 = list.find((g) => g.name === "W5")!;
    expect(w5.n).toBe(5);
    expect(w5.edges).toHaveLength(8);
  });

  it("surfaces HTTP errors with their status", async () => {
    const client = new GameClient("", stubFetch());
    await expect(client.state("nope")).rejects.toMatchObject({
      status: 404,
    });
    await expect(client.state("nope")).rejects.toBeInstanceOf(ApiError);
  });
});
