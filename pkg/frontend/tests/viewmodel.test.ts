// View model derivation against recorded service responses.

import { describe, expect, it } from "vitest";
import replay from "./fixtures/w5_replay.json";
import { clickAction, deriveViewModel } from "../src/viewmodel.js";
import type { StateJson } from "../src/api.js";

const steps = replay as { action: string; edge?: number; state: StateJson }[];

describe("deriveViewModel", () => {
  it("colors every edge from the response, never locally", () => {
    const vm = deriveViewModel(steps[0].state);
    expect(vm.edgeStates.size).toBe(8);
    for (const e of steps[0].state.edges) {
      expect(vm.edgeStates.get(e.id)!.color).toBe(e.color);
    }
    expect(vm.won).toBe(false);
    expect(vm.banner).toContain("Alice to flip");
    expect(vm.banner).toContain("8");
  });

  it("marks pending cycle, cut, candidates and the flipped edge", () => {
    const flipped = steps[1].state;
    const p = flipped.pending!;
    const vm = deriveViewModel(flipped);
    expect(vm.edgeStates.get(p.edge)!.marks).toEqual(["flipped-pending"]);
    for (const id of p.candidates) {
      expect(vm.edgeStates.get(id)!.marks).toContain("candidate");
    }
    for (const id of p.cycle) {
      if (id !== p.edge) {
        expect(vm.edgeStates.get(id)!.marks).toContain("in-cycle");
      }
    }
    for (const id of p.cut) {
      if (id !== p.edge) {
        expect(vm.edgeStates.get(id)!.marks).toContain("in-cut");
      }
    }
    expect(vm.banner).toContain("forced");
  });

  it("shows the candidate set exactly as the API sent it", () => {
    const flipped = steps[1].state;
    const candidates = [...flipped.pending!.candidates];
    const vm = deriveViewModel(flipped);
    const marked = [...vm.edgeStates.entries()]
      .filter(([, s]) => s.marks.includes("candidate"))
      .map(([id]) => id)
      .sort((a, b) => a - b);
    expect(marked).toEqual(candidates.sort((a, b) => a - b));
  });

  it("announces the win from the API flag and logs every round", () => {
    const last = steps[steps.length - 1].state;
    const vm = deriveViewModel(last);
    expect(vm.won).toBe(true);
    expect(vm.banner).toBe("won in 4 rounds");
    expect(vm.moveLog).toHaveLength(4);
    expect(vm.moveLog[0]).toBe("1. flip 0, fix 7");
  });
});

describe("clickAction", () => {
  it("dispatches flip on Alice's turn and fix only on candidates", () => {
    expect(clickAction(steps[0].state, 3)).toEqual({ kind: "flip", edge: 3 });
    const pendingState = steps[1].state;
    const legal = pendingState.pending!.candidates[0];
    expect(clickAction(pendingState, legal)).toEqual({
      kind: "fix",
      edge: legal,
    });
    expect(clickAction(pendingState, pendingState.pending!.edge)).toBeNull();
  });

  it("ignores clicks after the win", () => {
    expect(clickAction(steps[steps.length - 1].state, 0)).toBeNull();
  });
});
