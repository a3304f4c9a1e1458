// Pure derivation of what to draw from the last API response.

import type { StateJson } from "./api.js";

export type EdgeRender =
  | "blue"
  | "red"
  | "flipped-pending"
  | "in-cycle"
  | "in-cut"
  | "candidate";

export interface ViewModel {
  /** base color plus at most one overlay marker per edge */
  edgeStates: Map<number, { color: "blue" | "red"; marks: EdgeRender[] }>;
  banner: string;
  moveLog: string[];
  won: boolean;
}

export function deriveViewModel(state: StateJson): ViewModel {
  const edgeStates = new Map<
    number,
    { color: "blue" | "red"; marks: EdgeRender[] }
  >();
  for (const e of state.edges) {
    edgeStates.set(e.id, { color: e.color, marks: [] });
  }
  const p = state.pending;
  if (p) {
    // candidate beats cut/cycle membership so legal replies stand out
    for (const id of p.cycle) edgeStates.get(id)?.marks.push("in-cycle");
    for (const id of p.cut) edgeStates.get(id)?.marks.push("in-cut");
    for (const id of p.candidates) edgeStates.get(id)?.marks.push("candidate");
    const f = edgeStates.get(p.edge);
    if (f) f.marks = ["flipped-pending"];
  }

  let banner: string;
  if (state.won) {
    banner = `won in ${state.history.length} rounds`;
  } else if (state.phase === "alice-turn") {
    banner = `Alice to flip (distance ${state.target_distance})`;
  } else {
    banner = p?.forced
      ? `Bob's reply is forced: edge ${p.candidates[0]}`
      : `Bob to fix: ${p?.candidates.length ?? 0} choices`;
  }

  const moveLog = state.history.map(
    ([e, f], i) => `${i + 1}. flip ${e}, fix ${f}`,
  );
  return { edgeStates, banner, moveLog, won: state.won };
}

/** Which request a click on edge id should trigger in the current phase. */
export function clickAction(
  state: StateJson,
  edge: number,
): { kind: "flip" | "fix"; edge: number } | null {
  if (state.phase === "alice-turn") return { kind: "flip", edge };
  if (state.phase === "bob-must-fix") {
    if (!state.pending || !state.pending.candidates.includes(edge)) {
      return null;
    }
    return { kind: "fix", edge };
  }
  return null;
}
