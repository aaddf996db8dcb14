import type { ProvenanceEntry } from "./types.js";

/** View history for the back control: a stack of provenance descriptor
 *  lists, one per previously rendered view. */
export class ViewHistory {
  private stack: ProvenanceEntry[][] = [];

  get size(): number {
    return this.stack.length;
  }

  push(provenance: ProvenanceEntry[]): void {
    this.stack.push(provenance.map((entry) => [...entry] as ProvenanceEntry));
  }

  pop(): ProvenanceEntry[] | null {
    return this.stack.pop() ?? null;
  }

  clear(): void {
    this.stack = [];
  }
}

export interface UiState {
  sessionId: string;
  selected: Set<number>;
  searchQuery: string;
}

export function newUiState(sessionId: string): UiState {
  return { sessionId, selected: new Set(), searchQuery: "" };
}

/** Click selection; additive keeps the existing set (modifier key). */
export function toggleSelection(state: UiState, id: number, additive: boolean): void {
  if (!additive) {
    const wasOnlySelection = state.selected.size === 1 && state.selected.has(id);
    state.selected.clear();
    if (!wasOnlySelection) state.selected.add(id);
    return;
  }
  if (state.selected.has(id)) {
    state.selected.delete(id);
  } else {
    state.selected.add(id);
  }
}

/** Selection must stay within the rendered node set. */
export function pruneSelection(state: UiState, visible: Set<number>): void {
  for (const id of [...state.selected]) {
    if (!visible.has(id)) state.selected.delete(id);
  }
}
