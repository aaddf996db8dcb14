// Wire types for the graph document API (see docs/format.md in the repo root).

export type ProvenanceEntry = [string] | [string, number[]];

export interface DocumentNode {
  id: number;
  clause: string;
  rule: string;
  premises: number[];
  new_at: number | null;
  passive_at: number | null;
  active_at: number | null;
}

export interface ViolationEntry {
  event_index: number;
  tag: string;
  message: string;
}

export interface GraphDocument {
  format_version: number;
  nodes: DocumentNode[];
  violations: ViolationEntry[];
  warnings: ViolationEntry[];
  visible: number[];
  highlighted: number[];
  provenance: ProvenanceEntry[];
  rewired_edges: [number, number][];
  edges: [number, number][];
  positions: Record<string, [number, number]>;
  ranks: Record<string, number>;
  width: number;
  height: number;
}

export interface SessionInfo {
  session_id: string;
  node_count: number;
  violation_count: number;
  event_count: number;
  skipped_lines: number;
}

export interface NodeMeta {
  id: number;
  clause: string;
  rule: string;
  premises: number[];
  children: number[];
  new_at: number | null;
  passive_at: number | null;
  active_at: number | null;
  is_root: boolean;
  visible: boolean;
  highlighted: boolean;
}

export interface SearchResponse {
  ids: number[];
  visible_ids: number[];
}

export interface SaturationStateResponse {
  active: number[];
  passive: number[];
  event_index: number;
}

export type TransformOp =
  | "prune_to_activated"
  | "merge_preprocessing"
  | "restrict_ancestors"
  | "restrict_descendants"
  | "reset";

export type SearchMode = "text" | "consequences";
