import type { DocumentNode, GraphDocument } from "./types.js";

export type NodePhase = "active" | "passive" | "new" | "placeholder";

export interface RenderNode {
  id: number;
  x: number;
  y: number;
  label: string;
  fullClause: string;
  phase: NodePhase;
  highlighted: boolean;
  selected: boolean;
}

export interface RenderEdge {
  from: { x: number; y: number };
  to: { x: number; y: number };
}

export interface RenderModel {
  nodes: RenderNode[];
  edges: RenderEdge[];
  width: number;
  height: number;
}

const CLAUSE_LABEL_LIMIT = 80;

export function phaseOf(node: DocumentNode): NodePhase {
  if (node.active_at !== null) return "active";
  if (node.passive_at !== null) return "passive";
  if (node.new_at !== null) return "new";
  return "placeholder";
}

export function nodeLabel(id: number, clause: string): string {
  const text =
    clause.length > CLAUSE_LABEL_LIMIT
      ? clause.slice(0, CLAUSE_LABEL_LIMIT) + "…"
      : clause;
  return `${id}. ${text}`;
}

/** Everything the canvas needs, derived purely from one graph document
 *  plus the local selection. */
export function buildRenderModel(
  document: GraphDocument,
  selected: Set<number>,
): RenderModel {
  const byId = new Map(document.nodes.map((node) => [node.id, node]));
  const highlighted = new Set(document.highlighted);
  const nodes: RenderNode[] = [];
  for (const id of document.visible) {
    const node = byId.get(id);
    const position = document.positions[String(id)];
    if (!node || !position) continue;
    nodes.push({
      id,
      x: position[0],
      y: position[1],
      label: nodeLabel(id, node.clause),
      fullClause: node.clause,
      phase: phaseOf(node),
      highlighted: highlighted.has(id),
      selected: selected.has(id),
    });
  }
  const at = new Map(nodes.map((n) => [n.id, n]));
  const edges: RenderEdge[] = [];
  for (const [src, dst] of document.edges) {
    const a = at.get(src);
    const b = at.get(dst);
    if (a && b) edges.push({ from: { x: a.x, y: a.y }, to: { x: b.x, y: b.y } });
  }
  return { nodes, edges, width: document.width, height: document.height };
}

export interface Viewport {
  x: number;
  y: number;
  width: number;
  height: number;
}

/** Nodes intersecting the viewport (plus a margin), so offscreen parts of
 *  a multi-thousand-node drawing are never painted. */
export function cullToViewport(
  nodes: RenderNode[],
  viewport: Viewport,
  margin = 200,
): RenderNode[] {
  const left = viewport.x - margin;
  const right = viewport.x + viewport.width + margin;
  const top = viewport.y - margin;
  const bottom = viewport.y + viewport.height + margin;
  return nodes.filter(
    (n) => n.x >= left && n.x <= right && n.y >= top && n.y <= bottom,
  );
}

/** Nearest node within `radius` layout units of a point, or null. */
export function hitTest(
  nodes: RenderNode[],
  x: number,
  y: number,
  radius = 60,
): RenderNode | null {
  let best: RenderNode | null = null;
  let bestDistance = radius * radius;
  for (const node of nodes) {
    const dx = node.x - x;
    const dy = node.y - y;
    const d = dx * dx + dy * dy;
    if (d <= bestDistance) {
      best = node;
      bestDistance = d;
    }
  }
  return best;
}
