import { describe, expect, it } from "vitest";

import {
  buildRenderModel,
  cullToViewport,
  hitTest,
  nodeLabel,
  phaseOf,
} from "../src/render-model.js";
import type { DocumentNode, GraphDocument } from "../src/types.js";

function node(id: number, overrides: Partial<DocumentNode> = {}): DocumentNode {
  return {
    id,
    clause: `c(${id})`,
    rule: "resolution",
    premises: [],
    new_at: null,
    passive_at: null,
    active_at: null,
    ...overrides,
  };
}

function doc(overrides: Partial<GraphDocument> = {}): GraphDocument {
  return {
    format_version: 1,
    nodes: [],
    violations: [],
    warnings: [],
    visible: [],
    highlighted: [],
    provenance: [],
    rewired_edges: [],
    edges: [],
    positions: {},
    ranks: {},
    width: 0,
    height: 0,
    ...overrides,
  };
}

describe("phaseOf", () => {
  it("classifies by the strongest observed event", () => {
    expect(phaseOf(node(1, { new_at: 1, passive_at: 2, active_at: 3 }))).toBe("active");
    expect(phaseOf(node(1, { new_at: 1, passive_at: 2 }))).toBe("passive");
    expect(phaseOf(node(1, { new_at: 1 }))).toBe("new");
    expect(phaseOf(node(1))).toBe("placeholder");
  });
});

describe("nodeLabel", () => {
  it("keeps short clauses verbatim", () => {
    expect(nodeLabel(7, "p(a)")).toBe("7. p(a)");
  });

  it("keeps exactly 80 characters without an ellipsis", () => {
    const clause = "x".repeat(80);
    expect(nodeLabel(1, clause)).toBe(`1. ${clause}`);
  });

  it("truncates past 80 characters", () => {
    const clause = "y".repeat(81);
    const label = nodeLabel(1, clause);
    expect(label).toBe(`1. ${"y".repeat(80)}…`);
  });
});

describe("buildRenderModel", () => {
  const document = doc({
    nodes: [
      node(1, { new_at: 1, passive_at: 2, active_at: 3 }),
      node(2, { new_at: 4 }),
      node(3),
    ],
    visible: [1, 2, 3],
    highlighted: [2],
    edges: [
      [1, 2],
      [1, 3],
    ],
    positions: { "1": [0, 0], "2": [-90, 120], "3": [90, 120] },
    ranks: { "1": 0, "2": 1, "3": 1 },
    width: 180,
    height: 120,
  });

  it("renders one node per visible id", () => {
    const model = buildRenderModel(document, new Set());
    expect(model.nodes.length).toBe(document.visible.length);
  });

  it("carries phase, highlight, and selection flags", () => {
    const model = buildRenderModel(document, new Set([3]));
    const byId = new Map(model.nodes.map((n) => [n.id, n]));
    expect(byId.get(1)?.phase).toBe("active");
    expect(byId.get(2)?.highlighted).toBe(true);
    expect(byId.get(3)?.selected).toBe(true);
    expect(byId.get(3)?.phase).toBe("placeholder");
  });

  it("joins edges through node positions", () => {
    const model = buildRenderModel(document, new Set());
    expect(model.edges).toEqual([
      { from: { x: 0, y: 0 }, to: { x: -90, y: 120 } },
      { from: { x: 0, y: 0 }, to: { x: 90, y: 120 } },
    ]);
  });

  it("ignores hidden nodes even if edges mention them", () => {
    const restricted = { ...document, visible: [1, 2], edges: [[1, 2], [1, 3]] as [number, number][] };
    const model = buildRenderModel(restricted, new Set());
    expect(model.nodes.length).toBe(2);
    expect(model.edges.length).toBe(1);
  });
});

describe("viewport culling and hit testing", () => {
  const nodes = buildRenderModel(
    doc({
      nodes: [node(1), node(2), node(3)],
      visible: [1, 2, 3],
      positions: { "1": [0, 0], "2": [1000, 0], "3": [0, 5000] },
    }),
    new Set(),
  ).nodes;

  it("culls nodes far outside the viewport", () => {
    const kept = cullToViewport(nodes, { x: -100, y: -100, width: 400, height: 400 });
    expect(kept.map((n) => n.id)).toEqual([1]);
  });

  it("keeps nodes within the margin", () => {
    const kept = cullToViewport(nodes, { x: 700, y: -50, width: 200, height: 200 }, 200);
    expect(kept.map((n) => n.id)).toEqual([2]);
  });

  it("hit-tests the nearest node within the radius", () => {
    expect(hitTest(nodes, 10, 5)?.id).toBe(1);
    expect(hitTest(nodes, 500, 0)).toBeNull();
  });
});
