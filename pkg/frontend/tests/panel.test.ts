// @vitest-environment happy-dom
import { describe, expect, it } from "vitest";

import { renderPanel } from "../src/panel.js";
import type { NodeMeta } from "../src/types.js";

const meta: NodeMeta = {
  id: 164,
  clause: "'Sub'(p(p(X0)),X0) | zero = X0 | zero = p(X0)",
  rule: "resolution",
  premises: [92, 94],
  children: [],
  new_at: 4,
  passive_at: 5,
  active_at: null,
  is_root: false,
  visible: true,
  highlighted: false,
};

describe("renderPanel", () => {
  it("shows clause, rule, and event indices", () => {
    const container = document.createElement("div");
    renderPanel(container, meta, { onNavigate: () => {} });
    expect(container.textContent).toContain("Clause 164");
    expect(container.textContent).toContain("resolution");
    expect(container.textContent).toContain(meta.clause);
    expect(container.textContent).toContain("passive at");
  });

  it("renders premise links that navigate", () => {
    const container = document.createElement("div");
    const visited: number[] = [];
    renderPanel(container, meta, { onNavigate: (id) => visited.push(id) });
    const links = [...container.querySelectorAll("a")];
    expect(links.map((a) => a.textContent)).toEqual(["92", "94"]);
    links[0].click();
    expect(visited).toEqual([92]);
  });

  it("clears to a hint when nothing is selected", () => {
    const container = document.createElement("div");
    renderPanel(container, meta, { onNavigate: () => {} });
    renderPanel(container, null, { onNavigate: () => {} });
    expect(container.textContent).toContain("Select a clause");
    expect(container.querySelectorAll("a").length).toBe(0);
  });
});
