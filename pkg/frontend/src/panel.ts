import type { NodeMeta } from "./types.js";

export interface PanelCallbacks {
  onNavigate: (id: number) => void;
}

/** Side panel: meta-information for the selected clause, with clickable
 *  premise and child links. */
export function renderPanel(
  container: HTMLElement,
  meta: NodeMeta | null,
  callbacks: PanelCallbacks,
): void {
  container.textContent = "";
  if (!meta) {
    const hint = document.createElement("p");
    hint.className = "muted";
    hint.textContent = "Select a clause to inspect it.";
    container.appendChild(hint);
    return;
  }

  const title = document.createElement("h3");
  title.textContent = `Clause ${meta.id}`;
  container.appendChild(title);

  const clause = document.createElement("pre");
  clause.className = "clause";
  clause.textContent = meta.clause === "" ? "(not in the log)" : meta.clause;
  container.appendChild(clause);

  const rows: [string, string][] = [
    ["rule", meta.rule === "" ? "unknown" : meta.rule],
    ["new at", meta.new_at === null ? "-" : String(meta.new_at)],
    ["passive at", meta.passive_at === null ? "-" : String(meta.passive_at)],
    ["active at", meta.active_at === null ? "-" : String(meta.active_at)],
  ];
  const table = document.createElement("dl");
  for (const [key, value] of rows) {
    const dt = document.createElement("dt");
    dt.textContent = key;
    const dd = document.createElement("dd");
    dd.textContent = value;
    table.append(dt, dd);
  }
  container.appendChild(table);

  container.appendChild(linkRow("premises", meta.premises, callbacks));
  container.appendChild(linkRow("children", meta.children, callbacks));
}

function linkRow(label: string, ids: number[], callbacks: PanelCallbacks): HTMLElement {
  const row = document.createElement("div");
  row.className = "link-row";
  const caption = document.createElement("span");
  caption.textContent = `${label}: `;
  row.appendChild(caption);
  if (ids.length === 0) {
    const none = document.createElement("span");
    none.className = "muted";
    none.textContent = "none";
    row.appendChild(none);
    return row;
  }
  ids.forEach((id, i) => {
    const link = document.createElement("a");
    link.href = "#";
    link.textContent = String(id);
    link.addEventListener("click", (event) => {
      event.preventDefault();
      callbacks.onNavigate(id);
    });
    row.appendChild(link);
    if (i < ids.length - 1) row.appendChild(document.createTextNode(", "));
  });
  return row;
}
