import { ApiClient, ApiError } from "./api.js";
import { GraphCanvas } from "./canvas.js";
import { ExplorerController } from "./controller.js";
import { renderPanel } from "./panel.js";
import type { SearchMode, TransformOp } from "./types.js";

const api = new ApiClient("");
const controller = new ExplorerController(api);

const el = <T extends HTMLElement>(id: string): T => {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
};

const canvas = new GraphCanvas(el<HTMLCanvasElement>("graph"));
const panel = el<HTMLElement>("panel");
const results = el<HTMLElement>("results");
const status = el<HTMLElement>("status");

function setStatus(text: string, isError = false): void {
  status.textContent = text;
  status.classList.toggle("error", isError);
}

function refreshCanvas(): void {
  canvas.setModel(controller.renderModel());
}

function summarize(): void {
  const doc = controller.document;
  if (!doc) return;
  const total = doc.nodes.length;
  setStatus(
    `${doc.visible.length} of ${total} clauses visible` +
      (doc.violations.length ? ` | ${doc.violations.length} log violations` : ""),
  );
}

/** Every user action funnels through here so a failing request shows a
 *  banner instead of taking the page down. */
async function guarded(action: () => Promise<void>): Promise<void> {
  try {
    await action();
  } catch (error) {
    if (error instanceof DOMException && error.name === "AbortError") return;
    if (error instanceof ApiError) {
      setStatus(`service error ${error.status}: ${error.message}`, true);
    } else {
      setStatus(String(error), true);
    }
  }
}

async function selectAndShow(id: number, additive = false): Promise<void> {
  await guarded(async () => {
    const meta = await controller.selectNode(id, additive);
    renderPanel(panel, meta, { onNavigate: (target) => void navigateTo(target) });
    refreshCanvas();
  });
}

async function navigateTo(id: number): Promise<void> {
  await selectAndShow(id);
  canvas.panTo(id);
}

canvas.onNodeClick = (node, additive) => void selectAndShow(node.id, additive);
canvas.onBackgroundClick = () => {
  controller.clearSelection();
  renderPanel(panel, null, { onNavigate: () => {} });
  refreshCanvas();
};

el<HTMLButtonElement>("load").addEventListener("click", () =>
  guarded(async () => {
    const file = el<HTMLInputElement>("logfile").files?.[0];
    const text = file ? await file.text() : el<HTMLTextAreaElement>("logtext").value;
    if (!text.trim()) {
      setStatus("paste a log or choose a file first", true);
      return;
    }
    const info = await controller.loadLog(text);
    el<HTMLElement>("session-meta").textContent =
      `session ${info.session_id}: ${info.event_count} events, ` +
      `${info.node_count} clauses, ${info.skipped_lines} skipped lines`;
    renderPanel(panel, null, { onNavigate: () => {} });
    results.textContent = "";
    refreshCanvas();
    canvas.fit();
    summarize();
  }),
);

function transformButton(buttonId: string, op: TransformOp, needsIds: boolean): void {
  el<HTMLButtonElement>(buttonId).addEventListener("click", () =>
    guarded(async () => {
      const ids = controller.selectedIds();
      if (needsIds && ids.length === 0) {
        setStatus("select at least one clause first", true);
        return;
      }
      await controller.applyTransform(op, needsIds ? ids : undefined);
      refreshCanvas();
      summarize();
    }),
  );
}

transformButton("prune", "prune_to_activated", false);
transformButton("merge", "merge_preprocessing", false);
transformButton("restrict-anc", "restrict_ancestors", true);
transformButton("restrict-desc", "restrict_descendants", true);
transformButton("reset", "reset", false);

el<HTMLButtonElement>("back").addEventListener("click", () =>
  guarded(async () => {
    const document_ = await controller.goBack();
    if (document_ === null) {
      setStatus("history is empty");
      return;
    }
    refreshCanvas();
    summarize();
  }),
);

el<HTMLButtonElement>("highlight").addEventListener("click", () =>
  guarded(async () => {
    const highlighted = await controller.highlightSelection();
    refreshCanvas();
    setStatus(`${highlighted.length} clauses highlighted`);
  }),
);

const searchInput = el<HTMLInputElement>("search");
el<HTMLButtonElement>("run-search").addEventListener("click", () => void runSearch());
searchInput.addEventListener("keydown", (event) => {
  if (event.key === "Enter") void runSearch();
});

async function runSearch(): Promise<void> {
  await guarded(async () => {
    const mode = el<HTMLSelectElement>("search-mode").value as SearchMode;
    const query =
      mode === "consequences"
        ? controller.selectedIds().join(",")
        : searchInput.value;
    const response = await controller.runSearch(query, mode);
    results.textContent = "";
    const visible = new Set(response.visible_ids);
    if (response.ids.length === 0) {
      results.textContent = "no matches";
      return;
    }
    for (const id of response.ids) {
      const item = document.createElement("a");
      item.href = "#";
      item.className = visible.has(id) ? "hit" : "hit off-view";
      item.textContent = visible.has(id) ? `${id}` : `${id} (outside view)`;
      item.addEventListener("click", (event) => {
        event.preventDefault();
        void navigateTo(id);
      });
      results.appendChild(item);
    }
    setStatus(`${response.ids.length} matches, ${visible.size} in view`);
  });
}

document.addEventListener("keydown", (event) => {
  if (event.key === "/" && document.activeElement !== searchInput) {
    event.preventDefault();
    searchInput.focus();
  } else if (event.key === "Escape") {
    controller.clearSelection();
    renderPanel(panel, null, { onNavigate: () => {} });
    refreshCanvas();
  }
});

setStatus("no log loaded");
