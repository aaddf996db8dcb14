import { ApiClient } from "./api.js";
import { buildRenderModel, type RenderModel } from "./render-model.js";
import { ViewHistory, newUiState, pruneSelection, toggleSelection, type UiState } from "./state.js";
import type {
  GraphDocument,
  NodeMeta,
  ProvenanceEntry,
  SearchMode,
  SearchResponse,
  SessionInfo,
  TransformOp,
} from "./types.js";

/** Drives one exploration session. Holds no DOM: the canvas/panel layers
 *  render whatever this exposes, which keeps the whole flow testable
 *  headless. All graph math (ancestors, layout, search) happens on the
 *  server; the controller only sequences requests and keeps history. */
export class ExplorerController {
  state: UiState | null = null;
  document: GraphDocument | null = null;
  readonly history = new ViewHistory();
  private inflight: AbortController | null = null;

  constructor(private api: ApiClient) {}

  async loadLog(text: string): Promise<SessionInfo> {
    const info = await this.api.createSession(text);
    this.state = newUiState(info.session_id);
    this.history.clear();
    this.document = await this.api.graph(info.session_id);
    return info;
  }

  private get sessionId(): string {
    if (!this.state) throw new Error("no session loaded");
    return this.state.sessionId;
  }

  visibleIds(): Set<number> {
    return new Set(this.document?.visible ?? []);
  }

  renderModel(): RenderModel {
    if (!this.document || !this.state) return { nodes: [], edges: [], width: 0, height: 0 };
    return buildRenderModel(this.document, this.state.selected);
  }

  selectedIds(): number[] {
    return this.state ? [...this.state.selected].sort((a, b) => a - b) : [];
  }

  /** Select a node and fetch its meta-information for the side panel. */
  async selectNode(id: number, additive = false): Promise<NodeMeta> {
    if (!this.state) throw new Error("no session loaded");
    toggleSelection(this.state, id, additive);
    return this.api.node(this.sessionId, id);
  }

  clearSelection(): void {
    this.state?.selected.clear();
  }

  async runSearch(query: string, mode: SearchMode = "text"): Promise<SearchResponse> {
    if (this.state) this.state.searchQuery = query;
    return this.api.search(this.sessionId, query, mode, this.newRequest());
  }

  /** Apply a transformation; the previous view's provenance goes onto the
   *  history stack only once the server accepted the new view. */
  async applyTransform(op: TransformOp, ids?: number[]): Promise<GraphDocument> {
    if (!this.document || !this.state) throw new Error("no session loaded");
    const previous = this.document.provenance;
    const next = await this.api.transform(this.sessionId, op, ids, this.newRequest());
    this.history.push(previous);
    this.adoptDocument(next);
    return next;
  }

  /** Back control: pop the previous provenance and rebuild it server-side
   *  (reset, then replay each recorded descriptor). */
  async goBack(): Promise<GraphDocument | null> {
    if (!this.document || !this.state) return null;
    const target = this.history.pop();
    if (target === null) return null;
    const signal = this.newRequest();
    let document = await this.api.transform(this.sessionId, "reset", undefined, signal);
    for (const entry of target) {
      document = await this.api.transform(
        this.sessionId,
        entry[0] as TransformOp,
        entry.length > 1 ? (entry[1] as number[]) : undefined,
        signal,
      );
    }
    this.adoptDocument(document);
    return document;
  }

  /** Permanently highlight the current selection (additive). */
  async highlightSelection(): Promise<number[]> {
    if (!this.document || !this.state) throw new Error("no session loaded");
    const ids = new Set(this.document.highlighted);
    for (const id of this.state.selected) ids.add(id);
    const result = await this.api.highlight(this.sessionId, [...ids]);
    this.document = await this.api.graph(this.sessionId);
    return result.highlighted;
  }

  provenance(): ProvenanceEntry[] {
    return this.document?.provenance ?? [];
  }

  private adoptDocument(document: GraphDocument): void {
    this.document = document;
    if (this.state) pruneSelection(this.state, new Set(document.visible));
  }

  /** At most one in-flight view-changing request; newer actions cancel
   *  superseded fetches. */
  private newRequest(): AbortSignal {
    this.inflight?.abort();
    this.inflight = new AbortController();
    return this.inflight.signal;
  }
}
