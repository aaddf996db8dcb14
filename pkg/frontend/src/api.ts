import type {
  GraphDocument,
  NodeMeta,
  SaturationStateResponse,
  SearchMode,
  SearchResponse,
  SessionInfo,
  TransformOp,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed wrapper over the session HTTP API. All graph math happens
 *  server-side; this client only moves documents around. */
export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const body = await response.json();
        if (body && typeof body.detail === "string") detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  createSession(logText: string): Promise<SessionInfo> {
    return this.request("/api/sessions", {
      method: "POST",
      headers: { "content-type": "text/plain" },
      body: logText,
    });
  }

  graph(sessionId: string): Promise<GraphDocument> {
    return this.request(`/api/sessions/${sessionId}/graph`);
  }

  node(sessionId: string, nodeId: number): Promise<NodeMeta> {
    return this.request(`/api/sessions/${sessionId}/node/${nodeId}`);
  }

  transform(
    sessionId: string,
    op: TransformOp,
    ids?: number[],
    signal?: AbortSignal,
  ): Promise<GraphDocument> {
    return this.request(`/api/sessions/${sessionId}/transform`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(ids === undefined ? { op } : { op, ids }),
      signal,
    });
  }

  search(
    sessionId: string,
    query: string,
    mode: SearchMode = "text",
    signal?: AbortSignal,
  ): Promise<SearchResponse> {
    const params = new URLSearchParams({ q: query, mode });
    return this.request(`/api/sessions/${sessionId}/search?${params}`, { signal });
  }

  highlight(sessionId: string, ids: number[]): Promise<{ ok: boolean; highlighted: number[] }> {
    return this.request(`/api/sessions/${sessionId}/highlight`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ ids }),
    });
  }

  state(sessionId: string, eventIndex?: number): Promise<SaturationStateResponse> {
    const suffix = eventIndex === undefined ? "" : `?event_index=${eventIndex}`;
    return this.request(`/api/sessions/${sessionId}/state${suffix}`);
  }
}
