import type {
  AnswerResponse,
  CreateResponse,
  Dir,
  Edge,
  HintResponse,
  QueryResponse,
  Role,
  View,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** An answer the server refused (it would close a directed cycle). */
export interface Rejection {
  rejected: true;
  error: string;
  forced: Dir | null;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

/**
 * Thin typed wrapper over the play service. Request bodies are built with
 * JSON.stringify over literals with fixed key order, so a replayed session
 * issues a byte-identical call sequence.
 */
export class ApiClient {
  constructor(
    private base: string,
    private fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post(path: string, body: string): Promise<Response> {
    return this.fetchImpl(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body,
    });
  }

  private async expectOk<T>(response: Response): Promise<T> {
    if (!response.ok) {
      const detail = await response.text();
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  async createSession(graph: string, role: Role, opponent: string): Promise<CreateResponse> {
    const body = JSON.stringify({ graph, role, opponent });
    return this.expectOk<CreateResponse>(await this.post("/sessions", body));
  }

  async getView(id: string): Promise<View> {
    const response = await this.fetchImpl(`${this.base}/sessions/${id}`);
    return this.expectOk<View>(response);
  }

  async query(id: string, edge: Edge): Promise<QueryResponse> {
    const body = JSON.stringify({ edge });
    return this.expectOk<QueryResponse>(await this.post(`/sessions/${id}/query`, body));
  }

  async answer(id: string, dir: Dir): Promise<AnswerResponse | Rejection> {
    const body = JSON.stringify({ dir });
    const response = await this.post(`/sessions/${id}/answer`, body);
    if (response.status === 409) {
      const doc = await response.json();
      const detail = doc.detail ?? {};
      return {
        rejected: true,
        error: typeof detail === "string" ? detail : detail.error ?? "rejected",
        forced: typeof detail === "object" && detail.forced ? detail.forced : null,
      };
    }
    return this.expectOk<AnswerResponse>(response);
  }

  async hint(id: string): Promise<HintResponse> {
    const response = await this.fetchImpl(`${this.base}/sessions/${id}/hint`);
    return this.expectOk<HintResponse>(response);
  }
}
