import type {
  ApiErrorBody,
  FacetInventory,
  GraphResponse,
  QueryResponse,
  ToolDetail,
  ToolRow,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly code: string,
    readonly position?: number,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client; all semantics stay on the server. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const error = (body ?? {}) as Partial<ApiErrorBody>;
      throw new ApiError(
        error.error ?? `request failed with ${response.status}`,
        response.status,
        error.code ?? "error",
        error.position,
      );
    }
    return body as T;
  }

  health(): Promise<{ status: string; tools: number }> {
    return this.request("/api/health");
  }

  tools(): Promise<{ tools: ToolRow[] }> {
    return this.request("/api/tools");
  }

  tool(slug: string): Promise<ToolDetail> {
    return this.request(`/api/tools/${encodeURIComponent(slug)}`);
  }

  facets(): Promise<FacetInventory> {
    return this.request("/api/facets");
  }

  graph(root: string, depth: number): Promise<GraphResponse> {
    const params = new URLSearchParams({ root, depth: String(depth) });
    return this.request(`/api/graph?${params}`);
  }

  query(text: string): Promise<QueryResponse> {
    return this.request("/api/query", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ query: text }),
    });
  }
}
