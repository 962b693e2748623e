import type { QueryResponse, ToolDetail } from "./types.js";

/** What the page is currently showing. `results` only ever holds the answer
to `resultQuery`; a stale response can never overwrite a newer one. */
export interface ViewState {
  queryText: string;
  resultQuery: string | null;
  results: QueryResponse | null;
  selectedTool: ToolDetail | null;
  graphRoot: string;
  graphDepth: number;
  error: string | null;
}

export function initialState(): ViewState {
  return {
    queryText: "Tool",
    resultQuery: null,
    results: null,
    selectedTool: null,
    graphRoot: "thing",
    graphDepth: 2,
    error: null,
  };
}

interface QueryApi {
  query(text: string): Promise<QueryResponse>;
}

/** At most one query is "current"; responses to superseded requests resolve
to null instead of surfacing (latest-wins cancellation). */
export class QueryRunner {
  private sequence = 0;

  constructor(private readonly api: QueryApi) {}

  async run(text: string): Promise<QueryResponse | null> {
    const ticket = ++this.sequence;
    const response = await this.api.query(text);
    return ticket === this.sequence ? response : null;
  }
}
