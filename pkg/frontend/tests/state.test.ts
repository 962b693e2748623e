import { describe, expect, it } from "vitest";

import { QueryRunner } from "../src/state.js";
import type { QueryResponse } from "../src/types.js";

function response(query: string): QueryResponse {
  return { query, universe_size: 70, count: 0, matches: [] };
}

describe("QueryRunner", () => {
  it("returns the response for an uncontested query", async () => {
    const runner = new QueryRunner({
      query: async (text) => response(text),
    });
    const result = await runner.run("tool");
    expect(result?.query).toBe("tool");
  });

  it("drops a slow response that was superseded", async () => {
    const resolvers = new Map<string, (r: QueryResponse) => void>();
    const runner = new QueryRunner({
      query: (text) =>
        new Promise<QueryResponse>((resolve) => resolvers.set(text, resolve)),
    });

    const first = runner.run("slow");
    const second = runner.run("fast");
    resolvers.get("fast")!(response("fast"));
    expect((await second)?.query).toBe("fast");
    resolvers.get("slow")!(response("slow")); // resolves after being replaced
    expect(await first).toBeNull();
  });
});
