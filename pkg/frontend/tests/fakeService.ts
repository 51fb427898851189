/** In-memory stand-in for the HTTP service, used by the store unit tests.
 * Mimics the wire contract: revision bumps on accepted mutations only,
 * what-if never mutates, cycles are rejected with 409. */

import { FetchLike } from "../src/api";

type EdgePair = [string, string];

export class FakeService {
  attributes = ["Cost", "Perf"];
  edges: EdgePair[] = [["Cost", "Perf"]];
  revision = 0;
  mutationCalls = 0;
  whatIfCalls = 0;

  private key(e: EdgePair): string {
    return e.join(">");
  }

  private dominanceFor(edges: EdgePair[]) {
    // canned engine: the single importance edge decides the one pair
    const active = edges.length > 0;
    return {
      revision: this.revision,
      mode: "full",
      alternatives: ["A", "B"],
      edges: active ? [{ winner: "A", loser: "B", witnesses: ["Cost"] }] : [],
      edge_check: { ok: true, axiom: null, counterexample: null },
      maximal: active ? ["A"] : ["A", "B"],
      layers: active ? [["A"], ["B"]] : [["A", "B"]],
      importance_classification: active ? "TotalOrder" : "WeakOrder",
    };
  }

  private classification() {
    return {
      revision: this.revision,
      classification: this.edges.length ? "TotalOrder" : "WeakOrder",
      counterexample: null,
      stated: [...this.edges],
      closed: [...this.edges],
    };
  }

  private respond(status: number, body: unknown): Response {
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  }

  private findings(code: string, message: string) {
    return { findings: [{ severity: "error", code, message, path: "" }], revision: this.revision };
  }

  fetch: FetchLike = async (input, init) => {
    const url = new URL(input, "http://fake");
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;

    if (url.pathname === "/api/problem" && method === "GET") {
      return this.respond(200, {
        revision: this.revision,
        problem: { attributes: [], alternatives: [], importance: this.edges },
        validation: [],
      });
    }
    if (url.pathname === "/api/classification" && method === "GET") {
      return this.respond(200, this.classification());
    }
    if (url.pathname === "/api/dominance" && method === "GET") {
      return this.respond(200, this.dominanceFor(this.edges));
    }
    if (url.pathname === "/api/whatif" && method === "POST") {
      this.whatIfCalls += 1;
      const hypothetical = this.edges.filter(
        (e) => !body.remove.some((r: { more: string; less: string }) => this.key(e) === `${r.more}>${r.less}`),
      );
      for (const add of body.add) {
        if (add.more === add.less || (add.more === "Perf" && add.less === "Cost")) {
          return this.respond(409, this.findings("cycle", "cycle"));
        }
        hypothetical.push([add.more, add.less]);
      }
      return this.respond(200, { ...this.dominanceFor(hypothetical), staged: body });
    }
    if (url.pathname === "/api/importance/edges" && method === "POST") {
      this.mutationCalls += 1;
      const edge: EdgePair = [body.more, body.less];
      if (body.more === body.less || (body.more === "Perf" && body.less === "Cost")) {
        return this.respond(409, this.findings("cycle", `importance cycle ${body.more}→${body.less}`));
      }
      if (this.edges.some((e) => this.key(e) === this.key(edge))) {
        return this.respond(409, this.findings("edge-exists", "already stated"));
      }
      this.edges.push(edge);
      this.revision += 1;
      return this.respond(200, this.classification());
    }
    if (url.pathname === "/api/importance/edges" && method === "DELETE") {
      this.mutationCalls += 1;
      const edge: EdgePair = [body.more, body.less];
      if (!this.edges.some((e) => this.key(e) === this.key(edge))) {
        return this.respond(404, this.findings("edge-missing", "not stated"));
      }
      this.edges = this.edges.filter((e) => this.key(e) !== this.key(edge));
      this.revision += 1;
      return this.respond(200, this.classification());
    }
    if (url.pathname === "/api/explain" && method === "GET") {
      return this.respond(200, {
        revision: this.revision,
        a: url.searchParams.get("a"),
        b: url.searchParams.get("b"),
        dominant: this.edges.length > 0,
        outcomes: { Cost: "better", Perf: "worse" },
        witnesses: [],
        failed: [],
      });
    }
    return this.respond(404, this.findings("no-route", url.pathname));
  };
}
