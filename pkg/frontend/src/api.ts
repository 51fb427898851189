/** Thin typed client over the qualrank HTTP API. */

import {
  ApiError,
  ClassificationResponse,
  DominanceResponse,
  Edge,
  ErrorBody,
  ExplainResponse,
  ProblemDocument,
  ProblemResponse,
} from "./types";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base = "", fetchImpl: FetchLike = (i, init) => fetch(i, init)) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(this.base + path, init);
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload as ErrorBody);
    }
    return payload as T;
  }

  getProblem(): Promise<ProblemResponse> {
    return this.request("GET", "/api/problem");
  }

  putProblem(doc: ProblemDocument): Promise<{ revision: number }> {
    return this.request("PUT", "/api/problem", doc);
  }

  getClassification(): Promise<ClassificationResponse> {
    return this.request("GET", "/api/classification");
  }

  getDominance(mode: "full" | "hasse" = "full"): Promise<DominanceResponse> {
    return this.request("GET", `/api/dominance?mode=${mode}`);
  }

  addEdge(edge: Edge): Promise<ClassificationResponse> {
    return this.request("POST", "/api/importance/edges", edge);
  }

  removeEdge(edge: Edge): Promise<ClassificationResponse> {
    return this.request("DELETE", "/api/importance/edges", edge);
  }

  whatIf(add: Edge[], remove: Edge[], mode: "full" | "hasse" = "full"): Promise<DominanceResponse> {
    return this.request("POST", `/api/whatif?mode=${mode}`, { add, remove });
  }

  explain(a: string, b: string): Promise<ExplainResponse> {
    const params = new URLSearchParams({ a, b });
    return this.request("GET", `/api/explain?${params.toString()}`);
  }
}
