/** Wire types for the qualrank HTTP API. */

export interface AttributeDoc {
  name: string;
  kind: "numeric" | "ordinal" | "interval";
  direction?: "maximize" | "minimize";
  levels?: string[];
}

export interface AlternativeDoc {
  id: string;
  values: Record<string, number | string | [number, number]>;
}

export interface ProblemDocument {
  attributes: AttributeDoc[];
  alternatives: AlternativeDoc[];
  importance: [string, string][];
}

export interface Finding {
  severity: string;
  code: string;
  message: string;
  path: string;
}

export interface Edge {
  more: string;
  less: string;
}

export interface ProblemResponse {
  revision: number;
  problem: ProblemDocument;
  validation: Finding[];
}

export interface ClassificationResponse {
  revision: number;
  classification: string;
  counterexample: string[] | null;
  stated: [string, string][];
  closed: [string, string][];
}

export interface DominanceEdge {
  winner: string;
  loser: string;
  witnesses: string[];
}

export interface EdgeCheck {
  ok: boolean;
  axiom: string | null;
  counterexample: number[] | null;
}

export interface DominanceResponse {
  revision: number;
  mode: "full" | "hasse";
  alternatives: string[];
  edges: DominanceEdge[];
  edge_check: EdgeCheck;
  maximal: string[];
  layers: string[][] | null;
  importance_classification: string;
  staged?: { add: [string, string][]; remove: [string, string][] };
}

export interface WitnessAccount {
  attribute: string;
  checked: string[];
  excluded: string[];
}

export interface FailedWitness {
  attribute: string;
  blocking: string;
  blocking_outcome: string;
}

export interface ExplainResponse {
  revision: number;
  a: string;
  b: string;
  dominant: boolean;
  outcomes: Record<string, string>;
  witnesses: WitnessAccount[];
  failed: FailedWitness[];
}

export interface ErrorBody {
  findings: Finding[];
  revision: number;
}

export class ApiError extends Error {
  readonly status: number;
  readonly findings: Finding[];
  readonly revision: number;

  constructor(status: number, body: ErrorBody) {
    const text = body.findings?.map((f) => f.message).join("; ") ?? `HTTP ${status}`;
    super(text);
    this.status = status;
    this.findings = body.findings ?? [];
    this.revision = body.revision ?? -1;
  }
}
