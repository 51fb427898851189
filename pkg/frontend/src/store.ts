/** View-model for the explorer.
 *
 * All order computation stays on the server: the store only holds the most
 * recent responses, keyed by revision. A response older than what is
 * already displayed is discarded, so the rendered graph always corresponds
 * to the revision it claims. What-if previews are staged locally and sent
 * through the side-effect-free endpoint; discarding them is purely local.
 */

import { ApiClient } from "./api";
import {
  ApiError,
  ClassificationResponse,
  DominanceResponse,
  Edge,
  ExplainResponse,
  ProblemResponse,
} from "./types";

export interface ExplorerState {
  revision: number;
  problem: ProblemResponse | null;
  classification: ClassificationResponse | null;
  dominance: DominanceResponse | null;
  /** preview of the staged what-if, shown side by side; never committed */
  preview: DominanceResponse | null;
  stagedAdd: Edge[];
  stagedRemove: Edge[];
  selected: { a: string; b: string } | null;
  explanation: ExplainResponse | null;
  /** inline error surface (e.g. cycle rejections) */
  banner: string | null;
}

type Listener = (state: ExplorerState) => void;

const edgeKey = (e: Edge) => `${e.more}▷${e.less}`;

export class ExplorerStore {
  private readonly api: ApiClient;
  private state: ExplorerState = {
    revision: -1,
    problem: null,
    classification: null,
    dominance: null,
    preview: null,
    stagedAdd: [],
    stagedRemove: [],
    selected: null,
    explanation: null,
    banner: null,
  };
  private listeners: Listener[] = [];

  constructor(api: ApiClient) {
    this.api = api;
  }

  getState(): ExplorerState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(partial: Partial<ExplorerState>) {
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  /** Apply a revision-carrying response unless it is stale. */
  private fresh(revision: number): boolean {
    return revision >= this.state.revision;
  }

  async refresh(): Promise<void> {
    const [problem, classification, dominance] = await Promise.all([
      this.api.getProblem(),
      this.api.getClassification(),
      this.api.getDominance(),
    ]);
    const revision = Math.max(
      problem.revision,
      classification.revision,
      dominance.revision,
    );
    // a torn read across a concurrent mutation: retry once on the newest revision
    if (
      problem.revision !== classification.revision ||
      classification.revision !== dominance.revision
    ) {
      return this.refresh();
    }
    if (!this.fresh(revision)) {
      return; // stale against something already displayed
    }
    this.emit({ revision, problem, classification, dominance, banner: null });
  }

  /** Editor action: persist one importance edge. Cycle and duplicate
   * rejections surface on the banner; state is refreshed on success. */
  async addEdge(edge: Edge): Promise<boolean> {
    try {
      const response = await this.api.addEdge(edge);
      if (this.fresh(response.revision)) {
        this.emit({ classification: response, revision: response.revision });
      }
      await this.refresh();
      return true;
    } catch (error) {
      this.surface(error, `cannot add ${edgeKey(edge)}`);
      return false;
    }
  }

  async removeEdge(edge: Edge): Promise<boolean> {
    try {
      const response = await this.api.removeEdge(edge);
      if (this.fresh(response.revision)) {
        this.emit({ classification: response, revision: response.revision });
      }
      await this.refresh();
      return true;
    } catch (error) {
      this.surface(error, `cannot remove ${edgeKey(edge)}`);
      return false;
    }
  }

  stageAdd(edge: Edge) {
    if (!this.state.stagedAdd.some((e) => edgeKey(e) === edgeKey(edge))) {
      this.emit({ stagedAdd: [...this.state.stagedAdd, edge] });
    }
  }

  stageRemove(edge: Edge) {
    if (!this.state.stagedRemove.some((e) => edgeKey(e) === edgeKey(edge))) {
      this.emit({ stagedRemove: [...this.state.stagedRemove, edge] });
    }
  }

  hasStagedChanges(): boolean {
    return this.state.stagedAdd.length > 0 || this.state.stagedRemove.length > 0;
  }

  /** Preview the staged edges side by side with the committed graph.
   * Never mutates server state. */
  async previewWhatIf(): Promise<boolean> {
    try {
      const preview = await this.api.whatIf(this.state.stagedAdd, this.state.stagedRemove);
      if (this.fresh(preview.revision)) {
        this.emit({ preview, banner: null });
      }
      return true;
    } catch (error) {
      this.surface(error, "what-if rejected");
      return false;
    }
  }

  /** Commit the staged edges through the mutation endpoints. */
  async commitWhatIf(): Promise<boolean> {
    for (const edge of this.state.stagedRemove) {
      if (!(await this.removeEdge(edge))) {
        return false;
      }
    }
    for (const edge of this.state.stagedAdd) {
      if (!(await this.addEdge(edge))) {
        return false;
      }
    }
    this.emit({ stagedAdd: [], stagedRemove: [], preview: null });
    await this.refresh();
    return true;
  }

  /** Drop the staged what-if; no network traffic, committed view stays. */
  discardWhatIf(): void {
    this.emit({ stagedAdd: [], stagedRemove: [], preview: null, banner: null });
  }

  async selectPair(a: string, b: string): Promise<void> {
    this.emit({ selected: { a, b } });
    const explanation = await this.api.explain(a, b);
    if (this.fresh(explanation.revision)) {
      this.emit({ explanation });
    }
  }

  clearSelection(): void {
    this.emit({ selected: null, explanation: null });
  }

  private surface(error: unknown, prefix: string) {
    const text =
      error instanceof ApiError
        ? `${prefix}: ${error.message}`
        : `${prefix}: ${String(error)}`;
    this.emit({ banner: text });
  }
}

/** Dashed closure-only edges for the editor: closed minus stated. */
export function closureOnlyEdges(c: ClassificationResponse): [string, string][] {
  const stated = new Set(c.stated.map(([m, l]) => `${m}▷${l}`));
  return c.closed.filter(([m, l]) => !stated.has(`${m}▷${l}`));
}

/** Pareto mode = no stated importance at all. */
export function isParetoMode(c: ClassificationResponse): boolean {
  return c.stated.length === 0;
}

/** The interval-order warning applies exactly when the closed relation is a
 * strict partial order and nothing stronger. */
export function intervalOrderWarning(c: ClassificationResponse): string[] | null {
  return c.classification === "StrictPartialOrder" ? c.counterexample : null;
}
