/** DOM/SVG rendering. Views are rebuilt from store state on every change;
 * nothing here computes order theory, it only draws server responses. */

import { layoutHeight, layoutLayers } from "./layout";
import { closureOnlyEdges, ExplorerState, ExplorerStore, intervalOrderWarning, isParetoMode } from "./store";
import { DominanceResponse } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  cls?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    node.setAttribute(k, v);
  }
  return node;
}

/** Criteria DAG editor: click one attribute then another to add that edge;
 * click a stated edge's label to remove it. */
export function renderImportanceEditor(
  root: HTMLElement,
  state: ExplorerState,
  store: ExplorerStore,
  pending: { source: string | null },
): void {
  root.replaceChildren();
  if (!state.problem || !state.classification) {
    return;
  }
  const names = state.problem.problem.attributes.map((a) => a.name);
  const cls = state.classification;

  const headline = el("div", "editor-head");
  headline.append(el("span", "badge", cls.classification));
  if (isParetoMode(cls)) {
    headline.append(el("span", "badge badge-pareto", "Pareto mode"));
  }
  const warning = intervalOrderWarning(cls);
  if (warning) {
    headline.append(
      el(
        "span",
        "badge badge-warn",
        `not interval-ordered (see ${warning.join(", ")}): dominance transitivity not guaranteed`,
      ),
    );
  }
  root.append(headline);

  if (state.banner) {
    root.append(el("div", "banner", state.banner));
  }

  const width = 640;
  const y = 60;
  const svg = svgEl("svg", {
    width: String(width),
    height: "130",
    viewBox: `0 0 ${width} 130`,
  }) as SVGSVGElement;
  const step = names.length > 1 ? (width - 120) / (names.length - 1) : 0;
  const xOf = new Map(names.map((n, i) => [n, 60 + i * step]));

  const drawEdge = (more: string, less: string, dashed: boolean) => {
    const x1 = xOf.get(more) ?? 0;
    const x2 = xOf.get(less) ?? 0;
    const mid = (x1 + x2) / 2;
    const lift = 34 + Math.abs(x2 - x1) / 8;
    const path = svgEl("path", {
      d: `M ${x1} ${y - 14} Q ${mid} ${y - lift} ${x2} ${y - 14}`,
      class: dashed ? "imp-edge dashed" : "imp-edge",
      "marker-end": "url(#arrow)",
    });
    if (!dashed) {
      path.addEventListener("click", () => {
        void store.removeEdge({ more, less });
      });
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `${more} outranks ${less} (click to remove)`;
      path.append(title);
    }
    svg.append(path);
  };

  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrow",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.append(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", class: "arrow-head" }));
  defs.append(marker);
  svg.append(defs);

  for (const [more, less] of closureOnlyEdges(cls)) {
    drawEdge(more, less, true);
  }
  for (const [more, less] of cls.stated) {
    drawEdge(more, less, false);
  }

  for (const name of names) {
    const x = xOf.get(name) ?? 0;
    const group = svgEl("g", { class: "attr-node" + (pending.source === name ? " pending" : "") });
    group.append(svgEl("circle", { cx: String(x), cy: String(y), r: "12" }));
    const label = svgEl("text", { x: String(x), y: String(y + 30), "text-anchor": "middle" });
    label.textContent = name;
    group.append(label);
    group.addEventListener("click", () => {
      if (pending.source === null) {
        pending.source = name;
      } else if (pending.source === name) {
        pending.source = null;
      } else {
        const edge = { more: pending.source, less: name };
        pending.source = null;
        void store.addEdge(edge);
      }
      store.getState(); // re-render happens via subscription
      renderImportanceEditor(root, store.getState(), store, pending);
    });
    svg.append(group);
  }
  root.append(svg);
  root.append(
    el(
      "div",
      "hint",
      "click an attribute, then a second one, to state the first as more important; solid edges are stated, dashed ones follow by transitivity",
    ),
  );
}

function renderGraphSvg(
  response: DominanceResponse,
  store: ExplorerStore,
  highlightMaximal: boolean,
): SVGSVGElement {
  const width = 640;
  const layers = response.layers ?? [response.alternatives];
  const edgePairs = response.edges.map((e) => [e.winner, e.loser] as [string, string]);
  const positions = layoutLayers(layers, edgePairs, { width });
  const height = layoutHeight(layers.length) + 20;
  const svg = svgEl("svg", {
    width: String(width),
    height: String(height),
    viewBox: `0 0 ${width} ${height}`,
  }) as SVGSVGElement;

  layers.forEach((_, depth) => {
    svg.append(
      svgEl("rect", {
        x: "0",
        y: String(20 + depth * 80),
        width: String(width),
        height: "40",
        class: depth % 2 ? "band odd" : "band",
      }),
    );
  });

  for (const edge of response.edges) {
    const from = positions.get(edge.winner);
    const to = positions.get(edge.loser);
    if (!from || !to) continue;
    const line = svgEl("line", {
      x1: String(from.x),
      y1: String(from.y + 12),
      x2: String(to.x),
      y2: String(to.y - 14),
      class: "dom-edge",
      "marker-end": "url(#arrow)",
    });
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${edge.winner} ≻ ${edge.loser} (witness: ${edge.witnesses.join(", ")})`;
    line.append(title);
    line.addEventListener("click", () => {
      void store.selectPair(edge.winner, edge.loser);
    });
    svg.append(line);
  }

  const maximal = new Set(response.maximal);
  for (const [id, pos] of positions) {
    const selected = store.getState().selected;
    const classes = ["alt-node"];
    if (highlightMaximal && maximal.has(id)) classes.push("maximal");
    if (selected && (selected.a === id || selected.b === id)) classes.push("selected");
    const group = svgEl("g", { class: classes.join(" ") });
    group.append(svgEl("circle", { cx: String(pos.x), cy: String(pos.y), r: "12" }));
    const label = svgEl("text", {
      x: String(pos.x),
      y: String(pos.y + 4),
      "text-anchor": "middle",
    });
    label.textContent = id;
    group.append(label);
    group.addEventListener("click", () => {
      const current = store.getState().selected;
      if (current && current.a !== id) {
        void store.selectPair(current.a, id);
      } else {
        void store.selectPair(id, id);
      }
    });
    svg.append(group);
  }
  return svg;
}

export function renderDominanceView(root: HTMLElement, state: ExplorerState, store: ExplorerStore): void {
  root.replaceChildren();
  if (!state.dominance) return;
  const committed = el("div", "graph-panel");
  const check = state.dominance.edge_check;
  committed.append(
    el("h3", undefined, `committed (revision ${state.dominance.revision})`),
    el(
      "div",
      check.ok ? "status ok" : "status bad",
      check.ok
        ? "strict partial order"
        : `${check.axiom} fails at ${JSON.stringify(check.counterexample)}`,
    ),
    el("div", "maximal", `maximal: ${state.dominance.maximal.join(", ") || "(none)"}`),
    renderGraphSvg(state.dominance, store, true),
  );
  root.append(committed);

  if (state.preview) {
    const preview = el("div", "graph-panel preview");
    preview.append(
      el("h3", undefined, "what-if preview (not committed)"),
      el("div", "maximal", `maximal: ${state.preview.maximal.join(", ") || "(none)"}`),
      renderGraphSvg(state.preview, store, true),
    );
    root.append(preview);
  }
}

export function renderWhatIfPanel(root: HTMLElement, state: ExplorerState, store: ExplorerStore): void {
  root.replaceChildren();
  const list = el("div", "staged");
  for (const e of state.stagedRemove) {
    list.append(el("span", "chip chip-remove", `− ${e.more}▷${e.less}`));
  }
  for (const e of state.stagedAdd) {
    list.append(el("span", "chip chip-add", `+ ${e.more}▷${e.less}`));
  }
  root.append(list);
  const preview = el("button", undefined, "preview");
  preview.disabled = !store.hasStagedChanges();
  preview.addEventListener("click", () => void store.previewWhatIf());
  const commit = el("button", undefined, "commit");
  commit.disabled = !store.hasStagedChanges();
  commit.addEventListener("click", () => void store.commitWhatIf());
  const discard = el("button", undefined, "discard");
  discard.addEventListener("click", () => store.discardWhatIf());
  root.append(preview, commit, discard);
}

export function renderExplanation(root: HTMLElement, state: ExplorerState): void {
  root.replaceChildren();
  const ex = state.explanation;
  if (!ex) return;
  root.append(el("h3", undefined, `${ex.a} vs ${ex.b}: ${ex.dominant ? "dominates" : "no dominance"}`));
  const table = el("table", "explain-table");
  const head = el("tr");
  for (const h of ["attribute", "outcome", "role"]) {
    head.append(el("th", undefined, h));
  }
  table.append(head);
  const roles = new Map<string, string>();
  for (const acct of ex.witnesses) {
    roles.set(acct.attribute, "witness");
    for (const excluded of acct.excluded) {
      if (!roles.has(excluded)) {
        roles.set(excluded, `excluded: less important than ${acct.attribute}`);
      }
    }
  }
  for (const fail of ex.failed) {
    if (!roles.has(fail.attribute)) {
      roles.set(fail.attribute, `blocked by ${fail.blocking} (${fail.blocking_outcome})`);
    }
  }
  for (const [name, outcome] of Object.entries(ex.outcomes)) {
    const row = el("tr");
    row.append(el("td", undefined, name), el("td", undefined, outcome), el("td", undefined, roles.get(name) ?? ""));
    table.append(row);
  }
  root.append(table);
}
