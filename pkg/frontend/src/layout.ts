/** Layer-banded Hasse layout.
 *
 * Nodes sit in horizontal bands given by the server's layers; within a band
 * they are ordered by the median x of their predecessors to keep edges
 * short. Pure geometry, no DOM.
 */

export interface LayoutNode {
  id: string;
  x: number;
  y: number;
  layer: number;
}

export interface LayoutOptions {
  width: number;
  bandHeight: number;
  paddingX: number;
  paddingY: number;
}

const DEFAULTS: LayoutOptions = {
  width: 640,
  bandHeight: 80,
  paddingX: 40,
  paddingY: 40,
};

export function layoutLayers(
  layers: string[][],
  edges: [string, string][],
  options: Partial<LayoutOptions> = {},
): Map<string, LayoutNode> {
  const opts = { ...DEFAULTS, ...options };
  const positions = new Map<string, LayoutNode>();
  const parents = new Map<string, string[]>();
  for (const [winner, loser] of edges) {
    const list = parents.get(loser) ?? [];
    list.push(winner);
    parents.set(loser, list);
  }

  layers.forEach((layer, depth) => {
    let ordered = [...layer].sort();
    if (depth > 0) {
      const key = (id: string): number => {
        const ps = (parents.get(id) ?? [])
          .map((p) => positions.get(p)?.x)
          .filter((x): x is number => x !== undefined)
          .sort((a, b) => a - b);
        if (ps.length === 0) {
          return opts.width / 2;
        }
        return ps[Math.floor(ps.length / 2)];
      };
      ordered = ordered
        .map((id, i) => ({ id, i, k: key(id) }))
        .sort((a, b) => a.k - b.k || a.i - b.i)
        .map((e) => e.id);
    }
    const span = opts.width - 2 * opts.paddingX;
    const step = ordered.length > 1 ? span / (ordered.length - 1) : 0;
    ordered.forEach((id, i) => {
      const x = ordered.length === 1 ? opts.width / 2 : opts.paddingX + i * step;
      positions.set(id, {
        id,
        x,
        y: opts.paddingY + depth * opts.bandHeight,
        layer: depth,
      });
    });
  });
  return positions;
}

/** Height the containing SVG needs for a given layer count. */
export function layoutHeight(layerCount: number, options: Partial<LayoutOptions> = {}): number {
  const opts = { ...DEFAULTS, ...options };
  return 2 * opts.paddingY + Math.max(0, layerCount - 1) * opts.bandHeight;
}
