/**
 * Deterministic layered left-to-right placement for a DFG.
 *
 * Layers are BFS depths from the start activities (all sorted, so the
 * same graph always lays out identically); rows within a layer follow
 * label order.
 */
import type { DfgJson } from "./types.js";

export const NODE_HEIGHT = 34;
export const ROW_GAP = 72;
export const COLUMN_GAP = 80;
export const MARGIN = 24;

export interface NodeBox {
  x: number;
  y: number;
  width: number;
}

export interface Layout {
  boxes: Map<string, NodeBox>;
  width: number;
  height: number;
}

export function nodeWidth(label: string): number {
  return Math.max(96, 26 + 8 * label.length);
}

function layerDepths(dfg: DfgJson): Map<string, number> {
  const adjacency = new Map<string, string[]>();
  const sortedEdges = [...dfg.edges].sort((a, b) =>
    a.source === b.source ? a.target.localeCompare(b.target) : a.source.localeCompare(b.source));
  for (const edge of sortedEdges) {
    const targets = adjacency.get(edge.source) ?? [];
    targets.push(edge.target);
    adjacency.set(edge.source, targets);
  }
  const depth = new Map<string, number>();
  const queue: string[] = [];
  for (const activity of Object.keys(dfg.start_activities).sort()) {
    if (!depth.has(activity)) {
      depth.set(activity, 0);
      queue.push(activity);
    }
  }
  while (queue.length > 0) {
    const current = queue.shift() as string;
    for (const next of adjacency.get(current) ?? []) {
      if (!depth.has(next)) {
        depth.set(next, (depth.get(current) as number) + 1);
        queue.push(next);
      }
    }
  }
  for (const activity of Object.keys(dfg.nodes).sort()) {
    if (!depth.has(activity)) depth.set(activity, 0);
  }
  return depth;
}

export function layeredLayout(dfg: DfgJson): Layout {
  const depth = layerDepths(dfg);
  const layers = new Map<number, string[]>();
  for (const activity of [...depth.keys()].sort()) {
    const layer = depth.get(activity) as number;
    const members = layers.get(layer) ?? [];
    members.push(activity);
    layers.set(layer, members);
  }

  const columnX = new Map<number, number>();
  let x = MARGIN;
  for (const layer of [...layers.keys()].sort((a, b) => a - b)) {
    columnX.set(layer, x);
    const members = layers.get(layer) as string[];
    x += Math.max(...members.map(nodeWidth)) + COLUMN_GAP;
  }
  const width = layers.size > 0 ? x - COLUMN_GAP + MARGIN : 2 * MARGIN;

  const boxes = new Map<string, NodeBox>();
  let maxRows = 0;
  for (const [layer, members] of layers) {
    maxRows = Math.max(maxRows, members.length);
    members.forEach((activity, row) => {
      boxes.set(activity, {
        x: columnX.get(layer) as number,
        y: MARGIN + row * ROW_GAP,
        width: nodeWidth(activity),
      });
    });
  }
  const height = 2 * MARGIN + Math.max(maxRows - 1, 0) * ROW_GAP + NODE_HEIGHT;
  return { boxes, width, height };
}
