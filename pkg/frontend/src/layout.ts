/**
 * Geometry for the board: tree s hangs below the leaf line, tree t is
 * drawn above it upside down, spliced at the leaf points. Every vertex
 * sits at the midpoint of its leaf span, pushed away from the leaf
 * line by the span width; pendant roots extend one step further.
 */

import type { GameGraph, Side, Tree } from './trees.js';

export interface Point {
  x: number;
  y: number;
}

export interface SceneEdge {
  id: string;
  points: Point[];
  labelAt: Point;
}

export interface SceneVertex {
  id: string;
  at: Point;
}

export interface Scene {
  vertices: SceneVertex[];
  edges: SceneEdge[];
  width: number;
  height: number;
}

const STEP = 1;

function vertexPositions(tree: Tree, side: Side, n: number): Map<string, Point> {
  const sign = side === 's' ? 1 : -1; // s grows downward (+y), t upward
  const out = new Map<string, Point>();
  let nodeIndex = 0;

  // post-order walk matching the edge-id numbering; returns [lo, hi]
  const walk = (st: Tree, lo: number): number => {
    if (st.kind === 'leaf') return lo;
    const midLeft = walk(st.left, lo);
    const hi = walk(st.right, midLeft + 1);
    nodeIndex++;
    out.set(`${side}:node:${nodeIndex}`, {
      x: (lo + hi) / 2,
      y: sign * (hi - lo) * STEP,
    });
    return hi;
  };

  walk(tree, 1);
  return out;
}

export function layoutScene(graph: GameGraph): Scene {
  const n = graph.arity;
  const positions = new Map<string, Point>([
    ...vertexPositions(graph.s, 's', n),
    ...vertexPositions(graph.t, 't', n),
  ]);
  const leafPoint = (i: number): Point => ({ x: i, y: 0 });
  const stub = (side: Side): Point => ({
    x: positions.get(`${side}:node:${n - 1}`)?.x ?? 1,
    y: (side === 's' ? 1 : -1) * n * STEP,
  });

  const mid = (a: Point, b: Point): Point => ({
    x: (a.x + b.x) / 2,
    y: (a.y + b.y) / 2,
  });

  const edges: SceneEdge[] = [];
  for (const id of graph.edgeIds) {
    const ends = graph.endpoints.get(id)!.map((v) => positions.get(v)!);
    if (id.startsWith('leaf:')) {
      const at = leafPoint(Number(id.slice(5)));
      if (ends.length === 2) {
        edges.push({ id, points: [ends[0]!, at, ends[1]!], labelAt: at });
      } else {
        // bare edge of the one-leaf game: stub to stub through the leaf
        edges.push({ id, points: [stub('s'), at, stub('t')], labelAt: at });
      }
    } else if (id.endsWith(':root')) {
      const side = id[0] as Side;
      const from = ends[0] ?? leafPoint(1);
      const to = stub(side);
      edges.push({ id, points: [from, to], labelAt: mid(from, to) });
    } else {
      edges.push({ id, points: ends, labelAt: mid(ends[0]!, ends[1]!) });
    }
  }

  const vertices: SceneVertex[] = graph.vertices.map((v) => ({
    id: v.id,
    at: positions.get(v.id)!,
  }));
  return { vertices, edges, width: n + 1, height: 2 * n * STEP + 2 };
}
