/**
 * Live local rule checking. A vertex is flagged as soon as two of its
 * labeled edges share a label (on fully labeled boards this coincides
 * with "the three labels are not 0, 1, 2"); the root rule is flagged
 * once both pendant roots are labeled and differ.
 */

import type { GameGraph } from './trees.js';

export type Label = 0 | 1 | 2;
export type EdgeLabel = Label | null;
export type Labels = Map<string, EdgeLabel>;

export interface LocalViolations {
  vertices: string[];
  rootMismatch: boolean;
  unlabeled: string[];
}

export function findViolations(graph: GameGraph, labels: Labels): LocalViolations {
  const vertices: string[] = [];
  for (const v of graph.vertices) {
    const got = v.edges
      .map((e) => labels.get(e))
      .filter((x): x is Label => x !== null && x !== undefined);
    if (new Set(got).size < got.length) vertices.push(v.id);
  }
  const rs = labels.get(graph.sRoot);
  const rt = labels.get(graph.tRoot);
  const rootMismatch = rs != null && rt != null && rs !== rt;
  const unlabeled = graph.edgeIds.filter((e) => labels.get(e) == null);
  return { vertices, rootMismatch, unlabeled };
}

export function isCleanAndComplete(graph: GameGraph, labels: Labels): boolean {
  const v = findViolations(graph, labels);
  return v.vertices.length === 0 && !v.rootMismatch && v.unlabeled.length === 0;
}
