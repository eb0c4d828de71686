import { describe, expect, it } from 'vitest';

import { findViolations, type EdgeLabel } from '../src/rules.js';
import { buildGraph } from '../src/trees.js';

function labels(graph: ReturnType<typeof buildGraph>, entries: Record<string, EdgeLabel>) {
  const out = new Map<string, EdgeLabel>(graph.edgeIds.map((e) => [e, null]));
  for (const [k, v] of Object.entries(entries)) out.set(k, v);
  return out;
}

describe('local rule checking', () => {
  const yy = buildGraph('(..)', '(..)');

  it('flags a vertex as soon as two incident labels collide', () => {
    const got = findViolations(yy, labels(yy, { 'leaf:1': 1, 'leaf:2': 1 }));
    expect(got.vertices).toEqual(['s:node:1', 't:node:1']);
  });

  it('accepts a full consistent labeling', () => {
    const got = findViolations(
      yy,
      labels(yy, { 'leaf:1': 1, 'leaf:2': 2, 's:root': 0, 't:root': 0 }),
    );
    expect(got.vertices).toEqual([]);
    expect(got.rootMismatch).toBe(false);
    expect(got.unlabeled).toEqual([]);
  });

  it('flags differing roots once both are set', () => {
    const partial = labels(yy, { 's:root': 0, 't:root': 1 });
    expect(findViolations(yy, partial).rootMismatch).toBe(true);
    const oneSide = labels(yy, { 's:root': 0 });
    expect(findViolations(yy, oneSide).rootMismatch).toBe(false);
  });

  it('lists unlabeled edges', () => {
    const got = findViolations(yy, labels(yy, { 'leaf:1': 0 }));
    expect(got.unlabeled).toEqual(['leaf:2', 's:root', 't:root']);
  });

  it('does not flag a lone label', () => {
    const got = findViolations(yy, labels(yy, { 'leaf:1': 2 }));
    expect(got.vertices).toEqual([]);
  });
});
