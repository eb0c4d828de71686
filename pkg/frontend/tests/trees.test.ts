import { describe, expect, it } from 'vitest';

import { arity, buildGraph, buildSide, parseTree, treeToString, TreeSyntaxError } from '../src/trees.js';

describe('grammar', () => {
  it('round-trips canonical strings', () => {
    for (const text of ['.', '(..)', '((..).)', '(.(..))', '((.(..)).)', '((..)(..))']) {
      expect(treeToString(parseTree(text))).toBe(text);
    }
  });

  it('ignores whitespace between tokens', () => {
    expect(treeToString(parseTree(' ( . ( . . ) ) '))).toBe('(.(..))');
  });

  it('reports the offset of the fault', () => {
    expect(() => parseTree('((.)')).toThrowError(TreeSyntaxError);
    try {
      parseTree('((.)');
    } catch (err) {
      expect((err as TreeSyntaxError).offset).toBe(3);
    }
  });

  it('computes arity', () => {
    expect(arity(parseTree('.'))).toBe(1);
    expect(arity(parseTree('((..)(..))'))).toBe(4);
  });
});

describe('edge ids', () => {
  it('matches the engine conventions for the comb pair', () => {
    const graph = buildGraph('((..).)', '(.(..))');
    expect(graph.edgeIds).toEqual([
      'leaf:1',
      'leaf:2',
      'leaf:3',
      's:internal:1',
      't:internal:1',
      's:root',
      't:root',
    ]);
    expect(graph.vertices.map((v) => v.id)).toEqual([
      's:node:1',
      's:node:2',
      't:node:1',
      't:node:2',
    ]);
    // post-order: the left comb's inner node joins leaves 1 and 2
    expect(graph.vertices[0]!.edges).toEqual(['leaf:1', 'leaf:2', 's:internal:1']);
    // the right comb's inner node joins leaves 2 and 3
    expect(graph.vertices[2]!.edges).toEqual(['leaf:2', 'leaf:3', 't:internal:1']);
  });

  it('treats the one-leaf game as a bare edge', () => {
    const graph = buildGraph('.', '.');
    expect(graph.edgeIds).toEqual(['leaf:1']);
    expect(graph.vertices).toEqual([]);
    expect(graph.sRoot).toBe('leaf:1');
    expect(graph.tRoot).toBe('leaf:1');
  });

  it('gives every vertex three edges and every edge 0..2 endpoints', () => {
    const graph = buildGraph('((.(..)).)', '((..)(..))');
    expect(graph.vertices).toHaveLength(6); // 2 * (n - 1)
    for (const v of graph.vertices) expect(v.edges).toHaveLength(3);
    for (const [edge, ends] of graph.endpoints) {
      if (edge.endsWith(':root')) expect(ends).toHaveLength(1);
      else expect(ends).toHaveLength(2);
    }
  });

  it('rejects an arity mismatch', () => {
    expect(() => buildGraph('(..)', '((..).)')).toThrowError(/mismatch/);
  });

  it('numbers internal edges post-order on a deeper tree', () => {
    const side = buildSide(parseTree('(((..).).)'), 's');
    expect(side.vertices.map((v) => v.id)).toEqual(['s:node:1', 's:node:2', 's:node:3']);
    expect(side.vertices[0]!.edges).toEqual(['leaf:1', 'leaf:2', 's:internal:1']);
    expect(side.vertices[1]!.edges).toEqual(['s:internal:1', 'leaf:3', 's:internal:2']);
    expect(side.vertices[2]!.edges).toEqual(['s:internal:2', 'leaf:4', 's:root']);
  });
});
