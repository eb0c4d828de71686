// Golden boards against the live engine: local violation detection must
// match /api/verify verdicts exactly on fully labeled boards, and hints
// must keep the board completable all the way to a verified solution.

import { beforeAll, describe, expect, inject, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { Board, type PuzzleDescriptor } from '../src/board.js';
import { findViolations, type Label } from '../src/rules.js';
import { arity, parseTree, type GameGraph, type Tree } from '../src/trees.js';
import { buildGraph } from '../src/trees.js';

const api = new ApiClient(inject('apiBase'));

// test-local oracle: the label product (equal labels clash, distinct
// labels give the third, 3 is the absorbing element)
type Ext = 0 | 1 | 2 | 3;
function product(a: Ext, b: Ext): Ext {
  if (a === 3 || b === 3 || a === b) return 3;
  return (3 - a - b) as Ext;
}

/** Propagate leaf labels to every edge the way the engine does. */
function deriveLabels(graph: GameGraph, leaves: Label[]): Map<string, Ext> {
  const labels = new Map<string, Ext>();
  leaves.forEach((v, i) => labels.set(`leaf:${i + 1}`, v));
  const fold = (tree: Tree, side: 's' | 't') => {
    let leafIndex = 0;
    let internalIndex = 0;
    const walk = (st: Tree, isRoot: boolean): Ext => {
      if (st.kind === 'leaf') {
        leafIndex++;
        return labels.get(`leaf:${leafIndex}`)!;
      }
      const a = walk(st.left, false);
      const b = walk(st.right, false);
      const value = product(a, b);
      const edge = isRoot ? `${side}:root` : `${side}:internal:${++internalIndex}`;
      labels.set(edge, value);
      return value;
    };
    walk(tree, true);
  };
  if (graph.arity > 1) {
    fold(graph.s, 's');
    fold(graph.t, 't');
  }
  return labels;
}

// small deterministic generator so the golden set is stable
function lcg(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state * 1664525 + 1013904223) >>> 0;
    return state / 2 ** 32;
  };
}

interface GoldenBoard {
  descriptor: PuzzleDescriptor;
  labels: Record<string, Label>;
}

const games: PuzzleDescriptor[] = [];
const boards: GoldenBoard[] = [];

beforeAll(async () => {
  const seen = new Set<string>();
  for (const n of [2, 3, 4]) {
    for (let seed = 0; seed < 6; seed++) {
      const descriptor = await api.puzzle(n, undefined, seed);
      if (!seen.has(descriptor.id)) {
        seen.add(descriptor.id);
        games.push(descriptor);
      }
    }
  }

  // three full boards per game: derived from random leaves (valid iff
  // the leaves happen to solve), a corrupted copy, and pure noise
  for (const descriptor of games) {
    const graph = buildGraph(descriptor.game.s, descriptor.game.t);
    const rand = lcg(0xc0ffee ^ graph.arity ^ descriptor.id.length);
    const randomLeaves = () =>
      Array.from({ length: graph.arity }, () => Math.floor(rand() * 3) as Label);

    const derived = deriveLabels(graph, randomLeaves());
    const asRecord = (m: Map<string, Ext>): Record<string, Label> => {
      const out: Record<string, Label> = {};
      for (const e of graph.edgeIds) {
        const v = m.get(e)!;
        out[e] = (v === 3 ? Math.floor(rand() * 3) : v) as Label; // no "inf" clicks in the UI
      }
      return out;
    };
    boards.push({ descriptor, labels: asRecord(derived) });

    const corrupted = { ...asRecord(deriveLabels(graph, randomLeaves())) };
    const victim = graph.edgeIds[Math.floor(rand() * graph.edgeIds.length)]!;
    corrupted[victim] = ((corrupted[victim]! + 1) % 3) as Label;
    boards.push({ descriptor, labels: corrupted });

    const noise: Record<string, Label> = {};
    for (const e of graph.edgeIds) noise[e] = Math.floor(rand() * 3) as Label;
    boards.push({ descriptor, labels: noise });
  }
}, 60_000);

describe('golden boards', () => {
  it('keeps the golden set within the agreed size', () => {
    expect(boards.length).toBeGreaterThanOrEqual(15);
    expect(boards.length).toBeLessThanOrEqual(50);
  });

  it('local verdicts match server verify on every fully labeled board', async () => {
    for (const { descriptor, labels } of boards) {
      const graph = buildGraph(descriptor.game.s, descriptor.game.t);
      const map = new Map<string, Label | null>(Object.entries(labels));
      const local = findViolations(graph, map);
      const server = await api.verify(descriptor.game, labels);

      const localValid = local.vertices.length === 0 && !local.rootMismatch;
      expect(server.valid, `${descriptor.game.s} / ${descriptor.game.t}`).toBe(localValid);

      const serverVertices = new Set(
        server.violations.filter((v) => v.kind === 'vertex').map((v) => v.where),
      );
      expect(new Set(local.vertices)).toEqual(serverVertices);

      const serverRoot = server.violations.some((v) => v.kind === 'roots');
      expect(local.rootMismatch).toBe(serverRoot);

      expect(server.violations.some((v) => v.kind === 'unlabeled')).toBe(false);
    }
  });
});

describe('hint chains', () => {
  it('hints stay completable to the end and finish in a verified solution', async () => {
    for (const descriptor of games) {
      const board = new Board(descriptor);
      for (let step = 0; step < descriptor.arity; step++) {
        const hint = await api.hint(descriptor.game, board.leafLabels());
        expect(hint.completable, `${descriptor.id} step ${step}`).toBe(true);
        expect(board.label(`leaf:${hint.leaf}`)).toBeNull();
        board.set(`leaf:${hint.leaf}`, hint.label!);
      }
      const leaves = board.leafLabels() as Label[];
      expect(leaves.includes(null as never)).toBe(false);

      // the completed leaves propagate to a board the server accepts
      const graph = board.graph;
      const full = deriveLabels(graph, leaves);
      const payload: Record<string, Label> = {};
      for (const e of graph.edgeIds) payload[e] = full.get(e)! as Label;
      const verdict = await api.verify(descriptor.game, payload);
      expect(verdict.valid, descriptor.id).toBe(true);

      // and the engine agrees the game is solvable at all
      const solved = await api.solve(descriptor.game);
      expect(solved.solution).not.toBeNull();
    }
  });

  it('reports an impossible partial honestly', async () => {
    const game = { s: '((..).)', t: '(.(..))' };
    const hint = await api.hint(game, [0, 0, null]);
    expect(hint.completable).toBe(false);
  });

  it('starts an empty comb-pair board at the first leaf', async () => {
    const game = { s: '((..).)', t: '(.(..))' };
    const hint = await api.hint(game, [null, null, null]);
    expect(hint.completable).toBe(true);
    expect(hint.leaf).toBe(1);
  });
});

describe('api misc against the live engine', () => {
  it('serves deterministic puzzles per seed', async () => {
    const a = await api.puzzle(4, true, 3);
    const b = await api.puzzle(4, true, 3);
    expect(a).toEqual(b);
    expect(a.prime).toBe(true);
  });

  it('round-trips the documented solve example', async () => {
    const got = await api.solve({ s: '((..).)', t: '(.(..))' }, 0);
    expect(got.solution).toEqual({ leaves: [1, 0, 1], value: 0 });
  });

  it('parses trees the same way the engine does', async () => {
    const descriptor = await api.puzzle(4, false, 1);
    const s = parseTree(descriptor.game.s);
    expect(arity(s)).toBe(4);
    expect(descriptor.prime).toBe(false);
  });
});
