/**
 * Tree grammar and game-graph structure, mirroring the engine's wire
 * conventions exactly: spliced leaf edges are "leaf:1".."leaf:n"
 * (1-based, shared by both sides), internal edges "s:internal:k" /
 * "t:internal:k" and vertices "s:node:k" / "t:node:k" with k a 1-based
 * post-order index, pendant roots "s:root" / "t:root". Arity 1 is the
 * bare edge "leaf:1".
 */

export type Tree =
  | { kind: 'leaf' }
  | { kind: 'node'; left: Tree; right: Tree };

export const LEAF: Tree = { kind: 'leaf' };

export class TreeSyntaxError extends Error {
  constructor(message: string, readonly offset: number) {
    super(`${message} at offset ${offset}`);
  }
}

export function parseTree(text: string): Tree {
  let pos = 0;

  const skipWs = () => {
    while (pos < text.length && /\s/.test(text[pos]!)) pos++;
  };

  const term = (): Tree => {
    skipWs();
    if (pos >= text.length) throw new TreeSyntaxError('unexpected end of input', pos);
    const ch = text[pos];
    if (ch === '.') {
      pos++;
      return LEAF;
    }
    if (ch === '(') {
      pos++;
      const left = term();
      const right = term();
      skipWs();
      if (pos >= text.length || text[pos] !== ')') {
        throw new TreeSyntaxError("expected ')'", pos);
      }
      pos++;
      return { kind: 'node', left, right };
    }
    throw new TreeSyntaxError(`expected '.' or '(', got '${ch}'`, pos);
  };

  const tree = term();
  skipWs();
  if (pos !== text.length) throw new TreeSyntaxError('trailing input', pos);
  return tree;
}

export function arity(t: Tree): number {
  return t.kind === 'leaf' ? 1 : arity(t.left) + arity(t.right);
}

export function treeToString(t: Tree): string {
  return t.kind === 'leaf' ? '.' : `(${treeToString(t.left)}${treeToString(t.right)})`;
}

export type Side = 's' | 't';

export interface Vertex {
  id: string;
  /** left child edge, right child edge, parent edge */
  edges: [string, string, string];
}

export interface SideStructure {
  vertices: Vertex[];
  rootEdge: string;
}

export function buildSide(tree: Tree, side: Side): SideStructure {
  const vertices: Vertex[] = [];
  let leafIndex = 0;
  let internalIndex = 0;
  let nodeIndex = 0;

  const walk = (st: Tree, isRoot: boolean): string => {
    if (st.kind === 'leaf') {
      leafIndex++;
      return `leaf:${leafIndex}`;
    }
    const left = walk(st.left, false);
    const right = walk(st.right, false);
    let parent: string;
    if (isRoot) {
      parent = `${side}:root`;
    } else {
      internalIndex++;
      parent = `${side}:internal:${internalIndex}`;
    }
    nodeIndex++;
    vertices.push({ id: `${side}:node:${nodeIndex}`, edges: [left, right, parent] });
    return parent;
  };

  const rootEdge = walk(tree, true);
  return { vertices, rootEdge };
}

export interface GameGraph {
  s: Tree;
  t: Tree;
  arity: number;
  edgeIds: string[];
  vertices: Vertex[];
  sRoot: string;
  tRoot: string;
  /** vertex ids incident to each edge (0..2 of them) */
  endpoints: Map<string, string[]>;
}

export function buildGraph(sText: string, tText: string): GameGraph {
  const s = parseTree(sText);
  const t = parseTree(tText);
  const n = arity(s);
  if (arity(t) !== n) {
    throw new Error(`arity mismatch: ${n} vs ${arity(t)}`);
  }
  const sSide = buildSide(s, 's');
  const tSide = buildSide(t, 't');
  const edgeIds: string[] = [];
  for (let i = 1; i <= n; i++) edgeIds.push(`leaf:${i}`);
  if (n > 1) {
    for (let k = 1; k <= n - 2; k++) edgeIds.push(`s:internal:${k}`);
    for (let k = 1; k <= n - 2; k++) edgeIds.push(`t:internal:${k}`);
    edgeIds.push('s:root', 't:root');
  }
  const vertices = [...sSide.vertices, ...tSide.vertices];
  const endpoints = new Map<string, string[]>(edgeIds.map((e) => [e, []]));
  for (const v of vertices) {
    for (const e of v.edges) endpoints.get(e)!.push(v.id);
  }
  return {
    s,
    t,
    arity: n,
    edgeIds,
    vertices,
    sRoot: sSide.rootEdge,
    tRoot: tSide.rootEdge,
    endpoints,
  };
}
