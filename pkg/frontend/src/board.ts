/**
 * Board state: a puzzle descriptor (never mutated), one chosen label
 * per edge, and the derived violation set. The solved flag is owned by
 * the server's verdict; anything local only ever clears it.
 */

import { findViolations, type EdgeLabel, type Label, type Labels, type LocalViolations } from './rules.js';
import { buildGraph, type GameGraph } from './trees.js';

export interface PuzzleDescriptor {
  game: { s: string; t: string };
  arity: number;
  prime: boolean;
  id: string;
}

const CYCLE: EdgeLabel[] = [null, 0, 1, 2];

export class Board {
  readonly descriptor: PuzzleDescriptor;
  readonly graph: GameGraph;
  private labels: Labels;
  solved = false;

  constructor(descriptor: PuzzleDescriptor) {
    this.descriptor = descriptor;
    this.graph = buildGraph(descriptor.game.s, descriptor.game.t);
    this.labels = new Map(this.graph.edgeIds.map((e) => [e, null]));
  }

  label(edge: string): EdgeLabel {
    const got = this.labels.get(edge);
    if (got === undefined) throw new Error(`unknown edge ${edge}`);
    return got;
  }

  allLabels(): Labels {
    return new Map(this.labels);
  }

  /** blank -> 0 -> 1 -> 2 -> blank */
  cycle(edge: string): void {
    const current = this.label(edge);
    const next = CYCLE[(CYCLE.indexOf(current) + 1) % CYCLE.length]!;
    this.labels.set(edge, next);
    this.solved = false;
  }

  set(edge: string, value: EdgeLabel): void {
    this.label(edge);
    this.labels.set(edge, value);
    this.solved = false;
  }

  clear(): void {
    for (const e of this.graph.edgeIds) this.labels.set(e, null);
    this.solved = false;
  }

  get violations(): LocalViolations {
    return findViolations(this.graph, this.labels);
  }

  get complete(): boolean {
    return this.violations.unlabeled.length === 0;
  }

  /** labels of the spliced leaf edges, in leaf order */
  leafLabels(): EdgeLabel[] {
    const out: EdgeLabel[] = [];
    for (let i = 1; i <= this.graph.arity; i++) {
      out.push(this.label(`leaf:${i}`));
    }
    return out;
  }

  /** payload for the verify endpoint */
  labelPayload(): Record<string, Label | null> {
    const out: Record<string, Label | null> = {};
    for (const [edge, value] of this.labels) out[edge] = value;
    return out;
  }
}
