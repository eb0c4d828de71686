/**
 * Interactive board. Click an edge to cycle blank -> 0 -> 1 -> 2 ->
 * blank; vertex and root violations highlight immediately from local
 * checking; a fully labeled board is sent to the server for the
 * authoritative verdict; the hint button asks the engine for one more
 * leaf label. The server being unreachable degrades to offline play
 * with local checking only.
 */

import { ApiClient } from './api.js';
import { Board, type PuzzleDescriptor } from './board.js';
import { layoutScene } from './layout.js';
import type { Label } from './rules.js';

const SVG_NS = 'http://www.w3.org/2000/svg';
const SCALE = 60;

const params = new URLSearchParams(window.location.search);
const api = new ApiClient(params.get('api') ?? '');

let board: Board | null = null;

const el = {
  svgBox: document.getElementById('board')!,
  status: document.getElementById('status')!,
  offline: document.getElementById('offline')!,
  toast: document.getElementById('toast')!,
  arity: document.getElementById('arity') as HTMLSelectElement,
  kind: document.getElementById('kind') as HTMLSelectElement,
  seed: document.getElementById('seed') as HTMLInputElement,
  newPuzzle: document.getElementById('new-puzzle') as HTMLButtonElement,
  hint: document.getElementById('hint') as HTMLButtonElement,
  clear: document.getElementById('clear') as HTMLButtonElement,
};

function toast(message: string): void {
  el.toast.textContent = message;
  el.toast.classList.add('show');
  setTimeout(() => el.toast.classList.remove('show'), 2600);
}

function setOffline(offline: boolean): void {
  el.offline.classList.toggle('show', offline);
}

function point(p: { x: number; y: number }): string {
  return `${p.x * SCALE},${p.y * SCALE}`;
}

function render(): void {
  if (!board) return;
  const scene = layoutScene(board.graph);
  const violations = board.violations;
  const badVertices = new Set(violations.vertices);
  const rootBad = violations.rootMismatch;

  const svg = document.createElementNS(SVG_NS, 'svg');
  const pad = SCALE;
  svg.setAttribute(
    'viewBox',
    `${-pad} ${(-scene.height / 2) * SCALE} ${scene.width * SCALE + pad} ${scene.height * SCALE}`,
  );

  for (const edge of scene.edges) {
    const group = document.createElementNS(SVG_NS, 'g');
    group.classList.add('edge');
    const label = board.label(edge.id);
    const isRoot = edge.id.endsWith(':root') || board.graph.arity === 1;
    if (rootBad && isRoot) group.classList.add('bad');

    const line = document.createElementNS(SVG_NS, 'polyline');
    line.setAttribute('points', edge.points.map(point).join(' '));
    line.classList.add('wire');
    if (label !== null) line.classList.add(`label-${label}`);
    group.appendChild(line);

    const hit = document.createElementNS(SVG_NS, 'polyline');
    hit.setAttribute('points', edge.points.map(point).join(' '));
    hit.classList.add('hit');
    hit.addEventListener('click', () => {
      board!.cycle(edge.id);
      render();
      void checkCompletion();
    });
    group.appendChild(hit);

    const text = document.createElementNS(SVG_NS, 'text');
    text.setAttribute('x', String(edge.labelAt.x * SCALE));
    text.setAttribute('y', String(edge.labelAt.y * SCALE - 6));
    text.textContent = label === null ? '·' : String(label);
    text.classList.add('edge-label');
    group.appendChild(text);

    svg.appendChild(group);
  }

  for (const vertex of scene.vertices) {
    const dot = document.createElementNS(SVG_NS, 'circle');
    dot.setAttribute('cx', String(vertex.at.x * SCALE));
    dot.setAttribute('cy', String(vertex.at.y * SCALE));
    dot.setAttribute('r', '7');
    dot.classList.add('vertex');
    if (badVertices.has(vertex.id)) dot.classList.add('bad');
    svg.appendChild(dot);
  }

  el.svgBox.replaceChildren(svg);
  renderStatus();
}

function renderStatus(): void {
  if (!board) return;
  const v = board.violations;
  if (board.solved) {
    el.status.textContent = 'Solved! Both roots agree and every vertex sees 0, 1, 2.';
    el.status.className = 'good';
  } else if (v.vertices.length > 0 || v.rootMismatch) {
    const bits = [];
    if (v.vertices.length > 0) bits.push(`${v.vertices.length} clashing vertex(es)`);
    if (v.rootMismatch) bits.push('roots differ');
    el.status.textContent = bits.join(', ');
    el.status.className = 'bad';
  } else {
    el.status.textContent = `${v.unlabeled.length} edges still blank`;
    el.status.className = '';
  }
}

async function checkCompletion(): Promise<void> {
  if (!board || !board.complete) return;
  try {
    const verdict = await api.verify(board.descriptor.game, board.labelPayload());
    setOffline(false);
    board.solved = verdict.valid;
    renderStatus();
  } catch {
    setOffline(true); // local judgement stays on screen
  }
}

async function requestHint(): Promise<void> {
  if (!board || board.solved) return;
  try {
    const leaves = board.leafLabels();
    if (!leaves.includes(null)) {
      toast('All leaves are set; clear something to get a hint.');
      return;
    }
    const hint = await api.hint(board.descriptor.game, leaves);
    setOffline(false);
    if (!hint.completable) {
      if (window.confirm('No completion from here. Clear the board?')) {
        board.clear();
        render();
      }
      return;
    }
    board.set(`leaf:${hint.leaf}`, hint.label as Label);
    render();
    void checkCompletion();
  } catch {
    toast('Hint unavailable (network error).');
  }
}

async function loadPuzzle(): Promise<void> {
  const arity = Number(el.arity.value);
  const seed = Number(el.seed.value) || 0;
  const kind = el.kind.value;
  const prime = kind === 'any' ? undefined : kind === 'prime';
  try {
    const descriptor: PuzzleDescriptor = await api.puzzle(arity, prime, seed);
    setOffline(false);
    board = new Board(descriptor);
    const url = new URL(window.location.href);
    url.searchParams.set('arity', String(arity));
    url.searchParams.set('seed', String(seed));
    url.searchParams.set('kind', kind);
    history.replaceState(null, '', url);
    render();
  } catch (err) {
    setOffline(true);
    el.status.textContent = `Could not fetch a puzzle: ${String(err)}`;
    el.status.className = 'bad';
  }
}

function init(): void {
  if (params.has('arity')) el.arity.value = params.get('arity')!;
  if (params.has('seed')) el.seed.value = params.get('seed')!;
  if (params.has('kind')) el.kind.value = params.get('kind')!;
  el.newPuzzle.addEventListener('click', () => void loadPuzzle());
  el.hint.addEventListener('click', () => void requestHint());
  el.clear.addEventListener('click', () => {
    board?.clear();
    render();
  });
  void loadPuzzle();
}

init();
