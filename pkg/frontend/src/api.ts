/** Typed client for the engine's HTTP/JSON service. */

import type { PuzzleDescriptor } from './board.js';
import type { Label } from './rules.js';

export interface Violation {
  kind: 'vertex' | 'roots' | 'unlabeled';
  where: string | null;
  labels: (number | string | null)[];
}

export interface VerifyVerdict {
  valid: boolean;
  violations: Violation[];
}

export interface HintResponse {
  completable: boolean;
  leaf: number | null;
  label: Label | null;
}

export interface SolveResponse {
  solution: { leaves: Label[]; value: Label } | null;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(readonly base: string = '') {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      throw new ApiError(response.status, body.error ?? response.statusText);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(payload),
    });
  }

  health(): Promise<{ service: string; version: string }> {
    return this.request('/api/health');
  }

  puzzle(arity: number, prime?: boolean, seed = 0): Promise<PuzzleDescriptor> {
    const params = new URLSearchParams({ arity: String(arity), seed: String(seed) });
    if (prime !== undefined) params.set('prime', String(prime));
    return this.request(`/api/puzzle?${params}`);
  }

  verify(
    game: { s: string; t: string },
    labels: Record<string, Label | null>,
  ): Promise<VerifyVerdict> {
    return this.post('/api/verify', { game, labels });
  }

  hint(game: { s: string; t: string }, leaves: (Label | null)[]): Promise<HintResponse> {
    return this.post('/api/hint', { game, leaves });
  }

  solve(game: { s: string; t: string }, target?: Label): Promise<SolveResponse> {
    return this.post('/api/solve', { game, target: target ?? null });
  }
}
