// Spawns the Python engine once for the whole test run and hands its
// base URL to the tests; golden tests talk to the real service.

import { spawn, type ChildProcess } from 'node:child_process';
import type { TestProject } from 'vitest/node';

let engine: ChildProcess | undefined;

export default async function setup(project: TestProject): Promise<() => void> {
  const port = 18300 + (process.pid % 1500);
  const base = `http://127.0.0.1:${port}`;
  engine = spawn('python3', ['-m', 'yygame.cli', 'serve', '--port', String(port)], {
    stdio: ['ignore', 'pipe', 'pipe'],
  });

  const deadline = Date.now() + 45_000;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${base}/api/health`);
      if (response.ok) {
        project.provide('apiBase', base);
        return () => {
          engine?.kill();
        };
      }
    } catch (err) {
      lastError = err;
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  engine.kill();
  throw new Error(`engine did not come up on ${base}: ${String(lastError)}`);
}

declare module 'vitest' {
  export interface ProvidedContext {
    apiBase: string;
  }
}
