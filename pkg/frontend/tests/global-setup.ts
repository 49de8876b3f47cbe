/** Boots the real backend service once for the whole test run. Tests reach it
 * through `inject("apiBase")`, so nothing here is mocked: every request in the
 * suite crosses a real HTTP boundary. */

import { spawn, type ChildProcess } from "node:child_process";
import net from "node:net";
import type { GlobalSetupContext } from "vitest/node";

declare module "vitest" {
  export interface ProvidedContext {
    apiBase: string;
  }
}

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = net.createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const { port } = probe.address() as net.AddressInfo;
      probe.close(() => resolve(port));
    });
  });
}

async function waitUntilReady(base: string, child: ChildProcess, log: string[]): Promise<void> {
  const deadline = Date.now() + 30_000;
  while (Date.now() < deadline) {
    if (child.exitCode !== null) {
      throw new Error(`service exited before becoming ready:\n${log.join("")}`);
    }
    try {
      const response = await fetch(`${base}/v1/counts?maxp=1`);
      if (response.ok) return;
    } catch {
      // not listening yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error(`service did not become ready in time:\n${log.join("")}`);
}

export default async function setup({ provide }: GlobalSetupContext): Promise<() => Promise<void>> {
  const port = await freePort();
  const base = `http://127.0.0.1:${port}`;
  const log: string[] = [];
  const child = spawn(
    "python3",
    ["-m", "uvicorn", "boolhood.service:app", "--host", "127.0.0.1", "--port", String(port), "--log-level", "warning"],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  child.stdout!.on("data", (chunk) => log.push(String(chunk)));
  child.stderr!.on("data", (chunk) => log.push(String(chunk)));

  await waitUntilReady(base, child, log);
  provide("apiBase", base);

  return () =>
    new Promise<void>((resolve) => {
      if (child.exitCode !== null) {
        resolve();
        return;
      }
      const hardStop = setTimeout(() => {
        child.kill("SIGKILL");
        resolve();
      }, 3_000);
      hardStop.unref();
      child.once("exit", () => {
        clearTimeout(hardStop);
        resolve();
      });
      child.kill("SIGTERM");
    });
}
