import { spawn, type ChildProcess } from "node:child_process";
import { fileURLToPath } from "node:url";
import type { TestProject } from "vitest/node";

declare module "vitest" {
  export interface ProvidedContext {
    apiUrl: string;
  }
}

const SCRIPT = fileURLToPath(new URL("../serve_fixture.py", import.meta.url));

let child: ChildProcess | undefined;

function waitForReady(proc: ChildProcess): Promise<number> {
  return new Promise((resolve, reject) => {
    const timer = setTimeout(
      () => reject(new Error("fixture backend did not report READY in 120s")),
      120_000,
    );
    let buffer = "";
    proc.stdout?.on("data", (chunk: Buffer) => {
      buffer += chunk.toString();
      const match = buffer.match(/READY (\d+)/);
      if (match) {
        clearTimeout(timer);
        resolve(Number(match[1]));
      }
    });
    let stderr = "";
    proc.stderr?.on("data", (chunk: Buffer) => {
      stderr += chunk.toString();
    });
    proc.on("exit", (code) => {
      clearTimeout(timer);
      reject(new Error(`fixture backend exited with ${code}\n${stderr}`));
    });
  });
}

export default async function setup(project: TestProject): Promise<() => void> {
  child = spawn("python3", [SCRIPT], { stdio: ["ignore", "pipe", "pipe"] });
  const port = await waitForReady(child);
  const url = `http://127.0.0.1:${port}`;
  // the server prints READY just before binding; give the socket a moment
  for (let i = 0; i < 100; i += 1) {
    try {
      const resp = await fetch(`${url}/cities`);
      if (resp.ok) break;
    } catch {
      await new Promise((r) => setTimeout(r, 100));
    }
  }
  project.provide("apiUrl", url);
  return () => {
    child?.kill("SIGTERM");
  };
}
