/**
 * Concrete line transports.
 *
 * - spawnEngineTransport runs the Python engine as a child process and talks
 *   over stdio; this is what the tests (and a desktop launcher) use.
 * - webSocketTransport adapts a WebSocket that bridges to the engine's TCP
 *   endpoint (`mirrorlab serve --port N` behind any ws<->tcp relay); the
 *   browser build uses it.
 */

import { spawn } from "node:child_process";
import type { LineTransport } from "./protocol.js";

export interface EngineProcessOptions {
  python?: string;
  args?: string[];
}

export function spawnEngineTransport(options: EngineProcessOptions = {}): LineTransport {
  const python = options.python ?? process.env.MIRRORLAB_PYTHON ?? "python3";
  const args = options.args ?? ["-m", "mirrorlab", "serve"];
  const child = spawn(python, args, { stdio: ["pipe", "pipe", "inherit"] });
  let handler: ((line: string) => void) | null = null;
  let buffer = "";
  child.stdout.setEncoding("utf-8");
  child.stdout.on("data", (chunk: string) => {
    buffer += chunk;
    let cut;
    while ((cut = buffer.indexOf("\n")) >= 0) {
      const line = buffer.slice(0, cut);
      buffer = buffer.slice(cut + 1);
      if (handler !== null) handler(line);
    }
  });
  return {
    send(line: string): void {
      child.stdin.write(line + "\n");
    },
    onLine(h: (line: string) => void): void {
      handler = h;
    },
    close(): void {
      child.stdin.end();
      child.kill();
    },
  };
}

export function webSocketTransport(socket: WebSocket): LineTransport {
  let handler: ((line: string) => void) | null = null;
  socket.addEventListener("message", (ev: MessageEvent) => {
    for (const line of String(ev.data).split("\n")) {
      if (line.trim() !== "" && handler !== null) handler(line);
    }
  });
  return {
    send(line: string): void {
      socket.send(line + "\n");
    },
    onLine(h: (line: string) => void): void {
      handler = h;
    },
    close(): void {
      socket.close();
    },
  };
}
