/**
 * Client side of the engine's newline-delimited JSON session protocol (v1).
 *
 * Every command gets exactly one reply event with the same seq; replies
 * carry the full derived state, so this client is stateless between frames.
 * Commands are seq-gated: only one is in flight at a time, the rest queue.
 */

export const PROTOCOL_VERSION = 1;

export type Direction = "left" | "right" | "none";

export interface ArithmeticStep {
  start: number;
  delta: number;
  end: number;
  front_direction: Direction;
  classification: string;
  front_equation: string;
  mirrored_equation: string;
}

export interface MirrorState {
  orientation: "concave" | "convex" | "plane";
  vertex: [number, number];
  axis: [number, number];
  focal_length: number | "at-infinity";
  radius?: number;
  aperture_deg?: number;
  extent?: number;
  center: [number, number] | null;
  focus: [number, number] | null;
}

export interface ParaxialState {
  p_im: number | "at-infinity";
  magnification: number | null;
  kind: "real" | "virtual" | "at-infinity";
}

export interface TraceState {
  mode: string;
  point: [number, number] | null;
  kind: "real" | "virtual" | "at-infinity";
  spread: number;
  rays_used: number;
}

export interface EngineState {
  token: number | null;
  image: number | null;
  last_step: ArithmeticStep | null;
  mirror: MirrorState | null;
  object: { axial: number; height: number } | null;
  paraxial: ParaxialState | null;
  trace: TraceState | null;
}

export interface EngineEvent {
  v: number;
  kind: "event";
  name: "state" | "error";
  seq: number | null;
  payload: { state: EngineState; message?: string };
}

/** Byte-stream-agnostic line transport (child stdio, TCP bridge, WebSocket). */
export interface LineTransport {
  send(line: string): void;
  onLine(handler: (line: string) => void): void;
  close(): void;
}

export class ProtocolError extends Error {}

export function parseEvent(line: string): EngineEvent {
  let msg: unknown;
  try {
    msg = JSON.parse(line);
  } catch {
    throw new ProtocolError(`engine sent a non-JSON line: ${line.slice(0, 80)}`);
  }
  const ev = msg as EngineEvent;
  if (ev.v !== PROTOCOL_VERSION || ev.kind !== "event" || typeof ev.name !== "string") {
    throw new ProtocolError("malformed event message");
  }
  return ev;
}

interface Pending {
  seq: number;
  resolve: (ev: EngineEvent) => void;
  reject: (err: Error) => void;
}

export class EngineClient {
  private lastSeq = 0;
  private pending: Pending | null = null;
  private queue: Array<() => void> = [];

  constructor(private transport: LineTransport) {
    transport.onLine((line) => this.dispatch(line));
  }

  /** Send one command; resolves with its reply event (state or error). */
  send(name: string, payload: Record<string, unknown> = {}): Promise<EngineEvent> {
    return new Promise((resolve, reject) => {
      const fire = () => {
        const seq = ++this.lastSeq;
        this.pending = { seq, resolve, reject };
        this.transport.send(
          JSON.stringify({ v: PROTOCOL_VERSION, kind: "command", name, seq, payload })
        );
      };
      if (this.pending === null) {
        fire();
      } else {
        this.queue.push(fire);
      }
    });
  }

  private dispatch(line: string): void {
    if (line.trim() === "") return;
    const ev = parseEvent(line);
    const pending = this.pending;
    if (pending === null || ev.seq !== pending.seq) {
      // unsolicited or mismatched reply: drop it, the protocol is seq-gated
      return;
    }
    this.pending = null;
    pending.resolve(ev);
    const next = this.queue.shift();
    if (next !== undefined) next();
  }

  close(): void {
    this.transport.close();
  }
}
