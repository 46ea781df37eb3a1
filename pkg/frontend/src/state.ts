/**
 * Lab view state: a pure function of the engine's latest snapshot plus the
 * in-flight drag position.  applyEvent never mutates; replaying the same
 * event log from the initial state reproduces the identical view state.
 */

import type { EngineEvent, EngineState } from "./protocol.js";

export type Connection = "connecting" | "live" | "closed";

export interface LabViewState {
  connection: Connection;
  engine: EngineState | null;
  log: string[];
  lastError: string | null;
  boundaryHint: boolean;
}

export const initialState: LabViewState = {
  connection: "connecting",
  engine: null,
  log: [],
  lastError: null,
  boundaryHint: false,
};

export type LabAction =
  | { type: "event"; event: EngineEvent }
  | { type: "log"; entry: string }
  | { type: "connected" }
  | { type: "disconnected" }
  | { type: "boundary-hint"; active: boolean };

export function applyAction(state: LabViewState, action: LabAction): LabViewState {
  switch (action.type) {
    case "connected":
      return { ...state, connection: "live" };
    case "disconnected":
      return { ...state, connection: "closed" };
    case "boundary-hint":
      return { ...state, boundaryHint: action.active };
    case "log":
      return { ...state, log: [...state.log, action.entry] };
    case "event": {
      const ev = action.event;
      if (ev.name === "error") {
        // state snapshots ride along even on errors; adopt them
        return { ...state, engine: ev.payload.state, lastError: ev.payload.message ?? "error" };
      }
      return { ...state, engine: ev.payload.state, lastError: null };
    }
  }
}

export function replay(actions: LabAction[]): LabViewState {
  return actions.reduce(applyAction, initialState);
}
