/**
 * Number-line view: a ruler running rightward from the mirror at 0, its
 * mirrored twin running leftward with flipped glyphs, a draggable token and
 * the equation log.  The view renders exactly what the engine says: the
 * image position always comes from the snapshot, never from local math.
 *
 * Drags commit on release (one arithmetic step per gesture).  Dragging past
 * the mirror snaps the token to 0 and raises a boundary hint.
 */

import type { ArithmeticStep, Direction, EngineClient, EngineState } from "./protocol.js";

export interface RulerArrow {
  from: number;
  to: number;
  direction: Direction;
  /** rightward motion is drawn blue, leftward red (sum/subtraction colors) */
  color: "blue" | "red";
  mirrored: boolean;
}

export interface NumberLineRenderModel {
  ticks: number[];
  mirroredTicks: number[];
  token: number | null;
  image: number | null;
  dragPosition: number | null;
  arrows: RulerArrow[];
  logLines: string[];
  boundaryHint: boolean;
  readOnly: boolean;
}

/** Compact the engine's mirrored equation the way the log displays it:
 *  operator spacing dropped, "=" spacing kept: "(−4) + (−5) = −9" ->
 *  "(−4)+(−5) = −9". */
export function compactMirrored(equation: string): string {
  return equation.replace(" + ", "+").replace(" − ", "−");
}

export function formatLogEntry(step: ArithmeticStep): string {
  return `${step.front_equation} / ${compactMirrored(step.mirrored_equation)} / ${step.classification}`;
}

function arrowColor(direction: Direction): "blue" | "red" {
  return direction === "right" ? "blue" : "red";
}

export function stepArrows(step: ArithmeticStep): RulerArrow[] {
  if (step.front_direction === "none") return [];
  return [
    {
      from: step.start,
      to: step.end,
      direction: step.front_direction,
      color: arrowColor(step.front_direction),
      mirrored: false,
    },
    {
      from: -step.start,
      to: -step.end,
      direction: step.front_direction === "right" ? "left" : "right",
      color: arrowColor(step.front_direction),
      mirrored: true,
    },
  ];
}

export class NumberLineView {
  private dragPosition: number | null = null;
  private boundaryHint = false;
  readonly log: string[] = [];

  constructor(
    private client: EngineClient,
    private rulerLength: number = 12
  ) {}

  /** Place the token to start an activity (delegates to the engine). */
  async placeToken(z: number): Promise<EngineState> {
    const ev = await this.client.send("place_token", { z });
    return ev.payload.state;
  }

  beginDrag(state: EngineState): void {
    if (state.token !== null) this.dragPosition = state.token;
  }

  /** Track a pointer at ruler coordinate x; past-the-mirror positions snap
   *  to 0 and flag the boundary hint. */
  dragTo(x: number): void {
    if (this.dragPosition === null) return;
    if (x < 0) {
      this.dragPosition = 0;
      this.boundaryHint = true;
    } else {
      this.dragPosition = Math.min(Math.round(x), this.rulerLength);
      this.boundaryHint = false;
    }
  }

  /** Commit the gesture as one displacement step and log its equations. */
  async endDrag(state: EngineState): Promise<EngineState> {
    const target = this.dragPosition;
    this.dragPosition = null;
    if (target === null || state.token === null || target === state.token) {
      return state;
    }
    const ev = await this.client.send("displace", { delta: target - state.token });
    if (ev.name === "state" && ev.payload.state.last_step !== null) {
      this.log.push(formatLogEntry(ev.payload.state.last_step));
      this.boundaryHint = false;
    }
    return ev.payload.state;
  }

  render(state: EngineState | null, connected: boolean): NumberLineRenderModel {
    const ticks = Array.from({ length: this.rulerLength + 1 }, (_, i) => i);
    return {
      ticks,
      mirroredTicks: ticks.map((t) => -t),
      token: state?.token ?? null,
      image: state?.image ?? null,
      dragPosition: this.dragPosition,
      arrows: state?.last_step ? stepArrows(state.last_step) : [],
      logLines: [...this.log],
      boundaryHint: this.boundaryHint,
      readOnly: !connected,
    };
  }
}
