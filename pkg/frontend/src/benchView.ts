/**
 * Mirror bench view: sliders for the mirror radius/orientation and the
 * object position, a diagram with O, C, F, the principal rays and the image
 * marker, plus the solved-image readout.  Every derived number on screen
 * (image position, magnification, real/virtual) comes from the engine
 * snapshot; the view only decides how to draw the values it was given.
 */

import type { EngineClient, EngineState, MirrorState } from "./protocol.js";

export interface BenchControls {
  orientation: "concave" | "convex" | "plane";
  radius: number;
  objectAxial: number;
  objectHeight: number;
}

export interface RaySegment {
  from: [number, number];
  to: [number, number];
  dashed: boolean;
}

export interface BenchRenderModel {
  vertex: [number, number] | null;
  center: [number, number] | null;
  focus: [number, number] | null;
  objectPoint: [number, number] | null;
  imageMarker: [number, number] | null;
  rays: RaySegment[];
  /** diverging reflections: extensions behind the face are drawn dashed */
  dashedExtensions: boolean;
  /** p_ob = f: no finite crossing, rays leave parallel */
  parallelRays: boolean;
  badge: string;
  imageReadout: string;
}

export const DEFAULT_CONTROLS: BenchControls = {
  orientation: "concave",
  radius: 2.0,
  objectAxial: 3.0,
  objectHeight: 0.5,
};

export class BenchView {
  constructor(private client: EngineClient) {}

  /** Push slider values to the engine and refresh the traced image. */
  async apply(controls: BenchControls): Promise<EngineState> {
    if (controls.orientation === "plane") {
      await this.client.send("set_mirror", { orientation: "plane" });
    } else {
      await this.client.send("set_mirror", {
        orientation: controls.orientation,
        R: controls.radius,
      });
    }
    await this.client.send("set_object", {
      axial: controls.objectAxial,
      height: controls.objectHeight,
    });
    const wantTrace =
      controls.orientation !== "plane" && controls.objectHeight !== 0;
    if (!wantTrace) {
      const ev = await this.client.send("query_image", { mode: "fan" });
      return ev.payload.state;
    }
    const ev = await this.client.send("query_image", { mode: "ideal" });
    return ev.payload.state;
  }

  render(state: EngineState | null): BenchRenderModel {
    const empty: BenchRenderModel = {
      vertex: null,
      center: null,
      focus: null,
      objectPoint: null,
      imageMarker: null,
      rays: [],
      dashedExtensions: false,
      parallelRays: false,
      badge: "no bench",
      imageReadout: "",
    };
    if (state === null || state.mirror === null) return empty;
    const mirror = state.mirror;
    const objectPoint = objectWorldPoint(state);
    const model: BenchRenderModel = {
      ...empty,
      vertex: mirror.vertex,
      center: mirror.center,
      focus: mirror.focus,
      objectPoint,
      badge: "place an object",
    };
    if (state.paraxial === null) return model;

    if (state.paraxial.kind === "at-infinity") {
      model.parallelRays = true;
      model.badge = "image at infinity (parallel rays)";
      model.imageReadout = "p_im = at-infinity";
    } else {
      const p = state.paraxial;
      model.badge = describeImage(p.kind, p.magnification);
      model.imageReadout = `p_im = ${formatNumber(p.p_im as number)} (m = ${formatNumber(
        p.magnification as number
      )})`;
    }
    if (state.trace !== null && state.trace.point !== null) {
      model.imageMarker = state.trace.point;
      model.dashedExtensions = state.trace.kind === "virtual";
      model.rays = constructionRays(mirror, objectPoint, state.trace.point, model.dashedExtensions);
    } else if (state.trace !== null && state.trace.kind === "at-infinity") {
      model.parallelRays = true;
    }
    return model;
  }
}

function objectWorldPoint(state: EngineState): [number, number] | null {
  if (state.object === null || state.mirror === null) return null;
  const [vx, vy] = state.mirror.vertex;
  const [ax, ay] = state.mirror.axis;
  const { axial, height } = state.object;
  // vertex + axial*axis + height*perp(axis): pure presentation placement
  return [vx + axial * ax - height * ay, vy + axial * ay + height * ax];
}

function describeImage(kind: string, magnification: number | null): string {
  if (kind === "virtual") {
    return magnification !== null && Math.abs(magnification) < 1
      ? "virtual, upright, reduced"
      : "virtual, upright";
  }
  return magnification !== null && magnification < 0 ? "real, inverted" : "real";
}

function formatNumber(x: number): string {
  return Math.abs(x) >= 1e4 || (x !== 0 && Math.abs(x) < 1e-3) ? x.toExponential(4) : x.toFixed(4);
}

function constructionRays(
  mirror: MirrorState,
  objectPoint: [number, number] | null,
  image: [number, number],
  virtualImage: boolean
): RaySegment[] {
  if (objectPoint === null) return [];
  const [vx, vy] = mirror.vertex;
  const [ax, ay] = mirror.axis;
  const [ox, oy] = objectPoint;
  // transverse height of the object, for the parallel ray's bend point
  const h = ax * (oy - vy) - ay * (ox - vx);
  const parallelBend: [number, number] = [vx - h * ay, vy + h * ax];
  const rays: RaySegment[] = [
    { from: objectPoint, to: [vx, vy], dashed: false },
    { from: objectPoint, to: parallelBend, dashed: false },
    { from: [vx, vy], to: image, dashed: virtualImage },
    { from: parallelBend, to: image, dashed: virtualImage },
  ];
  return rays;
}
