/**
 * Browser entry point: assembles the two lab views and connects to the
 * engine through a WebSocket that bridges to `mirrorlab serve --port N`
 * (any ws<->tcp relay works; the default URL is ws://localhost:8787).
 *
 * Layout: a ruler strip with its mirrored twin (flipped glyphs) and the
 * equation log underneath, then the mirror bench with sliders and the
 * ray diagram.
 */

import { BenchView, DEFAULT_CONTROLS, type BenchControls, type BenchRenderModel } from "./benchView.js";
import { NumberLineView, type NumberLineRenderModel } from "./numberLineView.js";
import { EngineClient, type EngineState } from "./protocol.js";
import { webSocketTransport } from "./transports.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const RULER_LEN = 12;
const TICK_PX = 34;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

function rulerX(tick: number): number {
  return 20 + (tick + RULER_LEN) * TICK_PX;
}

function drawRuler(svg: SVGElement, model: NumberLineRenderModel): void {
  svg.replaceChildren();
  const width = rulerX(RULER_LEN) + 20;
  svg.setAttribute("viewBox", `0 0 ${width} 120`);
  // mirror bar at 0
  svg.appendChild(
    svgEl("line", {
      x1: String(rulerX(0)), y1: "10", x2: String(rulerX(0)), y2: "110",
      stroke: "#111", "stroke-width": "4",
    })
  );
  for (const t of model.ticks) {
    for (const [tick, mirrored] of [[t, false], [-t, true]] as Array<[number, boolean]>) {
      if (mirrored && t === 0) continue;
      const x = rulerX(tick);
      svg.appendChild(
        svgEl("line", { x1: String(x), y1: "55", x2: String(x), y2: "70", stroke: "#444", "stroke-width": "1" })
      );
      const label = svgEl("text", {
        x: String(x), y: "88", "text-anchor": "middle", "font-size": "12",
        ...(mirrored ? { transform: `scale(-1,1) translate(${-2 * x},0)` } : {}),
        fill: mirrored ? "#777" : "#111",
      });
      label.textContent = String(t); // mirrored glyphs via horizontal flip
      svg.appendChild(label);
    }
  }
  for (const arrow of model.arrows) {
    const y = arrow.mirrored ? 30 : 40;
    svg.appendChild(
      svgEl("line", {
        x1: String(rulerX(arrow.from)), y1: String(y),
        x2: String(rulerX(arrow.to)), y2: String(y),
        stroke: arrow.color === "blue" ? "#1a73e8" : "#d93025", "stroke-width": "2",
        "marker-end": "url(#arrowhead)",
      })
    );
  }
  const tokenAt = model.dragPosition ?? model.token;
  if (tokenAt !== null) {
    svg.appendChild(
      svgEl("circle", { cx: String(rulerX(tokenAt)), cy: "62", r: "9", fill: "#1a73e8", id: "token" })
    );
  }
  if (model.image !== null) {
    svg.appendChild(
      svgEl("circle", { cx: String(rulerX(model.image)), cy: "62", r: "9", fill: "#9aa0a6" })
    );
  }
}

function drawBench(svg: SVGElement, model: BenchRenderModel): void {
  svg.replaceChildren();
  svg.setAttribute("viewBox", "-4 -2.5 9 5");
  const dot = (p: [number, number] | null, color: string) => {
    if (p === null) return;
    svg.appendChild(svgEl("circle", { cx: String(p[0]), cy: String(-p[1]), r: "0.07", fill: color }));
  };
  svg.appendChild(
    svgEl("line", { x1: "-4", y1: "0", x2: "5", y2: "0", stroke: "#bbb", "stroke-width": "0.02", "stroke-dasharray": "0.12,0.08" })
  );
  for (const ray of model.rays) {
    svg.appendChild(
      svgEl("line", {
        x1: String(ray.from[0]), y1: String(-ray.from[1]),
        x2: String(ray.to[0]), y2: String(-ray.to[1]),
        stroke: "#7b1fa2", "stroke-width": "0.03",
        ...(ray.dashed ? { "stroke-dasharray": "0.08,0.08" } : {}),
      })
    );
  }
  dot(model.vertex, "#111");
  dot(model.center, "#111");
  dot(model.focus, "#d81b60");
  dot(model.objectPoint, "#1a73e8");
  dot(model.imageMarker, "#e8710a");
}

async function start(): Promise<void> {
  const url = new URLSearchParams(location.search).get("engine") ?? "ws://localhost:8787";
  const socket = new WebSocket(url);
  await new Promise<void>((resolve, reject) => {
    socket.addEventListener("open", () => resolve());
    socket.addEventListener("error", () => reject(new Error(`cannot reach engine at ${url}`)));
  });
  const client = new EngineClient(webSocketTransport(socket));

  const root = document.body;
  root.replaceChildren();
  const banner = el("div", { id: "banner" }, "");
  root.appendChild(banner);

  // --- number line section ------------------------------------------------
  root.appendChild(el("h2", {}, "ruler and mirror"));
  const rulerSvg = svgEl("svg", { width: "860", height: "120", id: "ruler" });
  root.appendChild(rulerSvg as unknown as Node);
  const logList = el("ol", { id: "equation-log" });
  root.appendChild(logList);

  const lineView = new NumberLineView(client, RULER_LEN);
  let engineState: EngineState = (await lineView.placeToken(4)) as EngineState;

  const refreshRuler = () => {
    drawRuler(rulerSvg, lineView.render(engineState, socket.readyState === WebSocket.OPEN));
    logList.replaceChildren(...lineView.log.map((line) => el("li", {}, line)));
    banner.textContent = lineView.render(engineState, true).boundaryHint
      ? "the token cannot cross the mirror: snapped to 0"
      : "";
  };

  let dragging = false;
  rulerSvg.addEventListener("pointerdown", (ev: PointerEvent) => {
    dragging = true;
    lineView.beginDrag(engineState);
    lineView.dragTo((ev.offsetX - rulerX(0)) / TICK_PX);
    refreshRuler();
  });
  rulerSvg.addEventListener("pointermove", (ev: PointerEvent) => {
    if (!dragging) return;
    lineView.dragTo((ev.offsetX - rulerX(0)) / TICK_PX);
    refreshRuler();
  });
  rulerSvg.addEventListener("pointerup", () => {
    if (!dragging) return;
    dragging = false;
    void lineView.endDrag(engineState).then((state) => {
      engineState = state;
      refreshRuler();
    });
  });

  // --- mirror bench section -------------------------------------------------
  root.appendChild(el("h2", {}, "mirror bench"));
  const controlsBox = el("div", { id: "bench-controls" });
  root.appendChild(controlsBox);
  const benchSvg = svgEl("svg", { width: "860", height: "480", id: "bench" });
  root.appendChild(benchSvg as unknown as Node);
  const badge = el("div", { id: "bench-badge" });
  const readout = el("div", { id: "bench-readout" });
  root.append(badge, readout);

  const bench = new BenchView(client);
  const controls: BenchControls = { ...DEFAULT_CONTROLS };

  const slider = (
    label: string, min: number, max: number, step: number, value: number,
    apply: (v: number) => void
  ) => {
    const wrap = el("label", {}, `${label} `);
    const input = el("input", {
      type: "range", min: String(min), max: String(max), step: String(step), value: String(value),
    });
    input.addEventListener("change", () => {
      apply(Number(input.value));
      void refreshBench();
    });
    wrap.appendChild(input);
    controlsBox.appendChild(wrap);
  };

  const orientation = el("select", { id: "orientation" });
  for (const kind of ["concave", "convex", "plane"]) {
    orientation.appendChild(el("option", { value: kind }, kind));
  }
  orientation.addEventListener("change", () => {
    controls.orientation = orientation.value as BenchControls["orientation"];
    void refreshBench();
  });
  controlsBox.appendChild(orientation);
  slider("R", 0.5, 100, 0.5, controls.radius, (v) => (controls.radius = v));
  slider("object distance", 0.1, 6, 0.1, controls.objectAxial, (v) => (controls.objectAxial = v));
  slider("object height", -1, 1, 0.05, controls.objectHeight, (v) => (controls.objectHeight = v));

  const refreshBench = async () => {
    const state = await bench.apply(controls);
    const model = bench.render(state);
    drawBench(benchSvg, model);
    badge.textContent = model.parallelRays ? "image at infinity (parallel rays)" : model.badge;
    readout.textContent = model.imageReadout;
  };
  await refreshBench();
}

if (typeof document !== "undefined") {
  void start();
}
