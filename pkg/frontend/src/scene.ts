// Pure scene construction: the last server replies fully determine what
// gets drawn. Rendering splits into buildScene (pure, testable: state ->
// primitive list) and paint (executes primitives on a canvas context), so
// replaying a reply log reproduces identical frames.

import { ViewTransform } from "./mapping.js";
import type { LayoutMsg, SurfacePointMsg } from "./protocol.js";

export interface ViewState {
  layout: LayoutMsg | null;
  cursor: SurfacePointMsg | null;
  cursorDiameterM: number;
  startSelected: boolean; // start circle already clicked this trial
}

export type Primitive =
  | { kind: "rect"; x: number; y: number; w: number; h: number; stroke: string }
  | { kind: "disc"; x: number; y: number; r: number; fill: string }
  | { kind: "ring"; x: number; y: number; r: number; stroke: string; width: number };

export function buildScene(state: ViewState, view: ViewTransform): Primitive[] {
  const prims: Primitive[] = [];
  const rect = view.displayRect();
  prims.push({ kind: "rect", ...rect, stroke: "#666" });

  if (state.layout) {
    if (!state.startSelected) {
      const s = view.toCanvas(state.layout.start);
      prims.push({ kind: "disc", x: s.x, y: s.y, r: view.metresToPx(0.1), fill: "#e8e8e8" });
    } else {
      const t = view.toCanvas(state.layout.target);
      prims.push({
        kind: "disc",
        x: t.x,
        y: t.y,
        r: view.metresToPx(state.layout.width_m / 2),
        fill: "#e05252",
      });
    }
  }
  if (state.cursor) {
    const c = view.toCanvas(state.cursor);
    prims.push({
      kind: "ring",
      x: c.x,
      y: c.y,
      r: Math.max(2, view.metresToPx(state.cursorDiameterM / 2)),
      stroke: "#2b6cb0",
      width: 2,
    });
    prims.push({ kind: "disc", x: c.x, y: c.y, r: 1.5, fill: "#2b6cb0" });
  }
  return prims;
}

export function paint(prims: Primitive[], ctx: CanvasRenderingContext2D): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  for (const p of prims) {
    if (p.kind === "rect") {
      ctx.strokeStyle = p.stroke;
      ctx.lineWidth = 1;
      ctx.strokeRect(p.x, p.y, p.w, p.h);
    } else if (p.kind === "disc") {
      ctx.fillStyle = p.fill;
      ctx.beginPath();
      ctx.arc(p.x, p.y, p.r, 0, 2 * Math.PI);
      ctx.fill();
    } else {
      ctx.strokeStyle = p.stroke;
      ctx.lineWidth = p.width;
      ctx.beginPath();
      ctx.arc(p.x, p.y, p.r, 0, 2 * Math.PI);
      ctx.stroke();
    }
  }
}
