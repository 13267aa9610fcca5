// Coordinate mappings: mouse motion -> controller rotation deltas, and
// unrolled display surface -> canvas pixels.

import type { ControllerDelta, SurfacePointMsg } from "./protocol.js";

export const DEFAULT_SENSITIVITY_RAD_PER_PX = 0.002;

// Synthesized arm length: the core measures controller speed from the
// tracked POSITION, so the mouse proxy fabricates a positional delta of
// magnitude (angular delta) x arm, roughly a hand on a forearm.
export const PROXY_ARM_LENGTH_M = 0.6;

/** Map a mouse movement to a controller rotation delta plus the
 * positional delta the core's speed estimator expects. Screen-right is
 * positive yaw, screen-up is positive pitch. */
export function pointerToDelta(
  dxPx: number,
  dyPx: number,
  sensitivity: number = DEFAULT_SENSITIVITY_RAD_PER_PX,
): ControllerDelta {
  const yaw = dxPx * sensitivity || 0; // normalize -0
  const pitch = -dyPx * sensitivity || 0;
  const angle = Math.hypot(yaw, pitch);
  const posMagnitude = angle * PROXY_ARM_LENGTH_M;
  // direction of hand travel mirrors the rotation (right/up on screen)
  const pos: [number, number, number] =
    angle > 0
      ? [(yaw / angle) * posMagnitude, (pitch / angle) * posMagnitude, 0]
      : [0, 0, 0];
  return { yaw_rad: yaw, pitch_rad: pitch, pos_delta_m: pos };
}

export interface DisplayShape {
  radiusM: number;
  heightM: number;
  halfAngleRad: number;
}

export const DISPLAY: DisplayShape = {
  radiusM: 3.27,
  heightM: 3.0,
  halfAngleRad: Math.PI / 2,
};

/** Affine map from the unrolled surface plane (arc metres x height
 * metres) to canvas pixels, preserving aspect ratio and centring the
 * display rectangle. */
export class ViewTransform {
  readonly scale: number; // px per metre
  readonly offsetX: number;
  readonly offsetY: number;

  constructor(
    readonly canvasW: number,
    readonly canvasH: number,
    readonly shape: DisplayShape = DISPLAY,
    marginPx = 12,
  ) {
    const unrolledW = 2 * shape.halfAngleRad * shape.radiusM;
    this.scale = Math.min(
      (canvasW - 2 * marginPx) / unrolledW,
      (canvasH - 2 * marginPx) / shape.heightM,
    );
    this.offsetX = canvasW / 2;
    this.offsetY = canvasH / 2 + (shape.heightM / 2) * this.scale;
  }

  /** Surface point -> canvas pixel (y grows downward). */
  toCanvas(p: SurfacePointMsg): { x: number; y: number } {
    return {
      x: this.offsetX + p.azimuth_rad * this.shape.radiusM * this.scale,
      y: this.offsetY - p.height_m * this.scale,
    };
  }

  metresToPx(m: number): number {
    return m * this.scale;
  }

  displayRect(): { x: number; y: number; w: number; h: number } {
    const unrolledW = 2 * this.shape.halfAngleRad * this.shape.radiusM;
    return {
      x: this.offsetX - (unrolledW / 2) * this.scale,
      y: this.offsetY - this.shape.heightM * this.scale,
      w: unrolledW * this.scale,
      h: this.shape.heightM * this.scale,
    };
  }
}
