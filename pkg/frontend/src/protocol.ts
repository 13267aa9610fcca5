// Wire protocol client for the curvepoint session server.
//
// One JSON object per POST, one JSON object back. The server owns every
// transfer formula; this client only ships messages and tracks whether
// the connection is alive so the UI can show a reconnect overlay.

export interface SurfacePointMsg {
  azimuth_rad: number;
  height_m: number;
}

export interface LayoutMsg {
  start: SurfacePointMsg;
  target: SurfacePointMsg;
  width_m: number;
}

export interface StartSessionReply {
  session: number;
  layout: LayoutMsg;
}

export interface StepReply {
  cursor: SurfacePointMsg;
  diameter_m: number;
  gain: number;
}

export interface ClickReply {
  success: boolean;
  movement_time_s: number;
  next_layout: LayoutMsg;
}

export interface ValidateReply {
  gains: number[];
  diameters: number[];
}

export interface ControllerDelta {
  yaw_rad: number;
  pitch_rad: number;
  pos_delta_m: [number, number, number];
}

export type ConnectionState = "connecting" | "connected" | "disconnected";

export type PostFn = (url: string, body: unknown) => Promise<unknown>;

async function fetchJson(url: string, body: unknown): Promise<unknown> {
  const resp = await fetch(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  const payload = await resp.json();
  if (!resp.ok) {
    throw new ProtocolError(String((payload as { error?: string }).error ?? resp.status));
  }
  return payload;
}

export class ProtocolError extends Error {}

/** Tracks liveness across requests; network failures flip the state to
 * "disconnected" (protocol-level errors do not, the server is clearly
 * still there). */
export class Client {
  state: ConnectionState = "connecting";
  onStateChange: (state: ConnectionState) => void = () => {};

  constructor(
    readonly url: string,
    private readonly post: PostFn = fetchJson,
  ) {}

  private setState(next: ConnectionState) {
    if (next !== this.state) {
      this.state = next;
      this.onStateChange(next);
    }
  }

  async send<T>(message: Record<string, unknown>): Promise<T> {
    try {
      const reply = await this.post(this.url, message);
      this.setState("connected");
      return reply as T;
    } catch (err) {
      if (!(err instanceof ProtocolError)) {
        this.setState("disconnected");
      }
      throw err;
    }
  }

  startSession(technique: string, distanceMultiple: number, lateralOffset: number, preset = "study2") {
    return this.send<StartSessionReply>({
      op: "start_session",
      technique,
      distance_multiple: distanceMultiple,
      lateral_offset_m: lateralOffset,
      preset,
    });
  }

  step(session: number, dtS: number, delta: ControllerDelta) {
    return this.send<StepReply>({
      op: "step",
      session,
      dt_s: dtS,
      controller_delta: delta,
    });
  }

  click(session: number) {
    return this.send<ClickReply>({ op: "click", session });
  }

  setParams(session: number, params: Record<string, unknown>) {
    return this.send<{ ok: boolean }>({ op: "set_params", session, ...params });
  }

  validate(technique: string, pairs: [number, number][]) {
    return this.send<ValidateReply>({ op: "validate", technique, pairs });
  }
}

/** Exponential backoff schedule for reconnect attempts, in milliseconds. */
export function backoffDelayMs(attempt: number, baseMs = 500, maxMs = 8000): number {
  return Math.min(maxMs, baseMs * 2 ** Math.max(0, attempt));
}
