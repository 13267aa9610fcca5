// Interactive testbed: mouse motion drives the core's cursor techniques
// over the session protocol. The browser holds no transfer math; it
// verifies at startup (per technique) that the server reproduces the
// frozen reference table, then just ships deltas and draws replies.

import { createHud } from "./hud.js";
import { DISPLAY, pointerToDelta, ViewTransform } from "./mapping.js";
import { backoffDelayMs, Client, ProtocolError, type LayoutMsg } from "./protocol.js";
import { checkHandshake, TECHNIQUES, validatePairs } from "./reference.js";
import { buildScene, paint, type ViewState } from "./scene.js";
import { SessionStats } from "./stats.js";

const params = new URLSearchParams(window.location.search);
const SERVER_URL = params.get("server") ?? "http://127.0.0.1:8741";

const canvas = document.getElementById("display") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const hud = createHud(document.getElementById("panel")!);
const client = new Client(SERVER_URL);
const stats = new SessionStats();

const state: ViewState = {
  layout: null,
  cursor: null,
  cursorDiameterM: 0.025,
  startSelected: false,
};

let view = new ViewTransform(canvas.width, canvas.height, DISPLAY);
let session = -1;
let pendingDx = 0;
let pendingDy = 0;
let lastFrameMs = 0;
let requestInFlight = false;
let running = false;

function resize() {
  canvas.width = canvas.clientWidth;
  canvas.height = canvas.clientHeight;
  view = new ViewTransform(canvas.width, canvas.height, DISPLAY);
}
window.addEventListener("resize", resize);

function cursorOverStart(): boolean {
  if (!state.layout || !state.cursor) return false;
  const dx = (state.cursor.azimuth_rad - state.layout.start.azimuth_rad) * DISPLAY.radiusM;
  const dy = state.cursor.height_m - state.layout.start.height_m;
  return Math.hypot(dx, dy) <= 0.1 + state.cursorDiameterM / 2;
}

function adoptLayout(layout: LayoutMsg) {
  state.layout = layout;
  state.startSelected = false;
}

async function verifyServer(): Promise<boolean> {
  hud.setStatus("verifying server against the reference table…");
  for (const technique of TECHNIQUES) {
    const reply = await client.validate(technique, validatePairs(technique));
    const result = checkHandshake(technique, reply.gains, reply.diameters);
    if (!result.ok) {
      hud.setStatus(
        `REFUSING to start: server deviates from the ${technique} reference ` +
          `(worst gain error ${result.worstGainError.toExponential(2)})`,
        true,
      );
      return false;
    }
  }
  hud.setStatus(`handshake OK (${TECHNIQUES.length} techniques x 100 pairs within 1e-6)`);
  return true;
}

async function startSession() {
  const technique = hud.controls.technique.value;
  const distance = Number(hud.controls.distance.value);
  const offset = Number(hud.controls.offset.value);
  const reply = await client.startSession(technique, distance, offset);
  session = reply.session;
  adoptLayout(reply.layout);
  state.cursor = reply.layout.start;
  state.cursorDiameterM = 0.025;
  stats.reset();
  hud.updateStats(stats);
}

async function frame(nowMs: number) {
  if (!running) return;
  const dtS = Math.min(0.1, (nowMs - lastFrameMs) / 1000 || 1 / 60);
  lastFrameMs = nowMs;

  if (!requestInFlight && session >= 0 && client.state !== "disconnected") {
    const sensitivity = Number(hud.controls.sensitivity.value);
    const delta = pointerToDelta(pendingDx, pendingDy, sensitivity);
    pendingDx = 0;
    pendingDy = 0;
    requestInFlight = true;
    try {
      const reply = await client.step(session, dtS, delta);
      state.cursor = reply.cursor;
      state.cursorDiameterM = reply.diameter_m;
      const speed = Math.hypot(...delta.pos_delta_m) / dtS;
      hud.update({
        gain: reply.gain,
        speedMps: speed,
        diameterM: reply.diameter_m,
        technique: hud.controls.technique.value,
        distanceMultiple: Number(hud.controls.distance.value),
      });
      if (!state.startSelected && cursorOverStart()) {
        state.startSelected = true; // start acquired; the target appears
      }
    } catch (err) {
      if (!(err instanceof ProtocolError)) scheduleReconnect();
    } finally {
      requestInFlight = false;
    }
  }

  paint(buildScene(state, view), ctx);
  requestAnimationFrame(frame);
}

async function handleClick() {
  if (session < 0 || client.state === "disconnected") return;
  if (!state.startSelected) {
    // selecting the start circle is local and untimed
    if (cursorOverStart()) state.startSelected = true;
    return;
  }
  try {
    const reply = await client.click(session);
    stats.record({ movementTimeS: reply.movement_time_s, success: reply.success });
    hud.updateStats(stats);
    adoptLayout(reply.next_layout);
  } catch (err) {
    if (!(err instanceof ProtocolError)) scheduleReconnect();
  }
}

let reconnecting = false;
async function scheduleReconnect() {
  if (reconnecting) return;
  reconnecting = true;
  hud.overlay(`lost connection to ${SERVER_URL} — retrying…`);
  for (let attempt = 0; ; attempt++) {
    await new Promise((r) => setTimeout(r, backoffDelayMs(attempt)));
    try {
      await client.validate(TECHNIQUES[0], validatePairs(TECHNIQUES[0]).slice(0, 1));
      break;
    } catch {
      hud.overlay(`lost connection to ${SERVER_URL} — retry ${attempt + 1} failed`);
    }
  }
  hud.overlay(null);
  reconnecting = false;
  await startSession();
}

function wireControls() {
  hud.controls.technique.addEventListener("change", async () => {
    await client.setParams(session, { technique: hud.controls.technique.value });
  });
  hud.controls.distance.addEventListener("change", async () => {
    await client.setParams(session, { distance_multiple: Number(hud.controls.distance.value) });
  });
  hud.controls.offset.addEventListener("change", async () => {
    await client.setParams(session, { lateral_offset_m: Number(hud.controls.offset.value) });
  });

  canvas.addEventListener("click", () => {
    if (document.pointerLockElement !== canvas) {
      canvas.requestPointerLock();
      return;
    }
    void handleClick();
  });
  document.addEventListener("mousemove", (ev) => {
    if (document.pointerLockElement === canvas) {
      pendingDx += ev.movementX;
      pendingDy += ev.movementY;
    }
  });

  client.onStateChange = (s) => {
    if (s === "disconnected") void scheduleReconnect();
  };
}

async function main() {
  resize();
  try {
    if (!(await verifyServer())) return;
    await startSession();
  } catch {
    hud.overlay(`cannot reach ${SERVER_URL} — start the core with: curvepoint serve`);
    void scheduleReconnect();
    return;
  }
  wireControls();
  running = true;
  requestAnimationFrame(frame);
}

void main();
