// HUD + control widgets. All DOM, no math: values displayed here come
// verbatim from server replies.

import { TECHNIQUES } from "./reference.js";
import type { SessionStats } from "./stats.js";

export interface HudElements {
  root: HTMLElement;
  controls: {
    technique: HTMLSelectElement;
    distance: HTMLSelectElement;
    offset: HTMLSelectElement;
    sensitivity: HTMLInputElement;
  };
  setStatus(text: string, bad?: boolean): void;
  update(fields: {
    gain: number;
    speedMps: number;
    diameterM: number;
    technique: string;
    distanceMultiple: number;
  }): void;
  updateStats(stats: SessionStats): void;
  overlay(text: string | null): void;
}

function labelled(label: string, el: HTMLElement): HTMLElement {
  const wrap = document.createElement("label");
  wrap.className = "control";
  const span = document.createElement("span");
  span.textContent = label;
  wrap.append(span, el);
  return wrap;
}

export function createHud(container: HTMLElement): HudElements {
  const root = document.createElement("div");
  root.id = "hud";

  const technique = document.createElement("select");
  for (const t of TECHNIQUES) {
    const opt = document.createElement("option");
    opt.value = t;
    opt.textContent = t;
    if (t === "PADISTSIZE") opt.selected = true;
    technique.append(opt);
  }

  const distance = document.createElement("select");
  for (const [value, label] of [["0.5", "0.5 R (1.64 m)"], ["1.0", "1 R (3.27 m)"], ["1.5", "1.5 R (4.91 m)"]]) {
    const opt = document.createElement("option");
    opt.value = value;
    opt.textContent = label;
    if (value === "1.0") opt.selected = true;
    distance.append(opt);
  }

  const offset = document.createElement("select");
  for (const [value, label] of [["0", "centred"], ["-1.635", "R/2 left"]]) {
    const opt = document.createElement("option");
    opt.value = value;
    opt.textContent = label;
    offset.append(opt);
  }

  const sensitivity = document.createElement("input");
  sensitivity.type = "range";
  sensitivity.min = "0";
  sensitivity.max = "0.006";
  sensitivity.step = "0.0002";
  sensitivity.value = "0.002";

  const controlsRow = document.createElement("div");
  controlsRow.className = "controls";
  controlsRow.append(
    labelled("technique", technique),
    labelled("distance", distance),
    labelled("offset", offset),
    labelled("mouse rad/px", sensitivity),
  );

  const status = document.createElement("div");
  status.className = "status";
  const readout = document.createElement("div");
  readout.className = "readout";
  const statsLine = document.createElement("div");
  statsLine.className = "stats";
  statsLine.textContent = "trials: 0";

  const overlayEl = document.createElement("div");
  overlayEl.className = "overlay hidden";

  root.append(controlsRow, status, readout, statsLine);
  container.append(root, overlayEl);

  return {
    root,
    controls: { technique, distance, offset, sensitivity },
    setStatus(text, bad = false) {
      status.textContent = text;
      status.classList.toggle("bad", bad);
    },
    update(fields) {
      readout.textContent =
        `${fields.technique} @ ${fields.distanceMultiple}R   ` +
        `gain ${fields.gain.toFixed(3)}   ` +
        `hand speed ${fields.speedMps.toFixed(2)} m/s   ` +
        `cursor ${(fields.diameterM * 100).toFixed(1)} cm`;
    },
    updateStats(stats) {
      statsLine.textContent =
        stats.trials === 0
          ? "trials: 0"
          : `trials: ${stats.trials}   accuracy: ${(stats.accuracy * 100).toFixed(0)}%   ` +
            `mean MT: ${(stats.meanMovementTimeS * 1000).toFixed(0)} ms`;
    },
    overlay(text) {
      if (text === null) {
        overlayEl.classList.add("hidden");
      } else {
        overlayEl.textContent = text;
        overlayEl.classList.remove("hidden");
      }
    },
  };
}
