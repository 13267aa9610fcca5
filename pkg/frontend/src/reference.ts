// Startup handshake: the testbed displays gains and sizes but owns no
// transfer math, so it carries a frozen table of (speed, distance, gain,
// diameter) reference rows generated from the core. Before a session
// starts, the live server must reproduce every row within tolerance,
// otherwise the client refuses to run against it.

import { REFERENCE_TABLE, type ReferenceRow } from "./reference-table.js";

export const HANDSHAKE_TOLERANCE = 1e-6;

export const TECHNIQUES = Object.keys(REFERENCE_TABLE);

export function referenceRows(technique: string): ReferenceRow[] {
  const rows = REFERENCE_TABLE[technique];
  if (!rows) throw new Error(`no reference rows for technique ${technique}`);
  return rows;
}

export function validatePairs(technique: string): [number, number][] {
  return referenceRows(technique).map((r) => [r[0], r[1]]);
}

export interface HandshakeResult {
  ok: boolean;
  worstGainError: number;
  worstDiameterError: number;
  rows: number;
}

/** Compare a server validate reply against the frozen rows. */
export function checkHandshake(
  technique: string,
  gains: number[],
  diameters: number[],
  tolerance: number = HANDSHAKE_TOLERANCE,
): HandshakeResult {
  const rows = referenceRows(technique);
  let worstGain = 0;
  let worstDia = 0;
  if (gains.length !== rows.length || diameters.length !== rows.length) {
    return { ok: false, worstGainError: NaN, worstDiameterError: NaN, rows: rows.length };
  }
  rows.forEach((row, i) => {
    worstGain = Math.max(worstGain, Math.abs(gains[i] - row[2]));
    worstDia = Math.max(worstDia, Math.abs(diameters[i] - row[3]));
  });
  return {
    ok: worstGain <= tolerance && worstDia <= tolerance,
    worstGainError: worstGain,
    worstDiameterError: worstDia,
    rows: rows.length,
  };
}
