// Running per-session trial statistics shown in the HUD.

export interface TrialResult {
  movementTimeS: number;
  success: boolean;
}

export class SessionStats {
  private results: TrialResult[] = [];

  record(result: TrialResult): void {
    this.results.push(result);
  }

  reset(): void {
    this.results = [];
  }

  get trials(): number {
    return this.results.length;
  }

  get accuracy(): number {
    if (this.results.length === 0) return NaN;
    return this.results.filter((r) => r.success).length / this.results.length;
  }

  get meanMovementTimeS(): number {
    if (this.results.length === 0) return NaN;
    return this.results.reduce((a, r) => a + r.movementTimeS, 0) / this.results.length;
  }
}
