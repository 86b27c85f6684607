// The run-comparison table: one row per run, in submission order.
// Scores come straight from result documents; the UI only formats them.

import type { RunEntry } from "./state";

export interface CompareRow {
  jobId: string;
  label: string;
  state: string;
  score: string;
  sn: string;
  ppv: string;
  acc: string;
}

function fmt(value: number | undefined | null, digits = 3): string {
  return value === undefined || value === null ? "" : value.toFixed(digits);
}

export function runLabel(run: RunEntry): string {
  const base = `${run.kind} δ=${run.params.delta} seed=${run.params.seed}`;
  return run.kind === "dcs" ? base : `${base} k=${run.params.k}`;
}

export function buildCompareRows(history: readonly RunEntry[]): CompareRow[] {
  return history.map((run) => {
    const top = run.result?.communities[0];
    const scoreLabel =
      run.result === undefined
        ? ""
        : run.kind === "dcs"
          ? `density ${fmt(top?.score, 4)}`
          : `top Q-term ${fmt(top?.score, 4)}`;
    return {
      jobId: run.jobId,
      label: runLabel(run),
      state: run.error ? `failed: ${run.error}` : run.state,
      score: scoreLabel,
      sn: fmt(run.result?.evaluation?.sn),
      ppv: fmt(run.result?.evaluation?.ppv),
      acc: fmt(run.result?.evaluation?.acc),
    };
  });
}

/** Metric columns only make sense once some run was scored against ground truth. */
export function hasEvaluations(rows: readonly CompareRow[]): boolean {
  return rows.some((row) => row.acc !== "");
}
