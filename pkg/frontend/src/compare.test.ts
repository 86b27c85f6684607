import { describe, expect, it } from "vitest";

import { buildCompareRows, hasEvaluations, runLabel } from "./compare";
import { toyResult } from "./fixtures";
import type { RunEntry } from "./state";

function doneRun(jobId: string, delta: number, withEval = false): RunEntry {
  return {
    jobId,
    kind: "communities",
    params: { delta, k: 4, seed: 0, min_similarity: 0 },
    state: "done",
    result: toyResult({
      evaluation: withEval ? { sn: 0.9, ppv: 0.8, acc: 0.848528 } : null,
    }),
  };
}

describe("buildCompareRows", () => {
  it("one row per run, in submission order", () => {
    const rows = buildCompareRows([doneRun("j1", 1), doneRun("j2", 2)]);
    expect(rows).toHaveLength(2);
    expect(rows[0]!.label).toContain("δ=1");
    expect(rows[1]!.label).toContain("δ=2");
  });

  it("without ground truth only score columns are filled", () => {
    const rows = buildCompareRows([doneRun("j1", 2)]);
    expect(rows[0]!.score).toContain("top Q-term");
    expect(rows[0]!.acc).toBe("");
    expect(hasEvaluations(rows)).toBe(false);
  });

  it("evaluation metrics appear when the service scored the run", () => {
    const rows = buildCompareRows([doneRun("j1", 2, true)]);
    expect(rows[0]!.sn).toBe("0.900");
    expect(rows[0]!.ppv).toBe("0.800");
    expect(rows[0]!.acc).toBe("0.849");
    expect(hasEvaluations(rows)).toBe(true);
  });

  it("dcs runs are labeled with density", () => {
    const run: RunEntry = {
      jobId: "j9",
      kind: "dcs",
      params: { delta: 2, k: 25, seed: 0, min_similarity: 0 },
      state: "done",
      result: toyResult({ kind: "dcs" }),
    };
    const rows = buildCompareRows([run]);
    expect(rows[0]!.score).toContain("density");
    expect(runLabel(run)).not.toContain("k=");
  });

  it("pending and failed runs keep their state visible", () => {
    const pending: RunEntry = {
      jobId: "j1",
      kind: "communities",
      params: { delta: 1, k: 2, seed: 0, min_similarity: 0 },
      state: "running",
    };
    const failed: RunEntry = { ...pending, jobId: "j2", state: "failed", error: "boom" };
    const rows = buildCompareRows([pending, failed]);
    expect(rows[0]!.state).toBe("running");
    expect(rows[0]!.score).toBe("");
    expect(rows[1]!.state).toContain("boom");
  });
});
