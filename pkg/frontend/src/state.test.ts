import { describe, expect, it } from "vitest";

import {
  appendRun,
  canRun,
  initialState,
  recordDataset,
  restoreShell,
  selectCommunity,
  selectJob,
  selectedRun,
  snapshot,
  updateRun,
  validateParams,
  type RunEntry,
} from "./state";

function runEntry(jobId: string, delta = 2): RunEntry {
  return {
    jobId,
    kind: "communities",
    params: { delta, k: 4, seed: 0, min_similarity: 0 },
    state: "queued",
  };
}

describe("run gating", () => {
  it("starts disabled and with the case-study delta default", () => {
    const state = initialState();
    expect(state.params.delta).toBe(4);
    expect(canRun(state)).toBe(false);
  });

  it("requires both networks", () => {
    let state = recordDataset(initialState(), "physical", "id-1");
    expect(canRun(state)).toBe(false);
    state = recordDataset(state, "conceptual", "id-2");
    expect(canRun(state)).toBe(true);
  });

  it("similarity file is optional", () => {
    let state = recordDataset(initialState(), "physical", "p");
    state = recordDataset(state, "conceptual", "c");
    expect(state.datasets.similarity).toBeUndefined();
    expect(canRun(state)).toBe(true);
  });

  it("rejects delta zero", () => {
    let state = recordDataset(initialState(), "physical", "p");
    state = recordDataset(state, "conceptual", "c");
    state = { ...state, params: { ...state.params, delta: 0 } };
    expect(validateParams(state.params)).toContain("delta must be an integer >= 1");
    expect(canRun(state)).toBe(false);
  });

  it("rejects k zero and out-of-range similarity cutoff", () => {
    expect(validateParams({ delta: 1, k: 0, seed: 0, min_similarity: 0 })).not.toHaveLength(0);
    expect(validateParams({ delta: 1, k: 1, seed: 0, min_similarity: 1.5 })).not.toHaveLength(0);
    expect(validateParams({ delta: 1, k: 1, seed: 0, min_similarity: 0.5 })).toHaveLength(0);
  });
});

describe("history", () => {
  it("a re-run with changed delta appends, never overwrites", () => {
    let state = appendRun(initialState(), runEntry("job-1", 1));
    state = appendRun(state, runEntry("job-2", 2));
    expect(state.history).toHaveLength(2);
    expect(state.history[0]!.params.delta).toBe(1);
    expect(state.history[1]!.params.delta).toBe(2);
    expect(state.selectedJob).toBe("job-2");
  });

  it("updateRun patches only the matching entry", () => {
    let state = appendRun(initialState(), runEntry("job-1"));
    state = appendRun(state, runEntry("job-2"));
    state = updateRun(state, "job-1", { state: "done" });
    expect(state.history[0]!.state).toBe("done");
    expect(state.history[1]!.state).toBe("queued");
  });

  it("selecting a job resets the community selection", () => {
    let state = appendRun(initialState(), runEntry("job-1"));
    state = selectCommunity(state, 2);
    expect(state.selectedCommunity).toBe(2);
    state = selectJob(state, "job-1");
    expect(state.selectedCommunity).toBeNull();
    expect(selectedRun(state)?.jobId).toBe("job-1");
  });
});

describe("persistence", () => {
  it("snapshot keeps ids and params only; restore rebuilds the shell", () => {
    let state = recordDataset(initialState(), "physical", "p-id");
    state = recordDataset(state, "conceptual", "c-id");
    state = { ...state, params: { ...state.params, delta: 3 } };
    state = appendRun(state, runEntry("job-9", 3));
    const persisted = snapshot(state);
    expect(persisted).toEqual({
      datasets: { physical: "p-id", conceptual: "c-id" },
      algorithm: "communities",
      params: { delta: 3, k: 25, seed: 0, min_similarity: 0 },
      jobIds: ["job-9"],
    });
    const restored = restoreShell(persisted);
    expect(restored.datasets.physical).toBe("p-id");
    expect(restored.params.delta).toBe(3);
    expect(restored.history).toHaveLength(0); // runs are re-fetched from the service
  });

  it("snapshot survives a JSON round trip", () => {
    const state = appendRun(initialState(), runEntry("job-1"));
    const roundTripped = JSON.parse(JSON.stringify(snapshot(state)));
    expect(roundTripped).toEqual(snapshot(state));
  });
});
