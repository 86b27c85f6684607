// Session state and its pure update helpers. Only dataset ids, job ids
// and parameters are persisted; everything else is re-fetched from the
// service, so a refresh loses nothing.

import type {
  Algorithm,
  DatasetRole,
  JobParams,
  JobState,
  ResultDocument,
  ViewMode,
} from "./types";

export interface RunEntry {
  jobId: string;
  kind: Algorithm;
  params: JobParams;
  state: JobState;
  result?: ResultDocument;
  error?: string;
}

export interface SessionState {
  datasets: Partial<Record<DatasetRole, string>>;
  algorithm: Algorithm;
  params: JobParams;
  history: RunEntry[];
  selectedJob: string | null;
  selectedCommunity: number | null;
  viewMode: ViewMode;
}

export function initialState(): SessionState {
  return {
    datasets: {},
    algorithm: "communities",
    // delta defaults to the value that worked best in the large case study
    params: { delta: 4, k: 25, seed: 0, min_similarity: 0 },
    history: [],
    selectedJob: null,
    selectedCommunity: null,
    viewMode: "physical",
  };
}

export function validateParams(params: JobParams): string[] {
  const problems: string[] = [];
  if (!Number.isInteger(params.delta) || params.delta < 1) {
    problems.push("delta must be an integer >= 1");
  }
  if (!Number.isInteger(params.k) || params.k < 1) {
    problems.push("k must be an integer >= 1");
  }
  if (!Number.isInteger(params.seed)) {
    problems.push("seed must be an integer");
  }
  if (params.min_similarity < 0 || params.min_similarity > 1) {
    problems.push("min similarity must lie in [0, 1]");
  }
  return problems;
}

/** The run button is enabled only with both networks present and valid params. */
export function canRun(state: SessionState): boolean {
  return (
    Boolean(state.datasets.physical) &&
    Boolean(state.datasets.conceptual) &&
    validateParams(state.params).length === 0
  );
}

export function recordDataset(
  state: SessionState,
  role: DatasetRole,
  datasetId: string,
): SessionState {
  return { ...state, datasets: { ...state.datasets, [role]: datasetId } };
}

/** History is append-only: a re-run with new parameters never overwrites. */
export function appendRun(state: SessionState, entry: RunEntry): SessionState {
  return {
    ...state,
    history: [...state.history, entry],
    selectedJob: entry.jobId,
    selectedCommunity: null,
  };
}

export function updateRun(
  state: SessionState,
  jobId: string,
  patch: Partial<RunEntry>,
): SessionState {
  return {
    ...state,
    history: state.history.map((run) =>
      run.jobId === jobId ? { ...run, ...patch } : run,
    ),
  };
}

export function selectJob(state: SessionState, jobId: string): SessionState {
  return { ...state, selectedJob: jobId, selectedCommunity: null };
}

export function selectCommunity(
  state: SessionState,
  rank: number | null,
): SessionState {
  return { ...state, selectedCommunity: rank };
}

export function selectedRun(state: SessionState): RunEntry | undefined {
  return state.history.find((run) => run.jobId === state.selectedJob);
}

export interface PersistedState {
  datasets: Partial<Record<DatasetRole, string>>;
  algorithm: Algorithm;
  params: JobParams;
  jobIds: string[];
}

/** What survives a refresh: ids and parameters, nothing derived. */
export function snapshot(state: SessionState): PersistedState {
  return {
    datasets: state.datasets,
    algorithm: state.algorithm,
    params: state.params,
    jobIds: state.history.map((run) => run.jobId),
  };
}

export function restoreShell(persisted: PersistedState): SessionState {
  return {
    ...initialState(),
    datasets: persisted.datasets,
    algorithm: persisted.algorithm,
    params: persisted.params,
  };
}
