// Wire types mirroring the dualnet job service JSON documents.

export type Algorithm = "dcs" | "communities" | "baseline";
export type JobState = "queued" | "running" | "done" | "failed";
export type ViewMode = "physical" | "conceptual";
export type DatasetRole = "physical" | "conceptual" | "similarity" | "groundtruth";

export interface JobParams {
  delta: number;
  k: number;
  seed: number;
  min_similarity: number;
}

export interface JobTimings {
  t_load_ms: number;
  t_align_ms: number;
  t_extract_ms: number;
}

export interface JobRecord {
  job_id: string;
  kind: Algorithm;
  params: JobParams;
  state: JobState;
  timings: JobTimings | null;
  error: string | null;
}

export interface CommunityEntry {
  rank: number;
  score: number;
  physical_nodes: string[];
  conceptual_nodes: string[];
  physical_edges: [string, string][];
  conceptual_edges: [string, string, number][];
}

export interface Evaluation {
  sn: number;
  ppv: number;
  acc: number;
}

export interface ResultDocument {
  kind: Algorithm;
  params: JobParams;
  layout_seed: number;
  communities: CommunityEntry[];
  evaluation: Evaluation | null;
}

export interface UploadResponse {
  dataset_id: string;
  role: DatasetRole;
  bytes: number;
}

export interface ErrorBody {
  code: string;
  message: string;
  detail?: string;
}
