// Thin client for the dualnet job service. All scores and projections
// come from the service; the UI never computes them.

import type {
  Algorithm,
  DatasetRole,
  ErrorBody,
  JobParams,
  JobRecord,
  ResultDocument,
  UploadResponse,
} from "./types";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly detail: string;

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
    this.detail = body.detail ?? "";
  }
}

export interface JobRequest {
  kind: Algorithm;
  physical: string;
  conceptual: string;
  similarity?: string;
  groundtruth?: string;
  params: JobParams;
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let body: ErrorBody;
  try {
    body = (await response.json()) as ErrorBody;
  } catch {
    body = { code: "http_error", message: response.statusText };
  }
  throw new ApiError(response.status, body);
}

export class ServiceClient {
  constructor(private readonly baseUrl: string = "") {}

  async uploadDataset(role: DatasetRole, file: Blob, name = "upload.txt") {
    const form = new FormData();
    form.append("role", role);
    form.append("file", file, name);
    const response = await fetch(`${this.baseUrl}/datasets`, {
      method: "POST",
      body: form,
    });
    return unwrap<UploadResponse>(response);
  }

  async createJob(request: JobRequest): Promise<string> {
    const response = await fetch(`${this.baseUrl}/jobs`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    const body = await unwrap<{ job_id: string }>(response);
    return body.job_id;
  }

  async getJob(jobId: string): Promise<JobRecord> {
    const response = await fetch(`${this.baseUrl}/jobs/${jobId}`);
    return unwrap<JobRecord>(response);
  }

  async getResult(jobId: string): Promise<ResultDocument> {
    const response = await fetch(`${this.baseUrl}/jobs/${jobId}/result`);
    return unwrap<ResultDocument>(response);
  }
}
