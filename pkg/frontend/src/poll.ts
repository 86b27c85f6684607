// Poll a job until it settles: 1 s interval with multiplicative backoff.

import type { JobRecord } from "./types";

export interface PollOptions {
  initialMs?: number;
  factor?: number;
  maxMs?: number;
  sleeper?: (ms: number) => Promise<void>;
  onUpdate?: (record: JobRecord) => void;
}

const defaultSleeper = (ms: number) =>
  new Promise<void>((resolve) => setTimeout(resolve, ms));

export async function pollUntilSettled(
  fetchRecord: () => Promise<JobRecord>,
  options: PollOptions = {},
): Promise<JobRecord> {
  const initial = options.initialMs ?? 1000;
  const factor = options.factor ?? 1.5;
  const max = options.maxMs ?? 10000;
  const sleep = options.sleeper ?? defaultSleeper;
  let wait = initial;
  for (;;) {
    const record = await fetchRecord();
    options.onUpdate?.(record);
    if (record.state === "done" || record.state === "failed") {
      return record;
    }
    await sleep(wait);
    wait = Math.min(wait * factor, max);
  }
}
