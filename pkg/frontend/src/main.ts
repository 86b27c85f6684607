// DOM wiring for the explorer. All logic lives in the pure modules;
// this file only moves data between them, the service and the page.

import { ApiError, ServiceClient } from "./api";
import { colorForCommunity } from "./colors";
import { buildCompareRows, hasEvaluations, runLabel } from "./compare";
import { buildScene, type Scene } from "./graphView";
import { pollUntilSettled } from "./poll";
import {
  appendRun,
  canRun,
  initialState,
  restoreShell,
  recordDataset,
  selectCommunity,
  selectJob,
  selectedRun,
  snapshot,
  updateRun,
  validateParams,
  type SessionState,
} from "./state";
import type { Algorithm, DatasetRole, ResultDocument, ViewMode } from "./types";

const STORAGE_KEY = "dualnet-explorer";
const SVG_NS = "http://www.w3.org/2000/svg";

const client = new ServiceClient("");
let state: SessionState = initialState();

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function setState(next: SessionState): void {
  state = next;
  localStorage.setItem(STORAGE_KEY, JSON.stringify(snapshot(state)));
  render();
}

function setStatus(message: string, isError = false): void {
  const status = $("status");
  status.textContent = message;
  status.className = isError ? "status error" : "status";
}

async function handleUpload(role: DatasetRole, input: HTMLInputElement) {
  const file = input.files?.[0];
  if (!file) return;
  try {
    const response = await client.uploadDataset(role, file, file.name);
    setStatus(`${role}: ${file.name} (${response.bytes} bytes)`);
    setState(recordDataset(state, role, response.dataset_id));
  } catch (error) {
    setStatus(
      error instanceof ApiError
        ? `${role} upload rejected: ${error.message} ${error.detail}`
        : `${role} upload failed: ${String(error)}`,
      true,
    );
  }
}

function readParamsFromForm(): void {
  state.algorithm = ($("algorithm") as HTMLSelectElement).value as Algorithm;
  state.params = {
    delta: Number(($("delta") as HTMLInputElement).value),
    k: Number(($("k") as HTMLInputElement).value),
    seed: Number(($("seed") as HTMLInputElement).value),
    min_similarity: Number(($("min-similarity") as HTMLInputElement).value),
  };
}

async function runJob(): Promise<void> {
  readParamsFromForm();
  if (!canRun(state)) {
    setStatus(validateParams(state.params).join("; ") || "upload both networks first", true);
    render();
    return;
  }
  const request = {
    kind: state.algorithm,
    physical: state.datasets.physical!,
    conceptual: state.datasets.conceptual!,
    ...(state.datasets.similarity && { similarity: state.datasets.similarity }),
    ...(state.datasets.groundtruth && { groundtruth: state.datasets.groundtruth }),
    params: state.params,
  };
  let jobId: string;
  try {
    jobId = await client.createJob(request);
  } catch (error) {
    setStatus(`job rejected: ${error instanceof Error ? error.message : error}`, true);
    return;
  }
  setState(
    appendRun(state, {
      jobId,
      kind: state.algorithm,
      params: { ...state.params },
      state: "queued",
    }),
  );
  await trackJob(jobId);
}

async function trackJob(jobId: string): Promise<void> {
  try {
    const record = await pollUntilSettled(() => client.getJob(jobId), {
      onUpdate: (r) => setState(updateRun(state, jobId, { state: r.state })),
    });
    if (record.state === "failed") {
      setState(updateRun(state, jobId, { state: "failed", error: record.error ?? "" }));
      return;
    }
    const result = await client.getResult(jobId);
    setState(updateRun(state, jobId, { state: "done", result }));
  } catch (error) {
    setState(
      updateRun(state, jobId, { state: "failed", error: String(error) }),
    );
  }
}

async function restoreFromStorage(): Promise<void> {
  const raw = localStorage.getItem(STORAGE_KEY);
  if (!raw) return;
  try {
    const persisted = JSON.parse(raw);
    state = restoreShell(persisted);
    render();
    for (const jobId of persisted.jobIds ?? []) {
      try {
        const record = await client.getJob(jobId);
        state = appendRun(state, {
          jobId,
          kind: record.kind,
          params: record.params,
          state: record.state,
          error: record.error ?? undefined,
        });
        if (record.state === "done") {
          const result = await client.getResult(jobId);
          state = updateRun(state, jobId, { result });
        } else if (record.state === "queued" || record.state === "running") {
          void trackJob(jobId);
        }
      } catch {
        // job unknown to the service (e.g. it restarted): drop it
      }
    }
    setState(state);
  } catch {
    localStorage.removeItem(STORAGE_KEY);
  }
}

function renderScene(svg: SVGSVGElement, scene: Scene): void {
  svg.replaceChildren();
  const width = svg.clientWidth || 460;
  const height = svg.clientHeight || 420;
  const pad = 16;
  const px = (x: number) => pad + x * (width - 2 * pad);
  const py = (y: number) => pad + y * (height - 2 * pad);
  for (const edge of scene.edges) {
    const a = scene.nodes.find((n) => n.id === edge.source);
    const b = scene.nodes.find((n) => n.id === edge.target);
    if (!a || !b) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(px(a.x)));
    line.setAttribute("y1", String(py(a.y)));
    line.setAttribute("x2", String(px(b.x)));
    line.setAttribute("y2", String(py(b.y)));
    line.setAttribute("class", edge.dimmed ? "edge dimmed" : "edge");
    if (edge.weight !== null) {
      line.setAttribute("stroke-width", String(0.6 + 1.8 * edge.weight));
    }
    svg.appendChild(line);
  }
  for (const node of scene.nodes) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(px(node.x)));
    circle.setAttribute("cy", String(py(node.y)));
    circle.setAttribute("r", "6");
    circle.setAttribute("fill", node.color);
    circle.setAttribute("class", node.dimmed ? "node dimmed" : "node");
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${node.id} (community ${node.community ?? "-"})`;
    circle.appendChild(title);
    circle.addEventListener("click", () => {
      setState(selectCommunity(state, node.community));
    });
    svg.appendChild(circle);
  }
}

function renderViews(): void {
  const run = selectedRun(state);
  const note = $("view-note");
  const modes: [string, ViewMode][] = [
    ["physical-view", "physical"],
    ["conceptual-view", "conceptual"],
  ];
  if (!run?.result) {
    note.textContent = run
      ? `job ${run.jobId.slice(0, 8)}… is ${run.state}`
      : "run an extraction to see both projections";
    for (const [id] of modes) ($(id) as unknown as SVGSVGElement).replaceChildren();
    return;
  }
  const result: ResultDocument = run.result;
  let truncated = false;
  for (const [id, mode] of modes) {
    const scene = buildScene(result, mode, state.selectedCommunity);
    truncated ||= scene.truncated;
    renderScene($(id) as unknown as SVGSVGElement, scene);
  }
  note.textContent = truncated
    ? "large result: showing the largest communities only"
    : `${result.communities.length} communities, layout seed ${result.layout_seed}`;
}

function renderCommunities(): void {
  const list = $("communities");
  list.replaceChildren();
  const run = selectedRun(state);
  if (!run?.result) return;
  for (const community of run.result.communities) {
    const item = document.createElement("li");
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = colorForCommunity(community.rank);
    item.appendChild(swatch);
    item.appendChild(
      document.createTextNode(
        ` #${community.rank} score ${community.score.toFixed(4)} ` +
          `(${community.physical_nodes.length} phys / ${community.conceptual_nodes.length} conc)`,
      ),
    );
    if (state.selectedCommunity === community.rank) item.classList.add("selected");
    item.addEventListener("click", () => {
      setState(
        selectCommunity(
          state,
          state.selectedCommunity === community.rank ? null : community.rank,
        ),
      );
    });
    list.appendChild(item);
  }
}

function renderHistory(): void {
  const rows = buildCompareRows(state.history);
  const showMetrics = hasEvaluations(rows);
  const table = $("history") as HTMLTableElement;
  table.replaceChildren();
  const head = table.insertRow();
  for (const label of ["run", "state", "score", ...(showMetrics ? ["Sn", "PPV", "Acc"] : [])]) {
    const th = document.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }
  for (const row of rows) {
    const tr = table.insertRow();
    tr.className = row.jobId === state.selectedJob ? "selected" : "";
    const cells = [row.label, row.state, row.score];
    if (showMetrics) cells.push(row.sn, row.ppv, row.acc);
    for (const value of cells) {
      const td = tr.insertCell();
      td.textContent = value;
    }
    tr.addEventListener("click", () => setState(selectJob(state, row.jobId)));
  }
}

function render(): void {
  ($("run") as HTMLButtonElement).disabled = !canRun(state);
  renderHistory();
  renderCommunities();
  renderViews();
}

function bind(): void {
  for (const role of ["physical", "conceptual", "similarity", "groundtruth"] as DatasetRole[]) {
    const input = $(`file-${role}`) as HTMLInputElement;
    input.addEventListener("change", () => void handleUpload(role, input));
  }
  for (const id of ["delta", "k", "seed", "min-similarity", "algorithm"]) {
    $(id).addEventListener("change", () => {
      readParamsFromForm();
      setState({ ...state });
    });
  }
  $("run").addEventListener("click", () => void runJob());
  render();
  void restoreFromStorage();
}

bind();
