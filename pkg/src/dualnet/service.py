"""Job-oriented HTTP API for the web explorer.

A thin asynchronous facade over the extraction engines: clients upload
edge-list / mapping files as content-addressed datasets, create jobs
referencing them, poll job state, and fetch result documents that carry
everything a renderer needs (projections, induced edge lists, a
deterministic layout seed). Results are canonical JSON persisted on
disk, so identical datasets, parameters and seed always produce
byte-identical documents.

Run with ``python -m dualnet.service`` or
``uvicorn --factory dualnet.service:create_app``.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional
from uuid import uuid4

from fastapi import FastAPI, Form, Request, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from dualnet.align import AlignmentParams, build_alignment_graph
from dualnet.community import (
    NoAlignableRegionError,
    baseline_louvain_conceptual,
    dcs_from_alignment,
    modular_from_alignment,
)
from dualnet.evaluation import evaluate
from dualnet.graph import (
    LoadError,
    ParseError,
    induced_subgraph,
    load_dual_network,
    parse_edge_list,
    parse_similarity,
)

ROLES = ("physical", "conceptual", "similarity", "groundtruth")
KINDS = ("dcs", "communities", "baseline")

DEFAULT_MAX_UPLOAD = 50 * 1024 * 1024


class ApiError(Exception):
    """Error reported to clients as JSON {code, message, detail}."""

    def __init__(self, status: int, code: str, message: str, detail: str = ""):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail


class JobParams(BaseModel):
    delta: int = 1
    k: int = 25
    seed: int = 0
    min_similarity: float = 0.0


class JobRequest(BaseModel):
    kind: str
    physical: str
    conceptual: str
    similarity: Optional[str] = None
    groundtruth: Optional[str] = None
    params: JobParams = JobParams()


def _parse_communities_text(text: str) -> list[set[str]]:
    communities = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "|" in line:
            left = line.partition("|")[0]
            tokens = left.split()[2:]
        else:
            tokens = line.split()
        if tokens:
            communities.append(set(tokens))
    return communities


def _validate_upload(role: str, text: str) -> None:
    """Parse the payload under the role's format; raises ParseError/ValueError."""
    if role == "physical":
        parse_edge_list(text, weighted=False)
    elif role == "conceptual":
        parse_edge_list(text, weighted=True)
    elif role == "similarity":
        parse_similarity(text)
    else:  # groundtruth
        if not _parse_communities_text(text):
            raise ValueError("no communities found in ground-truth file")


def _layout_seed(req: JobRequest) -> int:
    key = json.dumps(
        [req.kind, req.physical, req.conceptual, req.similarity,
         req.groundtruth, req.params.model_dump()],
        sort_keys=True,
    )
    return int(hashlib.sha256(key.encode()).hexdigest()[:8], 16)


def _community_entry(rank, score, physical_nodes, conceptual_nodes, dn):
    phys_sub = induced_subgraph(dn.physical, physical_nodes)
    conc_present = frozenset(conceptual_nodes) & dn.conceptual.nodes
    conc_sub = induced_subgraph(dn.conceptual, conc_present)
    return {
        "rank": rank,
        "score": score,
        "physical_nodes": sorted(physical_nodes),
        "conceptual_nodes": sorted(conceptual_nodes),
        "physical_edges": [[u, v] for u, v, _ in phys_sub.edges()],
        "conceptual_edges": [[u, v, w] for u, v, w in conc_sub.edges()],
    }


def create_app(
    data_dir: str | os.PathLike | None = None,
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD,
    workers: int = 2,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    root = Path(data_dir or os.environ.get("DUALNET_DATA_DIR", "dualnet-data"))
    datasets_dir = root / "datasets"
    results_dir = root / "results"
    datasets_dir.mkdir(parents=True, exist_ok=True)
    results_dir.mkdir(parents=True, exist_ok=True)

    app = FastAPI(title="dualnet service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    executor = ThreadPoolExecutor(max_workers=workers)
    jobs: dict[str, dict] = {}
    lock = threading.Lock()

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "detail": exc.detail},
        )

    def dataset_path(dataset_id: str) -> Path:
        return datasets_dir / dataset_id

    def read_dataset(dataset_id: str) -> str:
        path = dataset_path(dataset_id)
        if not path.exists():
            raise ApiError(404, "unknown_dataset", f"no dataset {dataset_id!r}")
        return path.read_text(encoding="utf-8")

    def run_job(job_id: str, req: JobRequest) -> None:
        with lock:
            jobs[job_id]["state"] = "running"
        try:
            t0 = time.perf_counter()
            physical = parse_edge_list(read_dataset(req.physical), weighted=False)
            conceptual = parse_edge_list(read_dataset(req.conceptual), weighted=True)
            mapping = (
                parse_similarity(read_dataset(req.similarity))
                if req.similarity
                else None
            )
            dn = load_dual_network(physical, conceptual, mapping)
            t_load = (time.perf_counter() - t0) * 1000.0

            params = AlignmentParams(
                delta=req.params.delta, min_similarity=req.params.min_similarity
            )
            t1 = time.perf_counter()
            ag = None
            if req.kind in ("dcs", "communities"):
                ag = build_alignment_graph(dn, params)
            t_align = (time.perf_counter() - t1) * 1000.0

            t2 = time.perf_counter()
            if req.kind == "dcs":
                result = dcs_from_alignment(ag, dn)
                entries = [
                    _community_entry(
                        1, result.density, result.physical_nodes,
                        result.conceptual_nodes, dn,
                    )
                ]
            elif req.kind == "communities":
                communities = modular_from_alignment(
                    ag, dn, k=req.params.k, seed=req.params.seed
                )
                entries = [
                    _community_entry(
                        c.rank, c.modularity_contribution, c.physical_nodes,
                        c.conceptual_nodes, dn,
                    )
                    for c in communities
                ]
            else:
                communities = baseline_louvain_conceptual(dn, seed=req.params.seed)
                communities = communities[: req.params.k]
                entries = [
                    _community_entry(
                        c.rank, c.modularity_contribution, c.physical_nodes,
                        c.conceptual_nodes, dn,
                    )
                    for c in communities
                ]
            t_extract = (time.perf_counter() - t2) * 1000.0

            evaluation = None
            if req.groundtruth:
                known = _parse_communities_text(read_dataset(req.groundtruth))
                report = evaluate(
                    known, [set(e["physical_nodes"]) for e in entries]
                )
                evaluation = {"sn": report.sn, "ppv": report.ppv, "acc": report.acc}

            document = {
                "kind": req.kind,
                "params": req.params.model_dump(),
                "layout_seed": _layout_seed(req),
                "communities": entries,
                "evaluation": evaluation,
            }
            text = json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"
            (results_dir / f"{job_id}.json").write_text(text, encoding="utf-8")
            with lock:
                jobs[job_id].update(
                    state="done",
                    timings={
                        "t_load_ms": t_load,
                        "t_align_ms": t_align,
                        "t_extract_ms": t_extract,
                    },
                )
        except Exception as exc:  # report failures through the job state
            with lock:
                jobs[job_id].update(state="failed", error=str(exc))

    @app.post("/datasets")
    async def upload_dataset(role: str = Form(...), file: UploadFile = None):
        if role not in ROLES:
            raise ApiError(400, "bad_role", f"role must be one of {ROLES}")
        if file is None:
            raise ApiError(400, "missing_file", "multipart field 'file' is required")
        payload = await file.read()
        if len(payload) > max_upload_bytes:
            raise ApiError(
                413, "too_large",
                f"upload exceeds {max_upload_bytes} bytes", f"got {len(payload)}",
            )
        try:
            text = payload.decode("utf-8")
            _validate_upload(role, text)
        except ParseError as exc:
            raise ApiError(
                422, "parse_error", str(exc), f"line {exc.line_no}"
            ) from exc
        except (UnicodeDecodeError, ValueError) as exc:
            raise ApiError(422, "parse_error", str(exc)) from exc
        dataset_id = hashlib.sha256(payload).hexdigest()
        path = dataset_path(dataset_id)
        if not path.exists():
            path.write_bytes(payload)
        return {"dataset_id": dataset_id, "role": role, "bytes": len(payload)}

    @app.post("/jobs", status_code=202)
    def create_job(req: JobRequest):
        if req.kind not in KINDS:
            raise ApiError(400, "bad_kind", f"kind must be one of {KINDS}")
        if req.params.delta < 1:
            raise ApiError(400, "bad_params", "delta must be >= 1")
        if req.params.k < 1:
            raise ApiError(400, "bad_params", "k must be >= 1")
        if not (0.0 <= req.params.min_similarity <= 1.0):
            raise ApiError(400, "bad_params", "min_similarity must lie in [0, 1]")
        referenced = [req.physical, req.conceptual]
        if req.similarity:
            referenced.append(req.similarity)
        if req.groundtruth:
            referenced.append(req.groundtruth)
        for dataset_id in referenced:
            if not dataset_path(dataset_id).exists():
                raise ApiError(404, "unknown_dataset", f"no dataset {dataset_id!r}")
        job_id = uuid4().hex
        with lock:
            jobs[job_id] = {
                "job_id": job_id,
                "kind": req.kind,
                "params": req.params.model_dump(),
                "state": "queued",
                "timings": None,
                "error": None,
            }
        executor.submit(run_job, job_id, req)
        return {"job_id": job_id}

    def get_job_record(job_id: str) -> dict:
        with lock:
            record = jobs.get(job_id)
            if record is None:
                raise ApiError(404, "unknown_job", f"no job {job_id!r}")
            return dict(record)

    @app.get("/jobs/{job_id}")
    def get_job(job_id: str):
        return get_job_record(job_id)

    @app.get("/jobs/{job_id}/result")
    def get_result(job_id: str):
        record = get_job_record(job_id)
        if record["state"] == "failed":
            raise ApiError(
                409, "job_failed", "job failed", record.get("error") or ""
            )
        if record["state"] != "done":
            raise ApiError(
                409, "not_ready", f"job is {record['state']}, poll again later"
            )
        text = (results_dir / f"{job_id}.json").read_text(encoding="utf-8")
        return Response(content=text, media_type="application/json")

    return app


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(create_app(), host="127.0.0.1", port=8040)
