"""Timing harness and framework-vs-baseline comparison on synthetic duals.

Timings decompose a pipeline run into load (parsing edge lists), align
(building the alignment graph), and the two extraction phases, each
measured on a monotonic clock and reported as the median over repeats.
Absolute milliseconds are machine-bound; the harness is about shape and
regression tracking, not reproducing any particular host's numbers.
"""

from __future__ import annotations

import io
import statistics
import time
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from dualnet.align import AlignmentParams, build_alignment_graph
from dualnet.community import (
    baseline_louvain_conceptual,
    dcs_from_alignment,
    extract_modular_communities,
    modular_from_alignment,
)
from dualnet.evaluation import evaluate
from dualnet.graph import load_dual_network, parse_edge_list, serialize_edge_list
from dualnet.synthetic import SyntheticSpec, generate_synthetic_dual

#: (physical nodes, physical edges, conceptual nodes, conceptual edges)
SizeTuple = tuple[int, int, int, int]

DEFAULT_BENCH_SIZES: tuple[SizeTuple, ...] = (
    (500, 1000, 500, 1500),
    (1000, 1500, 1000, 2000),
    (1500, 2000, 1500, 2500),
    (2000, 2500, 2000, 3000),
    (2500, 3000, 2500, 3500),
)

BENCHMARK_CSV_HEADER = (
    "experiment,nodes_p,edges_p,nodes_c,edges_c,"
    "t_load_ms,t_align_ms,t_dcs_ms,t_louv_ms"
)
COMPARISON_CSV_HEADER = "method,ppv_mean,ppv_sd,sn_mean,sn_sd,acc_mean,acc_sd"


@dataclass(frozen=True)
class BenchmarkRecord:
    """Median phase timings for one synthetic dual network."""

    experiment: int
    nodes_p: int
    edges_p: int
    nodes_c: int
    edges_c: int
    t_load_ms: float
    t_align_ms: float
    t_dcs_ms: float
    t_louv_ms: float


@dataclass(frozen=True)
class MethodSummary:
    """Mean and standard deviation of PPV / Sn / Acc for one method."""

    method: str
    ppv_mean: float
    ppv_sd: float
    sn_mean: float
    sn_sd: float
    acc_mean: float
    acc_sd: float


def _median_ms(fn: Callable[[], object], repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append((time.perf_counter() - start) * 1000.0)
    return statistics.median(times)


def run_benchmark(
    sizes: Sequence[SizeTuple],
    params: AlignmentParams,
    seed: int = 0,
    repeats: int = 5,
    n_communities: int = 4,
    k: int = 4,
) -> list[BenchmarkRecord]:
    """Generate one dual network per size tuple and time each phase.

    Size tuples must use equal physical and conceptual node counts (the
    generator plants one block structure shared by both networks).
    """
    records = []
    for experiment, (nodes_p, edges_p, nodes_c, edges_c) in enumerate(sizes, 1):
        if nodes_p != nodes_c:
            raise ValueError(
                f"experiment {experiment}: physical and conceptual node "
                f"counts must match ({nodes_p} != {nodes_c})"
            )
        spec = SyntheticSpec(
            n_nodes=nodes_p,
            n_physical_edges=edges_p,
            n_conceptual_edges=edges_c,
            n_communities=n_communities,
            seed=seed + experiment,
        )
        dn, _ = generate_synthetic_dual(spec)
        phys_text = serialize_edge_list(dn.physical)
        conc_text = serialize_edge_list(dn.conceptual, weighted=True)

        def load():
            return load_dual_network(
                parse_edge_list(io.StringIO(phys_text)),
                parse_edge_list(io.StringIO(conc_text), weighted=True),
            )

        t_load = _median_ms(load, repeats)
        t_align = _median_ms(lambda: build_alignment_graph(dn, params), repeats)
        ag = build_alignment_graph(dn, params)
        t_dcs = _median_ms(lambda: dcs_from_alignment(ag, dn), repeats)
        t_louv = _median_ms(
            lambda: modular_from_alignment(ag, dn, k=k, seed=seed), repeats
        )
        records.append(
            BenchmarkRecord(
                experiment=experiment,
                nodes_p=dn.physical.n_nodes,
                edges_p=dn.physical.n_edges,
                nodes_c=dn.conceptual.n_nodes,
                edges_c=dn.conceptual.n_edges,
                t_load_ms=t_load,
                t_align_ms=t_align,
                t_dcs_ms=t_dcs,
                t_louv_ms=t_louv,
            )
        )
    return records


def compare_per_network(
    n_networks: int,
    spec: SyntheticSpec,
    params: AlignmentParams,
    seed: int = 0,
) -> list[dict[str, tuple[float, float, float]]]:
    """Per-network (ppv, sn, acc) for the framework and the baseline.

    Network i is generated with seed ``seed + i``; both methods are asked
    for as many communities as were planted. Scores compare physical node
    sets against the planted blocks.
    """
    results = []
    for i in range(n_networks):
        dn, known = generate_synthetic_dual(replace(spec, seed=seed + i))
        framework = extract_modular_communities(
            dn, params, k=spec.n_communities, seed=seed + i
        )
        baseline = baseline_louvain_conceptual(dn, seed=seed + i)
        baseline = baseline[: spec.n_communities]
        scores = {}
        for name, communities in (
            ("framework", framework),
            ("baseline", baseline),
        ):
            report = evaluate(known, [c.physical_nodes for c in communities])
            scores[name] = (report.ppv, report.sn, report.acc)
        results.append(scores)
    return results


def _mean_sd(values: list[float]) -> tuple[float, float]:
    mean = statistics.fmean(values)
    sd = statistics.stdev(values) if len(values) > 1 else 0.0
    return mean, sd


def compare_methods(
    n_networks: int,
    spec: SyntheticSpec,
    params: AlignmentParams,
    seed: int = 0,
) -> list[MethodSummary]:
    """Aggregate compare_per_network into one summary row per method."""
    if n_networks < 1:
        raise ValueError("n_networks must be >= 1")
    per_network = compare_per_network(n_networks, spec, params, seed)
    summaries = []
    for method in ("framework", "baseline"):
        ppvs = [s[method][0] for s in per_network]
        sns = [s[method][1] for s in per_network]
        accs = [s[method][2] for s in per_network]
        (ppv_mean, ppv_sd) = _mean_sd(ppvs)
        (sn_mean, sn_sd) = _mean_sd(sns)
        (acc_mean, acc_sd) = _mean_sd(accs)
        summaries.append(
            MethodSummary(
                method=method,
                ppv_mean=ppv_mean,
                ppv_sd=ppv_sd,
                sn_mean=sn_mean,
                sn_sd=sn_sd,
                acc_mean=acc_mean,
                acc_sd=acc_sd,
            )
        )
    return summaries


def benchmark_csv(records: Sequence[BenchmarkRecord]) -> str:
    lines = [BENCHMARK_CSV_HEADER]
    for r in records:
        lines.append(
            f"{r.experiment},{r.nodes_p},{r.edges_p},{r.nodes_c},{r.edges_c},"
            f"{r.t_load_ms:.3f},{r.t_align_ms:.3f},{r.t_dcs_ms:.3f},{r.t_louv_ms:.3f}"
        )
    return "\n".join(lines) + "\n"


def comparison_csv(summaries: Sequence[MethodSummary]) -> str:
    lines = [COMPARISON_CSV_HEADER]
    for s in summaries:
        lines.append(
            f"{s.method},{s.ppv_mean:.6f},{s.ppv_sd:.6f},"
            f"{s.sn_mean:.6f},{s.sn_sd:.6f},{s.acc_mean:.6f},{s.acc_sd:.6f}"
        )
    return "\n".join(lines) + "\n"
