"""Planted-partition networks: recovery quality and a small timing ladder."""

from dualnet.align import AlignmentParams
from dualnet.benchmark import (
    benchmark_csv,
    compare_methods,
    comparison_csv,
    run_benchmark,
)
from dualnet.community import extract_modular_communities
from dualnet.evaluation import evaluate
from dualnet.synthetic import SyntheticSpec, generate_synthetic_dual

spec = SyntheticSpec(
    n_nodes=200,
    n_physical_edges=1200,
    n_conceptual_edges=1600,
    n_communities=4,
    seed=42,
)
dn, known = generate_synthetic_dual(spec)
print(f"generated {dn.physical.n_nodes} nodes, blocks of sizes",
      sorted(len(b) for b in known))

communities = extract_modular_communities(dn, AlignmentParams(delta=2), k=4, seed=42)
report = evaluate(known, [c.physical_nodes for c in communities])
print(f"recovery: sn={report.sn:.3f} ppv={report.ppv:.3f} acc={report.acc:.3f}")
print()

print("framework vs conceptual-only baseline over 5 planted networks:")
summaries = compare_methods(5, spec, AlignmentParams(delta=4), seed=0)
print(comparison_csv(summaries))

print("timing ladder (1 repeat; milliseconds, machine-dependent):")
sizes = [(100, 300, 100, 400), (200, 600, 200, 800), (400, 1200, 400, 1600)]
records = run_benchmark(sizes, AlignmentParams(delta=2), seed=0, repeats=1)
print(benchmark_csv(records))
