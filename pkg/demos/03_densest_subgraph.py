"""Extract the densest connected subgraph and watch the peeling happen."""

from pathlib import Path

from dualnet import load_dual_network, parse_edge_list
from dualnet.align import AlignmentParams, build_alignment_graph
from dualnet.community import charikar_peel_log, dcs_from_alignment

TOY = Path(__file__).resolve().parent.parent / "data" / "toy"

with open(TOY / "physical.el") as fh:
    physical = parse_edge_list(fh)
with open(TOY / "conceptual.el") as fh:
    conceptual = parse_edge_list(fh, weighted=True)
dn = load_dual_network(physical, conceptual)

ag = build_alignment_graph(dn, AlignmentParams(delta=1))

print("greedy peeling order (node removed, weighted degree at removal):")
for node, degree in charikar_peel_log(ag.graph):
    print(f"  {node:<12} {degree:.3f}")
print()

result = dcs_from_alignment(ag, dn)
print(f"densest connected subgraph: density {result.density:.4f}")
print("  physical nodes:  ", sorted(result.physical_nodes))
print("  conceptual nodes:", sorted(result.conceptual_nodes))
print("  physically connected:", result.physical_connected)
