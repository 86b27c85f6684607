"""Load the bundled toy dual network and poke around the graph model."""

from pathlib import Path

from dualnet import (
    connected_components,
    induced_subgraph,
    load_dual_network,
    parse_edge_list,
    parse_similarity,
    weighted_degree,
)

TOY = Path(__file__).resolve().parent.parent / "data" / "toy"

with open(TOY / "physical.el") as fh:
    physical = parse_edge_list(fh, weighted=False)
with open(TOY / "conceptual.el") as fh:
    conceptual = parse_edge_list(fh, weighted=True)
with open(TOY / "similarity.txt") as fh:
    mapping = parse_similarity(fh)

dn = load_dual_network(physical, conceptual, mapping)

print("physical:  ", physical.n_nodes, "nodes,", physical.n_edges, "edges")
print("conceptual:", conceptual.n_nodes, "nodes,", conceptual.n_edges, "edges")
print("mapping:   ", len(dn.mapping), "pairs")
print()

print("weighted degrees in the conceptual network:")
for v in sorted(conceptual.nodes):
    print(f"  {v}: {weighted_degree(conceptual, v):.2f}")
print()

print("components of the physical network:", connected_components(physical))
print()

cluster_a = {"a1", "a2", "a3", "a4"}
sub = induced_subgraph(conceptual, cluster_a)
print(f"conceptual subgraph on {sorted(cluster_a)}:")
for u, v, w in sub.edges():
    print(f"  {u} -- {v}  ({w})")
