"""Weighted alignment graph: merging a dual network into a single graph.

Each alignment node stands for one mapped (physical, conceptual) node pair.
Two alignment nodes are joined exactly when their physical nodes are
adjacent in the physical network and their conceptual nodes lie within
``delta`` hops of each other in the conceptual network. Directly associated
pairs keep the conceptual edge weight (MATCH); indirect ones get the mean
weight along one minimum-hop path, divided again by the hop count, so that
weaker, more remote associations are progressively penalized (MISMATCH).

Construction is fully deterministic: breadth-first searches expand
neighbors in lexicographic order and every tie is broken by node id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from dualnet.graph import DualNetwork, Graph

MATCH = "MATCH"
MISMATCH = "MISMATCH"


@dataclass(frozen=True)
class AlignmentParams:
    """Knobs of the merge: hop-distance slack and mapping similarity cutoff."""

    delta: int = 1
    min_similarity: float = 0.0

    def __post_init__(self):
        if not isinstance(self.delta, int) or self.delta < 1:
            raise ValueError(f"delta must be an integer >= 1, got {self.delta!r}")
        if not (0.0 <= self.min_similarity <= 1.0):
            raise ValueError(
                f"min_similarity must lie in [0, 1], got {self.min_similarity!r}"
            )


def encode_pair(physical: str, conceptual: str) -> str:
    """Collision-free string id for a (physical, conceptual) pair.

    '|' separates the two components; literal '|' and '\\' are escaped so
    arbitrary node ids cannot produce the same alignment id.
    """

    def esc(s: str) -> str:
        return s.replace("\\", "\\\\").replace("|", "\\|")

    return f"{esc(physical)}|{esc(conceptual)}"


@dataclass(frozen=True)
class AlignmentGraph:
    """The merged graph plus the pair bookkeeping needed to project back."""

    graph: Graph
    pair_index: Mapping[str, tuple[str, str]]
    edge_class: Mapping[tuple[str, str], str]
    params: AlignmentParams = field(default=AlignmentParams())

    @property
    def n_nodes(self) -> int:
        return self.graph.n_nodes

    @property
    def n_edges(self) -> int:
        return self.graph.n_edges


def _truncated_bfs(
    g: Graph, source: str, depth_limit: int
) -> dict[str, tuple[int, float]]:
    """Hop distances and cumulative tree-path weights up to ``depth_limit``.

    Level-synchronous BFS; each level is processed in sorted order so the
    tree (and therefore every path weight) is reproducible.
    """
    info: dict[str, tuple[int, float]] = {source: (0, 0.0)}
    frontier = [source]
    depth = 0
    while frontier and depth < depth_limit:
        depth += 1
        discovered = []
        for v in frontier:
            cum_v = info[v][1]
            for u, w in g.adj[v].items():
                if u not in info:
                    info[u] = (depth, cum_v + w)
                    discovered.append(u)
        frontier = sorted(discovered)
    return info


def conceptual_hop_distances(
    dn: DualNetwork, source: str, delta: int
) -> dict[str, tuple[int, float]]:
    """Map every conceptual node within ``delta`` hops of ``source`` to
    (hop distance, mean edge weight along the BFS tree path).

    The source itself reports (0, 0.0).
    """
    if source not in dn.conceptual.nodes:
        raise ValueError(f"unknown conceptual node {source!r}")
    info = _truncated_bfs(dn.conceptual, source, delta)
    return {
        node: (dist, cum / dist if dist else 0.0)
        for node, (dist, cum) in info.items()
    }


def build_alignment_graph(
    dn: DualNetwork, params: AlignmentParams
) -> AlignmentGraph:
    """Merge the dual network into the weighted alignment graph.

    Nodes: mapping pairs with similarity >= ``params.min_similarity``.
    Edges: for pairs (u1,v1), (u2,v2) with u1 != u2 and v1 != v2, an edge
    exists iff (u1,u2) is a physical edge and the conceptual hop distance
    d(v1,v2) is at most delta. Weight is the conceptual edge weight when
    d == 1, else (path mean weight) / d. The BFS supplying mismatch paths
    always starts from the lexicographically smaller conceptual endpoint,
    which keeps edge weights well-defined and runs reproducible.
    """
    kept = [
        (p, c) for p, c, s in dn.mapping.pairs if s >= params.min_similarity
    ]
    pair_index: dict[str, tuple[str, str]] = {}
    by_physical: dict[str, list[str]] = {}
    for p, c in kept:
        node_id = encode_pair(p, c)
        pair_index[node_id] = (p, c)
        by_physical.setdefault(p, []).append(node_id)
    for ids in by_physical.values():
        ids.sort()

    bfs_cache: dict[str, dict[str, tuple[int, float]]] = {}

    def reach_from(source: str) -> dict[str, tuple[int, float]]:
        try:
            return bfs_cache[source]
        except KeyError:
            info = _truncated_bfs(dn.conceptual, source, params.delta)
            bfs_cache[source] = info
            return info

    edges: list[tuple[str, str, float]] = []
    edge_class: dict[tuple[str, str], str] = {}
    for u1, u2, _ in dn.physical.edges():
        for a1 in by_physical.get(u1, ()):
            v1 = pair_index[a1][1]
            for a2 in by_physical.get(u2, ()):
                v2 = pair_index[a2][1]
                if v1 == v2:
                    continue
                lo, hi = (v1, v2) if v1 < v2 else (v2, v1)
                hit = reach_from(lo).get(hi)
                if hit is None:
                    continue
                dist, cum = hit
                if dist == 1:
                    weight = dn.conceptual.weight(v1, v2)
                    label = MATCH
                else:
                    weight = (cum / dist) / dist
                    label = MISMATCH
                key = (a1, a2) if a1 < a2 else (a2, a1)
                edges.append((key[0], key[1], weight))
                edge_class[key] = label

    graph = Graph.build(edges, extra_nodes=pair_index)
    return AlignmentGraph(
        graph=graph, pair_index=pair_index, edge_class=edge_class, params=params
    )


def project_community(
    ag: AlignmentGraph, s: Iterable[str]
) -> tuple[frozenset[str], frozenset[str]]:
    """Project alignment nodes back to (physical node set, conceptual node set)."""
    members = frozenset(s)
    unknown = [a for a in members if a not in ag.pair_index]
    if unknown:
        raise ValueError(f"not alignment nodes: {sorted(unknown)!r}")
    physical = frozenset(ag.pair_index[a][0] for a in members)
    conceptual = frozenset(ag.pair_index[a][1] for a in members)
    return physical, conceptual


def serialize_alignment(ag: AlignmentGraph) -> str:
    """Debug dump: one line per edge, 'node node weight MATCH|MISMATCH'."""
    lines = []
    for u, v, w in ag.graph.edges():
        lines.append(f"{u} {v} {w!r} {ag.edge_class[(u, v)]}")
    return "\n".join(lines) + ("\n" if lines else "")
