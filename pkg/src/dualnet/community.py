"""Community extraction from alignment graphs.

Two engines work on the merged alignment graph. The densest-subgraph
engine peels nodes of minimum weighted degree, keeping the best
density-W(S)/|S| prefix (the classic greedy 1/2-approximation,
generalized to weighted degrees). The modular engine is a two-phase
weighted Louvain whose communities are then split so that every result
projects onto a connected subgraph of the physical network.

A classical baseline (Louvain on the conceptual network alone, reduced
to its largest connected physical component) is included for
comparisons. All randomness is seed-derived; ties break on node ids, so
fixed input plus fixed seed reproduces identical output.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from dualnet.align import (
    AlignmentGraph,
    AlignmentParams,
    build_alignment_graph,
    project_community,
)
from dualnet.graph import (
    DualNetwork,
    Graph,
    connected_components,
    induced_subgraph,
)

#: A node move must improve modularity by more than this to be accepted.
GAIN_TOL = 1e-9


class NoAlignableRegionError(RuntimeError):
    """The alignment graph is empty: nothing to extract."""


@dataclass(frozen=True)
class DcsResult:
    """Densest connected subgraph of the alignment graph plus projections."""

    alignment_nodes: frozenset[str]
    density: float
    physical_nodes: frozenset[str]
    conceptual_nodes: frozenset[str]
    physical_connected: bool


@dataclass(frozen=True)
class Partition:
    """Flat community assignment with its modularity score.

    ``level_modularities`` records Q after each aggregation level; it is
    non-decreasing by construction.
    """

    assignment: Mapping[str, int]
    modularity: float
    level_modularities: tuple[float, ...] = ()


@dataclass(frozen=True)
class ModularCommunity:
    """One extracted community, connected in the physical network."""

    alignment_nodes: frozenset[str]
    modularity_contribution: float
    physical_nodes: frozenset[str]
    conceptual_nodes: frozenset[str]
    rank: int


def community_weight(g: Graph, s: Iterable[str]) -> float:
    """Total weight of edges with both endpoints in ``s``.

    Summation runs in sorted order so results are bit-identical across
    processes regardless of hash randomization.
    """
    members = set(s)
    return sum(
        w
        for v in sorted(members)
        for u, w in g.adj.get(v, {}).items()
        if u in members and u > v
    )


def density(g: Graph, s: Iterable[str]) -> float:
    """Subgraph density W(S)/|S| (0 for the empty set)."""
    members = set(s)
    if not members:
        return 0.0
    return community_weight(g, members) / len(members)


def charikar_peel_log(g: Graph) -> list[tuple[str, float]]:
    """Full greedy peeling order: (node, weighted degree at removal).

    At every step the node of minimum weighted degree is removed, ties
    broken by lexicographically smallest id.
    """
    if g.n_nodes == 0:
        raise ValueError("cannot peel an empty graph")
    deg = {v: g.degree(v) for v in g.nodes}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    alive = set(g.nodes)
    log: list[tuple[str, float]] = []
    while alive:
        d, v = heapq.heappop(heap)
        if v not in alive or d != deg[v]:
            continue  # stale heap entry
        log.append((v, d))
        alive.discard(v)
        for u, w in g.adj[v].items():
            if u in alive:
                deg[u] -= w
                heapq.heappush(heap, (deg[u], u))
    return log


def charikar_densest(g: Graph) -> tuple[frozenset[str], float]:
    """Greedy peeling approximation of the densest subgraph.

    Returns the peeling prefix maximizing W(S)/|S| (ties: the larger,
    i.e. earlier, prefix). The result is guaranteed to reach at least
    half of the optimum density over all subsets.
    """
    log = charikar_peel_log(g)
    n = len(log)
    running = g.total_weight()
    best_density = running / n
    best_start = 0
    removed = 0.0
    for i, (_, deg_at_removal) in enumerate(log[:-1]):
        removed += deg_at_removal
        d = (running - removed) / (n - i - 1)
        if d > best_density:
            best_density = d
            best_start = i + 1
    nodes = frozenset(v for v, _ in log[best_start:])
    return nodes, density(g, nodes)


def modularity(g: Graph, assignment: Mapping[str, int]) -> float:
    """Weighted modularity Q of a community assignment.

    Q = sum over communities of [in_c / m - (tot_c / 2m)^2] with in_c the
    intra-community weight, tot_c the summed weighted degrees and m the
    total edge weight. Always within [-0.5, 1].
    """
    missing = [v for v in g.nodes if v not in assignment]
    if missing:
        raise ValueError(f"assignment misses nodes: {sorted(missing)[:5]!r}")
    m = g.total_weight()
    if m <= 0:
        raise ValueError("modularity undefined for zero total edge weight")
    two_m = 2.0 * m
    in_c: dict[int, float] = {}
    tot_c: dict[int, float] = {}
    for u, v, w in g.edges():
        if assignment[u] == assignment[v]:
            c = assignment[u]
            in_c[c] = in_c.get(c, 0.0) + w
    for v in sorted(g.nodes):
        c = assignment[v]
        tot_c[c] = tot_c.get(c, 0.0) + g.degree(v)
    return sum(
        in_c.get(c, 0.0) / m - (tot_c[c] / two_m) ** 2 for c in sorted(tot_c)
    )


def _level_pass(
    adj: dict, rng: random.Random, resolution: float
) -> tuple[dict, bool]:
    """One Louvain level: sweep nodes until no move improves modularity.

    ``adj`` is an adjacency table that may carry self-loops (aggregated
    intra-community weight). Returns the node->community map and whether
    any node moved.
    """
    nodes = sorted(adj)
    k = {}
    for v in nodes:
        self_w = adj[v].get(v, 0.0)
        k[v] = sum(w for u, w in adj[v].items() if u != v) + 2.0 * self_w
    m = sum(k.values()) / 2.0
    two_m = 2.0 * m
    com = {v: i for i, v in enumerate(nodes)}
    tot = {com[v]: k[v] for v in nodes}
    order = list(nodes)
    rng.shuffle(order)
    moved_any = False
    while True:
        moved_this_sweep = False
        for v in order:
            cv = com[v]
            to_com: dict[int, float] = {}
            for u, w in adj[v].items():
                if u != v:
                    cu = com[u]
                    to_com[cu] = to_com.get(cu, 0.0) + w
            tot[cv] -= k[v]
            stay = to_com.get(cv, 0.0) - resolution * tot[cv] * k[v] / two_m
            best_c, best_score = cv, stay
            for c in sorted(to_com):
                if c == cv:
                    continue
                score = to_com[c] - resolution * tot[c] * k[v] / two_m
                if (score - stay) / m > GAIN_TOL and score > best_score:
                    best_score, best_c = score, c
            com[v] = best_c
            tot[best_c] = tot.get(best_c, 0.0) + k[v]
            if best_c != cv:
                moved_this_sweep = True
                moved_any = True
        if not moved_this_sweep:
            break
    return com, moved_any


def _relabel_by_smallest_member(groups: dict) -> dict:
    """Old community id -> dense id, ordered by smallest member."""
    ordered = sorted(groups, key=lambda c: min(groups[c]))
    return {c: i for i, c in enumerate(ordered)}


def louvain(g: Graph, seed: int = 0, resolution: float = 1.0) -> Partition:
    """Two-phase weighted Louvain modularity optimization.

    Phase 1 sweeps nodes (order shuffled by ``seed``) into the neighboring
    community of maximal positive gain; phase 2 aggregates communities
    into super-nodes; both repeat until no gain remains. ``resolution``
    scales the expected-weight term during optimization (1.0 = plain Q).
    """
    if g.total_weight() <= 0:
        raise ValueError("louvain requires positive total edge weight")
    rng = random.Random(seed)
    adj: dict = {v: dict(g.adj[v]) for v in sorted(g.nodes)}
    flat = {v: v for v in sorted(g.nodes)}  # original node -> current super-node
    level_mods: list[float] = []
    while True:
        com, moved = _level_pass(adj, rng, resolution)
        groups: dict = {}
        for v, c in com.items():
            groups.setdefault(c, []).append(v)
        label = _relabel_by_smallest_member(groups)
        flat = {orig: label[com[super_node]] for orig, super_node in flat.items()}
        level_mods.append(modularity(g, flat))
        if not moved or len(groups) == len(adj):
            break
        # aggregate: communities become super-nodes, intra weight a self-loop
        new_adj: dict = {i: {} for i in range(len(groups))}
        for v in adj:
            for u, w in adj[v].items():
                if u < v:
                    continue
                cv, cu = label[com[v]], label[com[u]]
                if cv == cu:
                    new_adj[cv][cv] = new_adj[cv].get(cv, 0.0) + w
                else:
                    new_adj[cv][cu] = new_adj[cv].get(cu, 0.0) + w
                    new_adj[cu][cv] = new_adj[cu].get(cv, 0.0) + w
        adj = {v: dict(sorted(new_adj[v].items())) for v in sorted(new_adj)}
    # dense final ids ordered by smallest original member
    final_groups: dict = {}
    for v, c in flat.items():
        final_groups.setdefault(c, []).append(v)
    final_label = _relabel_by_smallest_member(final_groups)
    assignment = {v: final_label[c] for v, c in flat.items()}
    return Partition(
        assignment=assignment,
        modularity=modularity(g, assignment),
        level_modularities=tuple(level_mods),
    )


def _require_alignable(ag: AlignmentGraph) -> None:
    if ag.n_nodes == 0 or ag.n_edges == 0:
        raise NoAlignableRegionError("no alignable region")


def dcs_from_alignment(ag: AlignmentGraph, dn: DualNetwork) -> DcsResult:
    """Densest connected subgraph of an already-built alignment graph.

    Peels greedily, keeps the densest connected component of the result,
    then repairs physical disconnection by restricting to the largest
    physical component of the projection.
    """
    _require_alignable(ag)
    peeled, _ = charikar_densest(ag.graph)
    comps = connected_components(induced_subgraph(ag.graph, peeled))
    chosen = comps[0]
    best = density(ag.graph, chosen)
    for comp in comps[1:]:
        d = density(ag.graph, comp)
        if d > best:
            best, chosen = d, comp
    physical, conceptual = project_community(ag, chosen)
    phys_comps = connected_components(induced_subgraph(dn.physical, physical))
    if len(phys_comps) > 1:
        keep = phys_comps[0]
        chosen = frozenset(
            a for a in chosen if ag.pair_index[a][0] in keep
        )
        physical, conceptual = project_community(ag, chosen)
        phys_comps = connected_components(induced_subgraph(dn.physical, physical))
    return DcsResult(
        alignment_nodes=frozenset(chosen),
        density=density(ag.graph, chosen),
        physical_nodes=physical,
        conceptual_nodes=conceptual,
        physical_connected=len(phys_comps) <= 1,
    )


def extract_dcs(dn: DualNetwork, params: AlignmentParams) -> DcsResult:
    """Build the alignment graph and extract the densest connected subgraph."""
    ag = build_alignment_graph(dn, params)
    return dcs_from_alignment(ag, dn)


def _contribution(g: Graph, members: frozenset[str], m: float) -> float:
    """Per-community modularity term in_c/m - (tot_c/2m)^2."""
    in_c = community_weight(g, members)
    tot_c = sum(g.degree(v) for v in sorted(members))
    return in_c / m - (tot_c / (2.0 * m)) ** 2


def modular_from_alignment(
    ag: AlignmentGraph, dn: DualNetwork, k: int, seed: int = 0
) -> list[ModularCommunity]:
    """Louvain communities of an alignment graph, split to physical components.

    Each Louvain community is divided so that every returned community
    projects onto one connected physical subgraph; results are ranked by
    their modularity contribution in the alignment graph.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _require_alignable(ag)
    part = louvain(ag.graph, seed)
    groups: dict[int, list[str]] = {}
    for node, c in part.assignment.items():
        groups.setdefault(c, []).append(node)
    candidates: list[frozenset[str]] = []
    for c in sorted(groups):
        members = groups[c]
        physical, _ = project_community(ag, members)
        by_physical: dict[str, list[str]] = {}
        for a in members:
            by_physical.setdefault(ag.pair_index[a][0], []).append(a)
        for comp in connected_components(induced_subgraph(dn.physical, physical)):
            candidates.append(
                frozenset(a for p in comp for a in by_physical[p])
            )
    m = ag.graph.total_weight()
    scored = sorted(
        candidates,
        key=lambda s: (-_contribution(ag.graph, s, m), min(s)),
    )
    results = []
    for rank, members in enumerate(scored[:k], start=1):
        physical, conceptual = project_community(ag, members)
        results.append(
            ModularCommunity(
                alignment_nodes=members,
                modularity_contribution=_contribution(ag.graph, members, m),
                physical_nodes=physical,
                conceptual_nodes=conceptual,
                rank=rank,
            )
        )
    return results


def extract_modular_communities(
    dn: DualNetwork, params: AlignmentParams, k: int, seed: int = 0
) -> list[ModularCommunity]:
    """Build the alignment graph and extract the top-k modular communities."""
    ag = build_alignment_graph(dn, params)
    return modular_from_alignment(ag, dn, k, seed)


def baseline_louvain_conceptual(
    dn: DualNetwork, seed: int = 0
) -> list[ModularCommunity]:
    """Classical baseline: Louvain on the conceptual network alone.

    Each conceptual community is induced into the physical network and
    reduced to its largest connected component; communities whose nodes
    never appear in the physical network are dropped. Ranking is by
    conceptual modularity contribution.
    """
    part = louvain(dn.conceptual, seed)
    m = dn.conceptual.total_weight()
    groups: dict[int, list[str]] = {}
    for node, c in part.assignment.items():
        groups.setdefault(c, []).append(node)
    scored: list[tuple[float, frozenset[str], frozenset[str]]] = []
    for c in sorted(groups):
        members = frozenset(groups[c])
        present = members & dn.physical.nodes
        if not present:
            continue
        comps = connected_components(induced_subgraph(dn.physical, present))
        scored.append((_contribution(dn.conceptual, members, m), comps[0], members))
    scored.sort(key=lambda t: (-t[0], min(t[1])))
    return [
        ModularCommunity(
            alignment_nodes=frozenset(),
            modularity_contribution=contrib,
            physical_nodes=phys,
            conceptual_nodes=conc,
            rank=rank,
        )
        for rank, (contrib, phys, conc) in enumerate(scored, start=1)
    ]
