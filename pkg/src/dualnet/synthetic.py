"""Synthetic dual networks with planted communities.

Nodes are split into near-equal blocks. Both networks put a configured
fraction of their edges inside blocks; conceptual intra-block edges get
high weights and cross-block edges low ones, so the blocks are the ground
truth communities. Every physical block additionally receives a random
spanning tree (counted against the intra-block budget) so that planted
communities are always physically connected. Generation is fully
determined by the spec, including its seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from dualnet.graph import DualNetwork, Graph, load_dual_network


@dataclass(frozen=True)
class SyntheticSpec:
    """Parameters of one planted-partition dual network."""

    n_nodes: int
    n_physical_edges: int
    n_conceptual_edges: int
    n_communities: int = 4
    intra_edge_fraction: float = 0.8
    intra_weight_range: tuple[float, float] = (0.7, 1.0)
    inter_weight_range: tuple[float, float] = (0.0, 0.3)
    seed: int = 0

    def __post_init__(self):
        if self.n_nodes < 1 or self.n_communities < 1:
            raise ValueError("node and community counts must be positive")
        if self.n_communities > self.n_nodes:
            raise ValueError("more communities than nodes")
        max_edges = self.n_nodes * (self.n_nodes - 1) // 2
        for label, count in (
            ("physical", self.n_physical_edges),
            ("conceptual", self.n_conceptual_edges),
        ):
            if count < 1:
                raise ValueError(f"{label} edge count must be positive")
            if count > max_edges:
                raise ValueError(
                    f"{label} edge count {count} exceeds simple-graph maximum {max_edges}"
                )
        if not (0.0 < self.intra_edge_fraction <= 1.0):
            raise ValueError("intra_edge_fraction must lie in (0, 1]")
        for label, (lo, hi) in (
            ("intra", self.intra_weight_range),
            ("inter", self.inter_weight_range),
        ):
            if lo < 0 or hi < lo:
                raise ValueError(f"invalid {label}_weight_range ({lo}, {hi})")


def _block_partition(names: list[str], n_communities: int) -> list[list[str]]:
    """Contiguous near-equal blocks; the first n % k blocks get one extra."""
    n = len(names)
    base, extra = divmod(n, n_communities)
    blocks = []
    start = 0
    for b in range(n_communities):
        size = base + (1 if b < extra else 0)
        blocks.append(names[start : start + size])
        start += size
    return [b for b in blocks if b]


def _spanning_tree(rng: np.random.Generator, block: list[str]) -> list[tuple[str, str]]:
    """Random recursive tree over the block, guaranteeing connectivity."""
    order = [block[i] for i in rng.permutation(len(block))]
    edges = []
    for i in range(1, len(order)):
        parent = order[int(rng.integers(0, i))]
        u, v = order[i], parent
        edges.append((u, v) if u < v else (v, u))
    return edges


def _sample_intra(
    rng: np.random.Generator,
    blocks: list[list[str]],
    count: int,
    taken: set[tuple[str, str]],
) -> list[tuple[str, str]]:
    """Draw ``count`` distinct intra-block pairs not already taken."""
    capacities = np.array([len(b) * (len(b) - 1) // 2 for b in blocks], dtype=float)
    capacity = int(capacities.sum())
    if count > capacity - len(taken):
        raise ValueError(
            f"intra-block edge budget {count + len(taken)} exceeds capacity {capacity}"
        )
    eligible = capacities > 0
    probs = np.where(eligible, capacities, 0.0)
    probs = probs / probs.sum()
    chosen: list[tuple[str, str]] = []
    seen = set(taken)
    attempts = 0
    max_attempts = 200 * count + 1000
    while len(chosen) < count and attempts < max_attempts:
        attempts += 1
        b = blocks[int(rng.choice(len(blocks), p=probs))]
        i, j = rng.choice(len(b), size=2, replace=False)
        u, v = b[int(i)], b[int(j)]
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            continue
        seen.add(pair)
        chosen.append(pair)
    if len(chosen) < count:
        # dense regime: fall back to explicit enumeration of the free pairs
        free = sorted(
            (b[i], b[j])
            for b in blocks
            for i in range(len(b))
            for j in range(i + 1, len(b))
            if (b[i], b[j]) not in seen
        )
        picks = rng.choice(len(free), size=count - len(chosen), replace=False)
        chosen.extend(free[int(p)] for p in sorted(picks))
    return chosen


def _sample_inter(
    rng: np.random.Generator,
    names: list[str],
    block_of: dict[str, int],
    count: int,
) -> list[tuple[str, str]]:
    """Draw ``count`` distinct cross-block pairs."""
    n = len(names)
    sizes: dict[int, int] = {}
    for b in block_of.values():
        sizes[b] = sizes.get(b, 0) + 1
    capacity = (n * (n - 1) - sum(s * (s - 1) for s in sizes.values())) // 2
    if count > capacity:
        raise ValueError(
            f"cross-block edge budget {count} exceeds capacity {capacity}"
        )
    chosen: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    attempts = 0
    max_attempts = 200 * count + 1000
    while len(chosen) < count and attempts < max_attempts:
        attempts += 1
        i, j = int(rng.integers(0, n)), int(rng.integers(0, n))
        u, v = names[i], names[j]
        if u == v or block_of[u] == block_of[v]:
            continue
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            continue
        seen.add(pair)
        chosen.append(pair)
    if len(chosen) < count:
        free = sorted(
            (names[i], names[j])
            for i in range(n)
            for j in range(i + 1, n)
            if block_of[names[i]] != block_of[names[j]]
            and (names[i], names[j]) not in seen
        )
        picks = rng.choice(len(free), size=count - len(chosen), replace=False)
        chosen.extend(free[int(p)] for p in sorted(picks))
    return chosen


def _weighted(
    rng: np.random.Generator,
    pairs: list[tuple[str, str]],
    lo: float,
    hi: float,
) -> list[tuple[str, str, float]]:
    ordered = sorted(pairs)
    weights = rng.uniform(lo, hi, size=len(ordered))
    return [(u, v, float(w)) for (u, v), w in zip(ordered, weights)]


def generate_synthetic_dual(
    spec: SyntheticSpec,
) -> tuple[DualNetwork, list[frozenset[str]]]:
    """Build one dual network and its planted ground-truth communities.

    Identical specs (same seed included) produce identical networks.
    """
    width = len(str(spec.n_nodes - 1))
    names = [f"n{i:0{width}d}" for i in range(spec.n_nodes)]
    blocks = _block_partition(names, spec.n_communities)
    block_of = {v: b for b, block in enumerate(blocks) for v in block}
    rng = np.random.default_rng(spec.seed)
    # a single block has no cross pairs: every edge is intra-block then
    single_block = len(blocks) == 1

    # physical: spanning trees first, then intra fill, then cross edges;
    # connectivity outranks the intra fraction, so the intra allocation
    # grows when the trees alone exceed it
    tree_edges = [e for block in blocks for e in _spanning_tree(rng, block)]
    if len(tree_edges) > spec.n_physical_edges:
        raise ValueError(
            f"physical edge count {spec.n_physical_edges} cannot hold the "
            f"{len(tree_edges)} spanning-tree edges needed for connectivity"
        )
    intra_p = (
        spec.n_physical_edges
        if single_block
        else max(
            round(spec.intra_edge_fraction * spec.n_physical_edges),
            len(tree_edges),
        )
    )
    inter_p = spec.n_physical_edges - intra_p
    fill = _sample_intra(rng, blocks, intra_p - len(tree_edges), set(tree_edges))
    cross_p = _sample_inter(rng, names, block_of, inter_p)
    physical = Graph.build(
        [(u, v, 1.0) for u, v in tree_edges + fill + cross_p], extra_nodes=names
    )

    # conceptual: weighted intra and cross edges
    intra_c = (
        spec.n_conceptual_edges
        if single_block
        else round(spec.intra_edge_fraction * spec.n_conceptual_edges)
    )
    inter_c = spec.n_conceptual_edges - intra_c
    intra_pairs = _sample_intra(rng, blocks, intra_c, set())
    inter_pairs = _sample_inter(rng, names, block_of, inter_c)
    conceptual = Graph.build(
        _weighted(rng, intra_pairs, *spec.intra_weight_range)
        + _weighted(rng, inter_pairs, *spec.inter_weight_range),
        extra_nodes=names,
    )

    dual = load_dual_network(physical, conceptual)
    known = [frozenset(block) for block in blocks]
    return dual, known
