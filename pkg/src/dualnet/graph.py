"""Core data model for dual networks.

A dual network pairs an unweighted *physical* graph (hard connectivity,
e.g. binary interactions) with an edge-weighted *conceptual* graph
(association strength), over overlapping node sets. This module holds the
shared graph representation, the edge-list / similarity-file parsers and
the elementary operations every engine builds on.

Graphs are simple (no self-loops, no duplicate edges), undirected and
immutable after construction; node ids are opaque strings.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Mapping, Union

#: Absolute tolerance for all weight comparisons.
WEIGHT_TOL = 1e-9

TextSource = Union[str, IO[str]]


class ParseError(ValueError):
    """A malformed line in an edge-list or similarity file."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class LoadError(ValueError):
    """A dual network could not be assembled from its parts."""


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph. Unweighted graphs store weight 1.0 everywhere.

    ``adj`` maps each node to its neighbor->weight table; neighbor tables are
    built in sorted order so every iteration over the graph is deterministic.
    Instances are treated as immutable and are safe to share across threads.
    """

    nodes: frozenset[str]
    adj: Mapping[str, Mapping[str, float]]

    @classmethod
    def build(
        cls,
        edges: Iterable[tuple[str, str, float]],
        extra_nodes: Iterable[str] = (),
    ) -> "Graph":
        """Construct a graph from unique undirected edges.

        Endpoints are added to the node set automatically; ``extra_nodes``
        lets callers include isolated nodes. Self-loops, duplicate pairs and
        negative or non-finite weights are rejected outright: policy decisions
        (max-keep, loop dropping) belong to the parsers.
        """
        seen: dict[tuple[str, str], float] = {}
        nodes = set(extra_nodes)
        for u, v, w in edges:
            if u == v:
                raise ValueError(f"self-loop on node {u!r}")
            if not math.isfinite(w) or w < 0:
                raise ValueError(f"invalid edge weight {w!r} on ({u!r}, {v!r})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u!r}, {v!r})")
            seen[key] = w
            nodes.add(u)
            nodes.add(v)
        neighbor_sets: dict[str, dict[str, float]] = {n: {} for n in nodes}
        for (u, v), w in seen.items():
            neighbor_sets[u][v] = w
            neighbor_sets[v][u] = w
        adj = {
            n: {m: neighbor_sets[n][m] for m in sorted(neighbor_sets[n])}
            for n in sorted(nodes)
        }
        return cls(nodes=frozenset(nodes), adj=adj)

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj.values()) // 2

    def total_weight(self) -> float:
        """Sum of all edge weights (each edge counted once)."""
        return sum(w for _, _, w in self.edges())

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.adj.get(u, {})

    def weight(self, u: str, v: str) -> float:
        try:
            return self.adj[u][v]
        except KeyError:
            raise ValueError(f"no edge between {u!r} and {v!r}") from None

    def neighbors(self, v: str) -> Iterator[str]:
        """Neighbors of ``v`` in sorted order."""
        if v not in self.adj:
            raise ValueError(f"unknown node {v!r}")
        return iter(self.adj[v])

    def degree(self, v: str) -> float:
        """Weighted degree: sum of incident edge weights."""
        if v not in self.adj:
            raise ValueError(f"unknown node {v!r}")
        return sum(self.adj[v].values())

    def edges(self) -> Iterator[tuple[str, str, float]]:
        """All edges as (u, v, weight) with u < v, in sorted order."""
        for u in self.adj:
            for v, w in self.adj[u].items():
                if u < v:
                    yield u, v, w

    def is_unweighted(self) -> bool:
        return all(w == 1.0 for _, _, w in self.edges())


@dataclass(frozen=True)
class ParseStats:
    """Bookkeeping from a parse: lines dropped or collapsed by policy."""

    self_loops_dropped: int = 0
    duplicates_collapsed: int = 0


def _iter_lines(source: TextSource) -> Iterator[tuple[int, str]]:
    text = source if isinstance(source, str) else source.read()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line


def _parse_weight(token: str, line_no: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise ParseError(line_no, f"non-numeric weight {token!r}") from None
    if not math.isfinite(w):
        raise ParseError(line_no, f"non-finite weight {token!r}")
    if w < 0:
        raise ParseError(line_no, f"negative weight {token!r}")
    return w


def parse_edge_list_ex(
    source: TextSource, weighted: bool = False
) -> tuple[Graph, ParseStats]:
    """Parse a whitespace-separated edge list, returning the graph and stats.

    Each non-empty, non-comment ('#') line is ``u v`` for unweighted input or
    ``u v [weight]`` for weighted input (missing weight defaults to 1.0).
    Duplicate edge lines collapse to a single edge keeping the maximum weight;
    self-loop lines are dropped and counted.
    """
    edges: dict[tuple[str, str], float] = {}
    nodes: set[str] = set()
    loops = 0
    dups = 0
    for line_no, line in _iter_lines(source):
        tokens = line.split()
        if weighted:
            if len(tokens) not in (2, 3):
                raise ParseError(line_no, f"expected 2-3 tokens, got {len(tokens)}")
            w = _parse_weight(tokens[2], line_no) if len(tokens) == 3 else 1.0
        else:
            if len(tokens) != 2:
                raise ParseError(line_no, f"expected 2 tokens, got {len(tokens)}")
            w = 1.0
        u, v = tokens[0], tokens[1]
        nodes.add(u)
        nodes.add(v)
        if u == v:
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges:
            dups += 1
            edges[key] = max(edges[key], w)
        else:
            edges[key] = w
    graph = Graph.build(((u, v, w) for (u, v), w in edges.items()), extra_nodes=nodes)
    return graph, ParseStats(self_loops_dropped=loops, duplicates_collapsed=dups)


def parse_edge_list(source: TextSource, weighted: bool = False) -> Graph:
    """Parse an edge list; warns when self-loop lines were dropped."""
    graph, stats = parse_edge_list_ex(source, weighted=weighted)
    if stats.self_loops_dropped:
        warnings.warn(
            f"dropped {stats.self_loops_dropped} self-loop line(s)", stacklevel=2
        )
    return graph


def serialize_edge_list(g: Graph, weighted: bool = False) -> str:
    """Render a graph back to edge-list text (sorted, hence canonical).

    The format cannot express isolated nodes; parse(serialize(g)) == g holds
    for graphs where every node has at least one edge.
    """
    lines = []
    for u, v, w in g.edges():
        lines.append(f"{u} {v} {w!r}" if weighted else f"{u} {v}")
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class NodeMapping:
    """Pairs (physical id, conceptual id, similarity in [0, 1])."""

    pairs: tuple[tuple[str, str, float], ...]

    def __post_init__(self):
        seen = set()
        for p, c, s in self.pairs:
            if (p, c) in seen:
                raise ValueError(f"duplicate mapping pair ({p!r}, {c!r})")
            seen.add((p, c))
            if not (0.0 <= s <= 1.0):
                raise ValueError(f"similarity {s!r} outside [0, 1] for ({p!r}, {c!r})")

    def __len__(self) -> int:
        return len(self.pairs)

    def physical_ids(self) -> frozenset[str]:
        return frozenset(p for p, _, _ in self.pairs)

    def conceptual_ids(self) -> frozenset[str]:
        return frozenset(c for _, c, _ in self.pairs)


def parse_similarity(source: TextSource) -> NodeMapping:
    """Parse a node-mapping file: ``physical conceptual [similarity]`` lines.

    Missing similarity defaults to 1.0; repeated (physical, conceptual) pairs
    keep the last occurrence.
    """
    pairs: dict[tuple[str, str], float] = {}
    for line_no, line in _iter_lines(source):
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise ParseError(line_no, f"expected 2-3 tokens, got {len(tokens)}")
        if len(tokens) == 3:
            try:
                s = float(tokens[2])
            except ValueError:
                raise ParseError(
                    line_no, f"non-numeric similarity {tokens[2]!r}"
                ) from None
            if not (0.0 <= s <= 1.0):
                raise ParseError(line_no, f"similarity {tokens[2]!r} outside [0, 1]")
        else:
            s = 1.0
        pairs[(tokens[0], tokens[1])] = s
    ordered = tuple((p, c, s) for (p, c), s in pairs.items())
    return NodeMapping(pairs=ordered)


@dataclass(frozen=True)
class DualNetwork:
    """An unweighted physical graph and a weighted conceptual graph, plus the
    node mapping tying them together."""

    physical: Graph
    conceptual: Graph
    mapping: NodeMapping


def load_dual_network(
    physical: Graph,
    conceptual: Graph,
    mapping: NodeMapping | None = None,
) -> DualNetwork:
    """Assemble and validate a dual network.

    Without an explicit mapping, the identity mapping over the node-set
    intersection (similarity 1.0) is constructed; disjoint node sets are then
    a load error. Every mapping pair must reference existing nodes.
    """
    if not physical.is_unweighted():
        raise LoadError("physical network must be unweighted (all weights 1.0)")
    if mapping is None:
        shared = sorted(physical.nodes & conceptual.nodes)
        if not shared:
            raise LoadError("disjoint node sets and no similarity file")
        mapping = NodeMapping(pairs=tuple((n, n, 1.0) for n in shared))
    if not mapping.pairs:
        raise LoadError("empty node mapping")
    for p, c, _ in mapping.pairs:
        if p not in physical.nodes:
            raise LoadError(f"mapping references unknown physical node {p!r}")
        if c not in conceptual.nodes:
            raise LoadError(f"mapping references unknown conceptual node {c!r}")
    return DualNetwork(physical=physical, conceptual=conceptual, mapping=mapping)


def induced_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    """Subgraph on node set ``s``: exactly the edges with both endpoints in s."""
    keep = frozenset(s)
    missing = keep - g.nodes
    if missing:
        raise ValueError(f"nodes not in graph: {sorted(missing)!r}")
    edges = [(u, v, w) for u, v, w in g.edges() if u in keep and v in keep]
    return Graph.build(edges, extra_nodes=keep)


def connected_components(g: Graph) -> list[frozenset[str]]:
    """Maximal connected node sets, largest first, ties by smallest member."""
    seen: set[str] = set()
    components: list[frozenset[str]] = []
    for start in sorted(g.nodes):
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        seen.add(start)
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u not in comp:
                    comp.add(u)
                    seen.add(u)
                    stack.append(u)
        components.append(frozenset(comp))
    components.sort(key=lambda c: (-len(c), min(c)))
    return components


def weighted_degree(g: Graph, v: str) -> float:
    """Sum of the weights of edges incident to ``v``."""
    return g.degree(v)
