// Shared test fixtures shaped exactly like service result documents.

import type { ResultDocument } from "./types";

export function toyResult(overrides: Partial<ResultDocument> = {}): ResultDocument {
  return {
    kind: "communities",
    params: { delta: 2, k: 4, seed: 0, min_similarity: 0 },
    layout_seed: 1429089441,
    communities: [
      {
        rank: 1,
        score: 0.2404,
        physical_nodes: ["b1", "b2", "b3", "b4"],
        conceptual_nodes: ["b1", "b2", "b3", "b4"],
        physical_edges: [
          ["b1", "b2"],
          ["b1", "b3"],
          ["b1", "b4"],
          ["b2", "b3"],
          ["b2", "b4"],
          ["b3", "b4"],
        ],
        conceptual_edges: [
          ["b1", "b2", 0.9],
          ["b1", "b3", 0.85],
          ["b2", "b3", 0.8],
          ["b2", "b4", 0.9],
          ["b3", "b4", 0.95],
        ],
      },
      {
        rank: 2,
        score: 0.2404,
        physical_nodes: ["a1", "a2", "a3", "a4"],
        conceptual_nodes: ["a1", "a2", "a3", "a4"],
        physical_edges: [
          ["a1", "a2"],
          ["a1", "a3"],
          ["a1", "a4"],
          ["a2", "a3"],
          ["a2", "a4"],
          ["a3", "a4"],
        ],
        conceptual_edges: [
          ["a1", "a2", 0.95],
          ["a1", "a3", 0.9],
          ["a1", "a4", 0.92],
          ["a2", "a3", 0.98],
          ["a2", "a4", 0.94],
          ["a3", "a4", 0.96],
        ],
      },
    ],
    evaluation: null,
    ...overrides,
  };
}

export function bigResult(nCommunities: number, nodesEach: number): ResultDocument {
  const communities = [];
  for (let c = 1; c <= nCommunities; c++) {
    const nodes = Array.from({ length: nodesEach }, (_, i) => `c${c}n${i}`);
    const edges: [string, string][] = [];
    for (let i = 1; i < nodes.length; i++) {
      edges.push([nodes[i - 1]!, nodes[i]!]);
    }
    communities.push({
      rank: c,
      score: 1 / c,
      physical_nodes: nodes,
      conceptual_nodes: nodes,
      physical_edges: edges,
      conceptual_edges: edges.map(([u, v]) => [u, v, 0.5] as [string, string, number]),
    });
  }
  return {
    kind: "communities",
    params: { delta: 2, k: nCommunities, seed: 0, min_similarity: 0 },
    layout_seed: 7,
    communities,
    evaluation: null,
  };
}
