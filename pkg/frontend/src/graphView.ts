// Pure scene construction: a result document plus a view mode become a
// positioned, colored node-link scene. Rendering to SVG happens
// elsewhere; keeping this pure makes highlight/layout behavior testable.

import { colorForCommunity, UNASSIGNED_COLOR } from "./colors";
import { forceLayout } from "./layout";
import type { CommunityEntry, ResultDocument, ViewMode } from "./types";

export const MAX_VISIBLE_NODES = 2000;

export interface SceneNode {
  id: string;
  x: number;
  y: number;
  color: string;
  community: number | null;
  dimmed: boolean;
}

export interface SceneEdge {
  source: string;
  target: string;
  weight: number | null;
  dimmed: boolean;
}

export interface Scene {
  nodes: SceneNode[];
  edges: SceneEdge[];
  truncated: boolean;
  totalNodes: number;
}

function nodesOf(community: CommunityEntry, mode: ViewMode): string[] {
  return mode === "physical"
    ? community.physical_nodes
    : community.conceptual_nodes;
}

function edgesOf(
  community: CommunityEntry,
  mode: ViewMode,
): [string, string, number | null][] {
  if (mode === "physical") {
    return community.physical_edges.map(([u, v]) => [u, v, null]);
  }
  return community.conceptual_edges.map(([u, v, w]) => [u, v, w]);
}

/**
 * Pick the communities to show, largest first, until the node cap is hit.
 * Equal sizes fall back to rank order so the choice is stable.
 */
export function visibleCommunities(
  communities: readonly CommunityEntry[],
  mode: ViewMode,
  cap: number = MAX_VISIBLE_NODES,
): { kept: CommunityEntry[]; truncated: boolean } {
  const bySize = [...communities].sort(
    (a, b) => nodesOf(b, mode).length - nodesOf(a, mode).length || a.rank - b.rank,
  );
  const kept: CommunityEntry[] = [];
  const seen = new Set<string>();
  let truncated = false;
  for (const community of bySize) {
    const fresh = nodesOf(community, mode).filter((v) => !seen.has(v));
    if (seen.size + fresh.length > cap) {
      truncated = true;
      continue;
    }
    fresh.forEach((v) => seen.add(v));
    kept.push(community);
  }
  kept.sort((a, b) => a.rank - b.rank);
  return { kept, truncated };
}

export function buildScene(
  result: ResultDocument,
  mode: ViewMode,
  selectedRank: number | null,
  cap: number = MAX_VISIBLE_NODES,
): Scene {
  const { kept, truncated } = visibleCommunities(result.communities, mode, cap);
  const communityOf = new Map<string, number>();
  for (const community of kept) {
    for (const id of nodesOf(community, mode)) {
      // overlapping projections keep the best (lowest) rank
      const existing = communityOf.get(id);
      if (existing === undefined || community.rank < existing) {
        communityOf.set(id, community.rank);
      }
    }
  }
  const nodeIds = [...communityOf.keys()].sort();
  const edgeList: [string, string, number | null][] = [];
  for (const community of kept) {
    for (const [u, v, w] of edgesOf(community, mode)) {
      if (communityOf.has(u) && communityOf.has(v)) {
        edgeList.push([u, v, w]);
      }
    }
  }
  const positions = forceLayout(
    nodeIds,
    edgeList.map(([u, v]) => [u, v] as const),
    result.layout_seed,
  );
  const nodes: SceneNode[] = nodeIds.map((id) => {
    const rank = communityOf.get(id) ?? null;
    const point = positions.get(id)!;
    return {
      id,
      x: point.x,
      y: point.y,
      color: rank === null ? UNASSIGNED_COLOR : colorForCommunity(rank),
      community: rank,
      dimmed: selectedRank !== null && rank !== selectedRank,
    };
  });
  const edges: SceneEdge[] = edgeList.map(([u, v, w]) => ({
    source: u,
    target: v,
    weight: w,
    dimmed:
      selectedRank !== null &&
      (communityOf.get(u) !== selectedRank ||
        communityOf.get(v) !== selectedRank),
  }));
  const totalNodes = new Set(
    result.communities.flatMap((c) => nodesOf(c, mode)),
  ).size;
  return { nodes, edges, truncated, totalNodes };
}
