import { describe, expect, it } from "vitest";

import { bigResult, toyResult } from "./fixtures";
import { buildScene, MAX_VISIBLE_NODES, visibleCommunities } from "./graphView";

describe("buildScene", () => {
  it("gives every community its own color", () => {
    const scene = buildScene(toyResult(), "physical", null);
    const colorsByCommunity = new Map<number, Set<string>>();
    for (const node of scene.nodes) {
      const bucket = colorsByCommunity.get(node.community!) ?? new Set();
      bucket.add(node.color);
      colorsByCommunity.set(node.community!, bucket);
    }
    expect(colorsByCommunity.size).toBe(2);
    for (const bucket of colorsByCommunity.values()) {
      expect(bucket.size).toBe(1); // one color per community
    }
    const distinct = new Set(scene.nodes.map((n) => n.color));
    expect(distinct.size).toBe(2);
  });

  it("node membership matches the result document exactly", () => {
    const result = toyResult();
    for (const mode of ["physical", "conceptual"] as const) {
      const scene = buildScene(result, mode, null);
      for (const community of result.communities) {
        const expected =
          mode === "physical"
            ? community.physical_nodes
            : community.conceptual_nodes;
        const got = scene.nodes
          .filter((n) => n.community === community.rank)
          .map((n) => n.id)
          .sort();
        expect(got).toEqual([...expected].sort());
      }
    }
  });

  it("every scene edge comes from the result's induced edge lists", () => {
    const result = toyResult();
    const scene = buildScene(result, "conceptual", null);
    const allowed = new Set(
      result.communities.flatMap((c) =>
        c.conceptual_edges.map(([u, v]) => `${u}--${v}`),
      ),
    );
    for (const edge of scene.edges) {
      expect(allowed.has(`${edge.source}--${edge.target}`)).toBe(true);
    }
    expect(scene.edges.length).toBeGreaterThan(0);
  });

  it("selecting a community highlights it and dims the rest", () => {
    const scene = buildScene(toyResult(), "physical", 2);
    for (const node of scene.nodes) {
      expect(node.dimmed).toBe(node.community !== 2);
    }
    const litEdges = scene.edges.filter((e) => !e.dimmed);
    expect(litEdges.length).toBe(6); // the a-clique
    expect(scene.edges.some((e) => e.dimmed)).toBe(true);
  });

  it("renders identically across repeated builds (seeded layout)", () => {
    const result = toyResult();
    const first = buildScene(result, "physical", null);
    const second = buildScene(result, "physical", null);
    expect(second).toEqual(first);
  });

  it("a different layout seed moves the nodes", () => {
    const first = buildScene(toyResult(), "physical", null);
    const second = buildScene(toyResult({ layout_seed: 123 }), "physical", null);
    expect(second.nodes.map((n) => [n.x, n.y])).not.toEqual(
      first.nodes.map((n) => [n.x, n.y]),
    );
  });

  it("caps visible nodes at the limit, keeping the largest communities", () => {
    // 30 chains of 100 nodes = 3000 nodes total
    const result = bigResult(30, 100);
    const scene = buildScene(result, "physical", null);
    expect(scene.truncated).toBe(true);
    expect(scene.totalNodes).toBe(3000);
    expect(scene.nodes.length).toBeLessThanOrEqual(MAX_VISIBLE_NODES);
    expect(scene.nodes.length).toBe(2000); // 20 communities fit exactly
  });

  it("small results are never truncated", () => {
    const scene = buildScene(toyResult(), "physical", null);
    expect(scene.truncated).toBe(false);
    expect(scene.nodes.length).toBe(8);
  });
});

describe("visibleCommunities", () => {
  it("prefers larger communities and reports truncation", () => {
    const result = bigResult(3, 4); // 12 nodes in chains of 4
    const { kept, truncated } = visibleCommunities(
      result.communities,
      "physical",
      8,
    );
    expect(truncated).toBe(true);
    expect(kept.map((c) => c.rank)).toEqual([1, 2]); // equal sizes: rank order
  });

  it("keeps everything when under the cap", () => {
    const { kept, truncated } = visibleCommunities(
      toyResult().communities,
      "physical",
      2000,
    );
    expect(truncated).toBe(false);
    expect(kept).toHaveLength(2);
  });
});
