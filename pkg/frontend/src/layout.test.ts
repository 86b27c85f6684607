import { describe, expect, it } from "vitest";

import { forceLayout, mulberry32 } from "./layout";

const NODES = ["a", "b", "c", "d", "e"];
const EDGES: [string, string][] = [
  ["a", "b"],
  ["b", "c"],
  ["c", "d"],
  ["d", "e"],
];

describe("mulberry32", () => {
  it("is reproducible per seed", () => {
    const a = mulberry32(42);
    const b = mulberry32(42);
    const seqA = [a(), a(), a()];
    const seqB = [b(), b(), b()];
    expect(seqA).toEqual(seqB);
  });

  it("different seeds diverge", () => {
    expect(mulberry32(1)()).not.toBe(mulberry32(2)());
  });

  it("stays in [0, 1)", () => {
    const rng = mulberry32(7);
    for (let i = 0; i < 1000; i++) {
      const value = rng();
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThan(1);
    }
  });
});

describe("forceLayout", () => {
  it("same inputs give bit-identical positions", () => {
    const first = forceLayout(NODES, EDGES, 99);
    const second = forceLayout(NODES, EDGES, 99);
    expect(Object.fromEntries(first)).toEqual(Object.fromEntries(second));
  });

  it("node order does not matter", () => {
    const sorted = forceLayout(NODES, EDGES, 5);
    const shuffled = forceLayout(["e", "c", "a", "d", "b"], EDGES, 5);
    expect(Object.fromEntries(shuffled)).toEqual(Object.fromEntries(sorted));
  });

  it("seed changes the layout", () => {
    const one = forceLayout(NODES, EDGES, 1);
    const two = forceLayout(NODES, EDGES, 2);
    expect(Object.fromEntries(one)).not.toEqual(Object.fromEntries(two));
  });

  it("keeps every node inside the unit square", () => {
    const positions = forceLayout(NODES, EDGES, 3);
    for (const point of positions.values()) {
      expect(point.x).toBeGreaterThanOrEqual(0);
      expect(point.x).toBeLessThanOrEqual(1);
      expect(point.y).toBeGreaterThanOrEqual(0);
      expect(point.y).toBeLessThanOrEqual(1);
    }
  });

  it("pulls connected nodes closer than the graph diameter", () => {
    const positions = forceLayout(NODES, EDGES, 11);
    const dist = (u: string, v: string) => {
      const a = positions.get(u)!;
      const b = positions.get(v)!;
      return Math.hypot(a.x - b.x, a.y - b.y);
    };
    // adjacent pair should end up closer than the chain's two endpoints
    expect(dist("a", "b")).toBeLessThan(dist("a", "e"));
  });

  it("handles empty, single and unknown-edge inputs", () => {
    expect(forceLayout([], [], 0).size).toBe(0);
    expect(forceLayout(["only"], [], 0).get("only")).toEqual({ x: 0.5, y: 0.5 });
    const positions = forceLayout(["a", "b"], [["a", "zz"]], 0);
    expect(positions.size).toBe(2);
  });
});
