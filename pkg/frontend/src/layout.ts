// Seeded force-directed layout. Same nodes + edges + seed always yield
// the exact same coordinates, so a result document renders identically
// across refreshes and machines.

export interface Point {
  x: number;
  y: number;
}

// Small fast PRNG with full 32-bit state; good enough for layout jitter.
export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) | 0;
    let t = Math.imul(state ^ (state >>> 15), 1 | state);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function iterationsFor(n: number): number {
  if (n <= 200) return 200;
  if (n <= 800) return 80;
  return 30;
}

/**
 * Fruchterman-Reingold style layout in the unit square.
 *
 * Node ids are sorted internally, so caller-side ordering cannot change
 * the result. Edges to unknown nodes are ignored.
 */
export function forceLayout(
  nodeIds: readonly string[],
  edges: readonly (readonly [string, string])[],
  seed: number,
  iterations?: number,
): Map<string, Point> {
  const ids = [...new Set(nodeIds)].sort();
  const n = ids.length;
  const positions = new Map<string, Point>();
  if (n === 0) return positions;
  const rng = mulberry32(seed);
  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    xs[i] = rng();
    ys[i] = rng();
  }
  if (n === 1) {
    positions.set(ids[0]!, { x: 0.5, y: 0.5 });
    return positions;
  }
  const index = new Map(ids.map((id, i) => [id, i]));
  const pairs: number[] = [];
  for (const [a, b] of edges) {
    const i = index.get(a);
    const j = index.get(b);
    if (i !== undefined && j !== undefined && i !== j) {
      pairs.push(i, j);
    }
  }
  const k = Math.sqrt(1 / n); // ideal spring length
  const rounds = iterations ?? iterationsFor(n);
  const dx = new Float64Array(n);
  const dy = new Float64Array(n);
  for (let round = 0; round < rounds; round++) {
    const temperature = 0.1 * (1 - round / rounds) + 0.002;
    dx.fill(0);
    dy.fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let ex = xs[i]! - xs[j]!;
        let ey = ys[i]! - ys[j]!;
        let dist2 = ex * ex + ey * ey;
        if (dist2 < 1e-9) {
          // deterministic nudge for coincident points
          ex = 1e-4 * (1 + ((i * 31 + j) % 7));
          ey = 1e-4 * (1 + ((i * 17 + j) % 5));
          dist2 = ex * ex + ey * ey;
        }
        const dist = Math.sqrt(dist2);
        const repulse = (k * k) / dist2;
        dx[i]! += ex * repulse;
        dy[i]! += ey * repulse;
        dx[j]! -= ex * repulse;
        dy[j]! -= ey * repulse;
      }
    }
    for (let e = 0; e < pairs.length; e += 2) {
      const i = pairs[e]!;
      const j = pairs[e + 1]!;
      const ex = xs[i]! - xs[j]!;
      const ey = ys[i]! - ys[j]!;
      const dist = Math.sqrt(ex * ex + ey * ey) || 1e-6;
      const attract = dist / k;
      const fx = (ex / dist) * attract * 0.01;
      const fy = (ey / dist) * attract * 0.01;
      dx[i]! -= fx;
      dy[i]! -= fy;
      dx[j]! += fx;
      dy[j]! += fy;
    }
    for (let i = 0; i < n; i++) {
      const len = Math.sqrt(dx[i]! * dx[i]! + dy[i]! * dy[i]!) || 1e-9;
      const step = Math.min(len, temperature);
      xs[i] = Math.min(1, Math.max(0, xs[i]! + (dx[i]! / len) * step));
      ys[i] = Math.min(1, Math.max(0, ys[i]! + (dy[i]! / len) * step));
    }
  }
  for (let i = 0; i < n; i++) {
    positions.set(ids[i]!, { x: xs[i]!, y: ys[i]! });
  }
  return positions;
}
