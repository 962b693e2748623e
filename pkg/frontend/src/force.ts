/** Deterministic force-directed layout: same graph + seed = same picture. */

export interface Point {
  x: number;
  y: number;
}

/** Small fast PRNG with full 32-bit state; good enough for layout jitter. */
export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width: number;
  height: number;
  seed: number;
  iterations?: number;
  springLength?: number;
}

export function layoutGraph(
  nodeIds: string[],
  edges: [string, string][],
  options: LayoutOptions,
): Map<string, Point> {
  const { width, height, seed } = options;
  const iterations = options.iterations ?? 250;
  const springLength = options.springLength ?? Math.min(width, height) / 6;
  const rng = mulberry32(seed);

  const index = new Map(nodeIds.map((id, i) => [id, i]));
  const xs = nodeIds.map(() => (rng() - 0.5) * width * 0.8 + width / 2);
  const ys = nodeIds.map(() => (rng() - 0.5) * height * 0.8 + height / 2);
  const links: [number, number][] = [];
  for (const [a, b] of edges) {
    const i = index.get(a);
    const j = index.get(b);
    if (i !== undefined && j !== undefined && i !== j) links.push([i, j]);
  }

  const count = nodeIds.length;
  const repulsion = springLength * springLength;
  for (let step = 0; step < iterations; step++) {
    const temperature = 0.1 * Math.min(width, height) * (1 - step / iterations);
    const fx = new Array<number>(count).fill(0);
    const fy = new Array<number>(count).fill(0);

    for (let i = 0; i < count; i++) {
      for (let j = i + 1; j < count; j++) {
        let dx = xs[i]! - xs[j]!;
        let dy = ys[i]! - ys[j]!;
        let dist2 = dx * dx + dy * dy;
        if (dist2 < 0.01) {
          // deterministic nudge for coincident nodes
          dx = 0.1 * (((i * 31 + j) % 7) - 3);
          dy = 0.1 * (((i * 17 + j) % 5) - 2);
          dist2 = dx * dx + dy * dy;
        }
        const push = repulsion / dist2;
        fx[i]! += dx * push * 0.01;
        fy[i]! += dy * push * 0.01;
        fx[j]! -= dx * push * 0.01;
        fy[j]! -= dy * push * 0.01;
      }
    }
    for (const [i, j] of links) {
      const dx = xs[j]! - xs[i]!;
      const dy = ys[j]! - ys[i]!;
      const dist = Math.sqrt(dx * dx + dy * dy) || 0.1;
      const pull = ((dist - springLength) / dist) * 0.05;
      fx[i]! += dx * pull;
      fy[i]! += dy * pull;
      fx[j]! -= dx * pull;
      fy[j]! -= dy * pull;
    }
    for (let i = 0; i < count; i++) {
      fx[i]! += (width / 2 - xs[i]!) * 0.005;
      fy[i]! += (height / 2 - ys[i]!) * 0.005;
      const magnitude = Math.sqrt(fx[i]! * fx[i]! + fy[i]! * fy[i]!) || 1;
      const clamp = Math.min(magnitude, temperature) / magnitude;
      xs[i] = Math.max(10, Math.min(width - 10, xs[i]! + fx[i]! * clamp));
      ys[i] = Math.max(10, Math.min(height - 10, ys[i]! + fy[i]! * clamp));
    }
  }

  const positions = new Map<string, Point>();
  nodeIds.forEach((id, i) => positions.set(id, { x: xs[i]!, y: ys[i]! }));
  return positions;
}
