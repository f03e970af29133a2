/** Small deterministic force layout; presentation only.
 *
 * Nodes start on a circle in id order and relax under spring forces along
 * edges plus pairwise repulsion, a fixed number of steps. No randomness,
 * so the same graph always lands in the same place.
 */

export interface LayoutPoint {
  id: number;
  x: number;
  y: number;
}

export interface LayoutEdge {
  src: number;
  dst: number;
}

const STEPS = 250;
const SPRING_LENGTH = 160;
const SPRING_K = 0.02;
const REPULSION = 12000;
const STEP_LIMIT = 12;

export function layoutGraph(nodeIds: number[], edges: LayoutEdge[],
                            width = 800, height = 520): LayoutPoint[] {
  const n = nodeIds.length;
  if (n === 0) return [];
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 3;
  const points = nodeIds.map((id, i) => ({
    id,
    x: cx + radius * Math.cos((2 * Math.PI * i) / n),
    y: cy + radius * Math.sin((2 * Math.PI * i) / n),
  }));
  if (n === 1) {
    points[0].x = cx;
    points[0].y = cy;
    return points;
  }
  const index = new Map(nodeIds.map((id, i) => [id, i]));

  for (let step = 0; step < STEPS; step += 1) {
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let i = 0; i < n; i += 1) {
      for (let j = i + 1; j < n; j += 1) {
        const dx = points[i].x - points[j].x;
        const dy = points[i].y - points[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const f = REPULSION / d2;
        const d = Math.sqrt(d2);
        fx[i] += (f * dx) / d;
        fy[i] += (f * dy) / d;
        fx[j] -= (f * dx) / d;
        fy[j] -= (f * dy) / d;
      }
    }
    for (const edge of edges) {
      const i = index.get(edge.src);
      const j = index.get(edge.dst);
      if (i === undefined || j === undefined || i === j) continue;
      const dx = points[j].x - points[i].x;
      const dy = points[j].y - points[i].y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const f = SPRING_K * (d - SPRING_LENGTH);
      fx[i] += (f * dx) / d;
      fy[i] += (f * dy) / d;
      fx[j] -= (f * dx) / d;
      fy[j] -= (f * dy) / d;
    }
    const cool = 1 - step / STEPS;
    for (let i = 0; i < n; i += 1) {
      const limit = STEP_LIMIT * cool + 0.5;
      points[i].x += Math.max(-limit, Math.min(limit, fx[i]));
      points[i].y += Math.max(-limit, Math.min(limit, fy[i]));
      points[i].x = Math.max(20, Math.min(width - 20, points[i].x));
      points[i].y = Math.max(20, Math.min(height - 20, points[i].y));
    }
  }
  return points;
}
