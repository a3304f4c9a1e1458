// Vertex positions for drawing. Wheel-like graphs (one hub adjacent to
// everything else) get a hub-and-rim layout; everything else starts on a
// circle and relaxes with a few spring iterations.

export interface Point {
  x: number;
  y: number;
}

interface EdgeEnds {
  u: number;
  v: number;
}

export function layout(
  n: number,
  edges: EdgeEnds[],
  size = 100,
): Point[] {
  const cx = size / 2;
  const cy = size / 2;
  const r = size * 0.4;
  const adj: Set<number>[] = Array.from({ length: n }, () => new Set());
  for (const { u, v } of edges) {
    adj[u].add(v);
    adj[v].add(u);
  }
  const hub = adj.findIndex((s) => s.size === n - 1);
  if (n > 3 && hub >= 0) {
    const rim = Array.from({ length: n }, (_, i) => i).filter((i) => i !== hub);
    const pts: Point[] = new Array(n);
    pts[hub] = { x: cx, y: cy };
    rim.forEach((v, i) => {
      const a = (2 * Math.PI * i) / rim.length - Math.PI / 2;
      pts[v] = { x: cx + r * Math.cos(a), y: cy + r * Math.sin(a) };
    });
    return pts;
  }
  const pts: Point[] = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return { x: cx + r * Math.cos(a), y: cy + r * Math.sin(a) };
  });
  relax(pts, edges, size);
  separate(pts, size);
  return pts;
}

// clamping can pile vertices up in a corner; push coincident ones apart
function separate(pts: Point[], size: number, minDist = 3) {
  for (let pass = 0; pass < 20; pass++) {
    let moved = false;
    for (let i = 0; i < pts.length; i++) {
      for (let j = i + 1; j < pts.length; j++) {
        const dx = pts[j].x - pts[i].x;
        const dy = pts[j].y - pts[i].y;
        const d = Math.hypot(dx, dy);
        if (d >= minDist) continue;
        const a = d === 0 ? (i * 2.4 + j) : Math.atan2(dy, dx);
        const push = (minDist - d) / 2 + 0.1;
        const ux = Math.cos(a);
        const uy = Math.sin(a);
        pts[i].x = clamp(pts[i].x - ux * push, size);
        pts[i].y = clamp(pts[i].y - uy * push, size);
        pts[j].x = clamp(pts[j].x + ux * push, size);
        pts[j].y = clamp(pts[j].y + uy * push, size);
        moved = true;
      }
    }
    if (!moved) return;
  }
}

function clamp(x: number, size: number): number {
  return Math.min(size * 0.97, Math.max(size * 0.03, x));
}

function relax(pts: Point[], edges: EdgeEnds[], size: number, iters = 60) {
  const n = pts.length;
  if (n < 3) return;
  const ideal = size * 0.35;
  for (let it = 0; it < iters; it++) {
    const force = pts.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pts[j].x - pts[i].x;
        const dy = pts[j].y - pts[i].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const rep = (ideal * ideal) / d2 / 8;
        force[i].x -= dx * rep;
        force[i].y -= dy * rep;
        force[j].x += dx * rep;
        force[j].y += dy * rep;
      }
    }
    for (const { u, v } of edges) {
      const dx = pts[v].x - pts[u].x;
      const dy = pts[v].y - pts[u].y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1;
      const pull = (d - ideal) / d / 10;
      force[u].x += dx * pull;
      force[u].y += dy * pull;
      force[v].x -= dx * pull;
      force[v].y -= dy * pull;
    }
    for (let i = 0; i < n; i++) {
      pts[i].x = Math.min(size * 0.95, Math.max(size * 0.05, pts[i].x + force[i].x));
      pts[i].y = Math.min(size * 0.95, Math.max(size * 0.05, pts[i].y + force[i].y));
    }
  }
}
