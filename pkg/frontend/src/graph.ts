import type { GraphDoc } from "./types.js";

/** Edge key independent of endpoint order. */
export function edgeKey(a: number, b: number): string {
  return a < b ? `${a}-${b}` : `${b}-${a}`;
}

export function hasEdge(g: GraphDoc, a: number, b: number): boolean {
  return g.edges.some(([u, v]) => edgeKey(u, v) === edgeKey(a, b));
}

export function neighborsOf(g: GraphDoc, v: number): number[] {
  const out: number[] = [];
  for (const [a, b] of g.edges) {
    if (a === v) out.push(b);
    else if (b === v) out.push(a);
  }
  return out.sort((x, y) => x - y);
}

export function degreeOf(g: GraphDoc, v: number): number {
  return neighborsOf(g, v).length;
}

/**
 * Reason a pin toggle on `v` must be blocked, or null if it is allowed.
 * Pinning is blocked exactly when a neighbor is already pinned, which is
 * the same independence rule the server enforces with a 400 response.
 * Unpinning is always allowed.
 */
export function pinToggleBlocked(g: GraphDoc, v: number): string | null {
  if (g.pins.includes(v)) return null;
  const pinned = new Set(g.pins);
  const offending = neighborsOf(g, v).filter((u) => pinned.has(u));
  if (offending.length === 0) return null;
  return `cannot pin v${v}: adjacent pin${offending.length > 1 ? "s" : ""} ${offending
    .map((u) => `v${u}`)
    .join(", ")} (pins must be independent)`;
}

export function togglePin(g: GraphDoc, v: number): GraphDoc {
  if (pinToggleBlocked(g, v) !== null) throw new Error("blocked pin toggle");
  const pins = g.pins.includes(v)
    ? g.pins.filter((p) => p !== v)
    : [...g.pins, v].sort((x, y) => x - y);
  return { ...g, pins };
}

export function addVertex(g: GraphDoc): GraphDoc {
  return { ...g, vertices: g.vertices + 1 };
}

export function addEdge(g: GraphDoc, a: number, b: number): GraphDoc {
  if (a === b) throw new Error("self loops are not allowed");
  if (a < 1 || b < 1 || a > g.vertices || b > g.vertices) throw new Error("unknown vertex");
  if (hasEdge(g, a, b)) throw new Error("edge already present");
  if (g.pins.includes(a) && g.pins.includes(b)) {
    throw new Error(`edge (v${a},v${b}) would join two pins`);
  }
  const edges = [...g.edges, [Math.min(a, b), Math.max(a, b)] as [number, number]];
  edges.sort((e, f) => e[0] - f[0] || e[1] - f[1]);
  return { ...g, edges };
}

export function removeEdge(g: GraphDoc, a: number, b: number): GraphDoc {
  return { ...g, edges: g.edges.filter(([u, v]) => edgeKey(u, v) !== edgeKey(a, b)) };
}

/** Remove the highest-numbered vertex along with its edges and pin flag. */
export function removeLastVertex(g: GraphDoc): GraphDoc {
  if (g.vertices === 0) return g;
  const v = g.vertices;
  return {
    vertices: v - 1,
    edges: g.edges.filter(([a, b]) => a !== v && b !== v),
    pins: g.pins.filter((p) => p !== v),
  };
}

/** Local mirror of the server-side invariant report; [] means valid. */
export function validateLocal(g: GraphDoc): string[] {
  const problems: string[] = [];
  const seen = new Set<string>();
  for (const [a, b] of g.edges) {
    if (a === b) problems.push(`self loop at v${a}`);
    if (a < 1 || b < 1 || a > g.vertices || b > g.vertices) {
      problems.push(`edge (v${a},v${b}) leaves the vertex range`);
    }
    const key = edgeKey(a, b);
    if (seen.has(key)) problems.push(`duplicate edge (v${a},v${b})`);
    seen.add(key);
    if (g.pins.includes(a) && g.pins.includes(b)) {
      problems.push(`edge (v${a},v${b}) joins two pins`);
    }
  }
  for (const p of g.pins) {
    if (p < 1 || p > g.vertices) problems.push(`pin v${p} leaves the vertex range`);
  }
  return problems;
}
