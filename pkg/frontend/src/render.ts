import { pinToggleBlocked, degreeOf } from "./graph.js";
import type { GraphDoc, DismantleTrace, ThresholdEntry } from "./types.js";

export interface LayoutPoint {
  x: number;
  y: number;
}

/** Deterministic circle layout; stable under pin toggles and edge edits. */
export function circleLayout(n: number, width: number, height: number): Map<number, LayoutPoint> {
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.max(20, Math.min(width, height) / 2 - 40);
  const out = new Map<number, LayoutPoint>();
  for (let v = 1; v <= n; v++) {
    const angle = (2 * Math.PI * (v - 1)) / Math.max(n, 1) - Math.PI / 2;
    out.set(v, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return out;
}

export function vertexAt(
  layout: Map<number, LayoutPoint>,
  x: number,
  y: number,
  radius = 16,
): number | null {
  for (const [v, p] of layout) {
    if ((p.x - x) ** 2 + (p.y - y) ** 2 <= radius * radius) return v;
  }
  return null;
}

export interface ReplayFrame {
  /** Vertices already deleted at this frame, in deletion order. */
  deleted: number[];
  /** Unpinned vertices that can never be deleted at this budget. */
  stuck: number[];
}

/** Expand a dismantle trace into per-step frames for the replay slider. */
export function replayFrames(graph: GraphDoc, trace: DismantleTrace): ReplayFrame[] {
  const frames: ReplayFrame[] = [{ deleted: [], stuck: [] }];
  const deleted: number[] = [];
  for (const [v] of trace.deletions) {
    deleted.push(v);
    frames.push({ deleted: [...deleted], stuck: [] });
  }
  if (!trace.succeeded) {
    const gone = new Set(deleted);
    const stuck: number[] = [];
    for (let v = 1; v <= graph.vertices; v++) {
      if (gone.has(v) || graph.pins.includes(v)) continue;
      const remaining = {
        ...graph,
        edges: graph.edges.filter(([a, b]) => !gone.has(a) && !gone.has(b)),
      };
      if (degreeOf(remaining, v) > trace.k) stuck.push(v);
    }
    frames[frames.length - 1] = { deleted: [...deleted], stuck };
  }
  return frames;
}

export function drawGraph(
  ctx: CanvasRenderingContext2D,
  graph: GraphDoc,
  layout: Map<number, LayoutPoint>,
  frame: ReplayFrame | null,
  selected: number | null,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const deleted = new Set(frame?.deleted ?? []);
  const stuck = new Set(frame?.stuck ?? []);

  ctx.lineWidth = 1.5;
  for (const [a, b] of graph.edges) {
    const pa = layout.get(a);
    const pb = layout.get(b);
    if (!pa || !pb) continue;
    ctx.strokeStyle = deleted.has(a) || deleted.has(b) ? "#d8d8d8" : "#5a5a5a";
    ctx.beginPath();
    ctx.moveTo(pa.x, pa.y);
    ctx.lineTo(pb.x, pb.y);
    ctx.stroke();
  }

  for (let v = 1; v <= graph.vertices; v++) {
    const p = layout.get(v);
    if (!p) continue;
    const isPin = graph.pins.includes(v);
    ctx.beginPath();
    ctx.arc(p.x, p.y, 14, 0, 2 * Math.PI);
    if (deleted.has(v)) ctx.fillStyle = "#eeeeee";
    else if (stuck.has(v)) ctx.fillStyle = "#e4572e";
    else if (isPin) ctx.fillStyle = "#1d70b8";
    else ctx.fillStyle = "#ffffff";
    ctx.fill();
    ctx.strokeStyle = v === selected ? "#e4572e" : "#333333";
    ctx.lineWidth = v === selected ? 3 : 1.5;
    ctx.stroke();
    ctx.fillStyle = isPin && !deleted.has(v) ? "#ffffff" : "#333333";
    ctx.font = "12px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(`v${v}`, p.x, p.y);
  }
}

export interface ChartPoint {
  d: number;
  value: number;
  valid: boolean;
}

export function thresholdPoints(entries: ThresholdEntry[]): ChartPoint[] {
  return entries.map((e) => ({ d: e.d, value: e.value_num / e.value_den, valid: e.valid }));
}

export function drawThresholdChart(ctx: CanvasRenderingContext2D, points: ChartPoint[]): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  if (points.length === 0) return;
  const pad = 28;
  const maxValue = Math.max(...points.map((p) => p.value), 1);
  const xOf = (i: number) => pad + (i * (width - 2 * pad)) / Math.max(points.length - 1, 1);
  const yOf = (v: number) => height - pad - (v / maxValue) * (height - 2 * pad);

  points.forEach((p, i) => {
    // shade dimensions with no nontrivial threshold (d <= k)
    if (!p.valid) {
      ctx.fillStyle = "rgba(228, 87, 46, 0.12)";
      const half = (width - 2 * pad) / Math.max(points.length - 1, 1) / 2;
      ctx.fillRect(xOf(i) - half, pad, 2 * half, height - 2 * pad);
    }
  });

  ctx.strokeStyle = "#1d70b8";
  ctx.lineWidth = 2;
  ctx.beginPath();
  points.forEach((p, i) => {
    if (i === 0) ctx.moveTo(xOf(i), yOf(p.value));
    else ctx.lineTo(xOf(i), yOf(p.value));
  });
  ctx.stroke();

  ctx.fillStyle = "#333333";
  ctx.font = "11px sans-serif";
  ctx.textAlign = "center";
  points.forEach((p, i) => {
    ctx.beginPath();
    ctx.arc(xOf(i), yOf(p.value), 3.5, 0, 2 * Math.PI);
    ctx.fillStyle = p.valid ? "#1d70b8" : "#e4572e";
    ctx.fill();
    ctx.fillStyle = "#333333";
    ctx.fillText(`d=${p.d}`, xOf(i), height - 10);
    ctx.fillText(p.value.toFixed(2), xOf(i), yOf(p.value) - 10);
  });
}

export function pinTooltip(graph: GraphDoc, v: number): string {
  const blocked = pinToggleBlocked(graph, v);
  if (blocked) return blocked;
  return graph.pins.includes(v) ? `unpin v${v}` : `pin v${v}`;
}
