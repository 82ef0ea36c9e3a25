import { ExplorerClient } from "./api.js";
import {
  addEdge,
  addVertex,
  pinToggleBlocked,
  removeEdge,
  removeLastVertex,
  hasEdge,
  togglePin,
} from "./graph.js";
import { PRESETS, presetByName } from "./presets.js";
import {
  circleLayout,
  drawGraph,
  drawThresholdChart,
  replayFrames,
  thresholdPoints,
  vertexAt,
} from "./render.js";
import { ExplorerState } from "./state.js";
import type { DismantleTrace, GraphDoc } from "./types.js";
import type { ReplayFrame } from "./render.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const client = new ExplorerClient("");
const state = new ExplorerState(client, presetByName("double-banana").graph);

const canvas = el<HTMLCanvasElement>("graph-canvas");
const chartCanvas = el<HTMLCanvasElement>("chart-canvas");
const badge = el<HTMLSpanElement>("kappa-badge");
const orderList = el<HTMLOListElement>("order-list");
const message = el<HTMLParagraphElement>("message");
const presetSelect = el<HTMLSelectElement>("preset-select");
const kSlider = el<HTMLInputElement>("k-slider");
const kLabel = el<HTMLSpanElement>("k-label");
const replaySlider = el<HTMLInputElement>("replay-slider");
const replayStatus = el<HTMLSpanElement>("replay-status");

let selectedVertex: number | null = null;
let replay: { trace: DismantleTrace; frames: ReplayFrame[] } | null = null;
let replayTimer: number | null = null;

for (const preset of PRESETS) {
  const option = document.createElement("option");
  option.value = preset.name;
  option.textContent = preset.title;
  presetSelect.appendChild(option);
}
presetSelect.value = "double-banana";

function currentFrame(): ReplayFrame | null {
  if (!replay) return null;
  return replay.frames[Number(replaySlider.value)] ?? null;
}

function redraw(graph: GraphDoc): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  drawGraph(ctx, graph, circleLayout(graph.vertices, canvas.width, canvas.height), currentFrame(), selectedVertex);
}

state.subscribe((view) => {
  redraw(view.graph);
  if (view.pending) {
    badge.textContent = "…";
    badge.className = "badge pending";
  } else if (view.analysis) {
    badge.textContent = String(view.analysis.kappa);
    badge.className = "badge";
  } else {
    badge.textContent = "?";
    badge.className = "badge stale";
  }
  message.textContent = view.error ?? "";
  orderList.replaceChildren();
  if (view.analysis) {
    view.analysis.steps.forEach((step) => {
      const item = document.createElement("li");
      const pins = step.eta_pinned.map((u) => `v${u}`).join(",");
      const free = step.eta_unpinned.map((u) => `v${u}`).join(",");
      item.textContent = `v${step.vertex}: back-degree ${step.epsilon}` +
        (pins ? ` | pins ${pins}` : "") + (free ? ` | earlier free ${free}` : "");
      orderList.appendChild(item);
    });
    const chartCtx = chartCanvas.getContext("2d");
    if (chartCtx) drawThresholdChart(chartCtx, thresholdPoints(view.analysis.thresholds));
  }
  replay = null;
  replaySlider.value = "0";
  replaySlider.max = "0";
  replayStatus.textContent = "";
});

canvas.addEventListener("click", (event) => {
  const rect = canvas.getBoundingClientRect();
  const graph = state.view().graph;
  const layout = circleLayout(graph.vertices, canvas.width, canvas.height);
  const hit = vertexAt(layout, event.clientX - rect.left, event.clientY - rect.top);
  if (hit === null) {
    selectedVertex = null;
    redraw(graph);
    return;
  }
  if (event.shiftKey) {
    if (selectedVertex !== null && selectedVertex !== hit) {
      try {
        const next = hasEdge(graph, selectedVertex, hit)
          ? removeEdge(graph, selectedVertex, hit)
          : addEdge(graph, selectedVertex, hit);
        selectedVertex = null;
        void state.setGraph(next);
      } catch (err) {
        message.textContent = String(err instanceof Error ? err.message : err);
      }
    } else {
      selectedVertex = hit;
      redraw(graph);
    }
    return;
  }
  const blocked = pinToggleBlocked(graph, hit);
  if (blocked) {
    message.textContent = blocked;
    return;
  }
  void state.setGraph(togglePin(graph, hit));
});

el<HTMLButtonElement>("add-vertex").addEventListener("click", () => {
  void state.setGraph(addVertex(state.view().graph));
});

el<HTMLButtonElement>("remove-vertex").addEventListener("click", () => {
  void state.setGraph(removeLastVertex(state.view().graph));
});

presetSelect.addEventListener("change", () => {
  selectedVertex = null;
  void state.setGraph(presetByName(presetSelect.value).graph);
});

kSlider.addEventListener("input", () => {
  kLabel.textContent = kSlider.value;
});

el<HTMLButtonElement>("run-dismantle").addEventListener("click", async () => {
  const graph = state.view().graph;
  const k = Number(kSlider.value);
  try {
    const trace = await client.dismantle(graph, k);
    replay = { trace, frames: replayFrames(graph, trace) };
    replaySlider.max = String(replay.frames.length - 1);
    replaySlider.value = "0";
    replayStatus.textContent = trace.succeeded
      ? `k=${k}: dismantled in ${trace.deletions.length} deletions`
      : `k=${k}: stuck with ${replay.frames[replay.frames.length - 1].stuck.length} blocked vertices`;
    if (replayTimer !== null) window.clearInterval(replayTimer);
    replayTimer = window.setInterval(() => {
      const next = Number(replaySlider.value) + 1;
      if (!replay || next >= replay.frames.length) {
        if (replayTimer !== null) window.clearInterval(replayTimer);
        replayTimer = null;
        return;
      }
      replaySlider.value = String(next);
      redraw(state.view().graph);
    }, 450);
  } catch (err) {
    message.textContent = String(err instanceof Error ? err.message : err);
  }
});

replaySlider.addEventListener("input", () => {
  redraw(state.view().graph);
});

void state.refresh();
