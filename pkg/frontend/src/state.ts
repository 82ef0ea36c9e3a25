import type { ExplorerClient } from "./api.js";
import { ApiError } from "./types.js";
import type { AnalyzeResponse, GraphDoc } from "./types.js";

export interface ExplorerView {
  graph: GraphDoc;
  revision: number;
  /** Analysis for exactly `analyzedRevision`; never shown against a newer graph. */
  analysis: AnalyzeResponse | null;
  analyzedRevision: number;
  pending: boolean;
  error: string | null;
}

type Listener = (view: ExplorerView) => void;

/**
 * Holds the edited graph plus the latest analysis. Every edit bumps a
 * monotonic revision counter and triggers one analyze call; at most one
 * request is in flight, and a newer edit aborts the stale one. A response
 * is applied only if its revision still matches, so the kappa badge can
 * never describe a graph the user no longer sees.
 */
export class ExplorerState {
  private graph: GraphDoc;
  private revision = 0;
  private analysis: AnalyzeResponse | null = null;
  private analyzedRevision = -1;
  private pending = false;
  private error: string | null = null;
  private controller: AbortController | null = null;
  private listeners: Listener[] = [];

  constructor(
    private readonly client: ExplorerClient,
    initial: GraphDoc,
  ) {
    this.graph = initial;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
    listener(this.view());
  }

  view(): ExplorerView {
    return {
      graph: this.graph,
      revision: this.revision,
      analysis: this.analyzedRevision === this.revision ? this.analysis : null,
      analyzedRevision: this.analyzedRevision,
      pending: this.pending,
      error: this.error,
    };
  }

  private emit(): void {
    const snapshot = this.view();
    for (const listener of this.listeners) listener(snapshot);
  }

  /** Replace the graph (edit or preset load) and re-analyze. */
  async setGraph(graph: GraphDoc): Promise<void> {
    this.graph = graph;
    this.revision += 1;
    await this.analyzeCurrent();
  }

  async refresh(): Promise<void> {
    await this.analyzeCurrent();
  }

  private async analyzeCurrent(): Promise<void> {
    const revision = this.revision;
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    this.pending = true;
    this.error = null;
    this.emit();
    try {
      const analysis = await this.client.analyze(this.graph, { signal: controller.signal });
      if (revision !== this.revision) return; // a newer edit superseded this call
      this.analysis = analysis;
      this.analyzedRevision = revision;
      this.pending = false;
      this.error = null;
    } catch (err) {
      if (controller.signal.aborted || revision !== this.revision) return;
      this.pending = false;
      this.error = err instanceof ApiError ? `${err.body.code}: ${err.body.message}` : String(err);
    }
    this.emit();
  }
}
