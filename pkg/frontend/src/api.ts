import { ApiError } from "./types.js";
import type { AnalyzeResponse, ApiErrorBody, DismantleTrace, GraphDoc } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client for the explorer endpoints; the graph rides in every body. */
export class ExplorerClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    if (!response.ok) {
      const errorBody = (await response.json()) as ApiErrorBody;
      throw new ApiError(response.status, errorBody);
    }
    return (await response.json()) as T;
  }

  analyze(
    graph: GraphDoc,
    options: { pins?: number[]; dims?: number[]; signal?: AbortSignal } = {},
  ): Promise<AnalyzeResponse> {
    const body: Record<string, unknown> = { graph };
    if (options.pins !== undefined) body.pins = options.pins;
    if (options.dims !== undefined) body.dims = options.dims;
    return this.post<AnalyzeResponse>("/analyze", body, options.signal);
  }

  dismantle(
    graph: GraphDoc,
    k: number,
    options: { policy?: { kind: string; seed?: number }; signal?: AbortSignal } = {},
  ): Promise<DismantleTrace> {
    const body: Record<string, unknown> = { graph, k };
    if (options.policy !== undefined) body.policy = options.policy;
    return this.post<DismantleTrace>("/dismantle", body, options.signal);
  }
}
