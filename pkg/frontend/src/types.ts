export interface GraphDoc {
  vertices: number;
  edges: Array<[number, number]>;
  pins: number[];
}

export interface StarStep {
  vertex: number;
  eta_pinned: number[];
  eta_unpinned: number[];
  epsilon: number;
}

export interface ThresholdEntry {
  d: number;
  value_num: number;
  value_den: number;
  valid: boolean;
}

export interface PlanLevel {
  vertex: number;
  epsilon: number;
  eta_pinned: number[];
  eta_unpinned: number[];
  condition: string;
  then: PlanLevel | null;
}

export interface AnalyzeResponse {
  validation: unknown[];
  order: number[];
  back_degrees: number[];
  steps: StarStep[];
  kappa: number;
  promoted_pin: number | null;
  thresholds: ThresholdEntry[];
  plan: { header: string; levels: PlanLevel | null };
}

export interface DismantleTrace {
  deletions: Array<[number, number]>;
  succeeded: boolean;
  k: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  details: unknown[];
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiErrorBody,
  ) {
    super(body.message);
  }
}
