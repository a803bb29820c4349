// Shapes of the HTTP API payloads the UI consumes. The UI never derives
// scores or points itself; these are display contracts only.

export interface Vocabularies {
  datasets: readonly string[];
  ml_models: readonly string[];
  libraries: readonly string[];
  schemes: readonly string[];
  nonlinear_functions: readonly string[];
}

export interface MetaResponse {
  catalog_version: number;
  factors: readonly string[];
  ui_scale_bound: number;
  vocabularies: Vocabularies;
}

export type FactorPoints = Readonly<Record<string, number>>;

export interface FrameworkSummary {
  id: string;
  name: string;
  technique: string;
  factor_vector: FactorPoints;
}

export interface ListResponse {
  catalog_version: number;
  total: number;
  frameworks: readonly FrameworkSummary[];
}

export interface RankRow {
  id: string;
  score: number;
  factor_vector: FactorPoints;
}

export interface RankResponse {
  catalog_version: number;
  weights_used: readonly number[];
  ranking: readonly RankRow[];
}

export interface ResultRow {
  dataset: string;
  model: string;
  accuracy: number;
  source: string;
  inference_time: number | null;
  memory: number | null;
  communication: number | null;
}

export interface DetailResponse {
  catalog_version: number;
  framework: Record<string, unknown>;
  factor_vector: FactorPoints;
  published_results: readonly ResultRow[];
  verified_results: readonly ResultRow[];
  verification_notes: string | null;
  links: readonly string[];
}

export interface RankRequestBody {
  query: Record<string, unknown>;
  filters: Record<string, unknown>;
  ui_weights: readonly number[];
}

export interface SubmissionResponse {
  submission_id: string;
  status: string;
}

export interface ReviewResponse {
  submission_id: string;
  status: string;
  reviewer_note: string | null;
  catalog_version: number;
}

export const TECHNIQUES = ["FL", "DP", "TEE", "MPC", "HE", "Hybrid"] as const;
export const THREAT_MODELS = ["malicious", "semi-honest", "semi-honest-ttp"] as const;
export const TRAINING_STATUSES = ["inference-only", "training-only", "both"] as const;
export const ACCELERATORS = ["GPU", "FPGA", "ASIC"] as const;
