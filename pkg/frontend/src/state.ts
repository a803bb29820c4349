import type { RankRequestBody, RankResponse } from "./types.js";

export const UI_SCALE_BOUND = 10;
export const DEFAULT_SLIDER = 5;
export const RANK_DEBOUNCE_MS = 250;

/** Six integer sliders on the 0..10 scale, starting at the median. */
export class SliderState {
  private values: number[];

  constructor(count = 6) {
    this.values = new Array(count).fill(DEFAULT_SLIDER);
  }

  get(index: number): number {
    return this.values[index];
  }

  snapshot(): number[] {
    return this.values.slice();
  }

  set(index: number, raw: number): number {
    const clamped = Math.min(UI_SCALE_BOUND, Math.max(0, Math.round(raw)));
    const safe = Number.isFinite(clamped) ? clamped : DEFAULT_SLIDER;
    this.values[index] = safe;
    return safe;
  }
}

/** Everything the search form can express, kept across view changes. */
export interface QueryState {
  technique: string | null;
  mlModels: string[];
  threatModels: string[];
  datasets: string[];
  trainingStatus: string | null;
  openSource: boolean | null;
  acceleration: string[];
  schemes: string[];
  libraries: string[];
  tech: Record<string, string>;
}

export function emptyQuery(): QueryState {
  return {
    technique: null,
    mlModels: [],
    threatModels: [],
    datasets: [],
    trainingStatus: null,
    openSource: null,
    acceleration: [],
    schemes: [],
    libraries: [],
    tech: {},
  };
}

export function toSearchParams(query: QueryState): URLSearchParams {
  const params = new URLSearchParams();
  if (query.technique) params.set("technique", query.technique);
  for (const model of query.mlModels) params.append("ml_model", model);
  for (const threat of query.threatModels) params.append("threat_model", threat);
  for (const dataset of query.datasets) params.append("dataset", dataset);
  if (query.trainingStatus) params.set("training_status", query.trainingStatus);
  if (query.openSource !== null) params.set("open_source", String(query.openSource));
  for (const value of query.acceleration) params.append("acceleration", value);
  for (const value of query.schemes) params.append("scheme", value);
  for (const value of query.libraries) params.append("library", value);
  for (const [key, value] of Object.entries(query.tech)) {
    params.append(`tech.${key}`, value);
  }
  return params;
}

export function toRankBody(query: QueryState, uiWeights: number[]): RankRequestBody {
  const q: Record<string, unknown> = {};
  if (query.technique) q.technique = query.technique;
  if (query.mlModels.length) q.ml_models = query.mlModels;
  if (query.threatModels.length) q.threat_models = query.threatModels;
  if (query.datasets.length) q.datasets = query.datasets;
  if (query.trainingStatus) q.training_status = query.trainingStatus;
  if (query.openSource !== null) q.open_source = query.openSource;

  const filters: Record<string, unknown> = {};
  if (query.acceleration.length) filters.acceleration = query.acceleration;
  if (query.schemes.length) filters.schemes_or_protocols = query.schemes;
  if (query.libraries.length) filters.libraries = query.libraries;
  if (Object.keys(query.tech).length) filters.technique_specific = { ...query.tech };

  return { query: q, filters, ui_weights: uiWeights };
}

type RankRunner = (body: RankRequestBody) => Promise<RankResponse>;

/**
 * Debounces slider activity into a single rank request and drops responses
 * that were overtaken by a newer request, so the displayed ranking always
 * reflects the latest weights.
 */
export class RankScheduler {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private ticket = 0;

  constructor(
    private readonly run: RankRunner,
    private readonly onResult: (response: RankResponse) => void,
    private readonly onError: (error: unknown) => void = () => {},
    private readonly delayMs = RANK_DEBOUNCE_MS,
  ) {}

  schedule(body: RankRequestBody): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire(body);
    }, this.delayMs);
  }

  /** Issue immediately (used for the first paint of the rank view). */
  async fire(body: RankRequestBody): Promise<void> {
    const ticket = ++this.ticket;
    try {
      const response = await this.run(body);
      if (ticket === this.ticket) this.onResult(response);
    } catch (error) {
      if (ticket === this.ticket) this.onError(error);
    }
  }
}

/** Flags the session stale once responses disagree on the catalog version. */
export class VersionWatch {
  private known: number | null = null;
  stale = false;

  observe(version: number): boolean {
    if (this.known === null) {
      this.known = version;
    } else if (version !== this.known) {
      this.stale = true;
    }
    return this.stale;
  }
}
