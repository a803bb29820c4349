import type {
  DetailResponse,
  ListResponse,
  MetaResponse,
  RankRequestBody,
  RankResponse,
  ReviewResponse,
  SubmissionResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
    readonly violations: readonly string[] = [],
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, init);
  let payload: unknown = null;
  try {
    payload = await response.json();
  } catch {
    payload = null;
  }
  if (!response.ok) {
    const body = (payload ?? {}) as {
      error?: string;
      detail?: string;
      violations?: string[];
    };
    throw new ApiError(
      response.status,
      body.error ?? "error",
      body.detail ?? `request failed with status ${response.status}`,
      body.violations ?? [],
    );
  }
  return payload as T;
}

function post(body: unknown, headers: Record<string, string> = {}): RequestInit {
  return {
    method: "POST",
    headers: { "content-type": "application/json", ...headers },
    body: JSON.stringify(body),
  };
}

export const api = {
  meta(): Promise<MetaResponse> {
    return request("/api/meta");
  },
  listFrameworks(params: URLSearchParams): Promise<ListResponse> {
    const suffix = params.toString();
    return request(suffix ? `/api/frameworks?${suffix}` : "/api/frameworks");
  },
  rank(body: RankRequestBody): Promise<RankResponse> {
    return request("/api/rank", post(body));
  },
  detail(id: string): Promise<DetailResponse> {
    return request(`/api/frameworks/${encodeURIComponent(id)}`);
  },
  submit(document: Record<string, unknown>): Promise<SubmissionResponse> {
    return request("/api/submissions", post(document));
  },
  review(
    submissionId: string,
    action: "approve" | "reject",
    note: string,
    token: string,
  ): Promise<ReviewResponse> {
    const headers: Record<string, string> = token ? { "X-Reviewer-Token": token } : {};
    return request(
      `/api/submissions/${encodeURIComponent(submissionId)}/review`,
      post(note ? { action, note } : { action }, headers),
    );
  },
};

export type Api = typeof api;
