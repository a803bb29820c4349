import { vi } from "vitest";

export interface RecordedRequest {
  method: string;
  url: string;
  body: any;
  headers: Record<string, string>;
}

export interface Responder {
  match: (req: RecordedRequest) => boolean;
  payload: unknown | ((req: RecordedRequest) => unknown);
  status?: number;
}

export interface FetchLog {
  calls: RecordedRequest[];
  ranks(): RecordedRequest[];
}

/** Replaces global fetch with a canned-response router that logs requests. */
export function installFetch(responders: Responder[]): FetchLog {
  const calls: RecordedRequest[] = [];
  const stub = async (input: unknown, init?: RequestInit) => {
    const url = typeof input === "string" ? input : String((input as Request).url);
    const method = init?.method ?? "GET";
    const body = typeof init?.body === "string" ? JSON.parse(init.body) : null;
    const headers = (init?.headers ?? {}) as Record<string, string>;
    const request: RecordedRequest = { method, url, body, headers };
    calls.push(request);
    for (const responder of responders) {
      if (!responder.match(request)) continue;
      const payload =
        typeof responder.payload === "function"
          ? (responder.payload as (req: RecordedRequest) => unknown)(request)
          : responder.payload;
      const status = responder.status ?? 200;
      return {
        ok: status >= 200 && status < 300,
        status,
        json: async () => payload,
      };
    }
    throw new Error(`no canned response for ${method} ${url}`);
  };
  vi.stubGlobal("fetch", stub);
  return {
    calls,
    ranks: () => calls.filter((c) => c.method === "POST" && c.url === "/api/rank"),
  };
}

/** Lets pending promise chains (fetch, render) settle. */
export async function flushAsync(rounds = 12): Promise<void> {
  for (let i = 0; i < rounds; i += 1) {
    await Promise.resolve();
  }
}

export function rankedIds(root: HTMLElement): string[] {
  return Array.from(root.querySelectorAll<HTMLElement>("ol.ranking li")).map(
    (item) => item.dataset.id ?? "",
  );
}

export function listedIds(root: HTMLElement): string[] {
  return Array.from(root.querySelectorAll<HTMLElement>("ul.framework-list li")).map(
    (item) => item.dataset.id ?? "",
  );
}

export function sliderByFactor(root: HTMLElement, factor: string): HTMLInputElement {
  const input = root.querySelector<HTMLInputElement>(
    `input[type="range"][data-factor="${factor}"]`,
  );
  if (!input) throw new Error(`no slider for factor ${factor}`);
  return input;
}

export function moveSlider(input: HTMLInputElement, value: number): void {
  input.value = String(value);
  input.dispatchEvent(new Event("input", { bubbles: true }));
}
