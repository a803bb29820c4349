import { ApiError, type Api } from "./api.js";
import { append, checkboxGroup, clear, el, errorBox, labeled, option } from "./dom.js";
import { radarSvg, RADAR_COLORS, type RadarSeries } from "./radar.js";
import {
  RankScheduler,
  SliderState,
  toRankBody,
  toSearchParams,
  UI_SCALE_BOUND,
  type QueryState,
} from "./state.js";
import {
  ACCELERATORS,
  TECHNIQUES,
  THREAT_MODELS,
  TRAINING_STATUSES,
  type FactorPoints,
  type MetaResponse,
  type RankResponse,
  type ResultRow,
} from "./types.js";

export interface AppContext {
  api: Api;
  meta: MetaResponse;
  query: QueryState;
  sliders: SliderState;
  observeVersion(version: number): void;
}

function pointsInline(meta: MetaResponse, points: FactorPoints): HTMLElement {
  const row = el("span", { class: "points" });
  for (const factor of meta.factors) {
    append(
      row,
      el("span", { class: "point", title: factor }, (points[factor] ?? 0).toFixed(2)),
    );
  }
  return row;
}

function frameworkLink(id: string, name: string): HTMLAnchorElement {
  return el("a", { href: `#/framework/${encodeURIComponent(id)}` }, name);
}

function renderError(target: HTMLElement, error: unknown): void {
  clear(target);
  if (error instanceof ApiError) {
    append(target, errorBox(`${error.code}: ${error.detail}`, error.violations));
  } else {
    append(target, errorBox(String(error)));
  }
}

// ---------------------------------------------------------------- search

const TECH_FILTER_FIELDS: Record<string, Array<{ key: string; kind: "number" | "bool" | "methodology" }>> = {
  FL: [
    { key: "fl_methodology", kind: "methodology" },
    { key: "min_clients", kind: "number" },
  ],
  TEE: [
    { key: "edge_support", kind: "bool" },
    { key: "integrity_check", kind: "bool" },
  ],
  MPC: [{ key: "min_participants", kind: "number" }],
  HE: [
    { key: "bootstrapping", kind: "bool" },
    { key: "normalization_support", kind: "bool" },
  ],
  Hybrid: [{ key: "min_parties", kind: "number" }],
};

function techFilterControls(query: QueryState): HTMLElement {
  const block = el("div", { class: "tech-filters" });
  const fields = query.technique ? (TECH_FILTER_FIELDS[query.technique] ?? []) : [];
  if (!fields.length) {
    append(
      block,
      el("p", { class: "hint" }, "Pick a technique to unlock its specific filters."),
    );
    return block;
  }
  for (const field of fields) {
    if (field.kind === "number") {
      const input = el("input", { type: "number", min: "1", "data-tech-key": field.key }) as HTMLInputElement;
      input.value = query.tech[field.key] ?? "";
      input.addEventListener("input", () => {
        if (input.value) query.tech[field.key] = input.value;
        else delete query.tech[field.key];
      });
      append(block, labeled(field.key, input));
    } else {
      const select = el("select", { "data-tech-key": field.key }) as HTMLSelectElement;
      append(select, option("", "any"));
      const choices =
        field.kind === "bool" ? ["true", "false"] : ["centralized", "decentralized", "both"];
      for (const choice of choices) append(select, option(choice));
      select.value = query.tech[field.key] ?? "";
      select.addEventListener("change", () => {
        if (select.value) query.tech[field.key] = select.value;
        else delete query.tech[field.key];
      });
      append(block, labeled(field.key, select));
    }
  }
  return block;
}

export function searchView(ctx: AppContext): HTMLElement {
  const { meta, query } = ctx;
  const view = el("section", { class: "view search-view" });
  const status = el("div", { class: "status" });
  const results = el("div", { class: "results" });

  const techniqueSelect = el("select", { name: "technique" }) as HTMLSelectElement;
  append(techniqueSelect, option("", "any technique"));
  for (const technique of TECHNIQUES) append(techniqueSelect, option(technique));
  techniqueSelect.value = query.technique ?? "";

  const trainingSelect = el("select", { name: "training_status" }) as HTMLSelectElement;
  append(trainingSelect, option("", "any phase"));
  for (const value of TRAINING_STATUSES) append(trainingSelect, option(value));
  trainingSelect.value = query.trainingStatus ?? "";

  const openSelect = el("select", { name: "open_source" }) as HTMLSelectElement;
  append(openSelect, option("", "any"), option("true", "open source"), option("false", "closed source"));
  openSelect.value = query.openSource === null ? "" : String(query.openSource);

  let techBlock = techFilterControls(query);
  techniqueSelect.addEventListener("change", () => {
    query.technique = techniqueSelect.value || null;
    query.tech = {};
    const fresh = techFilterControls(query);
    techBlock.replaceWith(fresh);
    techBlock = fresh;
  });
  trainingSelect.addEventListener("change", () => {
    query.trainingStatus = trainingSelect.value || null;
  });
  openSelect.addEventListener("change", () => {
    query.openSource = openSelect.value === "" ? null : openSelect.value === "true";
  });

  const attributes = el(
    "div",
    { class: "attributes" },
    labeled("technique", techniqueSelect),
    labeled(
      "ML models",
      checkboxGroup("ml_models", meta.vocabularies.ml_models, query.mlModels, (v) => {
        query.mlModels = v;
      }),
    ),
    labeled(
      "threat models",
      checkboxGroup("threat_models", THREAT_MODELS, query.threatModels, (v) => {
        query.threatModels = v;
      }),
    ),
    labeled(
      "datasets",
      checkboxGroup("datasets", meta.vocabularies.datasets, query.datasets, (v) => {
        query.datasets = v;
      }),
    ),
    labeled("training", trainingSelect),
    labeled("source", openSelect),
  );

  const sidebar = el(
    "aside",
    { class: "filters" },
    el("h3", {}, "Filters"),
    labeled(
      "acceleration",
      checkboxGroup("acceleration", ACCELERATORS, query.acceleration, (v) => {
        query.acceleration = v;
      }),
    ),
    labeled(
      "schemes",
      checkboxGroup("schemes", meta.vocabularies.schemes, query.schemes, (v) => {
        query.schemes = v;
      }),
    ),
    labeled(
      "libraries",
      checkboxGroup("libraries", meta.vocabularies.libraries, query.libraries, (v) => {
        query.libraries = v;
      }),
    ),
    techBlock,
  );

  async function runSearch(): Promise<void> {
    clear(status);
    clear(results);
    append(status, el("p", { class: "hint" }, "searching..."));
    try {
      const response = await ctx.api.listFrameworks(toSearchParams(query));
      ctx.observeVersion(response.catalog_version);
      clear(status);
      append(
        status,
        el("p", {}, `${response.total} framework(s) match.`),
        el("a", { href: "#/rank", class: "rank-link" }, "Rank these results"),
      );
      const list = el("ul", { class: "framework-list" });
      for (const row of response.frameworks) {
        append(
          list,
          el(
            "li",
            { "data-id": row.id },
            frameworkLink(row.id, row.name),
            el("span", { class: "technique" }, row.technique),
            pointsInline(meta, row.factor_vector),
          ),
        );
      }
      append(results, list);
    } catch (error) {
      clear(status);
      renderError(results, error);
    }
  }

  const searchButton = el("button", { type: "button", class: "primary" }, "Search");
  searchButton.addEventListener("click", () => void runSearch());

  append(
    view,
    el("h2", {}, "Find frameworks"),
    el("div", { class: "search-layout" }, el("div", {}, attributes, searchButton), sidebar),
    status,
    results,
  );
  void runSearch();
  return view;
}

// ------------------------------------------------------------------ rank

export function rankView(ctx: AppContext): HTMLElement {
  const { meta, query, sliders } = ctx;
  const view = el("section", { class: "view rank-view" });
  const results = el("div", { class: "results" });
  const radarBox = el("div", { class: "radar-box" });

  const scheduler = new RankScheduler(
    (body) => ctx.api.rank(body),
    (response) => renderRanking(response),
    (error) => renderError(results, error),
  );

  function currentBody() {
    return toRankBody(query, sliders.snapshot());
  }

  const sliderPanel = el("div", { class: "sliders" });
  meta.factors.forEach((factor, index) => {
    const input = el("input", {
      type: "range",
      min: "0",
      max: String(UI_SCALE_BOUND),
      step: "1",
      "data-factor": factor,
    }) as HTMLInputElement;
    input.value = String(sliders.get(index));
    const value = el("output", {}, input.value);
    input.addEventListener("input", () => {
      const applied = sliders.set(index, Number(input.value));
      input.value = String(applied);
      value.textContent = input.value;
      scheduler.schedule(currentBody());
    });
    append(sliderPanel, el("label", { class: "slider" }, el("span", { class: "field-name" }, factor), input, value));
  });

  function renderRanking(response: RankResponse): void {
    ctx.observeVersion(response.catalog_version);
    clear(results);
    clear(radarBox);
    if (!response.ranking.length) {
      append(results, el("p", { class: "hint" }, "Nothing matches the current search."));
      return;
    }
    // Rows are appended in response order; the API is the single source of
    // both scores and ordering.
    const list = el("ol", { class: "ranking" });
    for (const row of response.ranking) {
      append(
        list,
        el(
          "li",
          { "data-id": row.id },
          frameworkLink(row.id, row.id),
          el("span", { class: "score" }, row.score.toFixed(4)),
          pointsInline(meta, row.factor_vector),
        ),
      );
    }
    append(results, list);

    const top: RadarSeries[] = response.ranking.slice(0, 5).map((row) => ({
      id: row.id,
      name: row.id,
      points: meta.factors.map((factor) => row.factor_vector[factor] ?? 0),
    }));
    append(radarBox, el("h3", {}, "Top five compared"), radarSvg(meta.factors, top));
    const legend = el("ul", { class: "legend" });
    top.forEach((series, index) => {
      const swatch = el("span", { class: "swatch" });
      swatch.style.background = RADAR_COLORS[index % RADAR_COLORS.length];
      append(legend, el("li", {}, swatch, series.name));
    });
    append(radarBox, legend);
  }

  append(
    view,
    el("h2", {}, "Rank by your priorities"),
    el("p", { class: "hint" }, "Weights run 0 to 10; 5 is the neutral default. ", el("a", { href: "#/search" }, "Adjust the search")),
    sliderPanel,
    results,
    radarBox,
  );
  void scheduler.fire(currentBody());
  return view;
}

// ---------------------------------------------------------------- detail

function resultTable(rows: readonly ResultRow[]): HTMLElement {
  if (!rows.length) return el("p", { class: "hint" }, "none recorded");
  const table = el("table", { class: "results-table" });
  append(
    table,
    el(
      "tr",
      {},
      ...["dataset", "model", "accuracy", "inference time", "memory", "communication"].map((h) =>
        el("th", {}, h),
      ),
    ),
  );
  for (const row of rows) {
    append(
      table,
      el(
        "tr",
        {},
        el("td", {}, row.dataset),
        el("td", {}, row.model),
        el("td", {}, row.accuracy.toFixed(4)),
        el("td", {}, row.inference_time === null ? "" : `${row.inference_time}s`),
        el("td", {}, row.memory === null ? "" : String(row.memory)),
        el("td", {}, row.communication === null ? "" : String(row.communication)),
      ),
    );
  }
  return table;
}

export function detailView(ctx: AppContext, id: string): HTMLElement {
  const view = el("section", { class: "view detail-view" });
  append(view, el("p", { class: "hint" }, "loading..."));

  void (async () => {
    try {
      const response = await ctx.api.detail(id);
      ctx.observeVersion(response.catalog_version);
      const doc = response.framework;
      clear(view);

      const points = el("dl", { class: "points-grid" });
      for (const factor of ctx.meta.factors) {
        append(
          points,
          el("dt", {}, factor),
          el("dd", {}, (response.factor_vector[factor] ?? 0).toFixed(3)),
        );
      }

      const flags = [
        doc.data_privacy ? "data privacy" : null,
        doc.model_privacy ? "model privacy" : null,
        doc.open_source ? "open source" : "closed source",
        doc.verified ? "verified" : "unverified",
        String(doc.training_support),
      ].filter((f): f is string => f !== null);

      const links = el("ul", { class: "links" });
      for (const href of response.links) {
        append(links, el("li", {}, el("a", { href, rel: "noopener" }, href)));
      }
      append(
        links,
        el(
          "li",
          {},
          el(
            "a",
            { href: `/api/frameworks/${encodeURIComponent(id)}/backup`, download: `${id}.json` },
            "Download backup document",
          ),
        ),
      );

      append(
        view,
        el("h2", {}, `${doc.name} `, el("span", { class: "technique" }, String(doc.technique))),
        el("p", { class: "authors" }, (doc.authors as string[]).join(", ")),
        el("p", { class: "abstract" }, String(doc.abstract ?? "")),
        el("p", {}, `Threat models: ${(doc.threat_models as string[]).join(", ")}`),
        el("p", {}, flags.join(" | ")),
        el("h3", {}, "Factor points"),
        points,
        el("h3", {}, "Published results"),
        resultTable(response.published_results),
        el("h3", {}, "Verified results"),
        resultTable(response.verified_results),
        el("h3", {}, "Verification notes"),
        el("p", {}, response.verification_notes ?? "none"),
        el("h3", {}, "Links"),
        links,
      );
    } catch (error) {
      clear(view);
      if (error instanceof ApiError && error.status === 404) {
        append(
          view,
          el("h2", {}, "Not found"),
          el("p", {}, `No framework is cataloged under "${id}".`),
          el("a", { href: "#/search" }, "Back to search"),
        );
      } else {
        renderError(view, error);
      }
    }
  })();
  return view;
}

// ---------------------------------------------------------------- submit

interface ResultDraft {
  dataset: string;
  model: string;
  accuracy: string;
  source: string;
  inference_time: string;
  memory: string;
  communication: string;
}

function splitList(raw: string): string[] {
  return raw
    .split(/[\n,]/)
    .map((part) => part.trim())
    .filter((part) => part.length > 0);
}

function numberOrNull(raw: string): number | null {
  return raw.trim() === "" ? null : Number(raw);
}

export function submitView(ctx: AppContext): HTMLElement {
  const view = el("section", { class: "view submit-view" });
  const outcome = el("div", { class: "status" });
  const form = el("form", { class: "submit-form" });
  form.addEventListener("submit", (event) => event.preventDefault());

  const text = (name: string, attrs: Record<string, string> = {}) =>
    el("input", { type: "text", name, ...attrs }) as HTMLInputElement;
  const area = (name: string) => el("textarea", { name, rows: "3" }) as HTMLTextAreaElement;
  const check = (name: string) => el("input", { type: "checkbox", name }) as HTMLInputElement;
  const number = (name: string, min = "1") =>
    el("input", { type: "number", name, min }) as HTMLInputElement;

  const idInput = text("id", { placeholder: "lowercase-slug" });
  const nameInput = text("name");
  const authorsInput = area("authors");
  const abstractInput = area("abstract");
  const linksInput = area("links");
  const mlModelsInput = text("ml_models", { placeholder: "comma separated" });
  const datasetsInput = text("datasets", { placeholder: "comma separated" });
  const nonlinearInput = text("nonlinear_functions", { placeholder: "comma separated" });
  const notesInput = area("verification_notes");
  const dataPrivacy = check("data_privacy");
  const modelPrivacy = check("model_privacy");
  const openSource = check("open_source");
  const verified = check("verified");

  const trainingSelect = el("select", { name: "training_support" }) as HTMLSelectElement;
  for (const value of TRAINING_STATUSES) append(trainingSelect, option(value));
  trainingSelect.value = "both";

  let threatSelection: string[] = [];
  const threatBoxes = checkboxGroup("threat_models", THREAT_MODELS, [], (v) => {
    threatSelection = v;
  });

  const techniqueSelect = el("select", { name: "technique" }) as HTMLSelectElement;
  for (const technique of TECHNIQUES) append(techniqueSelect, option(technique));

  // Per-technique extension fields; rebuilt when the technique changes.
  let extensionBlock = el("fieldset", { class: "extension" });

  function accelerationBoxes(): { node: HTMLElement; read: () => string[] } {
    let selected: string[] = [];
    const node = checkboxGroup("acceleration", ACCELERATORS, [], (v) => {
      selected = v;
    });
    return { node, read: () => selected };
  }

  let readExtension: () => Record<string, unknown> = () => ({});

  function rebuildExtension(): void {
    const technique = techniqueSelect.value;
    const block = el("fieldset", { class: "extension" }, el("legend", {}, `${technique} details`));
    const accel = accelerationBoxes();

    if (technique === "FL") {
      const clients = number("num_clients");
      const rounds = number("num_rounds");
      const library = text("library");
      const methodology = el("select", {}) as HTMLSelectElement;
      for (const value of ["centralized", "decentralized", "both"]) append(methodology, option(value));
      const aggregation = text("aggregation_algorithms", { placeholder: "comma separated" });
      append(
        block,
        labeled("clients", clients),
        labeled("rounds", rounds),
        labeled("library", library),
        labeled("methodology", methodology),
        labeled("aggregation", aggregation),
        labeled("acceleration", accel.node),
      );
      readExtension = () => ({
        technique: "FL",
        num_clients: Number(clients.value),
        num_rounds: Number(rounds.value),
        acceleration: accel.read(),
        library: library.value,
        methodology: methodology.value,
        aggregation_algorithms: splitList(aggregation.value),
      });
    } else if (technique === "TEE") {
      const hardware = text("hardware");
      const attacks = text("protected_attacks", { placeholder: "comma separated" });
      const integrity = check("integrity_check");
      const edge = check("edge_support");
      append(
        block,
        labeled("hardware", hardware),
        labeled("protected attacks", attacks),
        labeled("integrity check", integrity),
        labeled("edge support", edge),
        labeled("acceleration", accel.node),
      );
      readExtension = () => ({
        technique: "TEE",
        hardware: hardware.value,
        protected_attacks: splitList(attacks.value),
        acceleration: accel.read(),
        integrity_check: integrity.checked,
        edge_support: edge.checked,
      });
    } else if (technique === "MPC") {
      const schemes = text("schemes", { placeholder: "comma separated" });
      const participants = number("num_participants", "2");
      append(block, labeled("schemes", schemes), labeled("participants", participants));
      readExtension = () => ({
        technique: "MPC",
        schemes: splitList(schemes.value),
        num_participants: Number(participants.value),
      });
    } else if (technique === "DP") {
      const scheme = text("scheme");
      append(block, labeled("scheme", scheme));
      readExtension = () => ({ technique: "DP", scheme: scheme.value });
    } else if (technique === "HE") {
      const scheme = text("scheme");
      const library = text("library");
      const normalization = check("normalization_support");
      const bootstrapping = check("bootstrapping");
      append(
        block,
        labeled("scheme", scheme),
        labeled("library", library),
        labeled("normalization support", normalization),
        labeled("bootstrapping", bootstrapping),
        labeled("acceleration", accel.node),
      );
      readExtension = () => ({
        technique: "HE",
        scheme: scheme.value,
        normalization_support: normalization.checked,
        acceleration: accel.read(),
        library: library.value,
        bootstrapping: bootstrapping.checked,
      });
    } else {
      let combined: string[] = [];
      const parts = checkboxGroup("techniques", ["FL", "DP", "TEE", "MPC", "HE"], [], (v) => {
        combined = v;
      });
      const parties = number("num_parties", "2");
      append(block, labeled("combined techniques", parts), labeled("parties", parties), labeled("acceleration", accel.node));
      readExtension = () => ({
        technique: "Hybrid",
        techniques: combined,
        num_parties: Number(parties.value),
        acceleration: accel.read(),
      });
    }
    extensionBlock.replaceWith(block);
    extensionBlock = block;
  }
  techniqueSelect.addEventListener("change", rebuildExtension);

  // Result entries.
  const drafts: ResultDraft[] = [];
  const resultsBlock = el("div", { class: "result-drafts" });

  function addResultRow(): void {
    const draft: ResultDraft = {
      dataset: "",
      model: "",
      accuracy: "",
      source: "published",
      inference_time: "",
      memory: "",
      communication: "",
    };
    drafts.push(draft);
    const row = el("div", { class: "result-draft" });
    const bind = (input: HTMLInputElement, key: keyof ResultDraft) => {
      input.addEventListener("input", () => {
        draft[key] = input.value;
      });
      return input;
    };
    const source = el("select", {}) as HTMLSelectElement;
    append(source, option("published"), option("verified"));
    source.addEventListener("change", () => {
      draft.source = source.value;
    });
    const remove = el("button", { type: "button" }, "remove");
    remove.addEventListener("click", () => {
      drafts.splice(drafts.indexOf(draft), 1);
      row.remove();
    });
    append(
      row,
      labeled("dataset", bind(text("r_dataset"), "dataset")),
      labeled("model", bind(text("r_model"), "model")),
      labeled("accuracy", bind(el("input", { type: "number", step: "0.0001", min: "0", max: "1" }) as HTMLInputElement, "accuracy")),
      labeled("source", source),
      labeled("inference time (s)", bind(el("input", { type: "number", step: "0.001" }) as HTMLInputElement, "inference_time")),
      labeled("memory (bytes)", bind(number("r_memory"), "memory")),
      labeled("communication (bytes)", bind(number("r_comm"), "communication")),
      remove,
    );
    append(resultsBlock, row);
  }

  const addResult = el("button", { type: "button" }, "Add result entry");
  addResult.addEventListener("click", addResultRow);

  function buildDocument(): Record<string, unknown> {
    return {
      id: idInput.value.trim(),
      name: nameInput.value.trim(),
      technique: techniqueSelect.value,
      authors: splitList(authorsInput.value),
      abstract: abstractInput.value,
      links: splitList(linksInput.value),
      threat_models: threatSelection,
      data_privacy: dataPrivacy.checked,
      model_privacy: modelPrivacy.checked,
      training_support: trainingSelect.value,
      open_source: openSource.checked,
      verified: verified.checked,
      ml_models: splitList(mlModelsInput.value),
      datasets: splitList(datasetsInput.value),
      nonlinear_functions: splitList(nonlinearInput.value),
      extension: readExtension(),
      results: drafts.map((draft) => ({
        dataset: draft.dataset.trim(),
        model: draft.model.trim(),
        accuracy: Number(draft.accuracy),
        source: draft.source,
        inference_time: numberOrNull(draft.inference_time),
        memory: numberOrNull(draft.memory),
        communication: numberOrNull(draft.communication),
      })),
      verification_notes: notesInput.value.trim() === "" ? null : notesInput.value,
    };
  }

  const submitButton = el("button", { type: "submit", class: "primary" }, "Submit for review");
  submitButton.addEventListener("click", () => {
    void (async () => {
      clear(outcome);
      try {
        const response = await ctx.api.submit(buildDocument());
        append(
          outcome,
          el(
            "p",
            { class: "success" },
            `Submitted. Review id: ${response.submission_id} (status ${response.status}).`,
          ),
        );
      } catch (error) {
        renderError(outcome, error);
      }
    })();
  });

  append(
    form,
    el("fieldset", {},
      el("legend", {}, "General"),
      labeled("id", idInput),
      labeled("name", nameInput),
      labeled("technique", techniqueSelect),
      labeled("authors (one per line)", authorsInput),
      labeled("abstract", abstractInput),
      labeled("links (one per line)", linksInput),
      labeled("threat models", threatBoxes),
      labeled("data privacy", dataPrivacy),
      labeled("model privacy", modelPrivacy),
      labeled("training", trainingSelect),
      labeled("open source", openSource),
      labeled("verified", verified),
      labeled("ML models", mlModelsInput),
      labeled("datasets", datasetsInput),
      labeled("nonlinear functions", nonlinearInput),
      labeled("verification notes", notesInput),
    ),
    extensionBlock,
    el("fieldset", {}, el("legend", {}, "Result entries"), resultsBlock, addResult),
    submitButton,
  );
  rebuildExtension();

  append(view, el("h2", {}, "Submit a framework"), form, outcome);
  return view;
}

// ---------------------------------------------------------------- review

export function reviewView(ctx: AppContext): HTMLElement {
  const view = el("section", { class: "view review-view" });
  const outcome = el("div", { class: "status" });

  const idInput = el("input", { type: "text", placeholder: "submission id" }) as HTMLInputElement;
  const action = el("select", {}) as HTMLSelectElement;
  append(action, option("approve"), option("reject"));
  const note = el("input", { type: "text", placeholder: "reviewer note (optional)" }) as HTMLInputElement;
  const token = el("input", { type: "password", placeholder: "reviewer token" }) as HTMLInputElement;

  const send = el("button", { type: "button", class: "primary" }, "Apply review");
  send.addEventListener("click", () => {
    void (async () => {
      clear(outcome);
      try {
        const response = await ctx.api.review(
          idInput.value.trim(),
          action.value as "approve" | "reject",
          note.value,
          token.value,
        );
        ctx.observeVersion(response.catalog_version);
        append(
          outcome,
          el(
            "p",
            { class: "success" },
            `Submission ${response.submission_id} is now ${response.status} (catalog version ${response.catalog_version}).`,
          ),
        );
      } catch (error) {
        renderError(outcome, error);
      }
    })();
  });

  append(
    view,
    el("h2", {}, "Review a submission"),
    labeled("submission", idInput),
    labeled("action", action),
    labeled("note", note),
    labeled("token", token),
    send,
    outcome,
  );
  return view;
}
