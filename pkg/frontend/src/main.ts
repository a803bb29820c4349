import { api, type Api } from "./api.js";
import { append, clear, el } from "./dom.js";
import { emptyQuery, SliderState, VersionWatch } from "./state.js";
import { detailView, rankView, reviewView, searchView, submitView, type AppContext } from "./views.js";

export interface AppHandle {
  context: AppContext;
  render(): void;
}

export async function createApp(root: HTMLElement, backend: Api = api): Promise<AppHandle> {
  const meta = await backend.meta();
  const versions = new VersionWatch();
  versions.observe(meta.catalog_version);

  const banner = el("div", { class: "refresh-banner", hidden: "" });
  const reload = el("button", { type: "button" }, "Reload");
  reload.addEventListener("click", () => window.location.reload());
  append(banner, "The catalog changed since this page loaded; results may be stale. ", reload);

  const context: AppContext = {
    api: backend,
    meta,
    query: emptyQuery(),
    sliders: new SliderState(meta.factors.length),
    observeVersion(version: number): void {
      if (versions.observe(version)) banner.removeAttribute("hidden");
    },
  };

  const nav = el(
    "nav",
    {},
    el("strong", {}, "ppmlrank"),
    el("a", { href: "#/search" }, "Search"),
    el("a", { href: "#/rank" }, "Rank"),
    el("a", { href: "#/submit" }, "Submit"),
    el("a", { href: "#/review" }, "Review"),
  );
  const outlet = el("main", {});
  clear(root);
  append(root, nav, banner, outlet);

  function render(): void {
    const hash = window.location.hash || "#/search";
    const [, route, argument] = hash.split("/");
    clear(outlet);
    if (route === "rank") {
      append(outlet, rankView(context));
    } else if (route === "framework" && argument) {
      append(outlet, detailView(context, decodeURIComponent(argument)));
    } else if (route === "submit") {
      append(outlet, submitView(context));
    } else if (route === "review") {
      append(outlet, reviewView(context));
    } else {
      append(outlet, searchView(context));
    }
  }

  window.addEventListener("hashchange", render);
  render();
  return { context, render };
}

declare global {
  interface Window {
    __ppmlrankBooted?: boolean;
  }
}

// Boot in the browser; tests import createApp and drive it themselves.
if (typeof document !== "undefined" && document.getElementById("app") && !window.__ppmlrankBooted) {
  window.__ppmlrankBooted = true;
  void createApp(document.getElementById("app") as HTMLElement);
}
