/** Page bootstrap: fetch the lattice, build the store, wire the DOM. */

import { HttpApiClient } from "./api.js";
import { bindStore, type Page } from "./dom.js";
import { ExplorerStore } from "./state.js";

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) {
    throw new Error(`missing #${id}`);
  }
  return element as T;
}

async function boot(): Promise<void> {
  const banner = byId<HTMLElement>("banner");
  const retry = byId<HTMLButtonElement>("retry");
  const api = new HttpApiClient();
  try {
    banner.textContent = "loading lattice…";
    retry.hidden = true;
    const doc = await api.lattice();
    banner.textContent = doc.type ? `type: ${doc.type}` : "";
    const store = new ExplorerStore(doc, api);
    const page: Page = {
      svg: byId("diagram") as unknown as SVGSVGElement,
      breadcrumb: byId("breadcrumb"),
      extent: byId("extent"),
      intent: byId("intent"),
      notice: byId("notice"),
    };
    bindStore(page, byId("attributes"), store);
  } catch (exc) {
    banner.textContent = `failed to load lattice: ${String(exc)}`;
    retry.hidden = false;
  }
}

document.addEventListener("DOMContentLoaded", () => {
  byId<HTMLButtonElement>("retry").addEventListener("click", () => void boot());
  void boot();
});
