/** Entry point: wires the store, canvas, controls, badges, and banner. */

import { ApiClient } from "./api.js";
import { CanvasEditor } from "./editor.js";
import { EditorStore } from "./state.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function renderBadges(container: HTMLElement, store: EditorStore): void {
  const res = store.state.lastResponse;
  container.innerHTML = "";
  if (!res || !res.norms.discrete) return;
  res.norms.discrete.forEach((value, order) => {
    const badge = document.createElement("span");
    const member = res.norms.member ? res.norms.member[order] : null;
    badge.className =
      "badge " + (member === null ? "" : member ? "badge-ok" : "badge-bad");
    const radius = res.norms.alpha ? ` / ${res.norms.alpha[order].toPrecision(3)}` : "";
    badge.textContent = `|f(${order})| ${value.toPrecision(3)}${radius}`;
    container.appendChild(badge);
  });
  const meta = document.createElement("span");
  meta.className = "badge";
  meta.textContent =
    `C^${res.continuity_order} at knots, jump ${res.max_knot_jump.toExponential(1)}`;
  container.appendChild(meta);
}

function main(): void {
  const store = new EditorStore(new ApiClient(""));
  const canvas = byId<HTMLCanvasElement>("editor");
  new CanvasEditor(canvas, store);

  const mSlider = byId<HTMLInputElement>("m-slider");
  const mLabel = byId<HTMLElement>("m-label");
  const periodicToggle = byId<HTMLInputElement>("periodic-toggle");
  const alphaInput = byId<HTMLInputElement>("alpha-input");
  const banner = byId<HTMLElement>("error-banner");
  const badges = byId<HTMLElement>("badges");

  mSlider.addEventListener("input", () => {
    store.setParam({ m: Number(mSlider.value) });
  });
  periodicToggle.addEventListener("change", () => {
    store.setParam({ periodic: periodicToggle.checked });
  });
  alphaInput.addEventListener("change", () => {
    const text = alphaInput.value.trim();
    store.setParam({
      alpha: text ? text.split(",").map(Number) : null,
    });
  });
  for (const kind of ["s0", "s1", "smooth"] as const) {
    byId<HTMLInputElement>(`show-${kind}`).addEventListener("change", () =>
      store.toggleShow(kind),
    );
  }
  byId<HTMLButtonElement>("remove-point").addEventListener("click", () =>
    store.removeLastPoint(),
  );

  store.onChange((state) => {
    mLabel.textContent = `m = ${state.m}`;
    banner.textContent = state.error ?? "";
    banner.style.display = state.error ? "block" : "none";
    renderBadges(badges, store);
  });

  void store.refresh();
}

main();
