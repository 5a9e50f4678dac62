/**
 * DOM wiring: mounts the store-driven views, translates pointer events
 * into grid-snapped edits, and exposes the toolbar actions.
 */

import { ApiClient } from "./api.js";
import { renderCertificateList, renderCountBadge, renderStatus, renderSvg, SCALE } from "./render.js";
import { EditorStore } from "./state.js";

const store = new EditorStore(new ApiClient(""));

const board = document.getElementById("board")!;
const badge = document.getElementById("badge")!;
const list = document.getElementById("certificates")!;
const status = document.getElementById("status")!;

function render(): void {
  board.innerHTML = renderSvg(store.state);
  badge.innerHTML = renderCountBadge(store.state);
  list.innerHTML = renderCertificateList(store.state);
  status.innerHTML = renderStatus(store.state);
}

store.subscribe(render);

/** Pointer position in drawing coordinates (unscaled, y up). */
function worldCoords(event: PointerEvent): [number, number] | null {
  const svg = board.querySelector("svg");
  if (!svg) return null;
  const rect = svg.getBoundingClientRect();
  const [x0, y0, w, h] = svg.getAttribute("viewBox")!.split(" ").map(Number);
  const x = x0! + ((event.clientX - rect.left) / rect.width) * w!;
  const y = y0! + ((event.clientY - rect.top) / rect.height) * h!;
  return [x / SCALE, -y / SCALE];
}

type DragTarget =
  | { kind: "vertex"; v: number }
  | { kind: "bend"; edge: string; index: number };

let dragging: DragTarget | null = null;
let pinMode = false;

board.addEventListener("pointerdown", (event) => {
  const el = event.target as Element;
  const vertex = el.getAttribute("data-vertex");
  const bend = el.getAttribute("data-bend");
  if (vertex !== null) {
    const v = Number(vertex);
    if (pinMode) {
      store.togglePin(v);
      return;
    }
    if (store.state.pinned.includes(v)) return;
    dragging = { kind: "vertex", v };
  } else if (bend !== null) {
    const [edge, index] = bend.split(":");
    dragging = { kind: "bend", edge: edge!, index: Number(index) };
  }
  if (dragging) (event.target as Element).setPointerCapture?.(event.pointerId);
});

board.addEventListener("pointermove", (event) => {
  if (!dragging) return;
  const world = worldCoords(event);
  if (!world) return;
  if (dragging.kind === "vertex") store.moveVertex(dragging.v, world[0], world[1]);
  else store.moveBend(dragging.edge, dragging.index, world[0], world[1]);
});

board.addEventListener("pointerup", () => {
  if (!dragging) return;
  dragging = null;
  void store.refresh();
});

list.addEventListener("click", (event) => {
  const item = (event.target as Element).closest("li[data-cert]");
  if (item) store.select(Number(item.getAttribute("data-cert")));
});

function input(id: string): HTMLInputElement {
  return document.getElementById(id) as HTMLInputElement;
}

document.getElementById("load")!.addEventListener("click", () => {
  void store.loadAlternating(Number(input("n").value));
});

input("q").addEventListener("change", () => store.setQ(Number(input("q").value)));

input("grid").addEventListener("change", () => {
  const den = BigInt(Math.max(1, Number(input("grid").value)));
  store.state.gridDenominator = den;
});

document.getElementById("perturb")!.addEventListener("click", () => {
  store.perturb(Number(input("seed").value));
});

document.getElementById("hunt")!.addEventListener("click", () => {
  store.state.seed = Number(input("seed").value);
  store.state.temperature = Number(input("temperature").value);
  void store.huntStep(Number(input("steps").value));
});

document.getElementById("pin-mode")!.addEventListener("click", (event) => {
  pinMode = !pinMode;
  (event.target as Element).classList.toggle("active", pinMode);
});

document.getElementById("export")!.addEventListener("click", () => {
  const blob = new Blob([store.exportJson()], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "drawing.json";
  link.click();
  URL.revokeObjectURL(link.href);
});

document.getElementById("import")!.addEventListener("change", async (event) => {
  const file = (event.target as HTMLInputElement).files?.[0];
  if (!file) return;
  try {
    store.importJson(await file.text());
  } catch (err) {
    store.state.error = err instanceof Error ? err.message : String(err);
  }
});

render();
void store.loadAlternating(7);
