import { Client } from "./api.js";
import { PuzzleController } from "./controller.js";
import { toSvg } from "./render.js";

const DEFAULT_SERVICE = "http://127.0.0.1:8000";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const api = new Client(params.get("service") ?? DEFAULT_SERVICE);
  const controller = new PuzzleController(api);

  const board = el<HTMLDivElement>("board");
  const status = el<HTMLDivElement>("status");
  const picker = el<HTMLSelectElement>("map-picker");

  function redraw(): void {
    const model = controller.model();
    board.innerHTML = model ? toSvg(model) : "";
    const solved = controller.state?.solved;
    const parts = [
      controller.descriptor ? controller.descriptor.name : "",
      solved === undefined ? "" : solved ? "solved" : "scrambled",
      controller.message,
    ].filter(Boolean);
    status.textContent = parts.join(" | ");
  }

  async function act(action: () => Promise<unknown>): Promise<void> {
    await action();
    redraw();
  }

  const { maps } = await api.listMaps();
  for (const m of maps) {
    const option = document.createElement("option");
    option.value = m.name;
    option.textContent = m.planar ? m.name : `${m.name} (genus ${m.genus})`;
    picker.appendChild(option);
  }

  picker.addEventListener("change", () => act(() => controller.load(picker.value)));
  el("scramble").addEventListener("click", () => act(() => controller.scramble()));
  el("reset").addEventListener("click", () => act(() => controller.reset()));
  el("solve").addEventListener("click", () => act(() => controller.solve()));
  el("step").addEventListener("click", () => act(() => controller.stepSolution()));
  el("play").addEventListener("click", async () => {
    while (await controller.stepSolution()) redraw();
    redraw();
  });

  // click a face to turn it forward; shift-click turns it backward
  board.addEventListener("click", (event) => {
    const target = event.target as Element | null;
    const face = target?.getAttribute?.("data-face");
    if (face) void act(() => controller.clickFace(face, event.shiftKey ? -1 : 1));
  });

  picker.value = maps.find((m) => m.planar)?.name ?? maps[0]?.name ?? "";
  if (picker.value) await act(() => controller.load(picker.value));
}

void boot();
