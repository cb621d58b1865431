import { ApiClient } from "./api.js";
import { GameController } from "./controller.js";
import { PRESETS } from "./presets.js";
import { BoardRenderer, describeDir } from "./render.js";
import type { Dir, Edge, Role } from "./types.js";

const API_BASE = (window as any).ORIENTGAME_API ?? "http://127.0.0.1:8000";

function byId<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

const controller = new GameController(new ApiClient(API_BASE));
let renderer: BoardRenderer | null = null;

function showToasts() {
  const box = byId<HTMLDivElement>("toasts");
  box.replaceChildren();
  for (const message of controller.toasts.slice(-3)) {
    const div = document.createElement("div");
    div.className = "toast";
    div.textContent = message;
    box.appendChild(div);
  }
}

function paintStatus() {
  const view = controller.view;
  if (!view) return;
  byId<HTMLSpanElement>("total").textContent = String(view.total);
  const bounds = view.bounds;
  byId<HTMLSpanElement>("bounds").textContent =
    `lower ${Number(bounds.best_lower).toFixed(1)} / upper ${Number(bounds.best_upper).toFixed(1)}` +
    (bounds.info !== null ? ` (information ${bounds.info})` : "");
  byId<HTMLDivElement>("banner").textContent = view.terminal
    ? `orientation determined after ${view.total} queries`
    : controller.lastAnswer
      ? `last answer: ${describeDir(controller.lastAnswer)}`
      : "";
  paintDirections();
  showToasts();
}

function paintDirections() {
  const box = byId<HTMLDivElement>("directions");
  box.replaceChildren();
  if (controller.role !== "strategist") return;
  const pending = controller.pending;
  if (!pending) return;
  const label = document.createElement("span");
  label.textContent = `engine asks about ${pending.join("–")}: `;
  box.appendChild(label);
  const enabled = controller.enabledDirections();
  const [u, v] = pending;
  const options: Dir[] = [
    [u, v],
    [v, u],
  ];
  for (const dir of options) {
    const button = document.createElement("button");
    button.textContent = describeDir(dir);
    const legal = enabled.some((d) => d[0] === dir[0] && d[1] === dir[1]);
    button.disabled = !legal;
    button.title = legal
      ? "orient the edge this way"
      : "the server would reject this: it closes a directed cycle";
    button.addEventListener("click", () => onDirection(dir));
    box.appendChild(button);
  }
}

async function onEdgeClick(edge: Edge) {
  if (controller.role !== "algy") return;
  try {
    await controller.clickEdge(edge);
  } catch (err) {
    controller.toasts.push(String(err));
  }
  renderer?.draw();
  paintStatus();
}

async function onDirection(dir: Dir) {
  try {
    await controller.chooseDirection(dir);
  } catch (err) {
    controller.toasts.push(String(err));
  }
  renderer?.draw();
  paintStatus();
}

async function onStart() {
  const graph = byId<HTMLTextAreaElement>("graph").value.trim();
  const role = byId<HTMLSelectElement>("role").value as Role;
  const opponent = byId<HTMLInputElement>("opponent").value.trim();
  const errorBox = byId<HTMLDivElement>("start-error");
  errorBox.textContent = "";
  try {
    await controller.start(graph, role, opponent);
  } catch (err) {
    errorBox.textContent = String(err); // API errors surface verbatim
    return;
  }
  renderer = new BoardRenderer(
    byId<HTMLElement>("board") as unknown as SVGSVGElement,
    controller,
    onEdgeClick,
  );
  renderer.draw();
  paintStatus();
}

async function onHint() {
  try {
    const hint = await controller.hint();
    const text = hint.message
      ? `${hint.message} (total ${hint.total})`
      : `${hint.source} suggestion: ${hint.suggestion!.value.join(" → ")}` +
        (hint.extensions != null ? `; ${hint.extensions} completions remain` : "");
    controller.toasts.push(text);
  } catch (err) {
    controller.toasts.push(String(err));
  }
  showToasts();
}

function fillPresets() {
  const select = byId<HTMLSelectElement>("preset");
  for (const preset of PRESETS) {
    const option = document.createElement("option");
    option.value = preset.name;
    option.textContent = preset.name;
    select.appendChild(option);
  }
  select.addEventListener("change", () => {
    const preset = PRESETS.find((p) => p.name === select.value);
    if (preset) {
      byId<HTMLTextAreaElement>("graph").value = preset.graph;
      byId<HTMLInputElement>("opponent").value = preset.suggestedOpponent;
    }
  });
  select.value = PRESETS[0].name;
  select.dispatchEvent(new Event("change"));
}

export function init() {
  fillPresets();
  byId<HTMLButtonElement>("start").addEventListener("click", onStart);
  byId<HTMLButtonElement>("hint").addEventListener("click", onHint);
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  init();
}
