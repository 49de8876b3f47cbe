/** Browser entry point: wires the form, the rendered panels, and the trail
 * controls to one ExplorerSession. */

import { ApiClient } from "./api.js";
import { ExplorerSession } from "./session.js";
import { SessionTrail } from "./trail.js";
import { renderApp } from "./view.js";

const params = new URLSearchParams(location.search);
const base = params.get("api") ?? "http://127.0.0.1:8000";

const session = new ExplorerSession(new ApiClient(base));
const root = document.getElementById("app")!;
const form = document.getElementById("loader") as HTMLFormElement;
const undoButton = document.getElementById("undo") as HTMLButtonElement;
const exportButton = document.getElementById("export") as HTMLButtonElement;
const importButton = document.getElementById("import") as HTMLButtonElement;
const exportTarget = document.getElementById("trail-json") as HTMLTextAreaElement;

function redraw(): void {
  root.innerHTML = renderApp(session.getState(), session.trail.entries);
  undoButton.disabled = session.trail.length < 2;
}

session.subscribe(redraw);
redraw();

form.addEventListener("submit", (event) => {
  event.preventDefault();
  const data = new FormData(form);
  const text = String(data.get("f") ?? "");
  const p = Number(data.get("p") ?? "0");
  const signs = String(data.get("signs") ?? "").trim();
  void session.loadFunction(text, p, signs || undefined);
});

root.addEventListener("click", (event) => {
  const button = (event.target as HTMLElement).closest<HTMLButtonElement>("button");
  if (!button) return;
  if (button.dataset.action === "retry") {
    void session.retry();
    return;
  }
  const direction = button.dataset.direction;
  const index = Number(button.dataset.index);
  if (direction !== "parent" && direction !== "child") return;
  const panel = direction === "parent" ? session.getState().parents : session.getState().children;
  const neighbor = panel.results[index];
  if (neighbor) void session.navigate(neighbor, direction);
});

undoButton.addEventListener("click", () => void session.undo());

exportButton.addEventListener("click", () => {
  exportTarget.value = session.trail.export();
});

importButton.addEventListener("click", () => {
  try {
    const trail = SessionTrail.fromJSON(exportTarget.value);
    void session.importTrail(trail).then(redraw);
  } catch (err) {
    exportTarget.value = `import failed: ${err instanceof Error ? err.message : String(err)}`;
  }
});
