/** HTML rendering as plain string builders; main.ts owns the live DOM.
 * Keeping these pure makes the panel/trail markup assertable in tests. */

import type { Direction, FunctionInfo, NeighborPayload } from "./api.js";
import type { PanelState, SessionState } from "./session.js";
import type { TrailEntry } from "./trail.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatDelta(delta: number): string {
  return delta > 0 ? `+${delta}` : String(delta);
}

export function renderCurrent(info: FunctionInfo): string {
  const f = info.function;
  return [
    `<div class="current-card">`,
    `<code class="sets">${escapeHtml(f.sets)}</code>`,
    `<code class="expr">${escapeHtml(f.expr)}</code>`,
    `<span class="meta">p=${f.p} · signs ${escapeHtml(info.signs)} · |T|=${info.trueSetSize}</span>`,
    `</div>`,
  ].join("");
}

function renderNeighbor(n: NeighborPayload, direction: Direction, index: number): string {
  return [
    `<li><button type="button" class="neighbor" data-direction="${direction}" data-index="${index}">`,
    `<span class="badge ${n.rule}">${n.rule}</span>`,
    `<span class="delta">${formatDelta(n.trueSetDelta)}</span>`,
    `<code>${escapeHtml(n.function.sets)}</code>`,
    `</button></li>`,
  ].join("");
}

export function renderPanel(direction: Direction, panel: PanelState): string {
  const title = direction === "parent" ? "Parents" : "Children";
  let body: string;
  switch (panel.status) {
    case "idle":
      body = `<p class="placeholder">load a function first</p>`;
      break;
    case "loading":
      body = `<p class="placeholder">loading…</p>`;
      break;
    case "unreachable":
      body = `<p class="placeholder">service unreachable</p>`;
      break;
    default:
      body = panel.results.length
        ? `<ul class="neighbors">${panel.results
            .map((n, i) => renderNeighbor(n, direction, i))
            .join("")}</ul>`
        : `<p class="placeholder">none</p>`;
  }
  return `<section class="panel" data-panel="${direction}"><h2>${title}</h2>${body}</section>`;
}

export function renderTrail(entries: readonly TrailEntry[]): string {
  if (!entries.length) return `<nav class="trail"></nav>`;
  const crumbs = entries.map((entry, i) => {
    const hop = entry.via
      ? `<span class="hop ${entry.via.rule}">${entry.via.direction === "parent" ? "↑" : "↓"}${entry.via.rule} ${formatDelta(entry.via.trueSetDelta)}</span>`
      : "";
    const mark = i === entries.length - 1 ? ` aria-current="true"` : "";
    return `${hop}<code class="crumb"${mark}>${escapeHtml(entry.function.sets)}</code>`;
  });
  return `<nav class="trail">${crumbs.join(" ")}</nav>`;
}

export function renderBanner(state: SessionState): string {
  const parts: string[] = [];
  if (state.retryBanner) {
    parts.push(
      `<div class="banner error">${escapeHtml(state.retryBanner)} <button type="button" data-action="retry">retry</button></div>`,
    );
  }
  if (state.inputError) {
    parts.push(`<div class="banner invalid">${escapeHtml(state.inputError)}</div>`);
  }
  return parts.join("");
}

export function renderApp(state: SessionState, trail: readonly TrailEntry[]): string {
  const main =
    state.phase === "ready" && state.current
      ? [
          renderTrail(trail),
          renderCurrent(state.current),
          `<div class="panels">${renderPanel("parent", state.parents)}${renderPanel("child", state.children)}</div>`,
        ].join("")
      : `<p class="placeholder">enter a function above, e.g. <code>{1,2,3},{3,4}</code> with p=4</p>`;
  return renderBanner(state) + main;
}
