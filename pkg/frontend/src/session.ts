/** Explorer session state machine.
 *
 * All rule math lives on the service; this module only coordinates requests
 * and keeps the trail honest. Each neighbour panel allows a single in-flight
 * request: every refresh bumps a per-panel sequence number and a response is
 * dropped unless it still carries the latest number.
 */

import { ApiClient, ApiError } from "./api.js";
import type { Direction, FunctionInfo, NeighborPayload } from "./api.js";
import { SessionTrail } from "./trail.js";

export type PanelStatus = "idle" | "loading" | "ready" | "unreachable";

export interface PanelState {
  status: PanelStatus;
  results: NeighborPayload[];
}

export interface SessionState {
  phase: "empty" | "ready";
  p: number;
  signs: string;
  current: FunctionInfo | null;
  parents: PanelState;
  children: PanelState;
  /** service 400 for the last load attempt, shown inline at the input */
  inputError: string | null;
  /** network trouble: set when the service cannot be reached, cleared on success */
  retryBanner: string | null;
}

type Listener = (state: SessionState) => void;

const idlePanel = (): PanelState => ({ status: "idle", results: [] });

export class ExplorerSession {
  private readonly api: ApiClient;
  private listeners: Listener[] = [];
  private seq: Record<Direction, number> = { parent: 0, child: 0 };
  private state: SessionState = {
    phase: "empty",
    p: 0,
    signs: "",
    current: null,
    parents: idlePanel(),
    children: idlePanel(),
    inputError: null,
    retryBanner: null,
  };
  trail: SessionTrail = new SessionTrail(0, "");

  constructor(api: ApiClient) {
    this.api = api;
  }

  getState(): SessionState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private update(patch: Partial<SessionState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Start (or restart) the session at a typed-in function. */
  async loadFunction(text: string, p: number, signs?: string): Promise<boolean> {
    this.update({ inputError: null });
    let info: FunctionInfo;
    try {
      info = await this.api.getFunction(text, p, signs);
    } catch (err) {
      if (err instanceof ApiError) {
        this.update({ inputError: describeApiError(err) });
      } else {
        this.update({ retryBanner: "service unreachable; nothing was changed" });
      }
      return false;
    }
    this.trail = new SessionTrail(p, info.signs);
    this.trail.start(info.function);
    this.update({
      phase: "ready",
      p,
      signs: info.signs,
      current: info,
      inputError: null,
      retryBanner: null,
    });
    await this.refreshPanels();
    return true;
  }

  /** Move to a neighbour the service offered; appends to the trail. */
  async navigate(neighbor: NeighborPayload, direction: Direction): Promise<boolean> {
    const before = this.state.current;
    if (!before) throw new Error("no function loaded");
    const moved = await this.setCurrent(neighbor.function.sets);
    if (!moved) return false; // banner is up, trail untouched
    this.trail.push(this.state.current!.function, {
      rule: neighbor.rule,
      direction,
      trueSetDelta: neighbor.trueSetDelta,
    });
    this.update({}); // trail changed; re-notify
    return true;
  }

  /** Step back one hop; the service is re-queried for the restored node.
   * The trail only shrinks once the restored view actually loads. */
  async undo(): Promise<boolean> {
    if (this.trail.length < 2) return false;
    const target = this.trail.entries[this.trail.length - 2]!;
    const ok = await this.setCurrent(target.function.sets);
    if (ok) {
      this.trail.undo();
      this.update({});
    }
    return ok;
  }

  /** Resume an exported trail: load its last stop, then adopt the history. */
  async importTrail(trail: SessionTrail): Promise<boolean> {
    const last = trail.entries[trail.length - 1];
    if (!last) return false;
    const ok = await this.loadFunction(last.function.sets, trail.p, trail.signs || undefined);
    if (ok) {
      this.trail = trail;
      this.update({});
    }
    return ok;
  }

  /** Re-run the requests behind the current view after a network failure. */
  async retry(): Promise<void> {
    const current = this.state.current;
    if (!current) {
      this.update({ retryBanner: null });
      return;
    }
    await this.setCurrent(current.function.sets);
  }

  private async setCurrent(sets: string): Promise<boolean> {
    try {
      const info = await this.api.getFunction(sets, this.state.p, this.state.signs || undefined);
      this.update({ current: info, retryBanner: null });
    } catch (err) {
      if (err instanceof ApiError) {
        // the service already vouched for this function once; treat a late
        // rejection like any other failed refresh but keep the session alive
        this.update({ retryBanner: describeApiError(err) });
      } else {
        this.update({ retryBanner: "service unreachable; trail preserved" });
      }
      return false;
    }
    await this.refreshPanels();
    return true;
  }

  private async refreshPanels(): Promise<void> {
    await Promise.all([this.refreshPanel("parent"), this.refreshPanel("child")]);
  }

  private async refreshPanel(direction: Direction): Promise<void> {
    const current = this.state.current;
    if (!current) return;
    const ticket = ++this.seq[direction];
    this.setPanel(direction, { status: "loading", results: [] });
    let results: NeighborPayload[];
    try {
      const f = current.function.sets;
      const response =
        direction === "parent"
          ? await this.api.getParents(f, this.state.p, this.state.signs)
          : await this.api.getChildren(f, this.state.p, this.state.signs);
      results = response.results;
    } catch {
      if (ticket === this.seq[direction]) {
        this.setPanel(direction, { status: "unreachable", results: [] });
        this.update({ retryBanner: "service unreachable; trail preserved" });
      }
      return;
    }
    if (ticket !== this.seq[direction]) return; // a newer request owns the panel
    this.setPanel(direction, { status: "ready", results });
  }

  private setPanel(direction: Direction, panel: PanelState): void {
    if (direction === "parent") this.update({ parents: panel });
    else this.update({ children: panel });
  }
}

export function describeApiError(err: ApiError): string {
  const extras: string[] = [];
  if (Array.isArray(err.details["missing"])) {
    extras.push(`missing: ${(err.details["missing"] as number[]).join(", ")}`);
  }
  if (Array.isArray(err.details["pair"])) {
    const pair = err.details["pair"] as number[][];
    extras.push(`pair: {${pair[0]?.join(",")}} vs {${pair[1]?.join(",")}}`);
  }
  if (typeof err.details["position"] === "number") {
    extras.push(`at position ${err.details["position"]}`);
  }
  const suffix = extras.length ? ` (${extras.join("; ")})` : "";
  return `${err.code}: ${err.message}${suffix}`;
}
