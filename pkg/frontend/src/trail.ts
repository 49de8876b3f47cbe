/** Breadcrumb trail through the lattice: where the session has been and
 * which rule/direction each hop took. Entries only ever come from service
 * responses, so consecutive entries are immediate neighbours by construction. */

import type { Direction, FunctionPayload, RuleTag } from "./api.js";

export interface Hop {
  rule: RuleTag;
  direction: Direction;
  trueSetDelta: number;
}

export interface TrailEntry {
  function: FunctionPayload;
  /** null on the entry the session started from */
  via: Hop | null;
}

export interface TrailJSON {
  version: 1;
  p: number;
  signs: string;
  entries: TrailEntry[];
}

export class SessionTrail {
  readonly p: number;
  readonly signs: string;
  private items: TrailEntry[] = [];

  constructor(p: number, signs: string) {
    this.p = p;
    this.signs = signs;
  }

  get entries(): readonly TrailEntry[] {
    return this.items;
  }

  get current(): TrailEntry | null {
    return this.items.length ? this.items[this.items.length - 1]! : null;
  }

  get length(): number {
    return this.items.length;
  }

  /** Reset to a single fresh starting point. */
  start(fn: FunctionPayload): void {
    this.items = [{ function: fn, via: null }];
  }

  push(fn: FunctionPayload, hop: Hop): void {
    if (!this.items.length) throw new Error("trail has no starting point");
    this.items.push({ function: fn, via: hop });
  }

  /** Drop the last hop; returns the restored entry, or null at the start. */
  undo(): TrailEntry | null {
    if (this.items.length < 2) return null;
    this.items.pop();
    return this.current;
  }

  toJSON(): TrailJSON {
    return { version: 1, p: this.p, signs: this.signs, entries: [...this.items] };
  }

  export(): string {
    return JSON.stringify(this.toJSON());
  }

  static fromJSON(data: unknown): SessionTrail {
    if (typeof data === "string") data = JSON.parse(data);
    const obj = data as Partial<TrailJSON>;
    if (obj?.version !== 1 || typeof obj.p !== "number" || typeof obj.signs !== "string" || !Array.isArray(obj.entries)) {
      throw new Error("not a trail export");
    }
    const trail = new SessionTrail(obj.p, obj.signs);
    for (const entry of obj.entries) {
      if (typeof entry?.function?.sets !== "string" || entry.function.p !== obj.p) {
        throw new Error("trail entry does not match the session dimension");
      }
      if (entry.via !== null && !["R1", "R2", "R3"].includes(entry.via.rule)) {
        throw new Error("trail entry carries an unknown rule tag");
      }
    }
    trail.items = obj.entries.map((e) => ({ function: e.function, via: e.via }));
    return trail;
  }
}
