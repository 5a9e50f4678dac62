/**
 * Editor state and transitions.  The store owns the request sequencing:
 * at most one enumeration is in flight, a newer edit aborts and
 * supersedes it, and a response is rendered only if no newer request
 * was issued meanwhile, so the displayed count always belongs to the
 * last completed response for the current drawing.
 */

import { ApiClient } from "./api.js";
import { add, formatRational, parseRational, rat, snapToGrid } from "./rational.js";
import type { CertificateJson, DrawingJson, PointJson } from "./types.js";
import { sameFamily } from "./types.js";

export interface EditorState {
  drawing: DrawingJson | null;
  q: number;
  count: number | null;
  certificates: CertificateJson[];
  gpOk: boolean | null;
  selected: number | null;
  dirty: boolean;
  pending: boolean;
  error: string | null;
  pinned: number[];
  seed: number;
  temperature: number;
  gridDenominator: bigint;
  lastHuntBest: number | null;
}

export class EditorStore {
  state: EditorState = {
    drawing: null,
    q: 3,
    count: null,
    certificates: [],
    gpOk: null,
    selected: null,
    dirty: false,
    pending: false,
    error: null,
    pinned: [],
    seed: 1,
    temperature: 2.0,
    gridDenominator: 8n,
    lastHuntBest: null,
  };

  private requestSeq = 0;
  private controller: AbortController | null = null;
  private listeners: Array<() => void> = [];

  constructor(private api: ApiClient) {}

  subscribe(listener: () => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  async loadAlternating(n: number): Promise<void> {
    const drawing = await this.api.generateAlternating(n);
    this.adoptDrawing(drawing);
    await this.refresh();
  }

  /** Replace the drawing wholesale (load, import, hunt result). */
  adoptDrawing(drawing: DrawingJson): void {
    this.state.drawing = drawing;
    this.state.selected = null;
    this.state.dirty = true;
    this.emit();
  }

  setQ(q: number): void {
    this.state.q = q;
    this.state.dirty = true;
    this.emit();
    void this.refresh();
  }

  /** Grid-snapped vertex move; geometry only, no service call yet. */
  moveVertex(v: number, x: number, y: number): void {
    const drawing = this.state.drawing;
    if (!drawing) return;
    drawing.positions[String(v)] = this.snapPoint(x, y);
    this.markEdited();
  }

  moveBend(edge: string, index: number, x: number, y: number): void {
    const chain = this.state.drawing?.bends[edge];
    if (!chain || !chain[index]) return;
    chain[index] = this.snapPoint(x, y);
    this.markEdited();
  }

  private snapPoint(x: number, y: number): PointJson {
    const den = this.state.gridDenominator;
    return [formatRational(snapToGrid(x, den)), formatRational(snapToGrid(y, den))];
  }

  private markEdited(): void {
    this.state.dirty = true;
    this.state.selected = null;
    this.emit();
  }

  /** Called on drag release and after every drawing replacement. */
  async refresh(): Promise<void> {
    const drawing = this.state.drawing;
    if (!drawing) return;
    const seq = ++this.requestSeq;
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    this.state.pending = true;
    this.state.error = null;
    this.emit();
    try {
      const res = await this.api.enumerate(drawing, this.state.q, controller.signal);
      if (seq !== this.requestSeq) return; // superseded: never rendered
      const previous =
        this.state.selected !== null ? this.state.certificates[this.state.selected] : undefined;
      this.state.count = res.count;
      this.state.certificates = res.certificates;
      this.state.gpOk = res.gp.ok;
      this.state.dirty = false;
      this.state.pending = false;
      this.state.selected = previous
        ? indexOfFamily(res.certificates, previous)
        : null;
    } catch (err) {
      if (seq !== this.requestSeq) return; // aborted by a newer edit
      this.state.pending = false;
      this.state.error = err instanceof Error ? err.message : String(err);
    }
    this.emit();
  }

  select(index: number | null): void {
    this.state.selected =
      index !== null && index >= 0 && index < this.state.certificates.length ? index : null;
    this.emit();
  }

  togglePin(v: number): void {
    const pinned = new Set(this.state.pinned);
    if (pinned.has(v)) pinned.delete(v);
    else pinned.add(v);
    this.state.pinned = [...pinned].sort((a, b) => a - b);
    this.emit();
  }

  /**
   * Client-side exact jitter: every coordinate moves by a small rational
   * on the editing grid (a programmatic drag of all handles); the
   * mathematics of re-certification stays on the service.
   */
  perturb(seed: number): void {
    const drawing = this.state.drawing;
    if (!drawing) return;
    let s = seed >>> 0;
    const nudge = (value: string): string => {
      s = (Math.imul(1664525, s) + 1013904223) >>> 0;
      const k = BigInt((s >> 16) % 7) - 3n;
      const step = rat(k, this.state.gridDenominator * 4n);
      return formatRational(add(parseRational(value), step));
    };
    for (const v of Object.keys(drawing.positions)) {
      const [x, y] = drawing.positions[v]!;
      drawing.positions[v] = [nudge(x), nudge(y)];
    }
    for (const key of Object.keys(drawing.bends)) {
      drawing.bends[key] = drawing.bends[key]!.map(([x, y]) => [nudge(x), nudge(y)]);
    }
    this.markEdited();
    void this.refresh();
  }

  async huntStep(steps: number): Promise<void> {
    const drawing = this.state.drawing;
    if (!drawing) return;
    const res = await this.api.huntStep({
      drawing,
      q: this.state.q,
      seed: this.state.seed,
      steps,
      temperature: this.state.temperature,
      pinned: this.state.pinned,
    });
    this.state.lastHuntBest = res.best_count;
    this.state.seed += 1; // a fresh walk next click, still reproducible
    this.adoptDrawing(res.drawing);
    await this.refresh();
  }

  exportJson(): string {
    if (!this.state.drawing) throw new Error("nothing to export");
    return JSON.stringify(this.state.drawing, null, 1);
  }

  importJson(text: string): void {
    const obj = JSON.parse(text) as DrawingJson;
    if (
      typeof obj !== "object" ||
      obj === null ||
      typeof obj.n !== "number" ||
      !Array.isArray(obj.edges) ||
      typeof obj.positions !== "object"
    ) {
      throw new Error("not a drawing file");
    }
    // Exactness check: every coordinate must parse as a rational.
    for (const point of Object.values(obj.positions)) parsePoint(point);
    for (const chain of Object.values(obj.bends ?? {})) chain.forEach(parsePoint);
    if (!obj.bends) obj.bends = {};
    this.adoptDrawing(obj);
    void this.refresh();
  }
}

function parsePoint(point: PointJson): void {
  parseRational(point[0]);
  parseRational(point[1]);
}

export function indexOfFamily(
  certificates: CertificateJson[],
  target: CertificateJson,
): number | null {
  const i = certificates.findIndex((c) => sameFamily(c.family, target.family));
  return i >= 0 ? i : null;
}
