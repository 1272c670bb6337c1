/** Editor state and the debounced, last-write-wins request loop.
 *
 * Pure logic, no DOM: the canvas layer subscribes to `onChange` and the
 * tests drive the store directly.
 */

import { ApiClient, ApiError, SmoothResponse, pointsBody } from "./api.js";

export interface EditorState {
  points: number[][]; // model coordinates in [0, 1]^2
  m: number;
  periodic: boolean;
  show: { s0: boolean; s1: boolean; smooth: boolean };
  alpha: number[] | null;
  lastResponse: SmoothResponse | null;
  error: string | null;
  pending: boolean;
}

export function initialState(): EditorState {
  return {
    points: [
      [0.2, 0.3],
      [0.5, 0.75],
      [0.8, 0.35],
      [0.65, 0.2],
      [0.35, 0.2],
    ],
    m: 2,
    periodic: true,
    show: { s0: true, s1: true, smooth: true },
    alpha: null,
    lastResponse: null,
    error: null,
    pending: false,
  };
}

type Listener = (state: EditorState) => void;

export interface Timers {
  set(fn: () => void, ms: number): unknown;
  clear(handle: unknown): void;
}

export class EditorStore {
  state: EditorState;
  private listeners: Listener[] = [];
  private debounceHandle: unknown = null;
  private requestSerial = 0;

  constructor(
    private api: ApiClient,
    private debounceMs = 50,
    private timers: Timers = {
      set: (fn, ms) => setTimeout(fn, ms),
      clear: (h) => clearTimeout(h as ReturnType<typeof setTimeout>),
    },
  ) {
    this.state = initialState();
  }

  onChange(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  movePoint(index: number, x: number, y: number): void {
    if (index < 0 || index >= this.state.points.length) return;
    this.state.points[index] = [clamp01(x), clamp01(y)];
    this.scheduleRefresh();
    this.emit();
  }

  addPoint(x: number, y: number): void {
    this.state.points.push([clamp01(x), clamp01(y)]);
    this.scheduleRefresh();
    this.emit();
  }

  removeLastPoint(): void {
    if (this.state.points.length > 1) {
      this.state.points.pop();
      this.scheduleRefresh();
      this.emit();
    }
  }

  setParam(patch: Partial<Pick<EditorState, "m" | "periodic" | "alpha">>): void {
    Object.assign(this.state, patch);
    this.scheduleRefresh();
    this.emit();
  }

  toggleShow(kind: keyof EditorState["show"]): void {
    this.state.show[kind] = !this.state.show[kind];
    this.emit();
  }

  /** Debounced: bursts of edits collapse into one request. */
  scheduleRefresh(): void {
    if (this.debounceHandle !== null) this.timers.clear(this.debounceHandle);
    this.debounceHandle = this.timers.set(() => {
      this.debounceHandle = null;
      void this.refresh();
    }, this.debounceMs);
  }

  /** Last write wins: stale responses are dropped by serial number. */
  async refresh(): Promise<void> {
    const serial = ++this.requestSerial;
    this.state.pending = true;
    this.emit();
    try {
      const response = await this.api.smooth({
        points: pointsBody(this.state.points.map((p) => [...p]), this.state.periodic),
        m: this.state.m,
        samples: 256,
        q: 2.0,
        alpha: this.state.alpha,
      });
      if (serial !== this.requestSerial) return; // superseded
      this.state.lastResponse = response;
      this.state.error = null;
    } catch (err) {
      if (serial !== this.requestSerial) return;
      // surface the violated condition; points and params stay untouched
      this.state.error = err instanceof ApiError ? err.detail : String(err);
    } finally {
      if (serial === this.requestSerial) {
        this.state.pending = false;
        this.emit();
      }
    }
  }
}

function clamp01(v: number): number {
  return Math.min(1, Math.max(0, v));
}
