/** Canvas rendering and pointer interaction for the curve editor. */

import { EditorStore } from "./state.js";

const HIT_RADIUS = 12;

export class CanvasEditor {
  private ctx: CanvasRenderingContext2D;
  private dragging: number | null = null;

  constructor(
    private canvas: HTMLCanvasElement,
    private store: EditorStore,
  ) {
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("2d canvas context unavailable");
    this.ctx = ctx;
    canvas.addEventListener("pointerdown", (e) => this.onDown(e));
    canvas.addEventListener("pointermove", (e) => this.onMove(e));
    canvas.addEventListener("pointerup", () => (this.dragging = null));
    canvas.addEventListener("pointerleave", () => (this.dragging = null));
    store.onChange(() => this.render());
  }

  /** Model [0,1]^2 to canvas pixels, y flipped. */
  private toCanvas([x, y]: number[]): [number, number] {
    return [x * this.canvas.width, (1 - y) * this.canvas.height];
  }

  private toModel(e: PointerEvent): [number, number] {
    const rect = this.canvas.getBoundingClientRect();
    return [
      (e.clientX - rect.left) / rect.width,
      1 - (e.clientY - rect.top) / rect.height,
    ];
  }

  private hitTest(e: PointerEvent): number | null {
    const rect = this.canvas.getBoundingClientRect();
    const px = ((e.clientX - rect.left) / rect.width) * this.canvas.width;
    const py = ((e.clientY - rect.top) / rect.height) * this.canvas.height;
    for (let i = 0; i < this.store.state.points.length; i++) {
      const [cx, cy] = this.toCanvas(this.store.state.points[i]);
      if (Math.hypot(px - cx, py - cy) <= HIT_RADIUS) return i;
    }
    return null;
  }

  private onDown(e: PointerEvent): void {
    const hit = this.hitTest(e);
    if (hit !== null) {
      this.dragging = hit;
    } else if (e.shiftKey) {
      const [x, y] = this.toModel(e);
      this.store.addPoint(x, y);
    }
  }

  private onMove(e: PointerEvent): void {
    if (this.dragging === null) return;
    const [x, y] = this.toModel(e);
    this.store.movePoint(this.dragging, x, y);
  }

  private polyline(rows: number[][], color: string, width: number): void {
    if (rows.length === 0) return;
    this.ctx.strokeStyle = color;
    this.ctx.lineWidth = width;
    this.ctx.beginPath();
    rows.forEach((row, i) => {
      // rows are [t, x, y]; render the spatial part
      const [px, py] = this.toCanvas([row[1], row[2]]);
      if (i === 0) this.ctx.moveTo(px, py);
      else this.ctx.lineTo(px, py);
    });
    const { periodic } = this.store.state;
    if (periodic) this.ctx.closePath();
    this.ctx.stroke();
  }

  render(): void {
    const { width, height } = this.canvas;
    const state = this.store.state;
    this.ctx.clearRect(0, 0, width, height);

    const res = state.lastResponse;
    if (res) {
      if (state.show.s0) this.polyline(res.s0, "#b8c4d0", 1);
      if (state.show.s1) this.polyline(res.s1, "#7f97ad", 1.5);
      if (state.show.smooth) this.polyline(res.curve, "#d9534f", 2.5);
    }

    for (const p of state.points) {
      const [cx, cy] = this.toCanvas(p);
      this.ctx.fillStyle = "#2b3a4a";
      this.ctx.beginPath();
      this.ctx.arc(cx, cy, 5, 0, 2 * Math.PI);
      this.ctx.fill();
    }
  }
}
