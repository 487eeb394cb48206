/**
 * Linked scatter panel for 2-d bundles: points colored by the current
 * assignment's cluster roots, with the same pan/zoom gestures as the
 * dendrogram panel.
 */

import { colorForRoot } from './colors.js';
import type { ExplorerState } from './state.js';

const MARGIN = 18;

export class ScatterPanel {
  private ctx: CanvasRenderingContext2D;
  private state: ExplorerState | null = null;
  private lo: [number, number] = [0, 0];
  private scale = 1;
  private zoom = 1;
  private panPx = { x: 0, y: 0 };
  private frameQueued = false;
  private dragging = false;
  private dragStart = { px: 0, py: 0, panX: 0, panY: 0 };

  constructor(private canvas: HTMLCanvasElement) {
    this.ctx = canvas.getContext('2d')!;
    canvas.addEventListener('wheel', this.onWheel, { passive: false });
    canvas.addEventListener('mousedown', this.onMouseDown);
    window.addEventListener('mousemove', this.onMouseMove);
    window.addEventListener('mouseup', () => {
      this.dragging = false;
    });
  }

  setState(state: ExplorerState): void {
    const sameBundle = this.state?.bundle === state.bundle;
    this.state = state;
    if (!sameBundle && state.bundle.coords2d) {
      this.fit(state.bundle.coords2d);
    }
    this.requestDraw();
  }

  private fit(coords: [number, number][]): void {
    let [xMin, yMin] = coords[0];
    let [xMax, yMax] = coords[0];
    for (const [x, y] of coords) {
      xMin = Math.min(xMin, x); xMax = Math.max(xMax, x);
      yMin = Math.min(yMin, y); yMax = Math.max(yMax, y);
    }
    this.lo = [xMin, yMin];
    const spanX = xMax - xMin || 1;
    const spanY = yMax - yMin || 1;
    this.scale = Math.min(
      (this.canvas.width - 2 * MARGIN) / spanX,
      (this.canvas.height - 2 * MARGIN) / spanY,
    );
    this.zoom = 1;
    this.panPx = { x: 0, y: 0 };
  }

  requestDraw(): void {
    if (this.frameQueued) return;
    this.frameQueued = true;
    requestAnimationFrame(() => {
      this.frameQueued = false;
      this.draw();
    });
  }

  private draw(): void {
    const { ctx, canvas, state } = this;
    ctx.fillStyle = 'white';
    ctx.fillRect(0, 0, canvas.width, canvas.height);
    if (!state?.bundle.coords2d) return;
    const coords = state.bundle.coords2d;
    const { clusterOf, roots } = state.assignment;
    const s = this.scale * this.zoom;
    const r = coords.length > 2000 ? 1.4 : 2.5;
    for (let i = 0; i < coords.length; i++) {
      const px = MARGIN + (coords[i][0] - this.lo[0]) * s + this.panPx.x;
      const py = canvas.height - MARGIN - (coords[i][1] - this.lo[1]) * s + this.panPx.y;
      if (px < -4 || px > canvas.width + 4 || py < -4 || py > canvas.height + 4) {
        continue;
      }
      ctx.fillStyle = colorForRoot(roots[clusterOf[i]]);
      ctx.beginPath();
      ctx.arc(px, py, r, 0, 2 * Math.PI);
      ctx.fill();
    }
  }

  private onWheel = (event: WheelEvent): void => {
    event.preventDefault();
    const rect = this.canvas.getBoundingClientRect();
    const px = event.clientX - rect.left;
    const py = event.clientY - rect.top;
    const factor = event.deltaY < 0 ? 1.15 : 1 / 1.15;
    const next = Math.min(Math.max(this.zoom * factor, 0.2), 200);
    const applied = next / this.zoom;
    this.zoom = next;
    // zoom about the cursor
    this.panPx.x = px - (px - this.panPx.x - MARGIN) * applied - MARGIN;
    this.panPx.y = py - (py - this.panPx.y - (this.canvas.height - MARGIN)) * applied
      - (this.canvas.height - MARGIN);
    this.requestDraw();
  };

  private onMouseDown = (event: MouseEvent): void => {
    this.dragging = true;
    this.dragStart = {
      px: event.clientX, py: event.clientY,
      panX: this.panPx.x, panY: this.panPx.y,
    };
  };

  private onMouseMove = (event: MouseEvent): void => {
    if (!this.dragging) return;
    this.panPx.x = this.dragStart.panX + (event.clientX - this.dragStart.px);
    this.panPx.y = this.dragStart.panY + (event.clientY - this.dragStart.py);
    this.requestDraw();
  };
}
