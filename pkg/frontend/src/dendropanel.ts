/**
 * Canvas dendrogram panel: pan (drag), zoom (wheel, cursor-anchored),
 * draggable threshold line. Links outside the viewport are culled, so
 * trees with ~10^4 leaves stay interactive; drawing is batched into
 * animation frames.
 */

import { colorForRoot, GRAY, THRESHOLD_COLOR } from './colors.js';
import { layoutDendrogram, uniformClusters, type DendroLayout } from './layout.js';
import type { ExplorerState } from './state.js';

const MARGIN = { left: 52, right: 16, top: 14, bottom: 22 };
const GRAB_PX = 6;

export class DendrogramPanel {
  private ctx: CanvasRenderingContext2D;
  private layout: DendroLayout | null = null;
  private state: ExplorerState | null = null;
  private uniform: Int32Array | null = null;

  // view transform: data slot/height -> pixels
  private zoomX = 1;
  private zoomY = 1;
  private panX = 0; // in slots
  private panY = 0; // in height units
  private frameQueued = false;
  private dragMode: 'none' | 'pan' | 'threshold' = 'none';
  private dragStart = { px: 0, py: 0, panX: 0, panY: 0 };

  constructor(
    private canvas: HTMLCanvasElement,
    private onThreshold: (tau: number) => void,
  ) {
    this.ctx = canvas.getContext('2d')!;
    canvas.addEventListener('wheel', this.onWheel, { passive: false });
    canvas.addEventListener('mousedown', this.onMouseDown);
    window.addEventListener('mousemove', this.onMouseMove);
    window.addEventListener('mouseup', this.onMouseUp);
  }

  setState(state: ExplorerState): void {
    const sameBundle = this.state?.bundle === state.bundle;
    this.state = state;
    if (!sameBundle) {
      this.layout = layoutDendrogram(state.bundle.meta.n, state.bundle.merges);
      this.resetView();
    }
    this.uniform = uniformClusters(
      state.bundle.meta.n, state.bundle.merges, state.assignment.clusterOf);
    this.requestDraw();
  }

  resetView(): void {
    this.zoomX = 1;
    this.zoomY = 1;
    this.panX = 0;
    this.panY = 0;
    this.requestDraw();
  }

  private plotWidth(): number {
    return this.canvas.width - MARGIN.left - MARGIN.right;
  }

  private plotHeight(): number {
    return this.canvas.height - MARGIN.top - MARGIN.bottom;
  }

  private slotSpan(): number {
    return Math.max(this.layout!.nLeaves - 1, 1);
  }

  private heightSpan(): number {
    return this.layout!.maxHeight > 0 ? this.layout!.maxHeight : 1;
  }

  private xPix(slot: number): number {
    const frac = (slot - this.panX) / this.slotSpan() * this.zoomX;
    return MARGIN.left + frac * this.plotWidth();
  }

  private yPix(height: number): number {
    const frac = (height - this.panY) / this.heightSpan() * this.zoomY;
    return this.canvas.height - MARGIN.bottom - frac * this.plotHeight();
  }

  private slotAt(px: number): number {
    return (px - MARGIN.left) / this.plotWidth() / this.zoomX * this.slotSpan()
      + this.panX;
  }

  private heightAt(py: number): number {
    return (this.canvas.height - MARGIN.bottom - py) / this.plotHeight()
      / this.zoomY * this.heightSpan() + this.panY;
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
    const { ctx, canvas } = this;
    ctx.fillStyle = 'white';
    ctx.fillRect(0, 0, canvas.width, canvas.height);
    if (!this.layout || !this.state) return;

    this.drawAxis();

    ctx.save();
    ctx.beginPath();
    ctx.rect(MARGIN.left, MARGIN.top, this.plotWidth(), this.plotHeight());
    ctx.clip();

    const { links, nLeaves } = this.layout;
    const roots = this.state.assignment.roots;
    const uniform = this.uniform!;
    const xMin = this.slotAt(MARGIN.left) - 1;
    const xMax = this.slotAt(canvas.width - MARGIN.right) + 1;
    const yMax = this.heightAt(MARGIN.top);

    let stroke = '';
    for (let k = 0; k < links.length; k++) {
      const link = links[k];
      if (link.xr < xMin || link.xl > xMax) continue; // viewport culling
      if (Math.min(link.topL, link.topR) > yMax) continue;
      const cluster = uniform[nLeaves + k];
      const color = cluster >= 0 ? colorForRoot(roots[cluster]) : GRAY;
      if (color !== stroke) {
        ctx.strokeStyle = stroke = color;
      }
      ctx.beginPath();
      ctx.moveTo(this.xPix(link.xl), this.yPix(link.topL));
      ctx.lineTo(this.xPix(link.xl), this.yPix(link.height));
      ctx.lineTo(this.xPix(link.xr), this.yPix(link.height));
      ctx.lineTo(this.xPix(link.xr), this.yPix(link.topR));
      ctx.stroke();
    }
    ctx.restore();

    this.drawThreshold();
  }

  private drawAxis(): void {
    const { ctx } = this;
    ctx.strokeStyle = '#999';
    ctx.beginPath();
    ctx.moveTo(MARGIN.left, MARGIN.top);
    ctx.lineTo(MARGIN.left, this.canvas.height - MARGIN.bottom);
    ctx.stroke();
    ctx.fillStyle = '#333';
    ctx.font = '10px sans-serif';
    ctx.textAlign = 'right';
    for (let k = 0; k <= 4; k++) {
      const py = MARGIN.top + (k / 4) * this.plotHeight();
      const value = this.heightAt(py);
      ctx.fillText(value.toPrecision(4), MARGIN.left - 6, py + 3);
    }
  }

  private drawThreshold(): void {
    if (!this.state || this.state.bundle.merges.length === 0) return;
    const py = this.yPix(this.state.tau);
    if (py < MARGIN.top || py > this.canvas.height - MARGIN.bottom) return;
    const { ctx } = this;
    ctx.strokeStyle = THRESHOLD_COLOR;
    ctx.setLineDash([6, 4]);
    ctx.beginPath();
    ctx.moveTo(MARGIN.left, py);
    ctx.lineTo(this.canvas.width - MARGIN.right, py);
    ctx.stroke();
    ctx.setLineDash([]);
    ctx.fillStyle = THRESHOLD_COLOR;
    ctx.textAlign = 'left';
    ctx.fillText(this.state.tau.toPrecision(6), MARGIN.left + 4, py - 4);
  }

  private onWheel = (event: WheelEvent): void => {
    if (!this.layout) return;
    event.preventDefault();
    const rect = this.canvas.getBoundingClientRect();
    const px = event.clientX - rect.left;
    const py = event.clientY - rect.top;
    const factor = event.deltaY < 0 ? 1.15 : 1 / 1.15;
    const anchorSlot = this.slotAt(px);
    const anchorHeight = this.heightAt(py);
    this.zoomX = Math.min(Math.max(this.zoomX * factor, 0.5), 400);
    if (!event.shiftKey) {
      this.zoomY = Math.min(Math.max(this.zoomY * factor, 0.5), 400);
    }
    // keep the point under the cursor fixed
    this.panX = anchorSlot - (this.slotAt(px) - this.panX);
    this.panY = anchorHeight - (this.heightAt(py) - this.panY);
    this.requestDraw();
  };

  private onMouseDown = (event: MouseEvent): void => {
    if (!this.state || !this.layout) return;
    const rect = this.canvas.getBoundingClientRect();
    const py = event.clientY - rect.top;
    const thresholdPy = this.yPix(this.state.tau);
    this.dragMode =
      this.state.bundle.merges.length > 0 && Math.abs(py - thresholdPy) <= GRAB_PX
        ? 'threshold'
        : 'pan';
    this.dragStart = {
      px: event.clientX, py: event.clientY, panX: this.panX, panY: this.panY,
    };
    if (this.dragMode === 'threshold') this.applyThreshold(py);
  };

  private onMouseMove = (event: MouseEvent): void => {
    if (this.dragMode === 'none' || !this.layout) return;
    const rect = this.canvas.getBoundingClientRect();
    if (this.dragMode === 'threshold') {
      this.applyThreshold(event.clientY - rect.top);
      return;
    }
    const dxSlots = (event.clientX - this.dragStart.px)
      / this.plotWidth() / this.zoomX * this.slotSpan();
    const dyHeights = (event.clientY - this.dragStart.py)
      / this.plotHeight() / this.zoomY * this.heightSpan();
    this.panX = this.dragStart.panX - dxSlots;
    this.panY = this.dragStart.panY + dyHeights;
    this.requestDraw();
  };

  private onMouseUp = (): void => {
    this.dragMode = 'none';
  };

  private applyThreshold(py: number): void {
    this.onThreshold(Math.max(this.heightAt(py), 0));
  }
}
