/**
 * Wiring: load a bundle file, keep the threshold, the assignment, the
 * panels and the metrics sidebar in sync, export the assignment CSV.
 */

import { BundleFormatError, BundleIntegrityError, parseBundle } from './bundle.js';
import { assignmentToCsv } from './csv.js';
import { DendrogramPanel } from './dendropanel.js';
import { ScatterPanel } from './scatterpanel.js';
import {
  initialState,
  maxHeight,
  metrics,
  setThreshold,
  type ExplorerState,
} from './state.js';

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

let state: ExplorerState | null = null;

const banner = el<HTMLDivElement>('banner');
const fileInput = el<HTMLInputElement>('bundle-file');
const tauInput = el<HTMLInputElement>('tau');
const tauSlider = el<HTMLInputElement>('tau-slider');
const exportButton = el<HTMLButtonElement>('export-csv');
const resetButton = el<HTMLButtonElement>('reset-view');
const sidebar = el<HTMLDivElement>('metrics');
const scatterWrap = el<HTMLDivElement>('scatter-wrap');

const dendroPanel = new DendrogramPanel(
  el<HTMLCanvasElement>('dendro-canvas'),
  (tau) => {
    if (state) update(setThreshold(state, tau));
  },
);
const scatterPanel = new ScatterPanel(el<HTMLCanvasElement>('scatter-canvas'));

function showBanner(kind: 'error' | 'integrity', message: string): void {
  banner.textContent = message;
  banner.className = `banner ${kind}`;
  banner.hidden = false;
}

function clearBanner(): void {
  banner.hidden = true;
}

function update(next: ExplorerState): void {
  state = next;
  const m = metrics(next);
  const rows: [string, string][] = [
    ['dataset', next.bundle.meta.name],
    ['instances', String(m.n)],
    ['dimension', String(m.d)],
    ['metric', m.metric],
    ['sigma', String(m.sigma)],
    ['threshold', next.tau.toPrecision(6)],
    ['clusters', String(m.clusterCount)],
  ];
  if (m.purity !== null && m.errorCount !== null) {
    rows.push(['errors', String(m.errorCount)]);
    rows.push(['purity', m.purity.toFixed(4)]);
  }
  sidebar.innerHTML = rows
    .map(([k, v]) => `<dt>${k}</dt><dd>${v}</dd>`)
    .join('');

  const top = maxHeight(next.bundle);
  const cuttable = next.bundle.merges.length > 0;
  tauInput.disabled = !cuttable;
  tauSlider.disabled = !cuttable;
  tauInput.value = next.tau.toPrecision(6);
  tauSlider.max = String(top * 1.25 || 1);
  tauSlider.step = String((top || 1) / 1000);
  tauSlider.value = String(next.tau);

  dendroPanel.setState(next);
  scatterWrap.hidden = next.bundle.coords2d === null;
  if (next.bundle.coords2d !== null) scatterPanel.setState(next);
}

fileInput.addEventListener('change', async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  clearBanner();
  try {
    const bundle = parseBundle(await file.text());
    update(initialState(bundle));
  } catch (exc) {
    if (exc instanceof BundleIntegrityError) {
      showBanner('integrity', String((exc as Error).message));
    } else if (exc instanceof BundleFormatError) {
      showBanner('error', String((exc as Error).message));
    } else {
      showBanner('error', `unexpected failure: ${exc}`);
    }
  }
});

tauInput.addEventListener('change', () => {
  const tau = Number(tauInput.value);
  if (state && Number.isFinite(tau) && tau >= 0) update(setThreshold(state, tau));
});

tauSlider.addEventListener('input', () => {
  if (state) update(setThreshold(state, Number(tauSlider.value)));
});

exportButton.addEventListener('click', () => {
  if (!state) return;
  const blob = new Blob([assignmentToCsv(state.assignment)], { type: 'text/csv' });
  const link = document.createElement('a');
  link.href = URL.createObjectURL(blob);
  link.download = `${state.bundle.meta.name.replace(/[^\w.-]+/g, '_')}.assignment.csv`;
  link.click();
  URL.revokeObjectURL(link.href);
});

resetButton.addEventListener('click', () => dendroPanel.resetView());
