/**
 * Explorer state: one loaded bundle, the current threshold, and the
 * assignment that always reflects a client-side cut at that threshold.
 */

import type { DendroBundle } from './bundle.js';
import { cutThreshold, purity, suggestThresholds, type Assignment } from './cut.js';

export interface ExplorerState {
  bundle: DendroBundle;
  tau: number;
  assignment: Assignment;
}

export function maxHeight(bundle: DendroBundle): number {
  const merges = bundle.merges;
  return merges.length > 0 ? merges[merges.length - 1][2] : 0;
}

/** Initial threshold: the top gap suggestion, or the max height when
 * the heights carry no positive gap. */
export function initialTau(bundle: DendroBundle): number {
  const heights = bundle.merges.map((row) => row[2]);
  const candidates = suggestThresholds(heights, 1);
  return candidates.length > 0 ? candidates[0].tau : maxHeight(bundle);
}

export function initialState(bundle: DendroBundle): ExplorerState {
  return setThreshold({ bundle } as ExplorerState, initialTau(bundle));
}

export function setThreshold(state: ExplorerState, tau: number): ExplorerState {
  const clamped = Math.max(tau, 0);
  return {
    bundle: state.bundle,
    tau: clamped,
    assignment: cutThreshold(state.bundle.it, clamped),
  };
}

export interface Metrics {
  n: number;
  d: number;
  sigma: number;
  metric: string;
  clusterCount: number;
  errorCount: number | null;
  purity: number | null;
}

export function metrics(state: ExplorerState): Metrics {
  const { bundle, assignment } = state;
  let errorCount: number | null = null;
  let pur: number | null = null;
  if (bundle.labels !== null) {
    const result = purity(assignment.clusterOf, bundle.labels);
    errorCount = result.errorCount;
    pur = result.purity;
  }
  return {
    n: bundle.meta.n,
    d: bundle.meta.d,
    sigma: bundle.meta.sigma,
    metric: bundle.meta.metric,
    clusterCount: assignment.roots.length,
    errorCount,
    purity: pur,
  };
}
