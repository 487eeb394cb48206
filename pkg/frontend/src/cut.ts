/**
 * Client-side cutting: the exact contract of the core pipeline's
 * threshold cut. An edge strictly heavier than tau is removed, every
 * node then follows parent pointers to the nearest terminal node, and
 * clusters are numbered by ascending root index.
 */

import type { InTree } from './bundle.js';

export interface Assignment {
  clusterOf: Int32Array;
  roots: number[];
  threshold: number;
  removedEdges: [node: number, parent: number, weight: number][];
}

export function cutThreshold(it: InTree, tau: number): Assignment {
  if (tau < 0) throw new RangeError(`threshold must be non-negative, got ${tau}`);
  const n = it.parent.length;
  const terminal = new Uint8Array(n);
  const removedEdges: Assignment['removedEdges'] = [];
  for (let i = 0; i < n; i++) {
    if (i !== it.root && it.weight[i] > tau) {
      terminal[i] = 1;
      removedEdges.push([i, it.parent[i], it.weight[i]]);
    }
  }
  terminal[it.root] = 1;

  const rootOf = new Int32Array(n).fill(-1);
  const path: number[] = [];
  for (let i = 0; i < n; i++) {
    let node = i;
    path.length = 0;
    while (rootOf[node] < 0) {
      if (terminal[node]) {
        rootOf[node] = node;
        break;
      }
      path.push(node);
      node = it.parent[node];
      if (path.length > n) {
        throw new RangeError(`parent chain from ${i} does not terminate`);
      }
    }
    const target = rootOf[node];
    for (const q of path) rootOf[q] = target;
  }

  const roots = [...new Set(rootOf)].sort((a, b) => a - b);
  const indexOf = new Map(roots.map((r, c) => [r, c]));
  const clusterOf = new Int32Array(n);
  for (let i = 0; i < n; i++) clusterOf[i] = indexOf.get(rootOf[i])!;
  return { clusterOf, roots, threshold: tau, removedEdges };
}

export interface ThresholdCandidate {
  tau: number;
  gap: number;
}

/**
 * Candidate cut levels at the midpoints of the largest gaps between
 * consecutive merge heights, descending by gap (ties by midpoint).
 */
export function suggestThresholds(
  heights: number[],
  maxCandidates = 5,
): ThresholdCandidate[] {
  const candidates: ThresholdCandidate[] = [];
  for (let k = 0; k + 1 < heights.length; k++) {
    const lo = heights[k];
    const hi = heights[k + 1];
    if (hi > lo) candidates.push({ tau: (lo + hi) / 2, gap: hi - lo });
  }
  candidates.sort((a, b) => b.gap - a.gap || a.tau - b.tau);
  return candidates.slice(0, maxCandidates);
}

export interface PurityResult {
  errorCount: number;
  purity: number;
}

/** Majority-label impurity of an assignment against annotations. */
export function purity(clusterOf: Int32Array, labels: string[]): PurityResult {
  const counts = new Map<number, Map<string, number>>();
  for (let i = 0; i < clusterOf.length; i++) {
    const c = clusterOf[i];
    let byLabel = counts.get(c);
    if (!byLabel) counts.set(c, (byLabel = new Map()));
    byLabel.set(labels[i], (byLabel.get(labels[i]) ?? 0) + 1);
  }
  let errors = 0;
  for (const byLabel of counts.values()) {
    let size = 0;
    let majority = 0;
    for (const count of byLabel.values()) {
      size += count;
      if (count > majority) majority = count;
    }
    errors += size - majority;
  }
  return { errorCount: errors, purity: 1 - errors / clusterOf.length };
}
