/**
 * Dendrogram geometry in data coordinates: leaves sit at integer slots
 * on the x axis (depth-first from the final merge, left subtree first),
 * merges are cap-shaped links at their height. Panels map these to
 * screen space with their own pan/zoom transform.
 */

import type { MergeRow } from './bundle.js';

export interface DendroLink {
  /** x of left/right child stems and the child tops they rise from */
  xl: number;
  xr: number;
  topL: number;
  topR: number;
  height: number;
  /** index of a representative leaf below this merge (for coloring) */
  leaf: number;
}

export interface DendroLayout {
  nLeaves: number;
  /** leaf index -> x slot */
  slot: Int32Array;
  /** drawing order of leaves */
  order: number[];
  links: DendroLink[];
  maxHeight: number;
}

export function leafOrder(nLeaves: number, merges: MergeRow[]): number[] {
  if (nLeaves === 1) return [0];
  const order: number[] = [];
  const stack = [2 * nLeaves - 2];
  while (stack.length > 0) {
    const node = stack.pop()!;
    if (node < nLeaves) {
      order.push(node);
    } else {
      const [left, right] = merges[node - nLeaves];
      stack.push(right); // popped after left
      stack.push(left);
    }
  }
  return order;
}

export function layoutDendrogram(nLeaves: number, merges: MergeRow[]): DendroLayout {
  const order = leafOrder(nLeaves, merges);
  const slot = new Int32Array(nLeaves);
  order.forEach((leaf, k) => {
    slot[leaf] = k;
  });

  const x = new Float64Array(2 * nLeaves - 1);
  const top = new Float64Array(2 * nLeaves - 1);
  const repLeaf = new Int32Array(2 * nLeaves - 1);
  for (let leaf = 0; leaf < nLeaves; leaf++) {
    x[leaf] = slot[leaf];
    repLeaf[leaf] = leaf;
  }

  const links: DendroLink[] = [];
  let maxHeight = 0;
  merges.forEach(([left, right, height], k) => {
    const node = nLeaves + k;
    links.push({
      xl: x[left],
      xr: x[right],
      topL: top[left],
      topR: top[right],
      height,
      leaf: repLeaf[left],
    });
    x[node] = (x[left] + x[right]) / 2;
    top[node] = height;
    repLeaf[node] = repLeaf[left];
    if (height > maxHeight) maxHeight = height;
  });
  return { nLeaves, slot, order, links, maxHeight };
}

/**
 * For each merge, the cluster id shared by all its leaves under the
 * given assignment, or -1 when the merge straddles clusters (drawn
 * gray, above the cut).
 */
export function uniformClusters(
  nLeaves: number,
  merges: MergeRow[],
  clusterOf: Int32Array,
): Int32Array {
  const uniform = new Int32Array(2 * nLeaves - 1).fill(-1);
  for (let leaf = 0; leaf < nLeaves; leaf++) uniform[leaf] = clusterOf[leaf];
  merges.forEach(([left, right], k) => {
    const cl = uniform[left];
    if (cl >= 0 && cl === uniform[right]) uniform[nLeaves + k] = cl;
  });
  return uniform;
}
