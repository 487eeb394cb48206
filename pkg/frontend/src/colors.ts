/**
 * Cluster coloring. Colors key off the cluster's root node index, so a
 * threshold change that leaves a sub-tree's partition alone keeps its
 * color, within a session and across sessions.
 */

export const PALETTE = [
  '#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd', '#8c564b',
  '#e377c2', '#7f7f7f', '#bcbd22', '#17becf', '#aec7e8', '#ffbb78',
];

export const GRAY = '#555555';
export const THRESHOLD_COLOR = '#d62728';

export function colorForRoot(root: number): string {
  const hash = (root * 2654435761) >>> 0; // Knuth multiplicative hash
  return PALETTE[hash % PALETTE.length];
}
