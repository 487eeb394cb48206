/**
 * Assignment CSV export, byte-compatible with the core CLI's output:
 * header node,cluster,root and CRLF line endings.
 */

import type { Assignment } from './cut.js';

export function assignmentToCsv(assignment: Assignment): string {
  const lines = ['node,cluster,root'];
  for (let node = 0; node < assignment.clusterOf.length; node++) {
    const cluster = assignment.clusterOf[node];
    lines.push(`${node},${cluster},${assignment.roots[cluster]}`);
  }
  return lines.join('\r\n') + '\r\n';
}
