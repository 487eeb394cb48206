/**
 * Bundle document parsing and validation (schema itdendro-bundle/1).
 *
 * The explorer consumes only what the bundle carries: parent/weight
 * arrays, the root, the merge rows and the optional coordinates and
 * labels. Dissimilarities and potentials are never recomputed here.
 */

export const SCHEMA_VERSION = 'itdendro-bundle/1';

export interface BundleMeta {
  name: string;
  sigma: number;
  metric: string;
  kind: string;
  n: number;
  d: number;
}

export interface InTree {
  parent: number[];
  weight: number[];
  potential: number[];
  root: number;
}

export type MergeRow = [left: number, right: number, height: number];

export interface DendroBundle {
  meta: BundleMeta;
  coords2d: [number, number][] | null;
  labels: string[] | null;
  it: InTree;
  merges: MergeRow[];
}

/** Document does not parse or a required field is missing/mistyped. */
export class BundleFormatError extends Error {}

/** Document parses but violates a structural invariant. */
export class BundleIntegrityError extends Error {}

function fail(invariant: string): never {
  throw new BundleIntegrityError(`bundle violates invariant: ${invariant}`);
}

function requireField<T>(value: T | undefined | null, field: string): T {
  if (value === undefined || value === null) {
    throw new BundleFormatError(`bundle field missing: ${field}`);
  }
  return value;
}

function numberArray(value: unknown, field: string): number[] {
  if (!Array.isArray(value) || value.some((x) => typeof x !== 'number')) {
    throw new BundleFormatError(`bundle field malformed: ${field}`);
  }
  return value as number[];
}

function checkMergeRows(n: number, rows: MergeRow[]): void {
  const seen = new Set<number>();
  let prev = -Infinity;
  rows.forEach(([left, right, h], k) => {
    if (!(left < right)) fail(`merges row ${k}: left < right`);
    if (left < 0 || right >= n + k) fail(`merges row ${k}: child id in [0, n+k)`);
    if (seen.has(left) || seen.has(right)) {
      fail(`merges row ${k}: child id referenced once`);
    }
    seen.add(left);
    seen.add(right);
    if (h < 0) fail(`merges row ${k}: non-negative height`);
    if (h < prev) fail(`merges row ${k}: non-decreasing heights`);
    prev = h;
  });
  if (n >= 2 && seen.size !== 2 * n - 2) {
    fail('merges reference every id in [0, 2n-2) exactly once');
  }
}

/** Parse and fully validate a bundle document. */
export function parseBundle(text: string): DendroBundle {
  let doc: any;
  try {
    doc = JSON.parse(text);
  } catch (exc) {
    throw new BundleFormatError(`bundle is not valid JSON: ${exc}`);
  }
  if (typeof doc !== 'object' || doc === null) {
    throw new BundleFormatError('bundle must be a JSON object');
  }
  const version = doc.schema?.version;
  if (version !== SCHEMA_VERSION) {
    throw new BundleFormatError(
      `unsupported bundle schema ${JSON.stringify(version)}, expected ${SCHEMA_VERSION}`,
    );
  }

  const meta = requireField(doc.meta, 'meta');
  const n = requireField(meta.n, 'meta.n');
  if (!Number.isInteger(n) || n < 1) {
    throw new BundleFormatError('bundle field malformed: meta.n');
  }
  const itDoc = requireField(doc.it, 'it');
  const parent = numberArray(itDoc.parent, 'it.parent');
  const weight = numberArray(itDoc.weight, 'it.weight');
  const potential = numberArray(itDoc.potential, 'it.potential');
  const root = requireField(itDoc.root, 'it.root') as number;
  const mergesDoc = requireField(doc.merges, 'merges');
  if (!Array.isArray(mergesDoc)) {
    throw new BundleFormatError('bundle field malformed: merges');
  }
  const merges: MergeRow[] = mergesDoc.map((row: unknown, k: number) => {
    const triple = numberArray(row, `merges[${k}]`);
    if (triple.length !== 3) {
      throw new BundleFormatError(`bundle field malformed: merges[${k}]`);
    }
    return [triple[0], triple[1], triple[2]];
  });

  if (parent.length !== n) fail('it.parent length equals meta.n');
  if (weight.length !== n) fail('it.weight length equals meta.n');
  if (potential.length !== n) fail('it.potential length equals meta.n');
  if (!Number.isInteger(root) || root < 0 || root >= n) {
    fail('it.root is a valid node index');
  }
  const selfLoops = [];
  for (let i = 0; i < n; i++) {
    if (parent[i] < 0 || parent[i] >= n || !Number.isInteger(parent[i])) {
      fail('parent indices in range');
    }
    if (parent[i] === i) selfLoops.push(i);
    if (weight[i] < 0) fail('weights are non-negative');
  }
  if (selfLoops.length !== 1 || selfLoops[0] !== root) {
    fail('parent has exactly one self-loop, at the root');
  }
  if (weight[root] !== 0) fail('root weight is zero');
  const reaches = new Uint8Array(n);
  reaches[root] = 1;
  const chain: number[] = [];
  for (let i = 0; i < n; i++) {
    let node = i;
    chain.length = 0;
    while (!reaches[node]) {
      chain.push(node);
      node = parent[node];
      if (chain.length > n) fail('parent chains reach the root');
    }
    for (const q of chain) reaches[q] = 1;
  }
  if (merges.length !== n - 1) fail('merges has n-1 rows');
  checkMergeRows(n, merges);

  // the carried identity: merge heights are the sorted non-root edge weights
  const sortedWeights = weight
    .filter((_, i) => i !== root)
    .sort((a, b) => a - b);
  for (let k = 0; k < merges.length; k++) {
    if (merges[k][2] !== sortedWeights[k]) {
      fail('merge heights equal the sorted non-root edge weights');
    }
  }

  let coords2d: [number, number][] | null = null;
  if (doc.coords2d !== null && doc.coords2d !== undefined) {
    if (!Array.isArray(doc.coords2d) || doc.coords2d.length !== n) {
      fail('coords2d is an n x 2 array');
    }
    coords2d = doc.coords2d.map((p: unknown, i: number) => {
      const pair = numberArray(p, `coords2d[${i}]`);
      if (pair.length !== 2) fail('coords2d is an n x 2 array');
      return [pair[0], pair[1]] as [number, number];
    });
  }
  let labels: string[] | null = null;
  if (doc.labels !== null && doc.labels !== undefined) {
    if (!Array.isArray(doc.labels) || doc.labels.length !== n) {
      fail('labels length equals meta.n');
    }
    labels = doc.labels.map((x: unknown) => String(x));
  }

  return {
    meta: {
      name: String(meta.name ?? 'dataset'),
      sigma: Number(requireField(meta.sigma, 'meta.sigma')),
      metric: String(requireField(meta.metric, 'meta.metric')),
      kind: String(meta.kind ?? 'real'),
      n,
      d: Number(requireField(meta.d, 'meta.d')),
    },
    coords2d,
    labels,
    it: { parent, weight, potential, root },
    merges,
  };
}
