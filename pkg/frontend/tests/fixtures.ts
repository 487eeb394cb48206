import { readFileSync } from 'node:fs';
import { fileURLToPath } from 'node:url';

export interface FixtureEntry {
  name: string;
  bundle: string;
  taus: number[];
  golden: string[];
}

export function fixturePath(name: string): string {
  return fileURLToPath(new URL(`../fixtures/${name}`, import.meta.url));
}

export function readFixture(name: string): string {
  return readFileSync(fixturePath(name), 'utf8');
}

export function manifest(): FixtureEntry[] {
  return JSON.parse(readFixture('manifest.json'));
}
