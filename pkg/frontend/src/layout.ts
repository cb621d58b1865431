import type { Edge } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

/** FNV-1a over the edge-list text; stable across sessions and platforms. */
export function graphHash(text: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193) >>> 0;
  }
  return h >>> 0;
}

/**
 * Deterministic circular layout: vertices evenly spaced, the whole ring
 * rotated by an angle derived from the graph hash so distinct boards look
 * distinct while re-renders of the same board are pixel-stable.
 */
export function circularLayout(
  n: number,
  text: string,
  width: number,
  height: number,
): Point[] {
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.max(10, Math.min(width, height) / 2 - 40);
  const offset = ((graphHash(text) % 360) * Math.PI) / 180;
  const points: Point[] = [];
  for (let v = 0; v < n; v++) {
    const angle = offset + (2 * Math.PI * v) / Math.max(1, n) - Math.PI / 2;
    points.push({
      x: cx + r * Math.cos(angle),
      y: cy + r * Math.sin(angle),
    });
  }
  return points;
}

export function parseHeader(text: string): { n: number; m: number; edges: Edge[] } {
  const lines = text.trim().split("\n");
  const [n, m] = lines[0].split(" ").map(Number);
  const edges = lines.slice(1).map((line) => {
    const [u, v] = line.split(" ").map(Number);
    return [u, v] as Edge;
  });
  if (!Number.isInteger(n) || !Number.isInteger(m) || edges.length !== m) {
    throw new Error("malformed edge list");
  }
  return { n, m, edges };
}
