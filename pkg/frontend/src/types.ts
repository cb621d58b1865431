export type Edge = [number, number];
export type Dir = [number, number];

export type EdgeState = "open" | "queried" | "forced";

export interface EdgeView {
  e: Edge;
  status: EdgeState;
  dir?: Dir;
}

export interface BoundsReport {
  n_half: number;
  info: number | null;
  degeneracy: number;
  thm51: number;
  edge_upper: number;
  jiang_upper: number;
  moon_moser_triangles: number;
  best_lower: number;
  best_upper: number;
}

/** Server view payload: the only source of truth the client renders. */
export interface View {
  edges: EdgeView[];
  total: number;
  terminal: boolean;
  bounds: BoundsReport;
  pending: Edge | null;
}

export interface CreateResponse {
  id: string;
  view: View;
}

export interface QueryResponse {
  dir: Dir;
  view: View;
}

export interface AnswerResponse {
  next_query: Edge | null;
  view: View;
}

export interface HintResponse {
  suggestion?: { kind: "edge" | "direction"; value: Dir };
  source?: "optimal" | "heuristic";
  bounds?: BoundsReport;
  extensions?: number | null;
  message?: string;
  total?: number;
}

export type Role = "algy" | "strategist";

export function sameEdge(a: Edge, b: Edge): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

export function canonical(e: Edge): Edge {
  return e[0] < e[1] ? e : [e[1], e[0]];
}
