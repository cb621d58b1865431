/** Bundled boards. Pure edge-list construction; no game logic. */

function edgeList(n: number, edges: Array<[number, number]>): string {
  const body = edges.map(([u, v]) => `${u} ${v}`).join("\n");
  return body ? `${n} ${edges.length}\n${body}` : `${n} ${edges.length}`;
}

function completeGraph(n: number): string {
  const edges: Array<[number, number]> = [];
  for (let u = 0; u < n; u++) for (let v = u + 1; v < n; v++) edges.push([u, v]);
  return edgeList(n, edges);
}

function multipartite(parts: number[]): string {
  const starts: number[] = [];
  let total = 0;
  for (const p of parts) {
    starts.push(total);
    total += p;
  }
  const edges: Array<[number, number]> = [];
  for (let i = 0; i < parts.length; i++) {
    for (let j = i + 1; j < parts.length; j++) {
      for (let u = starts[i]; u < starts[i] + parts[i]; u++) {
        for (let v = starts[j]; v < starts[j] + parts[j]; v++) {
          edges.push([u, v]);
        }
      }
    }
  }
  return edgeList(total, edges);
}

function turanGraph(n: number): string {
  return multipartite([Math.floor(n / 2), Math.ceil(n / 2)]);
}

/** Reduced board of the single edge graph with one gadget vertex. */
const H_K2_L1 = edgeList(5, [
  [0, 1],
  [0, 2],
  [0, 4],
  [1, 3],
  [1, 4],
  [2, 4],
  [3, 4],
]);

export interface Preset {
  name: string;
  graph: string;
  suggestedOpponent: string;
}

export const PRESETS: Preset[] = [
  { name: "K3", graph: completeGraph(3), suggestedOpponent: "greedy" },
  { name: "K4", graph: completeGraph(4), suggestedOpponent: "optimal" },
  { name: "K5", graph: completeGraph(5), suggestedOpponent: "greedy" },
  { name: "K6", graph: completeGraph(6), suggestedOpponent: "greedy" },
  { name: "Turan T2(6)", graph: turanGraph(6), suggestedOpponent: "turanh:u1=" },
  { name: "Turan T2(8)", graph: turanGraph(8), suggestedOpponent: "greedy" },
  {
    name: "Tripartite 1,1,2 (n=4)",
    graph: multipartite([1, 1, 2]),
    suggestedOpponent: "tripartite:1,1,2",
  },
  {
    name: "Tripartite 2,2,1 (n=5)",
    graph: multipartite([2, 2, 1]),
    suggestedOpponent: "tripartite:2,2,1",
  },
  {
    name: "Tripartite 2,2,2 (n=6)",
    graph: multipartite([2, 2, 2]),
    suggestedOpponent: "tripartite:2,2,2",
  },
  { name: "Reduced H(K2,1)", graph: H_K2_L1, suggestedOpponent: "greedy" },
];
