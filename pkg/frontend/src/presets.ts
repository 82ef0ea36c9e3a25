import type { GraphDoc } from "./types.js";

export interface Preset {
  name: string;
  title: string;
  graph: GraphDoc;
}

function doc(vertices: number, edges: Array<[number, number]>, pins: number[]): GraphDoc {
  return { vertices, edges, pins };
}

function completeEdges(n: number): Array<[number, number]> {
  const out: Array<[number, number]> = [];
  for (let a = 1; a <= n; a++) for (let b = a + 1; b <= n; b++) out.push([a, b]);
  return out;
}

function chainEdges(n: number): Array<[number, number]> {
  const out: Array<[number, number]> = [];
  for (let i = 1; i < n; i++) out.push([i, i + 1]);
  return out;
}

const bananaEdges: Array<[number, number]> = [
  [1, 2], [1, 3], [1, 4], [1, 5], [2, 3], [2, 4], [2, 5], [3, 4], [3, 5],
  [4, 6], [4, 7], [4, 8], [5, 6], [5, 7], [5, 8], [6, 7], [6, 8], [7, 8],
];

export const PRESETS: Preset[] = [
  { name: "k3-pinned", title: "Triangle, one pin", graph: doc(3, completeEdges(3), [1]) },
  { name: "k5-pinned", title: "K5, one pin", graph: doc(5, completeEdges(5), [1]) },
  {
    name: "star7-pinned-leaves",
    title: "7-star, leaves pinned",
    graph: doc(8, [[1, 8], [2, 8], [3, 8], [4, 8], [5, 8], [6, 8], [7, 8]], [1, 2, 3, 4, 5, 6, 7]),
  },
  { name: "chain6-three-pins", title: "6-chain, three pins", graph: doc(6, chainEdges(6), [1, 3, 6]) },
  { name: "chain6-one-pin", title: "6-chain, one pin", graph: doc(6, chainEdges(6), [1]) },
  {
    name: "tree-five-pins",
    title: "Tree, five pinned leaves",
    graph: doc(8, [[1, 7], [1, 8], [2, 8], [3, 6], [4, 6], [5, 6], [6, 7]], [1, 2, 3, 4, 5]),
  },
  {
    name: "cycle8-four-pins",
    title: "8-cycle, alternating pins",
    graph: doc(8, [[1, 5], [1, 8], [2, 5], [2, 6], [3, 6], [3, 7], [4, 7], [4, 8]], [1, 2, 3, 4]),
  },
  {
    name: "cycle7-three-pins",
    title: "7-cycle, three pins",
    graph: doc(7, [[1, 4], [1, 5], [2, 4], [2, 7], [3, 5], [3, 6], [6, 7]], [1, 2, 3]),
  },
  {
    name: "triangle-tree-a",
    title: "Triangle tree A",
    graph: doc(
      9,
      [[1, 5], [1, 7], [2, 5], [2, 8], [3, 5], [3, 6], [4, 6], [4, 9], [5, 6], [5, 7], [5, 8], [6, 9]],
      [1, 2, 3, 4],
    ),
  },
  {
    name: "triangle-tree-b",
    title: "Triangle tree B",
    graph: doc(
      9,
      [[1, 4], [1, 8], [2, 4], [2, 5], [3, 5], [3, 9], [4, 5], [4, 6], [4, 7], [4, 8], [5, 9], [6, 7]],
      [1, 2, 3],
    ),
  },
  {
    name: "triangle-tree-c",
    title: "Triangle tree C",
    graph: doc(
      9,
      [[1, 4], [1, 7], [2, 4], [2, 8], [3, 5], [3, 9], [4, 5], [4, 6], [4, 7], [4, 8], [5, 6], [5, 9]],
      [1, 2, 3],
    ),
  },
  { name: "double-banana", title: "Double banana", graph: doc(8, bananaEdges, [1]) },
  {
    name: "banana-minus-edge",
    title: "Double banana minus (2,4)",
    graph: doc(8, bananaEdges.filter(([a, b]) => !(a === 2 && b === 4)), [1]),
  },
  {
    name: "toy-two-pins",
    title: "Six-vertex toy, two pins",
    graph: doc(
      6,
      [[1, 3], [1, 4], [1, 5], [2, 3], [2, 4], [2, 5], [2, 6], [3, 4], [3, 5], [3, 6], [4, 5]],
      [1, 2],
    ),
  },
];

export function presetByName(name: string): Preset {
  const p = PRESETS.find((q) => q.name === name);
  if (!p) throw new Error(`unknown preset ${name}`);
  return p;
}
