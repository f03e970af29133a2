/** Pure response-to-view mappings. Every number shown traces back to a
 * response field; filtering and paging only select, never recompute. */

import type {
  AbdicoRecord, ClusterResponse, ComparePair, CompareResponse, GraphEdge,
  GraphResponse, SearchResponse,
} from "./types.js";

export const PAGE_SIZE = 25;

export interface CompareView {
  rows: ComparePair[];
  totalCount: number;
  shownCount: number;
  hiddenCount: number;
  page: number;
  pageCount: number;
}

export function compareView(response: CompareResponse, threshold: number,
                            page: number): CompareView {
  const passing = response.pairs.filter((p) => p.score >= threshold);
  const pageCount = Math.max(1, Math.ceil(passing.length / PAGE_SIZE));
  const clamped = Math.min(Math.max(page, 0), pageCount - 1);
  const rows = passing.slice(clamped * PAGE_SIZE, (clamped + 1) * PAGE_SIZE);
  return {
    rows,
    totalCount: response.pairs.length,
    shownCount: passing.length,
    hiddenCount: response.pairs.length - passing.length,
    page: clamped,
    pageCount,
  };
}

export interface SearchRow {
  rank: number;
  docId: string;
  score: number;
  snippet: string;
}

export function searchRows(response: SearchResponse): SearchRow[] {
  return response.results.map((r) => ({
    rank: r.rank,
    docId: r.doc_id,
    score: r.score,
    snippet: r.snippet,
  }));
}

// ---------------------------------------------------------------- network

export const CATEGORY_COLORS: Record<string, string> = {
  Strategy: "#4c9f70",
  Norm: "#e0a126",
  Requirement: "#2a6fdb",
  Restriction: "#d0453e",
};

export interface SceneNode {
  id: number;
  label: string;
  tooltip: string;
  radius: number;
}

export interface SceneEdge {
  src: number;
  dst: number;
  thickness: number; // proportional to the response weight
  color: string;     // dominant regulatory category
  policyCount: number;
  categories: Record<string, number>;
}

export interface NetworkScene {
  nodes: SceneNode[];
  edges: SceneEdge[];
}

const THICKNESS_PER_WEIGHT = 4;

export function dominantCategory(edge: GraphEdge): string {
  const entries = Object.entries(edge.category_counts);
  entries.sort((x, y) => y[1] - x[1] || x[0].localeCompare(y[0]));
  return entries.length ? entries[0][0] : "Strategy";
}

export function networkScene(graph: GraphResponse): NetworkScene {
  return {
    nodes: graph.nodes.map((n) => ({
      id: n.cluster_id,
      label: n.label,
      tooltip: `${n.terms.join(", ")} — ${n.member_count} policies`,
      radius: 10 + 3 * Math.sqrt(n.member_count),
    })),
    edges: graph.edges.map((e) => ({
      src: e.src,
      dst: e.dst,
      thickness: e.weight * THICKNESS_PER_WEIGHT,
      color: CATEGORY_COLORS[dominantCategory(e)] ?? CATEGORY_COLORS.Strategy,
      policyCount: e.policy_count,
      categories: e.category_counts,
    })),
  };
}

/** Records behind one edge: attribute in the source cluster, object in the
 * target cluster, per the joint constituent clustering. */
export function edgePolicies(edge: { src: number; dst: number },
                             records: AbdicoRecord[],
                             clusters: ClusterResponse): AbdicoRecord[] {
  const clusterOf = new Map<string, number>();
  for (const cluster of clusters.clusters) {
    for (const member of cluster.members) clusterOf.set(member, cluster.id);
  }
  return records.filter((r) =>
    r.attribute !== null && r.object !== null &&
    clusterOf.get(`${r.statement_id}#A`) === edge.src &&
    clusterOf.get(`${r.statement_id}#B`) === edge.dst);
}
