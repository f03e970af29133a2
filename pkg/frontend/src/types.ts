/** Wire shapes of the /api/v1 service. The UI never recomputes a number
 * that appears in these documents; it only arranges them. */

export interface CorpusEntry {
  name: string;
  path: string;
  embedding_dim: number | null;
  doc_count: number;
  statement_count: number;
  chain_count: number;
  ingested_at: string;
}

export interface CorpusList {
  schema: string;
  corpora: CorpusEntry[];
}

export interface ComparePair {
  doc_a: string;
  doc_b: string;
  score: number;
  rank: number;
  text_a: string;
  text_b: string;
}

export interface CompareResponse {
  schema: string;
  corpus_a: string;
  corpus_b: string;
  pairs: ComparePair[];
}

export interface SearchResult {
  doc_id: string;
  score: number;
  rank: number;
  snippet: string;
}

export interface SearchResponse {
  schema: string;
  corpus: string;
  relevance: string;
  model_tag: string | null;
  results: SearchResult[];
}

export interface SpanText {
  start: number;
  end: number;
  text: string;
}

export interface AbdicoRecord {
  statement_id: string;
  aim: { index: number; lemma: string; text: string };
  attribute: SpanText | null;
  object: SpanText | null;
  deontic: string | null;
  modal_lemma: string | null;
  negated: boolean;
  category: string;
  deontic_absent: boolean;
}

export interface ParseResponse {
  schema: string;
  corpus: string;
  records: AbdicoRecord[];
  unparsed: { statement_id: string; reason: string }[];
}

export interface ClusterRow {
  id: number;
  members: string[];
  top_terms: [string, number][];
}

export interface ClusterResponse {
  schema: string;
  corpus: string;
  role: string;
  min_size: number;
  clusters: ClusterRow[];
  noise: string[];
}

export interface GraphNode {
  cluster_id: number;
  label: string;
  terms: string[];
  member_count: number;
}

export interface GraphEdge {
  src: number;
  dst: number;
  policy_count: number;
  weight: number;
  category_counts: Record<string, number>;
}

export interface GraphResponse {
  schema: string;
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface ApiErrorBody {
  error: { code: string; message: string; details?: unknown };
}
