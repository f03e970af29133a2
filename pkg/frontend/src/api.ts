/** Thin typed client for /api/v1. Base URL comes from a runtime config
 * file next to index.html, falling back to same-origin. */

import type {
  ApiErrorBody, ClusterResponse, CompareResponse, CorpusList, GraphResponse,
  ParseResponse, SearchResponse,
} from "./types.js";

export class ServiceError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.code = code;
    this.status = status;
  }
}

export class ApiClient {
  constructor(private baseUrl: string) {}

  static async fromConfig(): Promise<ApiClient> {
    try {
      const resp = await fetch("./config.json");
      if (resp.ok) {
        const cfg = (await resp.json()) as { baseUrl?: string };
        if (cfg.baseUrl) return new ApiClient(cfg.baseUrl);
      }
    } catch {
      // fall through to same-origin default
    }
    return new ApiClient("/api/v1");
  }

  private async request<T>(method: string, path: string,
                           body?: unknown): Promise<T> {
    let resp: Response;
    try {
      resp = await fetch(this.baseUrl + path, {
        method,
        headers: body === undefined ? {} : { "content-type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (exc) {
      throw new ServiceError(0, "unreachable", String(exc));
    }
    if (!resp.ok) {
      let code = "error";
      let message = `${resp.status} ${resp.statusText}`;
      try {
        const parsed = (await resp.json()) as ApiErrorBody;
        code = parsed.error.code;
        message = parsed.error.message;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ServiceError(resp.status, code, message);
    }
    return (await resp.json()) as T;
  }

  listCorpora(): Promise<CorpusList> {
    return this.request("GET", "/corpora");
  }

  compare(corpusA: string, corpusB: string, topN?: number): Promise<CompareResponse> {
    return this.request("POST", "/compare", {
      corpus_a: corpusA, corpus_b: corpusB,
      ...(topN === undefined ? {} : { top_n: topN }),
    });
  }

  searchText(corpus: string, queryText: string, k: number): Promise<SearchResponse> {
    return this.request("POST", "/search",
                        { corpus, query_text: queryText, k });
  }

  searchVector(corpus: string, vector: number[], k: number): Promise<SearchResponse> {
    return this.request("POST", "/search",
                        { corpus, query_vector: vector, k });
  }

  parse(corpus: string): Promise<ParseResponse> {
    return this.request("POST", "/parse", { corpus });
  }

  cluster(corpus: string, minSize: number,
          vectors?: Record<string, number[]>): Promise<ClusterResponse> {
    return this.request("POST", "/cluster", {
      corpus, role: "constituents", min_size: minSize,
      ...(vectors ? { vectors } : {}),
    });
  }

  network(corpus: string, minSize: number,
          vectors?: Record<string, number[]>): Promise<GraphResponse> {
    return this.request("POST", "/network", {
      corpus, min_size: minSize, ...(vectors ? { vectors } : {}),
    });
  }
}
