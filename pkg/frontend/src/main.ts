/** Workbench wiring: tabs, forms, URL-synced state, and service calls. */

import { ApiClient, ServiceError } from "./api.js";
import { QueryCache, RequestSequencer, pushHistory, type QueryHistory } from "./cache.js";
import { layoutGraph } from "./layout.js";
import {
  clear, el, renderCompareTable, renderError, renderNetworkSvg,
  renderRecordCard, renderSearchResults,
} from "./render.js";
import { DEFAULT_STATE, stateFromParams, stateToParams, type Tab, type ViewState } from "./state.js";
import type { ClusterResponse, ParseResponse, SearchResponse } from "./types.js";
import {
  compareView, edgePolicies, networkScene, searchRows,
} from "./viewmodel.js";

const TABS: Tab[] = ["compare", "search", "parse", "network"];

class Workbench {
  state: ViewState;
  private searchCache = new QueryCache<SearchResponse>();
  private searchSeq = new RequestSequencer();
  private history: QueryHistory = { entries: [] };
  private parseCache = new Map<string, ParseResponse>();
  private clusterCache = new Map<string, ClusterResponse>();

  constructor(private api: ApiClient, private root: HTMLElement) {
    this.state = stateFromParams(new URLSearchParams(location.search));
  }

  syncUrl(): void {
    const params = stateToParams(this.state);
    const suffix = params.toString();
    history.replaceState(null, "", suffix ? `?${suffix}` : location.pathname);
  }

  setState(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    this.syncUrl();
  }

  async start(): Promise<void> {
    await this.renderShell();
  }

  private async renderShell(): Promise<void> {
    clear(this.root);
    const nav = el("nav");
    for (const tab of TABS) {
      const button = el("button", tab === this.state.tab ? "active" : "", tab);
      button.addEventListener("click", () => {
        this.setState({ tab, page: 0 });
        void this.renderShell();
      });
      nav.appendChild(button);
    }
    this.root.appendChild(nav);

    const body = el("main");
    this.root.appendChild(body);
    try {
      const corpora = (await this.api.listCorpora()).corpora.map((c) => c.name);
      switch (this.state.tab) {
        case "compare":
          await this.compareTab(body, corpora);
          break;
        case "search":
          await this.searchTab(body, corpora);
          break;
        case "parse":
          await this.parseTab(body, corpora);
          break;
        case "network":
          await this.networkTab(body, corpora);
          break;
      }
    } catch (exc) {
      clear(body);
      body.appendChild(renderError(describe(exc), () => void this.renderShell()));
    }
  }

  private corpusSelect(options: string[], value: string,
                       onChange: (value: string) => void): HTMLSelectElement {
    const select = el("select");
    for (const name of options) {
      const option = el("option", undefined, name);
      option.value = name;
      if (name === value) option.selected = true;
      select.appendChild(option);
    }
    select.addEventListener("change", () => onChange(select.value));
    return select;
  }

  // ------------------------------------------------------------- compare

  private async compareTab(body: HTMLElement, corpora: string[]): Promise<void> {
    const a = this.state.corpusA || corpora[0] || "";
    const b = this.state.corpusB || corpora[0] || "";
    this.setState({ corpusA: a, corpusB: b });

    const form = el("div", "controls");
    form.appendChild(this.corpusSelect(corpora, a, (v) => {
      this.setState({ corpusA: v, page: 0 });
      void this.renderShell();
    }));
    form.appendChild(this.corpusSelect(corpora, b, (v) => {
      this.setState({ corpusB: v, page: 0 });
      void this.renderShell();
    }));
    const slider = el("input") as HTMLInputElement;
    slider.type = "range";
    slider.min = "0";
    slider.max = "1";
    slider.step = "0.01";
    slider.value = String(this.state.threshold);
    const sliderLabel = el("span", "slider-label",
                           `min score ${this.state.threshold.toFixed(2)}`);
    form.appendChild(slider);
    form.appendChild(sliderLabel);
    body.appendChild(form);

    const tableHost = el("div");
    body.appendChild(tableHost);
    if (!a || !b) {
      tableHost.appendChild(el("p", "empty", "ingest a corpus to begin"));
      return;
    }
    const response = await this.api.compare(a, b);
    const draw = () => {
      clear(tableHost);
      const view = compareView(response, this.state.threshold, this.state.page);
      const table = renderCompareTable(view, (rowIndex) => {
        const detail = tableHost.querySelectorAll("tr.pair-detail")[rowIndex];
        detail?.classList.toggle("hidden");
      });
      tableHost.appendChild(table);
      const pager = el("div", "pager");
      const prev = el("button", undefined, "prev");
      const next = el("button", undefined, "next");
      const where = el("span", undefined,
                       `page ${view.page + 1} / ${view.pageCount}`);
      prev.disabled = view.page === 0;
      next.disabled = view.page >= view.pageCount - 1;
      prev.addEventListener("click", () => {
        this.setState({ page: this.state.page - 1 });
        draw();
      });
      next.addEventListener("click", () => {
        this.setState({ page: this.state.page + 1 });
        draw();
      });
      pager.append(prev, where, next);
      tableHost.appendChild(pager);
    };
    slider.addEventListener("input", () => {
      this.setState({ threshold: Number(slider.value), page: 0 });
      sliderLabel.textContent = `min score ${this.state.threshold.toFixed(2)}`;
      draw();
    });
    draw();
  }

  // -------------------------------------------------------------- search

  private async searchTab(body: HTMLElement, corpora: string[]): Promise<void> {
    const corpus = this.state.corpusA || corpora[0] || "";
    this.setState({ corpusA: corpus });

    const form = el("div", "controls");
    form.appendChild(this.corpusSelect(corpora, corpus, (v) => {
      this.setState({ corpusA: v });
      void this.renderShell();
    }));
    const input = el("input") as HTMLInputElement;
    input.type = "text";
    input.placeholder = "query text";
    input.value = this.state.query;
    const kInput = el("input") as HTMLInputElement;
    kInput.type = "number";
    kInput.min = "1";
    kInput.value = String(this.state.k);
    const go = el("button", undefined, "search");
    form.append(input, kInput, go);
    body.appendChild(form);

    const historyBox = el("div", "history");
    body.appendChild(historyBox);
    const resultHost = el("div");
    body.appendChild(resultHost);

    const drawHistory = () => {
      clear(historyBox);
      for (const past of this.history.entries) {
        const chip = el("button", "history-chip", past);
        chip.addEventListener("click", () => {
          input.value = past;
          void run();
        });
        historyBox.appendChild(chip);
      }
    };

    const run = async () => {
      const query = input.value.trim();
      const k = Math.max(1, Number(kInput.value) || DEFAULT_STATE.k);
      if (!query) return; // input validation: no request for empty queries
      this.setState({ query, k });
      this.history = pushHistory(this.history, query);
      drawHistory();

      const cached = this.searchCache.get(corpus, query, k);
      if (cached) {
        clear(resultHost);
        resultHost.appendChild(renderSearchResults(searchRows(cached.value), true));
        return;
      }
      const seq = this.searchSeq.next();
      try {
        const response = await this.api.searchText(corpus, query, k);
        if (!this.searchSeq.accept(seq)) return; // stale response discarded
        this.searchCache.put(corpus, query, k, response);
        clear(resultHost);
        resultHost.appendChild(renderSearchResults(searchRows(response), false));
      } catch (exc) {
        if (exc instanceof ServiceError && exc.status === 412) {
          clear(resultHost);
          resultHost.appendChild(this.vectorFallback(corpus, k, resultHost));
        } else {
          clear(resultHost);
          resultHost.appendChild(renderError(describe(exc), () => void run()));
        }
      }
    };
    go.addEventListener("click", () => void run());
    input.addEventListener("keydown", (event) => {
      if (event.key === "Enter") void run();
    });
    drawHistory();
    if (this.state.query) {
      input.value = this.state.query;
      await run();
    }
  }

  /** Shown when no encoder is configured on the service. */
  private vectorFallback(corpus: string, k: number,
                         host: HTMLElement): HTMLElement {
    const box = el("div", "fallback");
    box.appendChild(el("p", "notice",
                       "text encoder unavailable; paste a query vector instead"));
    const area = el("textarea") as HTMLTextAreaElement;
    area.placeholder = "[0.1, -0.3, ...]";
    const go = el("button", undefined, "search by vector");
    go.addEventListener("click", () => {
      void (async () => {
        try {
          const vector = JSON.parse(area.value) as number[];
          const response = await this.api.searchVector(corpus, vector, k);
          clear(host);
          host.appendChild(renderSearchResults(searchRows(response), false));
        } catch (exc) {
          clear(host);
          host.appendChild(renderError(describe(exc),
                                       () => void this.renderShell()));
        }
      })();
    });
    box.append(area, go);
    return box;
  }

  // --------------------------------------------------------------- parse

  private async parseTab(body: HTMLElement, corpora: string[]): Promise<void> {
    const corpus = this.state.corpusA || corpora[0] || "";
    this.setState({ corpusA: corpus });
    const form = el("div", "controls");
    form.appendChild(this.corpusSelect(corpora, corpus, (v) => {
      this.setState({ corpusA: v });
      void this.renderShell();
    }));
    body.appendChild(form);
    if (!corpus) return;

    let parsed = this.parseCache.get(corpus);
    if (!parsed) {
      parsed = await this.api.parse(corpus);
      this.parseCache.set(corpus, parsed);
    }
    const grid = el("div", "record-grid");
    for (const record of parsed.records) grid.appendChild(renderRecordCard(record));
    body.appendChild(grid);
    if (parsed.unparsed.length) {
      body.appendChild(el("p", "notice",
                          `${parsed.unparsed.length} statement(s) had no frames`));
    }
  }

  // ------------------------------------------------------------- network

  private async networkTab(body: HTMLElement, corpora: string[]): Promise<void> {
    const corpus = this.state.corpusA || corpora[0] || "";
    this.setState({ corpusA: corpus });
    const form = el("div", "controls");
    form.appendChild(this.corpusSelect(corpora, corpus, (v) => {
      this.setState({ corpusA: v });
      void this.renderShell();
    }));
    body.appendChild(form);
    if (!corpus) return;

    const graph = await this.api.network(corpus, 10);
    if (!graph.nodes.length) {
      body.appendChild(el("p", "empty",
                          "no network yet: no clustered actor/object pairs"));
      return;
    }
    const scene = networkScene(graph);
    const points = layoutGraph(scene.nodes.map((n) => n.id), scene.edges);
    const detail = el("div", "edge-detail");
    const svg = renderNetworkSvg(scene, points, (edge) => {
      void (async () => {
        let parsed = this.parseCache.get(corpus);
        if (!parsed) {
          parsed = await this.api.parse(corpus);
          this.parseCache.set(corpus, parsed);
        }
        let clusters = this.clusterCache.get(corpus);
        if (!clusters) {
          clusters = await this.api.cluster(corpus, 10);
          this.clusterCache.set(corpus, clusters);
        }
        const policies = edgePolicies(edge, parsed.records, clusters);
        clear(detail);
        detail.appendChild(el("h3", undefined,
                              `${edge.policyCount} policies on this edge`));
        for (const record of policies) detail.appendChild(renderRecordCard(record));
      })();
    });
    body.appendChild(svg);
    body.appendChild(detail);
  }
}

function describe(exc: unknown): string {
  if (exc instanceof ServiceError) return `${exc.code}: ${exc.message}`;
  return String(exc);
}

export async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app element");
  const api = await ApiClient.fromConfig();
  await new Workbench(api, root).start();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot();
}
