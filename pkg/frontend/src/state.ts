/** View state lives in the URL: copying the address reproduces the view. */

export type Tab = "compare" | "search" | "parse" | "network";

export interface ViewState {
  tab: Tab;
  corpusA: string;
  corpusB: string;
  query: string;
  k: number;
  page: number;
  threshold: number; // hide compare rows scoring below this
}

export const DEFAULT_STATE: ViewState = {
  tab: "compare",
  corpusA: "",
  corpusB: "",
  query: "",
  k: 10,
  page: 0,
  threshold: 0,
};

const TABS: Tab[] = ["compare", "search", "parse", "network"];

export function stateToParams(state: ViewState): URLSearchParams {
  const params = new URLSearchParams();
  if (state.tab !== DEFAULT_STATE.tab) params.set("tab", state.tab);
  if (state.corpusA) params.set("a", state.corpusA);
  if (state.corpusB) params.set("b", state.corpusB);
  if (state.query) params.set("q", state.query);
  if (state.k !== DEFAULT_STATE.k) params.set("k", String(state.k));
  if (state.page !== 0) params.set("page", String(state.page));
  if (state.threshold !== 0) params.set("min", String(state.threshold));
  return params;
}

export function stateFromParams(params: URLSearchParams): ViewState {
  const tabParam = params.get("tab");
  const tab = TABS.includes(tabParam as Tab) ? (tabParam as Tab) : DEFAULT_STATE.tab;
  const intOr = (name: string, fallback: number): number => {
    const raw = params.get(name);
    if (raw === null) return fallback;
    const value = Number.parseInt(raw, 10);
    return Number.isFinite(value) && value >= 0 ? value : fallback;
  };
  const floatOr = (name: string, fallback: number): number => {
    const raw = params.get(name);
    if (raw === null) return fallback;
    const value = Number.parseFloat(raw);
    return Number.isFinite(value) ? value : fallback;
  };
  return {
    tab,
    corpusA: params.get("a") ?? "",
    corpusB: params.get("b") ?? "",
    query: params.get("q") ?? "",
    k: intOr("k", DEFAULT_STATE.k),
    page: intOr("page", 0),
    threshold: floatOr("min", 0),
  };
}
