/** DOM construction helpers; all data arrives pre-shaped by the view models. */

import type { LayoutPoint } from "./layout.js";
import type { AbdicoRecord } from "./types.js";
import type { CompareView, NetworkScene, SceneEdge, SearchRow } from "./viewmodel.js";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function scoreBadge(score: number): HTMLElement {
  const badge = el("span", "score-badge", score.toFixed(4));
  badge.title = String(score);
  return badge;
}

export function renderCompareTable(view: CompareView,
                                   onExpand: (row: number) => void): HTMLElement {
  const wrap = el("div", "compare-table");
  const badge = el("p", "count-badge",
                   `${view.shownCount} of ${view.totalCount} pairs shown` +
                   (view.hiddenCount ? ` (${view.hiddenCount} below threshold)` : ""));
  wrap.appendChild(badge);
  const table = el("table");
  const head = el("tr");
  for (const title of ["#", "Doc A", "Doc B", "Similarity"]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  view.rows.forEach((pair, i) => {
    const tr = el("tr", "pair-row");
    tr.appendChild(el("td", undefined, String(pair.rank)));
    tr.appendChild(el("td", undefined, pair.doc_a));
    tr.appendChild(el("td", undefined, pair.doc_b));
    const td = el("td");
    td.appendChild(scoreBadge(pair.score));
    tr.appendChild(td);
    tr.addEventListener("click", () => onExpand(i));
    table.appendChild(tr);
    const detail = el("tr", "pair-detail hidden");
    const cell = el("td");
    cell.colSpan = 4;
    cell.appendChild(el("p", "doc-text", pair.text_a));
    cell.appendChild(el("p", "doc-text", pair.text_b));
    detail.appendChild(cell);
    table.appendChild(detail);
  });
  wrap.appendChild(table);
  return wrap;
}

export function renderSearchResults(rows: SearchRow[], cached: boolean): HTMLElement {
  const wrap = el("div", "search-results");
  if (cached) wrap.appendChild(el("p", "cache-note", "served from cache"));
  for (const row of rows) {
    const item = el("div", "search-hit");
    const head = el("div", "search-head");
    head.appendChild(el("span", "rank", `#${row.rank}`));
    head.appendChild(el("span", "doc-id", row.docId));
    head.appendChild(scoreBadge(row.score));
    item.appendChild(head);
    item.appendChild(el("p", "snippet", row.snippet));
    wrap.appendChild(item);
  }
  if (!rows.length) wrap.appendChild(el("p", "empty", "no results"));
  return wrap;
}

export function renderRecordCard(record: AbdicoRecord): HTMLElement {
  const card = el("div", `record-card cat-${record.category.toLowerCase()}`);
  card.appendChild(el("h4", undefined, record.statement_id));
  const dl = el("dl");
  const field = (label: string, value: string | null) => {
    dl.appendChild(el("dt", undefined, label));
    dl.appendChild(el("dd", undefined, value ?? "—"));
  };
  field("Attribute", record.attribute?.text ?? null);
  field("Aim", `${record.aim.text} (${record.aim.lemma})`);
  field("Object", record.object?.text ?? null);
  field("Deontic", record.deontic);
  field("Category", record.category + (record.negated ? " (negated)" : ""));
  card.appendChild(dl);
  return card;
}

export function renderNetworkSvg(scene: NetworkScene, points: LayoutPoint[],
                                 onEdgeClick: (edge: SceneEdge) => void): SVGSVGElement {
  const svgNs = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNs, "svg");
  svg.setAttribute("viewBox", "0 0 800 520");
  svg.classList.add("network");
  const at = new Map(points.map((p) => [p.id, p]));

  const defs = document.createElementNS(svgNs, "defs");
  const marker = document.createElementNS(svgNs, "marker");
  marker.setAttribute("id", "arrow");
  marker.setAttribute("viewBox", "0 0 10 10");
  marker.setAttribute("refX", "9");
  marker.setAttribute("refY", "5");
  marker.setAttribute("markerWidth", "6");
  marker.setAttribute("markerHeight", "6");
  marker.setAttribute("orient", "auto-start-reverse");
  const tip = document.createElementNS(svgNs, "path");
  tip.setAttribute("d", "M 0 0 L 10 5 L 0 10 z");
  tip.setAttribute("fill", "#555");
  marker.appendChild(tip);
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (const edge of scene.edges) {
    const from = at.get(edge.src);
    const to = at.get(edge.dst);
    if (!from || !to) continue;
    const path = document.createElementNS(svgNs, "path");
    if (edge.src === edge.dst) {
      path.setAttribute("d",
        `M ${from.x} ${from.y - 12} C ${from.x + 60} ${from.y - 70}, ` +
        `${from.x - 60} ${from.y - 70}, ${from.x - 4} ${from.y - 12}`);
      path.setAttribute("fill", "none");
    } else {
      const bend = 0.12 * (to.y - from.y);
      path.setAttribute("d",
        `M ${from.x} ${from.y} Q ${(from.x + to.x) / 2 + bend} ` +
        `${(from.y + to.y) / 2} ${to.x} ${to.y}`);
      path.setAttribute("fill", "none");
    }
    path.setAttribute("stroke", edge.color);
    path.setAttribute("stroke-width", edge.thickness.toFixed(3));
    path.setAttribute("marker-end", "url(#arrow)");
    path.classList.add("edge");
    path.addEventListener("click", () => onEdgeClick(edge));
    svg.appendChild(path);
  }

  for (const node of scene.nodes) {
    const point = at.get(node.id);
    if (!point) continue;
    const group = document.createElementNS(svgNs, "g");
    const circle = document.createElementNS(svgNs, "circle");
    circle.setAttribute("cx", String(point.x));
    circle.setAttribute("cy", String(point.y));
    circle.setAttribute("r", node.radius.toFixed(2));
    circle.classList.add("node");
    const title = document.createElementNS(svgNs, "title");
    title.textContent = node.tooltip;
    circle.appendChild(title);
    group.appendChild(circle);
    const label = document.createElementNS(svgNs, "text");
    label.setAttribute("x", String(point.x));
    label.setAttribute("y", String(point.y - node.radius - 6));
    label.setAttribute("text-anchor", "middle");
    label.textContent = node.label;
    group.appendChild(label);
    svg.appendChild(group);
  }
  return svg;
}

export function renderError(message: string, onRetry: () => void): HTMLElement {
  const box = el("div", "error-box");
  box.appendChild(el("p", undefined, message));
  const retry = el("button", undefined, "retry");
  retry.addEventListener("click", onRetry);
  box.appendChild(retry);
  return box;
}
