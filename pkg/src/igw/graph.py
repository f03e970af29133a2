"""Directed actor-to-object institutional network.

Nodes are constituent clusters; an edge counts the policies whose attribute
fell in the source cluster and whose object fell in the target cluster,
log-weighted. Only records with both constituents explicit (and neither in
clustering noise) take part.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .abdico import AbdicoRecord, CATEGORIES
from .interchange import canonical_json
from .semantic import ClusteringResult

ATTRIBUTE_SUFFIX = "#A"
OBJECT_SUFFIX = "#B"

FORMAT_JSON = "json-graph"
FORMAT_DOT = "dot-text"

GRAPH_SCHEMA = "igw.graph@1"


@dataclass(frozen=True)
class RoleAssignment:
    """Cluster membership for one constituent role, keyed by statement id."""
    cluster_of: Mapping[str, int]
    noise: frozenset[str]

    def covers(self, statement_id: str) -> bool:
        return statement_id in self.cluster_of or statement_id in self.noise


@dataclass
class GraphNode:
    cluster_id: int
    label: str
    terms: list[str] = field(default_factory=list)
    member_count: int = 0


@dataclass
class GraphEdge:
    src: int
    dst: int
    policy_count: int
    weight: float
    category_counts: dict[str, int] = field(default_factory=dict)


@dataclass
class InstitutionalGraph:
    nodes: list[GraphNode] = field(default_factory=list)
    edges: list[GraphEdge] = field(default_factory=list)


def role_assignment(result: ClusteringResult, suffix: str) -> RoleAssignment:
    """Split a joint constituent clustering into one role's assignment.

    Items are keyed `<statement_id><suffix>`; ids without the suffix are
    ignored, so the same joint result yields both role assignments.
    """
    cluster_of: dict[str, int] = {}
    for cluster in result.clusters:
        for member in cluster.members:
            if member.endswith(suffix):
                cluster_of[member[: -len(suffix)]] = cluster.id
    noise = frozenset(m[: -len(suffix)] for m in result.noise if m.endswith(suffix))
    return RoleAssignment(cluster_of, noise)


def cluster_labels(result: ClusteringResult, top: int = 4) -> dict[int, list[str]]:
    return {c.id: [t for t, _ in c.top_terms[:top]] for c in result.clusters}


def build_graph(records: Sequence[AbdicoRecord],
                attr: RoleAssignment,
                obj: RoleAssignment,
                labels: Mapping[int, Sequence[str]] | None = None) -> InstitutionalGraph:
    """Aggregate records into the directed cluster graph.

    A record is retained when both its attribute and object are explicit
    and neither landed in noise. Every retained constituent must be covered
    by its assignment; an uncovered one is a caller error.
    """
    labels = labels or {}
    retained: list[tuple[AbdicoRecord, int, int]] = []
    for rec in records:
        if rec.attribute is None or rec.object is None:
            continue
        for role, assignment in (("attribute", attr), ("object", obj)):
            if not assignment.covers(rec.statement_id):
                raise ValueError(
                    f"{role} of statement {rec.statement_id!r} missing from "
                    f"cluster assignment")
        if rec.statement_id in attr.noise or rec.statement_id in obj.noise:
            continue
        retained.append((rec,
                         attr.cluster_of[rec.statement_id],
                         obj.cluster_of[rec.statement_id]))

    edge_counts: dict[tuple[int, int], int] = {}
    edge_categories: dict[tuple[int, int], dict[str, int]] = {}
    node_records: dict[int, set[str]] = {}
    for rec, ca, cb in retained:
        key = (ca, cb)
        edge_counts[key] = edge_counts.get(key, 0) + 1
        cats = edge_categories.setdefault(key, {})
        cats[rec.category] = cats.get(rec.category, 0) + 1
        node_records.setdefault(ca, set()).add(rec.statement_id)
        node_records.setdefault(cb, set()).add(rec.statement_id)

    nodes = []
    for cid in sorted(node_records):
        terms = [str(t) for t in labels.get(cid, [])]
        label = "/".join(terms[:4]) if terms else str(cid)
        nodes.append(GraphNode(cid, label, terms, len(node_records[cid])))
    edges = [
        GraphEdge(src, dst, count, math.log1p(count),
                  dict(sorted(edge_categories[(src, dst)].items())))
        for (src, dst), count in sorted(edge_counts.items())
    ]
    return InstitutionalGraph(nodes, edges)


# ---------------------------------------------------------------------------
# export

def graph_to_obj(graph: InstitutionalGraph) -> dict:
    return {
        "schema": GRAPH_SCHEMA,
        "nodes": [
            {"cluster_id": n.cluster_id, "label": n.label, "terms": n.terms,
             "member_count": n.member_count}
            for n in graph.nodes
        ],
        "edges": [
            {"src": e.src, "dst": e.dst, "policy_count": e.policy_count,
             "weight": e.weight, "category_counts": e.category_counts}
            for e in graph.edges
        ],
    }


def graph_from_obj(obj: dict) -> InstitutionalGraph:
    nodes = [
        GraphNode(int(n["cluster_id"]), str(n["label"]),
                  [str(t) for t in n["terms"]], int(n["member_count"]))
        for n in obj["nodes"]
    ]
    edges = [
        GraphEdge(int(e["src"]), int(e["dst"]), int(e["policy_count"]),
                  float(e["weight"]),
                  {str(k): int(v) for k, v in e["category_counts"].items()})
        for e in obj["edges"]
    ]
    return InstitutionalGraph(nodes, edges)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_graph(graph: InstitutionalGraph, fmt: str) -> str:
    """Serialize to json-graph (lossless) or dot-text (for rendering)."""
    if fmt == FORMAT_JSON:
        return canonical_json(graph_to_obj(graph))
    if fmt == FORMAT_DOT:
        lines = ["digraph institutions {"]
        for n in graph.nodes:
            lines.append(
                f"  n{n.cluster_id} [label={_dot_quote(n.label)} "
                f"member_count={n.member_count}];")
        for e in graph.edges:
            cats = " ".join(
                f"{cat.lower()}={e.category_counts.get(cat, 0)}"
                for cat in CATEGORIES if cat in e.category_counts)
            attrs = f"penwidth={e.weight!r} policy_count={e.policy_count}"
            if cats:
                attrs += " " + cats
            lines.append(f"  n{e.src} -> n{e.dst} [{attrs}];")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format: {fmt!r}")


def import_graph(text: str) -> InstitutionalGraph:
    """Inverse of the json-graph export."""
    return graph_from_obj(json.loads(text))
