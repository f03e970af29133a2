"""Embedding-space operations: symmetric corpus comparison, asymmetric
query retrieval, deterministic agglomerative clustering of constituents,
and class-based TF-IDF cluster labeling.

Vectors arrive through the interchange; nothing here touches a model.
Clustering is average-linkage over cosine distance with a fixed merge
order, so results are identical across runs, platforms, and input
permutations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .interchange import Corpus
from .stoplist import STOPWORDS
from .text import tokenize

MODE_COSINE = "cosine"
MODE_DOT = "dot"

NOISE_ID = -1
DEFAULT_MERGE_THRESHOLD = 0.4  # cosine distance


class DimensionMismatchError(ValueError):
    pass


class ZeroVectorError(ValueError):
    pass


class MissingEmbeddingError(ValueError):
    def __init__(self, doc_id: str, corpus_name: str):
        self.doc_id = doc_id
        super().__init__(f"doc {doc_id!r} in corpus {corpus_name!r} has no embedding")


@dataclass(frozen=True)
class SimilarityPair:
    doc_a: str
    doc_b: str
    score: float


@dataclass(frozen=True)
class SearchHit:
    doc_id: str
    score: float


@dataclass
class Cluster:
    id: int
    members: list[str]
    top_terms: list[tuple[str, float]] = field(default_factory=list)
    centroid: list[float] = field(default_factory=list)


@dataclass
class ClusteringResult:
    clusters: list[Cluster]
    noise: list[str]
    texts: dict[str, str] = field(default_factory=dict)


def cosine(u: Sequence[float], v: Sequence[float]) -> float:
    """Cosine similarity, clamped into [-1, 1]."""
    a = np.asarray(u, dtype=np.float64)
    b = np.asarray(v, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise DimensionMismatchError(f"dimension mismatch: {a.shape} vs {b.shape}")
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        raise ZeroVectorError("cosine is undefined for a zero vector")
    return min(1.0, max(-1.0, float(np.dot(a, b)) / (na * nb)))


def _embedding_matrix(corpus: Corpus) -> tuple[list[str], np.ndarray]:
    ids = []
    rows = []
    for doc in corpus.docs:
        if doc.embedding is None:
            raise MissingEmbeddingError(doc.id, corpus.name)
        ids.append(doc.id)
        rows.append(doc.embedding)
    matrix = np.asarray(rows, dtype=np.float64)
    return ids, matrix


def compare_corpora(a: Corpus, b: Corpus) -> list[SimilarityPair]:
    """Every cross pair, ranked by descending cosine.

    Ties break lexicographically on (doc_a id, doc_b id), which also makes
    the ranking independent of input document order.
    """
    ids_a, mat_a = _embedding_matrix(a)
    ids_b, mat_b = _embedding_matrix(b)
    if mat_a.size and mat_b.size and mat_a.shape[1] != mat_b.shape[1]:
        raise DimensionMismatchError(
            f"corpus dims differ: {mat_a.shape[1]} vs {mat_b.shape[1]}")
    pairs = [
        SimilarityPair(ida, idb, cosine(mat_a[i], mat_b[j]))
        for i, ida in enumerate(ids_a)
        for j, idb in enumerate(ids_b)
    ]
    pairs.sort(key=lambda p: (-p.score, p.doc_a, p.doc_b))
    return pairs


def search(query: Sequence[float], corpus: Corpus, k: int,
           mode: str = MODE_COSINE) -> list[SearchHit]:
    """Top-k docs by relevance to the query vector, descending.

    Cosine by default; dot-product mode suits passage-retrieval encoders
    trained for unnormalized relevance. Ties break on doc id.
    """
    if mode not in (MODE_COSINE, MODE_DOT):
        raise ValueError(f"unknown relevance mode: {mode!r}")
    if k <= 0:
        return []
    ids, matrix = _embedding_matrix(corpus)
    if not ids:
        return []
    q = np.asarray(query, dtype=np.float64)
    if q.ndim != 1 or q.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(
            f"query dim {q.shape} incompatible with corpus dim {matrix.shape[1]}")
    if mode == MODE_COSINE:
        scores = [cosine(q, matrix[i]) for i in range(len(ids))]
    else:
        scores = [float(np.dot(q, matrix[i])) for i in range(len(ids))]
    hits = [SearchHit(doc_id, score) for doc_id, score in zip(ids, scores)]
    hits.sort(key=lambda h: (-h.score, h.doc_id))
    return hits[:k]


# ---------------------------------------------------------------------------
# clustering

def cluster_components(items: Iterable[tuple[str, str, Sequence[float]]],
                       min_cluster_size: int = 10,
                       merge_threshold: float = DEFAULT_MERGE_THRESHOLD,
                       consistency_epsilon: float | None = None) -> ClusteringResult:
    """Group items by semantic similarity; undersized groups become noise.

    Average-linkage agglomeration over cosine distance: repeatedly merge the
    closest pair of clusters while their average distance stays within the
    threshold. Items are canonically ordered by id first and ties merge the
    pair with the smallest member indices, so the partition does not depend
    on input order.
    """
    entries = sorted(items, key=lambda it: it[0])
    if len({e[0] for e in entries}) != len(entries):
        raise ValueError("duplicate item ids")
    if min_cluster_size < 1:
        raise ValueError("min_cluster_size must be >= 1")
    if not entries:
        return ClusteringResult([], [], {})

    ids = [e[0] for e in entries]
    texts = {e[0]: e[1] for e in entries}
    matrix = np.asarray([e[2] for e in entries], dtype=np.float64)
    if matrix.ndim != 2:
        raise DimensionMismatchError("item vectors differ in dimension")
    norms = np.linalg.norm(matrix, axis=1)
    for i, nrm in enumerate(norms):
        if nrm == 0.0:
            raise ZeroVectorError(f"item {ids[i]!r} has a zero vector")
    unit = matrix / norms[:, None]
    dist = 1.0 - np.clip(unit @ unit.T, -1.0, 1.0)

    n = len(ids)
    members: dict[int, list[int]] = {i: [i] for i in range(n)}
    # pairwise *summed* distances between clusters; averages derive from sizes
    sums: dict[tuple[int, int], float] = {}
    for i in range(n):
        for j in range(i + 1, n):
            sums[(i, j)] = float(dist[i, j])

    def avg(ci: int, cj: int) -> float:
        key = (ci, cj) if ci < cj else (cj, ci)
        return sums[key] / (len(members[ci]) * len(members[cj]))

    while len(members) > 1:
        best = None
        best_key = None
        for ci in members:
            for cj in members:
                if ci >= cj:
                    continue
                d = avg(ci, cj)
                tie = (min(members[ci][0], members[cj][0]),
                       max(members[ci][0], members[cj][0]))
                cand = (d, tie)
                if best is None or cand < best:
                    best = cand
                    best_key = (ci, cj)
        if best is None or best[0] > merge_threshold:
            break
        ci, cj = best_key
        for ck in list(members):
            if ck in (ci, cj):
                continue
            a = sums.pop((min(ci, ck), max(ci, ck)))
            b = sums.pop((min(cj, ck), max(cj, ck)))
            sums[(min(ci, ck), max(ci, ck))] = a + b
        sums.pop((ci, cj))
        members[ci] = sorted(members[ci] + members[cj])
        del members[cj]

    groups = sorted(members.values(), key=lambda g: g[0])
    clusters: list[Cluster] = []
    noise_idx: list[int] = []
    for group in groups:
        if len(group) >= min_cluster_size:
            centroid = matrix[group].mean(axis=0)
            clusters.append(Cluster(
                id=len(clusters),
                members=[ids[i] for i in group],
                centroid=[float(x) for x in centroid],
            ))
        else:
            noise_idx.extend(group)

    if consistency_epsilon is not None and clusters:
        clusters, extra_noise = _enforce_consistency(
            clusters, ids, matrix, min_cluster_size, consistency_epsilon)
        noise_idx.extend(extra_noise)

    noise = sorted(ids[i] for i in noise_idx)
    return ClusteringResult(clusters, noise, texts)


def _enforce_consistency(clusters: list[Cluster], ids: list[str],
                         matrix: np.ndarray, min_cluster_size: int,
                         epsilon: float) -> tuple[list[Cluster], list[int]]:
    """Demote items closer to a foreign centroid than their own by > epsilon."""
    index_of = {item_id: i for i, item_id in enumerate(ids)}
    centroids = np.asarray([c.centroid for c in clusters])

    def cos_dist(vec: np.ndarray, cen: np.ndarray) -> float:
        nv, nc = np.linalg.norm(vec), np.linalg.norm(cen)
        if nv == 0.0 or nc == 0.0:
            return 1.0
        return 1.0 - float(np.dot(vec, cen)) / (nv * nc)

    demoted: list[int] = []
    kept: list[Cluster] = []
    for ci, cluster in enumerate(clusters):
        survivors = []
        for item_id in cluster.members:
            vec = matrix[index_of[item_id]]
            own = cos_dist(vec, centroids[ci])
            foreign = min((cos_dist(vec, centroids[cj])
                           for cj in range(len(clusters)) if cj != ci),
                          default=own)
            if own > foreign + epsilon:
                demoted.append(index_of[item_id])
            else:
                survivors.append(item_id)
        if len(survivors) >= min_cluster_size:
            centroid = matrix[[index_of[m] for m in survivors]].mean(axis=0)
            kept.append(Cluster(len(kept), survivors, centroid=[float(x) for x in centroid]))
        else:
            demoted.extend(index_of[m] for m in survivors)
    return kept, demoted


# ---------------------------------------------------------------------------
# labeling

def label_clusters(result: ClusteringResult, k: int = 4) -> list[Cluster]:
    """Attach top-k class-based TF-IDF terms to each cluster.

    score(t, c) = (freq(t, c) / words(c)) * ln(1 + N / df(t)), where N is
    the cluster count and df(t) the number of clusters containing t.
    Stopwords never label a cluster.
    """
    cluster_tokens: list[dict[str, int]] = []
    for cluster in result.clusters:
        counts: dict[str, int] = {}
        for member in cluster.members:
            for tok in tokenize(result.texts.get(member, "")):
                if tok in STOPWORDS:
                    continue
                counts[tok] = counts.get(tok, 0) + 1
        cluster_tokens.append(counts)

    n_clusters = len(result.clusters)
    df: dict[str, int] = {}
    for counts in cluster_tokens:
        for term in counts:
            df[term] = df.get(term, 0) + 1

    labeled = []
    for cluster, counts in zip(result.clusters, cluster_tokens):
        total = sum(counts.values())
        scored = [
            (term, (freq / total) * math.log(1.0 + n_clusters / df[term]))
            for term, freq in counts.items()
        ] if total else []
        scored.sort(key=lambda ts: (-ts[1], ts[0]))
        labeled.append(Cluster(
            id=cluster.id,
            members=list(cluster.members),
            top_terms=scored[:k],
            centroid=list(cluster.centroid),
        ))
    return labeled


# ---------------------------------------------------------------------------
# serialization helpers shared by the CLI and the service

def pairs_to_objs(pairs: list[SimilarityPair]) -> list[dict]:
    return [
        {"doc_a": p.doc_a, "doc_b": p.doc_b, "score": p.score, "rank": rank}
        for rank, p in enumerate(pairs, start=1)
    ]


def clusters_to_objs(result: ClusteringResult) -> list[dict]:
    """clusters.jsonl rows; noise is the reserved id -1 row."""
    rows = [
        {"id": c.id, "members": c.members,
         "top_terms": [[t, s] for t, s in c.top_terms]}
        for c in result.clusters
    ]
    rows.append({"id": NOISE_ID, "members": result.noise, "top_terms": []})
    return rows


def clustering_from_objs(rows: list[dict]) -> ClusteringResult:
    clusters = []
    noise: list[str] = []
    for row in rows:
        if int(row["id"]) == NOISE_ID:
            noise = [str(m) for m in row["members"]]
            continue
        clusters.append(Cluster(
            id=int(row["id"]),
            members=[str(m) for m in row["members"]],
            top_terms=[(str(t), float(s)) for t, s in row.get("top_terms", [])],
        ))
    clusters.sort(key=lambda c: c.id)
    return ClusteringResult(clusters, noise, {})
