from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from igw.interchange import Corpus, PolicyDoc
from igw.semantic import (
    DimensionMismatchError, MissingEmbeddingError, ZeroVectorError,
    cluster_components, clustering_from_objs, clusters_to_objs, compare_corpora,
    cosine, label_clusters, pairs_to_objs, search,
)


def corpus_of(name, vectors, dim):
    docs = [PolicyDoc(doc_id, f"text of {doc_id}", {}, vec)
            for doc_id, vec in vectors]
    return Corpus(name=name, docs=docs, embedding_dim=dim)


# --------------------------------------------------------------------- cosine

def test_cosine_identity():
    assert cosine([1.0, 0.0], [1.0, 0.0]) == 1.0


def test_cosine_orthogonal():
    assert cosine([1.0, 0.0], [0.0, 1.0]) == 0.0


def test_cosine_hand_example():
    assert abs(cosine([1, 2, 2], [2, 1, 2]) - 8 / 9) < 1e-12


def test_cosine_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        cosine([1.0], [1.0, 2.0])


def test_cosine_zero_vector():
    with pytest.raises(ZeroVectorError):
        cosine([0.0, 0.0], [1.0, 0.0])


@given(st.lists(st.floats(-50, 50), min_size=3, max_size=6),
       st.floats(0.001, 100.0))
def test_cosine_symmetry_and_scale_invariance(values, alpha):
    u = values
    v = list(reversed(values))
    if math.sqrt(sum(x * x for x in u)) < 1e-6:  # degenerate: cosine undefined
        return
    assert abs(cosine(u, v) - cosine(v, u)) < 1e-12
    assert abs(cosine([alpha * x for x in u], v) - cosine(u, v)) < 1e-9
    assert -1.0 <= cosine(u, v) <= 1.0


# ------------------------------------------------------------------- compare

def test_compare_toy_ranking_with_tie_break():
    inv = 1 / math.sqrt(2)
    a = corpus_of("a", [("a1", [1.0, 0.0]), ("a2", [0.0, 1.0])], 2)
    b = corpus_of("b", [("b1", [1.0, 0.0]), ("b2", [inv, inv])], 2)
    got = [(p.doc_a, p.doc_b, round(p.score, 4)) for p in compare_corpora(a, b)]
    assert got == [
        ("a1", "b1", 1.0),
        ("a1", "b2", 0.7071),
        ("a2", "b2", 0.7071),
        ("a2", "b1", 0.0),
    ]


def test_compare_corpus_with_itself_ranks_identities_first():
    a = corpus_of("a", [("a1", [1.0, 0.0]), ("a2", [0.0, 1.0])], 2)
    pairs = compare_corpora(a, a)
    assert len(pairs) == 4
    assert {(p.doc_a, p.doc_b) for p in pairs[:2]} == {("a1", "a1"), ("a2", "a2")}
    assert pairs[0].score == pairs[1].score == 1.0


def test_compare_missing_embedding_names_doc():
    a = corpus_of("a", [("a1", [1.0, 0.0])], 2)
    b = corpus_of("b", [("b1", None)], 2)
    with pytest.raises(MissingEmbeddingError, match="b1"):
        compare_corpora(a, b)


def test_compare_dimension_mismatch():
    a = corpus_of("a", [("a1", [1.0, 0.0])], 2)
    b = corpus_of("b", [("b1", [1.0, 0.0, 0.0])], 3)
    with pytest.raises(DimensionMismatchError):
        compare_corpora(a, b)


def test_compare_is_order_independent():
    rng = np.random.default_rng(7)
    vecs_a = [(f"a{i}", list(rng.normal(size=4))) for i in range(6)]
    vecs_b = [(f"b{i}", list(rng.normal(size=4))) for i in range(5)]
    direct = compare_corpora(corpus_of("a", vecs_a, 4), corpus_of("b", vecs_b, 4))
    shuffled = compare_corpora(
        corpus_of("a", list(reversed(vecs_a)), 4),
        corpus_of("b", list(reversed(vecs_b)), 4))
    assert direct == shuffled


def test_compare_scores_weakly_decreasing():
    rng = np.random.default_rng(3)
    a = corpus_of("a", [(f"a{i}", list(rng.normal(size=5))) for i in range(7)], 5)
    b = corpus_of("b", [(f"b{i}", list(rng.normal(size=5))) for i in range(7)], 5)
    pairs = compare_corpora(a, b)
    assert len(pairs) == 49
    assert all(pairs[i].score >= pairs[i + 1].score for i in range(len(pairs) - 1))


# --------------------------------------------------------------------- search

def test_search_exact_match_ranks_first():
    a = corpus_of("a", [("a1", [1.0, 0.0]), ("a2", [0.6, 0.8])], 2)
    hits = search([1.0, 0.0], a, k=2)
    assert hits[0].doc_id == "a1" and hits[0].score == 1.0


def test_search_dot_mode_matches_brute_force():
    rng = np.random.default_rng(11)
    vectors = [(f"d{i}", list(rng.normal(size=4))) for i in range(3)]
    corpus = corpus_of("c", vectors, 4)
    query = list(rng.normal(size=4))
    hits = search(query, corpus, k=3, mode="dot")
    brute = sorted(
        ((doc_id, float(np.dot(query, vec))) for doc_id, vec in vectors),
        key=lambda t: (-t[1], t[0]))
    assert [(h.doc_id, h.score) for h in hits] == brute


def test_search_k_zero_returns_empty():
    a = corpus_of("a", [("a1", [1.0, 0.0])], 2)
    assert search([1.0, 0.0], a, k=0) == []


def test_search_k_beyond_corpus_returns_full_ranking():
    a = corpus_of("a", [("a1", [1.0, 0.0]), ("a2", [0.0, 1.0])], 2)
    assert len(search([1.0, 0.2], a, k=50)) == 2


def test_search_row_equivalence_with_compare():
    rng = np.random.default_rng(5)
    vecs = [(f"d{i}", list(rng.normal(size=4))) for i in range(8)]
    corpus = corpus_of("c", vecs, 4)
    query_doc = corpus_of("q", [("q0", vecs[3][1])], 4)
    row = [(p.doc_b, p.score) for p in compare_corpora(query_doc, corpus)]
    hits = [(h.doc_id, h.score) for h in search(vecs[3][1], corpus, k=len(vecs))]
    assert hits == row


def test_search_dimension_mismatch():
    a = corpus_of("a", [("a1", [1.0, 0.0])], 2)
    with pytest.raises(DimensionMismatchError):
        search([1.0, 0.0, 0.0], a, k=1)


# ------------------------------------------------------------------ clustering

def test_twelve_identical_vectors_one_cluster():
    items = [(f"i{n:02d}", "same text", [1.0, 2.0]) for n in range(12)]
    result = cluster_components(items, min_cluster_size=10)
    assert len(result.clusters) == 1
    assert len(result.clusters[0].members) == 12
    assert result.noise == []


def test_nine_identical_vectors_all_noise():
    items = [(f"i{n}", "same", [1.0, 2.0]) for n in range(9)]
    result = cluster_components(items, min_cluster_size=10)
    assert result.clusters == []
    assert len(result.noise) == 9


def _blob(center, count, prefix, rng, spread=0.02):
    center = np.asarray(center, dtype=float)
    items = []
    for n in range(count):
        vec = center + rng.normal(scale=spread, size=center.shape)
        items.append((f"{prefix}{n:02d}", f"{prefix} text {n}", list(vec)))
    return items


def test_two_separated_blobs_match_nearest_centroid_oracle():
    rng = np.random.default_rng(42)
    blob_a = _blob([1.0, 0.0, 0.0], 15, "a", rng)
    blob_b = _blob([0.0, 1.0, 0.05], 15, "b", rng)
    items = blob_a + blob_b

    # preconditions: intra-blob cosine > 0.95, inter-blob cosine < 0.2
    def cos_all(group_x, group_y):
        return [cosine(x[2], y[2]) for x in group_x for y in group_y if x[0] != y[0]]

    assert min(cos_all(blob_a, blob_a)) > 0.95
    assert min(cos_all(blob_b, blob_b)) > 0.95
    assert max(cos_all(blob_a, blob_b)) < 0.2

    result = cluster_components(items, min_cluster_size=10)
    assert len(result.clusters) == 2
    membership = {m: c.id for c in result.clusters for m in c.members}

    # oracle: brute-force nearest centroid over the produced centroids
    centroids = {c.id: np.asarray(c.centroid) for c in result.clusters}
    for item_id, _text, vec in items:
        nearest = min(centroids, key=lambda cid: 1 - cosine(vec, centroids[cid]))
        assert membership[item_id] == nearest


def test_cluster_permutation_invariance():
    rng = np.random.default_rng(9)
    items = _blob([1.0, 0.2], 7, "x", rng) + _blob([-0.4, 1.0], 6, "y", rng)
    forward = cluster_components(items, min_cluster_size=3)
    backward = cluster_components(list(reversed(items)), min_cluster_size=3)
    assert [c.members for c in forward.clusters] == \
        [c.members for c in backward.clusters]
    assert forward.noise == backward.noise


def test_cluster_empty_input():
    result = cluster_components([])
    assert result.clusters == [] and result.noise == []


def test_cluster_duplicate_ids_rejected():
    with pytest.raises(ValueError, match="duplicate"):
        cluster_components([("a", "t", [1.0]), ("a", "t", [1.0])])


def test_cluster_zero_vector_rejected():
    with pytest.raises(ZeroVectorError, match="bad"):
        cluster_components([("bad", "t", [0.0, 0.0]), ("ok", "t", [1.0, 0.0])])


def test_min_cluster_size_honored_on_random_configurations():
    rng = np.random.default_rng(1234)
    for trial in range(50):
        n = int(rng.integers(2, 40))
        dim = int(rng.integers(2, 5))
        min_size = int(rng.integers(2, 12))
        items = [(f"t{trial}_{i}", f"text {i}",
                  list(rng.normal(size=dim) + rng.choice([0.0, 3.0])))
                 for i in range(n)]
        result = cluster_components(items, min_cluster_size=min_size)
        for cluster in result.clusters:
            assert len(cluster.members) >= min_size
        clustered = {m for c in result.clusters for m in c.members}
        assert clustered.isdisjoint(result.noise)
        assert len(clustered) + len(result.noise) == n


def test_consistency_epsilon_demotes_misfits():
    # one tight blob plus a point close enough to merge but nearer nothing
    rng = np.random.default_rng(4)
    items = _blob([1.0, 0.0], 12, "a", rng, spread=0.001)
    loose = cluster_components(items, min_cluster_size=3)
    strict = cluster_components(items, min_cluster_size=3,
                                consistency_epsilon=0.0)
    assert [c.members for c in loose.clusters] == [c.members for c in strict.clusters]


# -------------------------------------------------------------------- labeling

def test_ctfidf_hand_example():
    items = [("r1", "release vote", [1.0, 0.0]), ("r2", "release policy", [1.0, 0.0])]
    result = cluster_components(items, min_cluster_size=2)
    labeled = label_clusters(result, k=4)
    terms = dict(labeled[0].top_terms)
    assert abs(terms["release"] - 0.5 * math.log(2)) < 1e-12
    assert labeled[0].top_terms[0][0] == "release"


def test_single_distinct_term_is_the_label():
    items = [("r1", "the budget", [1.0, 0.0]), ("r2", "a budget", [1.0, 0.0])]
    result = cluster_components(items, min_cluster_size=2)
    labeled = label_clusters(result, k=2)
    assert [t for t, _ in labeled[0].top_terms] == ["budget"]


def test_shared_terms_score_below_exclusive_terms():
    # same frequency profile; "shared" appears in both clusters, each
    # exclusive term in only one
    items = (
        [(f"a{i}", "shared alpha", [1.0, 0.0]) for i in range(2)]
        + [(f"b{i}", "shared beta", [0.0, 1.0]) for i in range(2)]
    )
    result = cluster_components(items, min_cluster_size=2, merge_threshold=0.2)
    assert len(result.clusters) == 2
    labeled = label_clusters(result)
    for cluster in labeled:
        scores = dict(cluster.top_terms)
        exclusive = "alpha" if "alpha" in scores else "beta"
        assert scores[exclusive] > scores["shared"]
        assert abs(scores["shared"] - 0.5 * math.log(2)) < 1e-12
        assert abs(scores[exclusive] - 0.5 * math.log(3)) < 1e-12


def test_stopwords_never_label_clusters():
    items = [("r1", "the of and budget", [1.0, 0.0]),
             ("r2", "the budget", [1.0, 0.0])]
    result = cluster_components(items, min_cluster_size=2)
    labeled = label_clusters(result, k=10)
    assert all(term == "budget" for term, _ in labeled[0].top_terms)


def test_label_scores_nonnegative_and_terms_from_members():
    items = [("r1", "vote records", [1.0, 0.1]), ("r2", "vote binding", [1.0, 0.0])]
    labeled = label_clusters(cluster_components(items, min_cluster_size=2))
    member_tokens = {"vote", "records", "binding"}
    for term, score in labeled[0].top_terms:
        assert score >= 0
        assert term in member_tokens


# ---------------------------------------------------------------- serialization

def test_clusters_jsonl_round_trip():
    items = [(f"i{n}", f"text {n}", [1.0, 0.0]) for n in range(3)]
    result = cluster_components(items, min_cluster_size=2)
    result.clusters = label_clusters(result)
    rows = clusters_to_objs(result)
    assert rows[-1]["id"] == -1
    back = clustering_from_objs(rows)
    assert [c.members for c in back.clusters] == [c.members for c in result.clusters]
    assert back.noise == result.noise


def test_pairs_rows_carry_rank():
    a = corpus_of("a", [("a1", [1.0, 0.0])], 2)
    rows = pairs_to_objs(compare_corpora(a, a))
    assert rows[0]["rank"] == 1 and rows[0]["score"] == 1.0
