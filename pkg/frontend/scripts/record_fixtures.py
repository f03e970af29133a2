#!/usr/bin/env python3
"""Record service responses the UI tests replay.

Uses the engine's in-process test client, so the recorded JSON is exactly
what a live service would return. Re-run after any wire-format change:

    python3 frontend/scripts/record_fixtures.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(REPO / "src"))

from fastapi.testclient import TestClient

from igw.interchange import (
    AnnotatedStatement, Corpus, PolicyDoc, Role, SrlFrame, Token,
    corpus_to_payload, load_corpus,
)
from igw.service import create_app
from igw.stoplist import STOPWORDS

FIXTURE_DIR = REPO / "frontend" / "tests" / "fixtures"
SAMPLE_CORPUS = REPO / "tests" / "fixtures" / "sample_corpus"


def T(i, text, lemma, pos, head, deprel):
    return Token(i, text, lemma, pos, head, deprel,
                 is_stopword=text.lower() in STOPWORDS)


def committee_statement(sid, subject, verb, verb_lemma, obj):
    tokens = [
        T(0, "The", "the", "other", 1, "det"),
        T(1, subject, subject, "noun", 3, "nsubj"),
        T(2, "must", "must", "other", 3, "aux"),
        T(3, verb, verb_lemma, "verb", -1, "root"),
        T(4, "the", "the", "other", 5, "det"),
        T(5, obj, obj, "noun", 3, "obj"),
        T(6, ".", ".", "other", 3, "punct"),
    ]
    frame = SrlFrame(3, [Role("ARG0", 0, 2), Role("ARGM-MOD", 2, 3),
                         Role("ARG1", 4, 6)])
    return AnnotatedStatement(sid, tokens, [frame], "cdoc")


def committee_corpus() -> Corpus:
    statements = [
        committee_statement("c1", "committee", "send", "send", "report"),
        committee_statement("c2", "committee", "review", "review", "report"),
        committee_statement("c3", "report", "reach", "reach", "committee"),
    ]
    doc = PolicyDoc("cdoc", " ".join(s.text() for s in statements),
                    {"title": "Committee fixture"}, [1.0, 0.0])
    return Corpus("committee", docs=[doc], statements=statements,
                  embedding_dim=2)


COMMITTEE_VECTORS = {
    "c1#A": [1.0, 0.0], "c1#B": [0.0, 1.0],
    "c2#A": [1.0, 0.0], "c2#B": [0.0, 1.0],
    "c3#A": [0.0, 1.0], "c3#B": [1.0, 0.0],
}


def record(client: TestClient, out: dict[str, dict]) -> None:
    sample = load_corpus(SAMPLE_CORPUS)
    assert client.post("/api/v1/corpora", json={
        "name": "sample", "payload": corpus_to_payload(sample),
    }).status_code == 201
    assert client.post("/api/v1/corpora", json={
        "name": "committee", "payload": corpus_to_payload(committee_corpus()),
    }).status_code == 201

    out["corpora"] = client.get("/api/v1/corpora").json()
    out["compare"] = client.post("/api/v1/compare", json={
        "corpus_a": "sample", "corpus_b": "sample", "top_n": 12}).json()
    out["search"] = client.post("/api/v1/search", json={
        "corpus": "sample",
        "query_vector": [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        "k": 4}).json()
    out["parse_sample"] = client.post("/api/v1/parse",
                                      json={"corpus": "sample"}).json()
    out["parse_committee"] = client.post("/api/v1/parse",
                                         json={"corpus": "committee"}).json()
    out["cluster_committee"] = client.post("/api/v1/cluster", json={
        "corpus": "committee", "role": "constituents", "min_size": 3,
        "vectors": COMMITTEE_VECTORS}).json()
    out["network_committee"] = client.post("/api/v1/network", json={
        "corpus": "committee", "min_size": 3,
        "vectors": COMMITTEE_VECTORS}).json()
    out["error_not_found"] = client.post("/api/v1/compare", json={
        "corpus_a": "sample", "corpus_b": "missing"}).json()
    out["network_empty"] = {"schema": "igw.graph@1", "nodes": [], "edges": []}


def main() -> None:
    import tempfile

    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    responses: dict[str, dict] = {}
    with tempfile.TemporaryDirectory() as root:
        with TestClient(create_app(root)) as client:
            record(client, responses)
    for name, body in responses.items():
        path = FIXTURE_DIR / f"{name}.json"
        path.write_text(json.dumps(body, indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
        print("wrote", path.relative_to(REPO))


if __name__ == "__main__":
    main()
