"""HTTP service exposing the full pipeline under /api/v1.

Every response carries a schema tag; errors carry a machine-readable code
plus a human message. Results of parse/cluster/network/evaluate are
persisted under the corpus directory and returned. The only model contact
is the adapter's one-endpoint encode contract (text in, vector out).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import httpx
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import abdico, evaluation, graph as graphmod, semantic
from .interchange import (
    Corpus, CorpusFormatError, CorpusValidationError, canonical_json,
    corpus_from_payload, load_corpus,
)
from .registry import CorpusRegistry, DuplicateCorpusError, UnknownCorpusError

API_PREFIX = "/api/v1"
SNIPPET_CHARS = 200

ROLE_ATTRIBUTE = "attribute"
ROLE_OBJECT = "object"
ROLE_CONSTITUENTS = "constituents"


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, details: Any = None):
        self.status = status
        self.code = code
        self.message = message
        self.details = details
        super().__init__(message)


def _not_found(what: str) -> ApiError:
    return ApiError(404, "not_found", what)


def _precondition(message: str, details: Any = None) -> ApiError:
    return ApiError(412, "failed_precondition", message, details)


class AdapterClient:
    """Client for the encode contract: POST {text, mode} -> {vector, dim, model_tag}."""

    def __init__(self, base_url: str):
        self.base_url = base_url.rstrip("/")

    def encode(self, text: str, mode: str) -> dict:
        try:
            resp = httpx.post(f"{self.base_url}/encode",
                              json={"text": text, "mode": mode}, timeout=60.0)
        except httpx.HTTPError as exc:
            raise _precondition(f"encoder unreachable: {exc}") from exc
        if resp.status_code != 200:
            raise _precondition(f"encoder returned status {resp.status_code}")
        return resp.json()


def _write_jsonl(path: Path, rows: list[dict]) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(canonical_json(row) + "\n")


def create_app(root: str | Path, adapter_url: str | None = None) -> FastAPI:
    app = FastAPI(title="igw", docs_url=None, redoc_url=None)
    registry = CorpusRegistry(root)
    adapter = AdapterClient(adapter_url) if adapter_url else None
    app.state.registry = registry

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        body = {"error": {"code": exc.code, "message": exc.message}}
        if exc.details is not None:
            body["error"]["details"] = exc.details
        return JSONResponse(status_code=exc.status, content=body)

    def get_corpus(name: str) -> Corpus:
        try:
            return registry.load(name)
        except UnknownCorpusError:
            raise _not_found(f"no corpus named {name!r}")

    def require_embedded(corpus: Corpus) -> None:
        for doc in corpus.docs:
            if doc.embedding is None:
                raise _precondition(
                    f"corpus {corpus.name!r} is not fully embedded",
                    {"corpus": corpus.name, "doc_id": doc.id})

    # ------------------------------------------------------------------ corpora

    @app.post(API_PREFIX + "/corpora", status_code=201)
    def ingest(body: dict):
        name = body.get("name")
        if not name:
            raise ApiError(422, "bad_request", "missing corpus name")
        overwrite = bool(body.get("overwrite", False))
        if body.get("payload") is not None:
            try:
                corpus = corpus_from_payload(body["payload"])
            except CorpusValidationError as exc:
                raise ApiError(422, "invalid_corpus", "corpus failed validation",
                               [str(v) for v in exc.violations])
            except (CorpusFormatError, KeyError, TypeError, ValueError) as exc:
                raise ApiError(422, "malformed_payload", str(exc))
        elif body.get("path"):
            try:
                corpus = load_corpus(body["path"])
            except CorpusValidationError as exc:
                raise ApiError(422, "invalid_corpus", "corpus failed validation",
                               [str(v) for v in exc.violations])
            except CorpusFormatError as exc:
                raise ApiError(422, "malformed_payload", str(exc))
        else:
            raise ApiError(422, "bad_request", "provide payload or path")
        try:
            entry = registry.ingest(name, corpus, overwrite=overwrite)
        except DuplicateCorpusError as exc:
            raise ApiError(409, "conflict", str(exc))
        return {"schema": "igw.corpus_entry@1", **entry.to_obj()}

    @app.get(API_PREFIX + "/corpora")
    def list_corpora():
        return {"schema": "igw.corpus_list@1",
                "corpora": [e.to_obj() for e in registry.entries()]}

    @app.get(API_PREFIX + "/corpora/{name}")
    def get_entry(name: str):
        try:
            entry = registry.get(name)
        except UnknownCorpusError:
            raise _not_found(f"no corpus named {name!r}")
        return {"schema": "igw.corpus_entry@1", **entry.to_obj()}

    # ------------------------------------------------------------------ compare

    @app.post(API_PREFIX + "/compare")
    def compare(body: dict):
        corpus_a = get_corpus(str(body.get("corpus_a", "")))
        corpus_b = get_corpus(str(body.get("corpus_b", "")))
        require_embedded(corpus_a)
        require_embedded(corpus_b)
        top_n = body.get("top_n")
        try:
            pairs = semantic.compare_corpora(corpus_a, corpus_b)
        except semantic.DimensionMismatchError as exc:
            raise _precondition(str(exc))
        rows = semantic.pairs_to_objs(pairs)
        if top_n is not None:
            rows = rows[: max(0, int(top_n))]
        texts_a = {d.id: d.text for d in corpus_a.docs}
        texts_b = {d.id: d.text for d in corpus_b.docs}
        for row in rows:
            row["text_a"] = texts_a[row["doc_a"]]
            row["text_b"] = texts_b[row["doc_b"]]
        return {"schema": "igw.compare@1", "corpus_a": corpus_a.name,
                "corpus_b": corpus_b.name, "pairs": rows}

    # ------------------------------------------------------------------ search

    @app.post(API_PREFIX + "/search")
    def search(body: dict):
        corpus = get_corpus(str(body.get("corpus", "")))
        require_embedded(corpus)
        k = int(body.get("k", 10))
        mode = str(body.get("mode", semantic.MODE_COSINE))
        model_tag = None
        vector = body.get("query_vector")
        if vector is None:
            text = body.get("query_text")
            if not text:
                raise ApiError(422, "bad_request",
                               "provide query_text or query_vector")
            if adapter is None:
                raise _precondition(
                    "query_text needs a configured encoder; pass query_vector "
                    "or set the adapter URL")
            encoded = adapter.encode(str(text), "query")
            vector = encoded["vector"]
            model_tag = encoded.get("model_tag")
        try:
            hits = semantic.search([float(x) for x in vector], corpus, k, mode)
        except (semantic.DimensionMismatchError, semantic.ZeroVectorError) as exc:
            raise _precondition(str(exc))
        except ValueError as exc:
            raise ApiError(422, "bad_request", str(exc))
        texts = {d.id: d.text for d in corpus.docs}
        results = [
            {"doc_id": h.doc_id, "score": h.score, "rank": rank,
             "snippet": texts[h.doc_id][:SNIPPET_CHARS]}
            for rank, h in enumerate(hits, start=1)
        ]
        return {"schema": "igw.search@1", "corpus": corpus.name,
                "relevance": mode, "model_tag": model_tag, "results": results}

    # ------------------------------------------------------------------ parse

    def run_parse(corpus: Corpus, keep_unparsed: bool) -> tuple[list[dict], list[dict]]:
        try:
            records, unparsed = abdico.parse_corpus(
                corpus.statements, keep_unparsed=keep_unparsed)
        except abdico.NoAimError as exc:
            raise _precondition(
                f"statement {exc.statement_id!r} has no SRL frames "
                f"(set keep_unparsed to collect diagnostics)")
        rows = [abdico.record_to_obj(r) for r in records]
        corpus_dir = registry.corpus_dir(corpus.name)
        _write_jsonl(corpus_dir / "records.jsonl", rows)
        _write_jsonl(corpus_dir / "unparsed.jsonl", unparsed)
        return rows, unparsed

    @app.post(API_PREFIX + "/parse")
    def parse(body: dict):
        corpus = get_corpus(str(body.get("corpus", "")))
        keep_unparsed = bool(body.get("keep_unparsed", True))
        rows, unparsed = run_parse(corpus, keep_unparsed)
        return {"schema": "igw.parse@1", "corpus": corpus.name,
                "records": rows, "unparsed": unparsed}

    # ------------------------------------------------------------------ cluster

    def constituent_items(corpus: Corpus, role: str,
                          vectors: dict | None) -> list[tuple[str, str, list[float]]]:
        records, _ = abdico.parse_corpus(corpus.statements, keep_unparsed=True)
        wanted = []
        for rec in records:
            if role in (ROLE_ATTRIBUTE, ROLE_CONSTITUENTS) and rec.attribute:
                wanted.append((rec.statement_id + graphmod.ATTRIBUTE_SUFFIX,
                               rec.attribute.text))
            if role in (ROLE_OBJECT, ROLE_CONSTITUENTS) and rec.object:
                wanted.append((rec.statement_id + graphmod.OBJECT_SUFFIX,
                               rec.object.text))
        items = []
        for item_id, text in wanted:
            if vectors is not None:
                if item_id not in vectors:
                    raise _precondition(
                        f"no vector supplied for item {item_id!r}")
                vec = [float(x) for x in vectors[item_id]]
            elif adapter is not None:
                vec = [float(x) for x in
                       adapter.encode(text, "symmetric")["vector"]]
            else:
                raise _precondition(
                    "clustering needs vectors: supply them inline or set the "
                    "adapter URL")
            items.append((item_id, text, vec))
        return items

    def run_cluster(corpus: Corpus, role: str, min_size: int,
                    vectors: dict | None) -> semantic.ClusteringResult:
        if role not in (ROLE_ATTRIBUTE, ROLE_OBJECT, ROLE_CONSTITUENTS):
            raise ApiError(422, "bad_request", f"unknown role {role!r}")
        items = constituent_items(corpus, role, vectors)
        result = semantic.cluster_components(items, min_cluster_size=min_size)
        result.clusters = semantic.label_clusters(result)
        rows = semantic.clusters_to_objs(result)
        corpus_dir = registry.corpus_dir(corpus.name)
        _write_jsonl(corpus_dir / f"clusters_{role}.jsonl", rows)
        return result

    @app.post(API_PREFIX + "/cluster")
    def cluster(body: dict):
        corpus = get_corpus(str(body.get("corpus", "")))
        role = str(body.get("role", ROLE_CONSTITUENTS))
        min_size = int(body.get("min_size", 10))
        result = run_cluster(corpus, role, min_size, body.get("vectors"))
        return {"schema": "igw.cluster@1", "corpus": corpus.name, "role": role,
                "min_size": min_size,
                "clusters": semantic.clusters_to_objs(result)[:-1],
                "noise": result.noise}

    # ------------------------------------------------------------------ network

    @app.post(API_PREFIX + "/network")
    def network(body: dict):
        corpus = get_corpus(str(body.get("corpus", "")))
        min_size = int(body.get("min_size", 10))
        records, _ = abdico.parse_corpus(corpus.statements, keep_unparsed=True)
        result = run_cluster(corpus, ROLE_CONSTITUENTS, min_size,
                             body.get("vectors"))
        g = graphmod.build_graph(
            records,
            graphmod.role_assignment(result, graphmod.ATTRIBUTE_SUFFIX),
            graphmod.role_assignment(result, graphmod.OBJECT_SUFFIX),
            graphmod.cluster_labels(result),
        )
        corpus_dir = registry.corpus_dir(corpus.name)
        (corpus_dir / "graph.json").write_text(
            graphmod.export_graph(g, graphmod.FORMAT_JSON) + "\n", encoding="utf-8")
        (corpus_dir / "graph.dot").write_text(
            graphmod.export_graph(g, graphmod.FORMAT_DOT), encoding="utf-8")
        return graphmod.graph_to_obj(g)

    # ------------------------------------------------------------------ evaluate

    @app.post(API_PREFIX + "/evaluate")
    def evaluate_endpoint(body: dict):
        corpus = get_corpus(str(body.get("corpus", "")))
        gold_rows = body.get("gold")
        if gold_rows is None and body.get("gold_path"):
            gold_rows = [json.loads(line) for line in
                         Path(body["gold_path"]).read_text(encoding="utf-8").splitlines()
                         if line.strip()]
        if gold_rows is None:
            raise ApiError(422, "bad_request", "provide gold or gold_path")
        try:
            gold = [evaluation.gold_from_obj(obj) for obj in gold_rows]
        except (KeyError, TypeError, ValueError) as exc:
            raise ApiError(422, "malformed_payload", f"bad gold record: {exc}")
        averaging = str(body.get("averaging", evaluation.MICRO))
        records, _ = abdico.parse_corpus(corpus.statements, keep_unparsed=True)
        try:
            report = evaluation.evaluate(
                records, gold, dataset=str(body.get("dataset", corpus.name)),
                averaging=averaging)
        except ValueError as exc:
            raise ApiError(422, "bad_request", str(exc))
        obj = evaluation.report_to_obj(report)
        corpus_dir = registry.corpus_dir(corpus.name)
        (corpus_dir / "eval.json").write_text(
            canonical_json(obj) + "\n", encoding="utf-8")
        return obj

    return app
