"""End-to-end annotation: docs.jsonl in, interchange corpus directory out."""

from __future__ import annotations

import json
from pathlib import Path

from .annotate import annotate_document
from .config import AdapterConfig, ResolvedBackends, resolve
from .stoplist import STOPLIST_VERSION, stoplist_hash
from .writer import write_corpus


def read_docs_file(path: str | Path) -> list[dict]:
    """One (id, text, metadata) object per line."""
    docs = []
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            obj = json.loads(line)
            docs.append({
                "id": str(obj["id"]),
                "text": str(obj["text"]),
                "metadata": {str(k): str(v)
                             for k, v in obj.get("metadata", {}).items()},
            })
    return docs


def annotate_corpus(docs: list[dict], out_dir: str | Path, name: str,
                    backends: ResolvedBackends | None = None,
                    config: AdapterConfig | None = None) -> Path:
    """Annotate, embed, and persist; failed docs are skipped and logged in
    the manifest rather than aborting the batch.

    Text cleaning is whitespace normalization only; no other preprocessing
    is applied before segmentation or encoding.
    """
    if backends is None:
        backends = resolve(config or AdapterConfig.builtin())
    encoder = backends.encoder("symmetric")

    out_docs: list[dict] = []
    out_statements: list[dict] = []
    out_chains: list[dict] = []
    skipped: list[dict] = []
    for doc in docs:
        text = " ".join(doc["text"].split())
        try:
            statements, chains = annotate_document(doc["id"], text)
            embedding = encoder.encode(text) if text else None
        except Exception as exc:  # per-doc failure must not sink the batch
            skipped.append({"id": doc["id"], "error": str(exc)})
            continue
        out_docs.append({
            "id": doc["id"],
            "text": text,
            "metadata": doc.get("metadata", {}),
            "embedding": embedding,
        })
        out_statements.extend(statements)
        out_chains.extend(chains)

    manifest = {
        "models": {
            "symmetric": encoder.tag,
            "query": backends.encoder("query").tag,
            "passage": backends.encoder("passage").tag,
            "srl": backends.config.srl_model,
            "coref": backends.config.coref_model,
        },
        "stoplist": {"version": STOPLIST_VERSION, "hash": stoplist_hash()},
        "cleaning": "whitespace normalization only",
        "skipped_docs": skipped,
        "counts": {"input_docs": len(docs), "annotated_docs": len(out_docs)},
    }
    return write_corpus(out_dir, name, out_docs, out_statements, out_chains,
                        embedding_dim=encoder.dim, manifest=manifest)
