"""Interchange corpus writer.

Mirrors the engine's canonical serialization without importing it: sorted
keys, compact separators, UTF-8, one record per line, counts in the meta
file. The engine's validator is the contract test for this module.
"""

from __future__ import annotations

import json
from pathlib import Path

META_FILE = "corpus.meta"
DOCS_FILE = "docs.jsonl"
STATEMENTS_FILE = "statements.jsonl"
CHAINS_FILE = "chains.jsonl"
MANIFEST_FILE = "manifest.json"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False,
                      separators=(",", ":"))


def write_corpus(out_dir: str | Path, name: str, docs: list[dict],
                 statements: list[dict], chains: list[dict],
                 embedding_dim: int | None,
                 manifest: dict | None = None) -> Path:
    root = Path(out_dir)
    root.mkdir(parents=True, exist_ok=True)
    meta = {
        "name": name,
        "embedding_dim": embedding_dim,
        "counts": {
            "docs": len(docs),
            "statements": len(statements),
            "chains": len(chains),
        },
    }
    (root / META_FILE).write_text(canonical_json(meta) + "\n", encoding="utf-8")
    _write_jsonl(root / DOCS_FILE, docs)
    _write_jsonl(root / STATEMENTS_FILE, statements)
    _write_jsonl(root / CHAINS_FILE, chains)
    if manifest is not None:
        (root / MANIFEST_FILE).write_text(canonical_json(manifest) + "\n",
                                          encoding="utf-8")
    return root


def _write_jsonl(path: Path, rows: list[dict]) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(canonical_json(row) + "\n")
