"""On-disk corpus registry backing the service and CLI.

One subdirectory per corpus under a root; the registry is rebuilt from disk
on startup, so a restart loses nothing. Ingest is the only mutation and is
serialized per corpus name; reads hand out immutable snapshots.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass, replace
from pathlib import Path

from .interchange import (
    Corpus, InterchangeError, canonical_json, load_corpus, save_corpus,
)

ENTRY_FILE = "entry.json"


class DuplicateCorpusError(Exception):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"corpus {name!r} already exists (pass overwrite to replace)")


class UnknownCorpusError(KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no corpus named {name!r}")


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    path: str
    embedding_dim: int | None
    doc_count: int
    statement_count: int
    chain_count: int
    ingested_at: str  # ISO-8601 UTC

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "path": self.path,
            "embedding_dim": self.embedding_dim,
            "doc_count": self.doc_count,
            "statement_count": self.statement_count,
            "chain_count": self.chain_count,
            "ingested_at": self.ingested_at,
        }


def _utcnow() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


class CorpusRegistry:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._entries: dict[str, RegistryEntry] = {}
        self._snapshots: dict[str, Corpus] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self.scan()

    def scan(self) -> None:
        """Rebuild the entry table from disk; invalid directories are skipped."""
        entries: dict[str, RegistryEntry] = {}
        for child in sorted(self.root.iterdir()) if self.root.exists() else []:
            entry_path = child / ENTRY_FILE
            if not child.is_dir() or not entry_path.exists():
                continue
            try:
                obj = json.loads(entry_path.read_text(encoding="utf-8"))
                corpus = load_corpus(child)
            except (InterchangeError, json.JSONDecodeError, OSError):
                continue
            entries[corpus.name] = RegistryEntry(
                name=corpus.name,
                path=str(child),
                embedding_dim=corpus.embedding_dim,
                doc_count=len(corpus.docs),
                statement_count=len(corpus.statements),
                chain_count=len(corpus.coref_chains),
                ingested_at=str(obj.get("ingested_at", "")),
            )
        with self._registry_lock:
            self._entries = entries
            self._snapshots.clear()

    def _lock_for(self, name: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(name, threading.Lock())

    def entries(self) -> list[RegistryEntry]:
        with self._registry_lock:
            return sorted(self._entries.values(), key=lambda e: e.name)

    def get(self, name: str) -> RegistryEntry:
        with self._registry_lock:
            entry = self._entries.get(name)
        if entry is None:
            raise UnknownCorpusError(name)
        return entry

    def corpus_dir(self, name: str) -> Path:
        return Path(self.get(name).path)

    def load(self, name: str) -> Corpus:
        with self._registry_lock:
            cached = self._snapshots.get(name)
        if cached is not None:
            return cached
        corpus = load_corpus(self.corpus_dir(name))
        with self._registry_lock:
            self._snapshots[name] = corpus
        return corpus

    def ingest(self, name: str, corpus: Corpus, overwrite: bool = False) -> RegistryEntry:
        """Validate, persist, and list a corpus under `name`."""
        with self._lock_for(name):
            exists = name in {e.name for e in self.entries()}
            if exists and not overwrite:
                raise DuplicateCorpusError(name)
            corpus = replace(corpus, name=name)
            target = self.root / name
            save_corpus(corpus, target)  # validates; raises before any listing
            for stale in target.glob("*.jsonl"):
                if stale.name not in ("docs.jsonl", "statements.jsonl", "chains.jsonl"):
                    stale.unlink()  # derived results from a replaced corpus
            for stale_name in ("graph.json", "graph.dot", "eval.json"):
                (target / stale_name).unlink(missing_ok=True)
            entry = RegistryEntry(
                name=name,
                path=str(target),
                embedding_dim=corpus.embedding_dim,
                doc_count=len(corpus.docs),
                statement_count=len(corpus.statements),
                chain_count=len(corpus.coref_chains),
                ingested_at=_utcnow(),
            )
            (target / ENTRY_FILE).write_text(
                canonical_json(entry.to_obj()) + "\n", encoding="utf-8")
            with self._registry_lock:
                self._entries[name] = entry
                self._snapshots.pop(name, None)
            return entry
