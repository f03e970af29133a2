"""Annotation interchange format and corpus store.

A corpus directory holds four files: `corpus.meta` (one JSON object),
`docs.jsonl`, `statements.jsonl`, and `chains.jsonl`. Serialization is
canonical: UTF-8, sorted keys, compact separators, shortest round-trip
decimals for floats, one record per line. Loading and saving are pure; a
loaded Corpus is treated as immutable and may be shared across readers.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

POS_VERB = "verb"
POS_NOUN = "noun"
POS_OTHER = "other"
POS_TAGS = (POS_VERB, POS_NOUN, POS_OTHER)

CORE_LABELS = ("ARG0", "ARG1", "ARG2", "ARG3", "ARG4", "ARG5")
_LABEL_RE = re.compile(r"ARG[0-5]$|ARGM-[A-Za-z]+$")

META_FILE = "corpus.meta"
DOCS_FILE = "docs.jsonl"
STATEMENTS_FILE = "statements.jsonl"
CHAINS_FILE = "chains.jsonl"


class InterchangeError(Exception):
    """Base for corpus load/store failures."""


class CorpusFormatError(InterchangeError):
    """Missing file or malformed record; message carries file, line, and id."""


class CorpusValidationError(InterchangeError):
    """Structurally parseable corpus that breaks a type invariant."""

    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        lines = "; ".join(str(v) for v in violations[:10])
        more = "" if len(violations) <= 10 else f" (+{len(violations) - 10} more)"
        super().__init__(f"{len(violations)} violation(s): {lines}{more}")


@dataclass(frozen=True)
class Violation:
    record_id: str
    fld: str
    rule: str
    detail: str = ""

    def __str__(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"[{self.record_id}] {self.fld} violates '{self.rule}'{tail}"


@dataclass
class Token:
    index: int
    text: str
    lemma: str
    pos: str  # one of POS_TAGS
    head: int  # -1 marks the dependency root
    deprel: str
    is_stopword: bool = False


@dataclass
class Role:
    label: str
    start: int
    end: int  # half-open token range


@dataclass
class SrlFrame:
    predicate: int
    roles: list[Role] = field(default_factory=list)


@dataclass
class AnnotatedStatement:
    id: str
    tokens: list[Token]
    frames: list[SrlFrame] = field(default_factory=list)
    source_doc: str | None = None

    def text(self) -> str:
        return " ".join(t.text for t in self.tokens)

    def span_text(self, start: int, end: int) -> str:
        return " ".join(t.text for t in self.tokens[start:end])


@dataclass
class PolicyDoc:
    id: str
    text: str
    metadata: dict[str, str] = field(default_factory=dict)
    embedding: list[float] | None = None


@dataclass
class Mention:
    statement_id: str
    start: int
    end: int
    pronominal: bool


@dataclass
class CorefChain:
    mentions: list[Mention]


@dataclass
class Corpus:
    name: str
    docs: list[PolicyDoc] = field(default_factory=list)
    statements: list[AnnotatedStatement] = field(default_factory=list)
    coref_chains: list[CorefChain] = field(default_factory=list)
    embedding_dim: int | None = None

    def doc_by_id(self, doc_id: str) -> PolicyDoc | None:
        for d in self.docs:
            if d.id == doc_id:
                return d
        return None

    def statement_by_id(self, statement_id: str) -> AnnotatedStatement | None:
        for s in self.statements:
            if s.id == statement_id:
                return s
        return None


def canonical_json(obj) -> str:
    """Canonical single-line JSON: sorted keys, compact, UTF-8-safe."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


# ---------------------------------------------------------------------------
# record codecs (shared by the file store and the HTTP ingest payload)

def token_to_obj(t: Token) -> dict:
    return {
        "index": t.index, "text": t.text, "lemma": t.lemma, "pos": t.pos,
        "head": t.head, "deprel": t.deprel, "is_stopword": t.is_stopword,
    }


def token_from_obj(obj: dict) -> Token:
    return Token(
        index=int(obj["index"]), text=str(obj["text"]), lemma=str(obj["lemma"]),
        pos=str(obj["pos"]), head=int(obj["head"]), deprel=str(obj["deprel"]),
        is_stopword=bool(obj["is_stopword"]),
    )


def statement_to_obj(s: AnnotatedStatement) -> dict:
    return {
        "id": s.id,
        "source_doc": s.source_doc,
        "tokens": [token_to_obj(t) for t in s.tokens],
        "frames": [
            {"predicate": f.predicate,
             "roles": [[r.label, r.start, r.end] for r in f.roles]}
            for f in s.frames
        ],
    }


def statement_from_obj(obj: dict) -> AnnotatedStatement:
    frames = [
        SrlFrame(
            predicate=int(f["predicate"]),
            roles=[Role(str(lbl), int(st), int(en)) for lbl, st, en in f["roles"]],
        )
        for f in obj["frames"]
    ]
    source = obj.get("source_doc")
    return AnnotatedStatement(
        id=str(obj["id"]),
        tokens=[token_from_obj(t) for t in obj["tokens"]],
        frames=frames,
        source_doc=None if source is None else str(source),
    )


def doc_to_obj(d: PolicyDoc) -> dict:
    return {"id": d.id, "text": d.text, "metadata": d.metadata, "embedding": d.embedding}


def doc_from_obj(obj: dict) -> PolicyDoc:
    emb = obj.get("embedding")
    return PolicyDoc(
        id=str(obj["id"]), text=str(obj["text"]),
        metadata={str(k): str(v) for k, v in obj.get("metadata", {}).items()},
        embedding=None if emb is None else [float(x) for x in emb],
    )


def chain_to_obj(c: CorefChain) -> dict:
    return {
        "mentions": [
            {"statement_id": m.statement_id, "start": m.start, "end": m.end,
             "pronominal": m.pronominal}
            for m in c.mentions
        ]
    }


def chain_from_obj(obj: dict) -> CorefChain:
    return CorefChain(mentions=[
        Mention(str(m["statement_id"]), int(m["start"]), int(m["end"]),
                bool(m["pronominal"]))
        for m in obj["mentions"]
    ])


def corpus_to_payload(corpus: Corpus) -> dict:
    """Whole-corpus object, the shape accepted by the ingest endpoint."""
    return {
        "meta": _meta_obj(corpus),
        "docs": [doc_to_obj(d) for d in corpus.docs],
        "statements": [statement_to_obj(s) for s in corpus.statements],
        "chains": [chain_to_obj(c) for c in corpus.coref_chains],
    }


def corpus_from_payload(payload: dict) -> Corpus:
    meta = payload.get("meta", {})
    dim = meta.get("embedding_dim")
    corpus = Corpus(
        name=str(meta.get("name", "")),
        docs=[doc_from_obj(o) for o in payload.get("docs", [])],
        statements=[statement_from_obj(o) for o in payload.get("statements", [])],
        coref_chains=[chain_from_obj(o) for o in payload.get("chains", [])],
        embedding_dim=None if dim is None else int(dim),
    )
    violations = validate(corpus)
    if violations:
        raise CorpusValidationError(violations)
    return corpus


def _meta_obj(corpus: Corpus) -> dict:
    return {
        "name": corpus.name,
        "embedding_dim": corpus.embedding_dim,
        "counts": {
            "docs": len(corpus.docs),
            "statements": len(corpus.statements),
            "chains": len(corpus.coref_chains),
        },
    }


# ---------------------------------------------------------------------------
# validation

def _validate_statement(s: AnnotatedStatement, out: list[Violation]) -> None:
    n = len(s.tokens)
    roots = 0
    for pos_in_list, t in enumerate(s.tokens):
        if t.index != pos_in_list:
            out.append(Violation(s.id, f"tokens[{pos_in_list}].index", "token index",
                                 f"expected {pos_in_list}, got {t.index}"))
        if t.head == -1:
            roots += 1
        elif not 0 <= t.head < n:
            out.append(Violation(s.id, f"tokens[{pos_in_list}].head", "head range",
                                 f"head {t.head} outside [0,{n})"))
        if t.pos not in POS_TAGS:
            out.append(Violation(s.id, f"tokens[{pos_in_list}].pos", "pos domain",
                                 f"unknown tag {t.pos!r}"))
    if n > 0 and roots != 1:
        out.append(Violation(s.id, "tokens", "single root", f"{roots} root tokens"))
    for fi, frame in enumerate(s.frames):
        if not 0 <= frame.predicate < n:
            out.append(Violation(s.id, f"frames[{fi}].predicate", "predicate range",
                                 f"predicate {frame.predicate} outside [0,{n})"))
        seen_core: set[str] = set()
        for ri, role in enumerate(frame.roles):
            if not _LABEL_RE.fullmatch(role.label):
                out.append(Violation(s.id, f"frames[{fi}].roles[{ri}]", "role label",
                                     f"unknown label {role.label!r}"))
            if not (0 <= role.start < role.end <= n):
                out.append(Violation(s.id, f"frames[{fi}].roles[{ri}]", "span range",
                                     f"[{role.start},{role.end}) outside [0,{n})"))
            if role.label in CORE_LABELS:
                if role.label in seen_core:
                    out.append(Violation(
                        s.id, f"frames[{fi}].roles[{ri}]", "core argument multiplicity",
                        f"second {role.label} span"))
                seen_core.add(role.label)


def validate(corpus: Corpus) -> list[Violation]:
    """Check every type invariant; violations are data, not exceptions."""
    out: list[Violation] = []

    seen_docs: set[str] = set()
    for d in corpus.docs:
        if d.id in seen_docs:
            out.append(Violation(d.id, "id", "doc id unique"))
        seen_docs.add(d.id)
        if d.embedding is not None:
            if corpus.embedding_dim is None or len(d.embedding) != corpus.embedding_dim:
                out.append(Violation(d.id, "embedding", "embedding dim",
                                     f"length {len(d.embedding)} != {corpus.embedding_dim}"))
            if any(not math.isfinite(x) for x in d.embedding):
                out.append(Violation(d.id, "embedding", "embedding finite"))

    seen_stmts: set[str] = set()
    for s in corpus.statements:
        if s.id in seen_stmts:
            out.append(Violation(s.id, "id", "statement id unique"))
        seen_stmts.add(s.id)
        _validate_statement(s, out)

    by_id = {s.id: s for s in corpus.statements}
    for ci, chain in enumerate(corpus.coref_chains):
        cid = f"chain[{ci}]"
        if len(chain.mentions) < 2:
            out.append(Violation(cid, "mentions", "chain size",
                                 f"{len(chain.mentions)} mention(s)"))
        for mi, m in enumerate(chain.mentions):
            stmt = by_id.get(m.statement_id)
            if stmt is None:
                out.append(Violation(cid, f"mentions[{mi}]", "chain span",
                                     f"unknown statement {m.statement_id!r}"))
            elif not (0 <= m.start < m.end <= len(stmt.tokens)):
                out.append(Violation(cid, f"mentions[{mi}]", "chain span",
                                     f"[{m.start},{m.end}) outside statement"))
    return out


# ---------------------------------------------------------------------------
# file store

def _read_jsonl(path: Path, what: str):
    if not path.exists():
        raise CorpusFormatError(f"missing file: {path}")
    records = []
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append((lineno, json.loads(line)))
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(
                    f"{path.name}:{lineno}: malformed {what} record: {exc.msg}"
                ) from exc
    return records


def _decode(path: Path, lineno: int, obj: dict, what: str, decoder):
    try:
        return decoder(obj)
    except (KeyError, TypeError, ValueError) as exc:
        rid = obj.get("id", "?") if isinstance(obj, dict) else "?"
        raise CorpusFormatError(
            f"{path.name}:{lineno}: malformed {what} record (id={rid}): {exc}"
        ) from exc


def load_corpus(path: str | Path) -> Corpus:
    """Load and fully validate a corpus directory; never returns a partial corpus."""
    root = Path(path)
    if not root.is_dir():
        raise CorpusFormatError(f"missing corpus directory: {root}")
    meta_path = root / META_FILE
    if not meta_path.exists():
        raise CorpusFormatError(f"missing file: {meta_path}")
    try:
        meta = json.loads(meta_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"{META_FILE}:1: malformed meta: {exc.msg}") from exc

    docs = [
        _decode(root / DOCS_FILE, ln, obj, "doc", doc_from_obj)
        for ln, obj in _read_jsonl(root / DOCS_FILE, "doc")
    ]
    statements = [
        _decode(root / STATEMENTS_FILE, ln, obj, "statement", statement_from_obj)
        for ln, obj in _read_jsonl(root / STATEMENTS_FILE, "statement")
    ]
    chains = [
        _decode(root / CHAINS_FILE, ln, obj, "chain", chain_from_obj)
        for ln, obj in _read_jsonl(root / CHAINS_FILE, "chain")
    ]

    dim = meta.get("embedding_dim")
    corpus = Corpus(
        name=str(meta.get("name", root.name)),
        docs=docs,
        statements=statements,
        coref_chains=chains,
        embedding_dim=None if dim is None else int(dim),
    )
    counts = meta.get("counts")
    if counts is not None:
        actual = _meta_obj(corpus)["counts"]
        if counts != actual:
            raise CorpusFormatError(
                f"{META_FILE}: counts {counts} do not match files {actual}")
    violations = validate(corpus)
    if violations:
        raise CorpusValidationError(violations)
    return corpus


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Persist canonically; load_corpus(save_corpus(c)) == c byte for byte."""
    violations = validate(corpus)
    if violations:
        raise CorpusValidationError(violations)
    root = Path(path)
    root.mkdir(parents=True, exist_ok=True)
    (root / META_FILE).write_text(canonical_json(_meta_obj(corpus)) + "\n",
                                  encoding="utf-8")
    _write_jsonl(root / DOCS_FILE, (doc_to_obj(d) for d in corpus.docs))
    _write_jsonl(root / STATEMENTS_FILE,
                 (statement_to_obj(s) for s in corpus.statements))
    _write_jsonl(root / CHAINS_FILE, (chain_to_obj(c) for c in corpus.coref_chains))


def _write_jsonl(path: Path, objs) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for obj in objs:
            fh.write(canonical_json(obj) + "\n")
