"""Coreference chain application: substitute pronominal mentions with the
named entity their chain refers to.

Only chain application happens here; detecting chains is the annotation
adapter's job. Two downstream modes exist: hand the rewritten text back to
the adapter for re-annotation, or splice the representative's tokens into
the original annotations (`apply_chains`) so the deterministic pipeline can
keep running without a model.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .interchange import AnnotatedStatement, CorefChain, Corpus, Mention, Role, SrlFrame

REPRESENTATIVE_FIRST = "first"
REPRESENTATIVE_LONGEST = "longest"


@dataclass
class Substitution:
    statement_id: str
    start: int
    end: int  # original token span
    replacement: str
    chain_index: int


@dataclass
class ResolvedStatement:
    statement_id: str
    text: str


@dataclass
class ResolvedDocument:
    doc_id: str | None
    statements: list[ResolvedStatement] = field(default_factory=list)
    substitutions: list[Substitution] = field(default_factory=list)


def representative_mention(chain: CorefChain,
                           strategy: str = REPRESENTATIVE_FIRST) -> Mention | None:
    """The mention whose text stands in for the whole chain.

    Default: first non-pronominal mention in document order. The longest
    strategy picks the non-pronominal mention covering the most tokens
    (ties go to the earlier one). All-pronominal chains have none.
    """
    named = [m for m in chain.mentions if not m.pronominal]
    if not named:
        return None
    if strategy == REPRESENTATIVE_FIRST:
        return named[0]
    if strategy == REPRESENTATIVE_LONGEST:
        return max(named, key=lambda m: m.end - m.start)
    raise ValueError(f"unknown representative strategy: {strategy!r}")


def _planned_substitutions(corpus: Corpus, strategy: str) -> list[Substitution]:
    subs: list[Substitution] = []
    for idx, chain in enumerate(corpus.coref_chains):
        rep = representative_mention(chain, strategy)
        if rep is None:
            continue
        rep_stmt = corpus.statement_by_id(rep.statement_id)
        if rep_stmt is None:
            continue
        rep_text = rep_stmt.span_text(rep.start, rep.end)
        for m in chain.mentions:
            if m.pronominal:
                subs.append(Substitution(m.statement_id, m.start, m.end, rep_text, idx))
    return subs


def resolve(corpus: Corpus,
            strategy: str = REPRESENTATIVE_FIRST) -> list[ResolvedDocument]:
    """Rewrite every statement's text, replacing pronominal mentions.

    Statements are grouped by source document (statements without one are
    collected under doc_id None, last). Substitutions within a statement are
    applied right to left so recorded offsets refer to the original tokens.
    """
    subs = _planned_substitutions(corpus, strategy)
    by_stmt: dict[str, list[Substitution]] = {}
    for sub in subs:
        by_stmt.setdefault(sub.statement_id, []).append(sub)

    doc_order: list[str | None] = [d.id for d in corpus.docs]
    if any(s.source_doc is None for s in corpus.statements):
        doc_order.append(None)
    docs = {doc_id: ResolvedDocument(doc_id) for doc_id in doc_order}

    for stmt in corpus.statements:
        words = [t.text for t in stmt.tokens]
        for sub in sorted(by_stmt.get(stmt.id, ()), key=lambda s: s.start, reverse=True):
            words[sub.start:sub.end] = sub.replacement.split(" ")
        key = stmt.source_doc if stmt.source_doc in docs else None
        target = docs.get(key)
        if target is None:  # source_doc names a doc not in the corpus
            target = docs.setdefault(None, ResolvedDocument(None))
            if None not in doc_order:
                doc_order.append(None)
        target.statements.append(ResolvedStatement(stmt.id, " ".join(words)))
        target.substitutions.extend(
            sorted(by_stmt.get(stmt.id, ()), key=lambda s: s.start))
    return [docs[doc_id] for doc_id in doc_order if docs[doc_id].statements]


def resolved_to_objs(documents: list[ResolvedDocument]) -> list[dict]:
    """Rows for resolved.jsonl: one per statement, substitutions inline."""
    rows = []
    for doc in documents:
        subs_by_stmt: dict[str, list[Substitution]] = {}
        for sub in doc.substitutions:
            subs_by_stmt.setdefault(sub.statement_id, []).append(sub)
        for stmt in doc.statements:
            rows.append({
                "statement_id": stmt.statement_id,
                "source_doc": doc.doc_id,
                "text": stmt.text,
                "substitutions": [
                    {"start": s.start, "end": s.end, "replacement": s.replacement,
                     "chain": s.chain_index}
                    for s in subs_by_stmt.get(stmt.statement_id, ())
                ],
            })
    return rows


# ---------------------------------------------------------------------------
# pure-core surface mode: splice representative tokens into the annotations


def _span_root(stmt: AnnotatedStatement, start: int, end: int) -> int:
    """Token inside [start,end) whose head lies outside the span (or is root)."""
    for i in range(start, end):
        head = stmt.tokens[i].head
        if head == -1 or not start <= head < end:
            return i
    return start


def _shift_point(pos: int, start: int, end: int, delta: int, new_len: int) -> int:
    if pos <= start:
        return pos
    if pos >= end:
        return pos + delta
    return start + new_len  # interior points collapse to the replacement's end


def _splice_statement(stmt: AnnotatedStatement, sub: Substitution,
                      rep_tokens: list) -> AnnotatedStatement:
    start, end = sub.start, sub.end
    old_len = end - start
    new_len = len(rep_tokens)
    delta = new_len - old_len

    anchor = _span_root(stmt, start, end)
    anchor_head = stmt.tokens[anchor].head
    anchor_rel = stmt.tokens[anchor].deprel

    replacement = []
    for offset, rt in enumerate(rep_tokens):
        if offset == 0:
            head, rel = anchor_head, anchor_rel
        else:
            head, rel = start, "flat"
        replacement.append(replace(rt, index=start + offset, head=head, deprel=rel))

    def map_head(h: int) -> int:
        if h == -1:
            return -1
        if start <= h < end:
            return start  # outside dependents re-attach to the mention root
        return h if h < end else h + delta

    tokens = []
    for t in stmt.tokens[:start]:
        tokens.append(replace(t, head=map_head(t.head)))
    tokens.extend(replacement)
    for t in stmt.tokens[end:]:
        tokens.append(replace(t, index=t.index + delta, head=map_head(t.head)))

    frames = []
    for f in stmt.frames:
        pred = _shift_point(f.predicate, start, end, delta, new_len)
        if start <= f.predicate < end:
            pred = start
        roles = []
        for r in f.roles:
            ns = r.start if r.start <= start else _shift_point(r.start, start, end, delta, new_len)
            if start < r.start < end:
                ns = start
            ne = _shift_point(r.end, start, end, delta, new_len)
            if ns < ne:
                roles.append(Role(r.label, ns, ne))
        frames.append(SrlFrame(pred, roles))
    return AnnotatedStatement(stmt.id, tokens, frames, stmt.source_doc)


def apply_chains(corpus: Corpus, strategy: str = REPRESENTATIVE_FIRST) -> Corpus:
    """New corpus with pronominal mentions replaced inside the annotations.

    Replacement tokens copy the representative's text/lemma/pos/stopword
    fields; the first one inherits the substituted span's attachment, the
    rest hang off it flat. Frame spans stretch or shrink with the splice.
    Chains in the result mark substituted mentions non-pronominal, so a
    second application is the identity.
    """
    subs = _planned_substitutions(corpus, strategy)
    by_stmt: dict[str, list[Substitution]] = {}
    for sub in subs:
        by_stmt.setdefault(sub.statement_id, []).append(sub)

    rep_tokens_by_chain: dict[int, list] = {}
    for idx, chain in enumerate(corpus.coref_chains):
        rep = representative_mention(chain, strategy)
        if rep is None:
            continue
        rep_stmt = corpus.statement_by_id(rep.statement_id)
        if rep_stmt is not None:
            rep_tokens_by_chain[idx] = rep_stmt.tokens[rep.start:rep.end]

    new_statements = []
    span_maps: dict[str, list[tuple[int, int, int]]] = {}  # (start, end, new_len)
    for stmt in corpus.statements:
        stmt_subs = sorted(by_stmt.get(stmt.id, ()), key=lambda s: s.start, reverse=True)
        out = stmt
        for sub in stmt_subs:
            rep_tokens = rep_tokens_by_chain[sub.chain_index]
            out = _splice_statement(out, sub, rep_tokens)
            span_maps.setdefault(stmt.id, []).append(
                (sub.start, sub.end, len(rep_tokens)))
        new_statements.append(out)

    def map_mention(m: Mention) -> Mention:
        start, end, pronominal = m.start, m.end, m.pronominal
        # splices were applied right-to-left; replay them the same way
        for s, e, nl in span_maps.get(m.statement_id, ()):
            delta = nl - (e - s)
            if start == s and end == e:
                start, end, pronominal = s, s + nl, False
            else:
                new_start = start if start <= s else _shift_point(start, s, e, delta, nl)
                if s < start < e:
                    new_start = s
                start = new_start
                end = _shift_point(end, s, e, delta, nl)
        return Mention(m.statement_id, start, end, pronominal)

    new_chains = [CorefChain([map_mention(m) for m in c.mentions])
                  for c in corpus.coref_chains]
    return Corpus(
        name=corpus.name,
        docs=corpus.docs,
        statements=new_statements,
        coref_chains=new_chains,
        embedding_dim=corpus.embedding_dim,
    )
