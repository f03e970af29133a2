"""Builtin annotation pipeline: sentences to interchange statements.

Produces the same record shapes a model-backed pipeline would: tokens with
lemma/pos/head/deprel/stopword flags, one frame per detected predicate with
modal and negation modifiers, and two-mention coreference chains for
pronouns. Output always satisfies the interchange invariants: one root per
statement, in-range heads and spans, at most one span per core label.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .stoplist import STOPWORDS
from .textrules import (
    AUXILIARIES, CONJUNCTIONS, DETERMINERS, MODALS, NEGATIONS,
    PERSONAL_PRONOUNS, PREPOSITIONS, PRONOUNS, TEMPORAL_ADVERBS,
    has_participle_shape, is_word, looks_like_verb, noun_lemma,
    split_sentences, tokenize, verb_lemma,
)

PRONOUN_HEADS = frozenset({"it", "they", "he", "she", "them", "him"})


@dataclass
class _Tok:
    index: int
    text: str
    kind: str  # punct/modal/neg/aux/det/prep/cc/pron/adv/verb/noun
    lemma: str = ""
    head: int = -2
    deprel: str = "dep"


@dataclass
class Chunk:
    start: int
    end: int  # half-open token span
    head_noun: int
    preceded_by: str | None  # lowercased token immediately before the chunk


@dataclass
class SentenceAnnotation:
    tokens: list[_Tok]
    frames: list[dict]
    chunks: list[Chunk] = field(default_factory=list)


def _classify(tokens: list[str]) -> list[_Tok]:
    out = []
    for i, raw in enumerate(tokens):
        low = raw.lower()
        if not is_word(raw):
            kind = "punct"
        elif low in MODALS:
            kind = "modal"
        elif low in NEGATIONS:
            kind = "neg"
        elif low in AUXILIARIES:
            kind = "aux"
        elif low in DETERMINERS:
            kind = "det"
        elif low in PREPOSITIONS:
            kind = "prep"
        elif low in CONJUNCTIONS:
            kind = "cc"
        elif low in PRONOUNS:
            kind = "pron"
        elif low in TEMPORAL_ADVERBS or (low.endswith("ly") and len(low) > 3):
            kind = "adv"
        else:
            kind = "noun"  # provisional; verb promotion follows
        out.append(_Tok(i, raw, kind))
    return out


def _promote_verbs(toks: list[_Tok]) -> None:
    expecting_verb = False  # a modal or auxiliary wants a verb next
    have_verb = False
    prev_kind = None
    for i, t in enumerate(toks):
        if t.kind in ("modal", "aux"):
            expecting_verb = True
        elif t.kind == "noun":
            next_kind = next(
                (u.kind for u in toks[i + 1:] if u.kind != "punct"), None)
            if expecting_verb:
                t.kind = "verb"
                expecting_verb = False
                have_verb = True
            elif (not have_verb and looks_like_verb(t.text)
                  and prev_kind not in ("det", "prep")
                  and next_kind not in ("aux", "modal")):
                t.kind = "verb"
                have_verb = True
            elif has_participle_shape(t.text) and prev_kind in ("noun", "pron"):
                t.kind = "verb"  # reduced relative: "reports submitted by ..."
                have_verb = True
        elif t.kind in ("neg", "adv") or t.text.lower() == "to":
            pass  # modals reach across negation, adverbs, infinitival to
        else:
            expecting_verb = False
        if t.kind != "punct":
            prev_kind = t.kind


def _lemmas(toks: list[_Tok]) -> None:
    for t in toks:
        if t.kind == "verb":
            t.lemma = verb_lemma(t.text)
        elif t.kind == "noun":
            t.lemma = noun_lemma(t.text)
        else:
            t.lemma = t.text.lower()


def _noun_chunks(toks: list[_Tok]) -> list[Chunk]:
    chunks = []
    i = 0
    n = len(toks)
    while i < n:
        if toks[i].kind in ("det", "noun", "pron"):
            start = i
            last_nominal = None
            while i < n and toks[i].kind in ("det", "noun", "pron"):
                if toks[i].kind in ("noun", "pron"):
                    last_nominal = i
                i += 1
            if last_nominal is not None:
                before = toks[start - 1].text.lower() if start > 0 else None
                chunks.append(Chunk(start, last_nominal + 1, last_nominal, before))
            continue
        i += 1
    return chunks


def _attach(toks: list[_Tok], chunks: list[Chunk], main_verb: int | None,
            passive: bool) -> None:
    n = len(toks)
    root = main_verb
    if root is None:
        root = next((c.head_noun for c in chunks), 0)
    toks[root].head = -1
    toks[root].deprel = "root"

    def next_noun(i: int) -> int:
        for j in range(i + 1, n):
            if toks[j].kind in ("noun", "pron"):
                return j
        return root

    subject_chunk = None
    if main_verb is not None:
        pre = [c for c in chunks if c.head_noun < main_verb]
        if pre:
            subject_chunk = pre[-1]

    seen_obj = False
    for t in toks:
        if t.head == -1:
            continue
        if t.kind in ("modal", "aux"):
            t.head, t.deprel = root, "aux"
        elif t.kind == "neg":
            t.head, t.deprel = root, "advmod"
        elif t.kind == "adv":
            t.head, t.deprel = root, "advmod"
        elif t.kind == "det":
            t.head, t.deprel = next_noun(t.index), "det"
        elif t.kind == "prep":
            t.head, t.deprel = next_noun(t.index), "case"
        elif t.kind == "cc":
            t.head, t.deprel = next_noun(t.index), "cc"
        elif t.kind == "punct":
            t.head, t.deprel = root, "punct"
        elif t.kind == "verb":
            t.head, t.deprel = root, "acl"
        else:  # noun / pron
            chunk = next((c for c in chunks if c.start <= t.index < c.end), None)
            if chunk is not None and t.index != chunk.head_noun:
                t.head, t.deprel = chunk.head_noun, "compound"
            elif chunk is subject_chunk and main_verb is not None:
                t.head = main_verb
                t.deprel = "nsubj:pass" if passive else "nsubj"
            elif chunk is not None and chunk.preceded_by in PREPOSITIONS:
                t.head, t.deprel = root, "obl"
            elif main_verb is not None and t.index > main_verb and not seen_obj:
                t.head, t.deprel = root, "obj"
                seen_obj = True
            else:
                t.head, t.deprel = root, "nmod" if main_verb is None else "obl"
        if t.head == t.index:  # never self-attach
            t.head, t.deprel = root, t.deprel
            if t.index == root:
                t.head = -1


def _span(chunk: Chunk) -> tuple[int, int]:
    return chunk.start, chunk.end


def _main_frame(toks: list[_Tok], chunks: list[Chunk], verb: int,
                passive: bool) -> dict:
    roles: list[list] = []
    used_core: set[str] = set()

    def add(label: str, start: int, end: int) -> None:
        if label.startswith("ARG") and not label.startswith("ARGM"):
            if label in used_core:
                return
            used_core.add(label)
        roles.append([label, start, end])

    for t in toks[:verb]:
        if t.kind == "modal":
            add("ARGM-MOD", t.index, t.index + 1)
            break
    for t in toks[:verb]:
        if t.kind == "neg":
            add("ARGM-NEG", t.index, t.index + 1)
            break

    subject = next((c for c in reversed(chunks) if c.head_noun < verb), None)
    if subject is not None:
        add("ARG1" if passive else "ARG0", *_span(subject))

    post = [c for c in chunks if c.start > verb]
    for chunk in post:
        if chunk.preceded_by == "by" and passive and "ARG0" not in used_core:
            start = chunk.start - 1  # include the preposition
            add("ARG0", start, chunk.end)
        elif chunk.preceded_by in PREPOSITIONS and chunk.preceded_by != "by":
            if "ARG2" not in used_core:
                add("ARG2", chunk.start - 1, chunk.end)
        elif "ARG1" not in used_core:
            add("ARG1", *_span(chunk))
        elif "ARG2" not in used_core:
            add("ARG2", *_span(chunk))

    for t in toks[verb + 1:]:
        if t.kind == "adv":
            label = "ARGM-TMP" if t.text.lower() in TEMPORAL_ADVERBS else "ARGM-MNR"
            add(label, t.index, t.index + 1)
            break

    roles.sort(key=lambda r: (r[1], r[2], r[0]))
    return {"predicate": verb, "roles": roles}


def _secondary_frame(toks: list[_Tok], chunks: list[Chunk], verb: int) -> dict:
    roles: list[list] = []
    before = next((c for c in reversed(chunks) if c.end <= verb), None)
    after = next((c for c in chunks if c.start > verb), None)
    if has_participle_shape(toks[verb].text):
        if before is not None:
            roles.append(["ARG1", *_span(before)])
        if after is not None and after.preceded_by == "by":
            roles.append(["ARG0", after.start - 1, after.end])
    else:
        if before is not None:
            roles.append(["ARG0", *_span(before)])
        if after is not None and after.preceded_by not in PREPOSITIONS:
            roles.append(["ARG1", *_span(after)])
    roles.sort(key=lambda r: (r[1], r[2], r[0]))
    return {"predicate": verb, "roles": roles}


def annotate_sentence(text: str) -> SentenceAnnotation:
    toks = _classify(tokenize(text))
    _promote_verbs(toks)
    _lemmas(toks)
    chunks = _noun_chunks(toks)

    verbs = [t.index for t in toks if t.kind == "verb"]
    main_verb = verbs[0] if verbs else None
    passive = False
    if main_verb is not None and has_participle_shape(toks[main_verb].text):
        passive = any(t.kind == "aux" and t.lemma in
                      ("is", "are", "was", "were", "be", "been", "being", "am")
                      for t in toks[:main_verb])

    _attach(toks, chunks, main_verb, passive)

    frames = []
    if main_verb is not None:
        frames.append(_main_frame(toks, chunks, main_verb, passive))
    for verb in verbs[1:]:
        frames.append(_secondary_frame(toks, chunks, verb))
    return SentenceAnnotation(toks, frames, chunks)


def statement_obj(statement_id: str, doc_id: str,
                  ann: SentenceAnnotation) -> dict:
    pos_of = {"verb": "verb", "noun": "noun"}
    return {
        "id": statement_id,
        "source_doc": doc_id,
        "tokens": [
            {
                "index": t.index,
                "text": t.text,
                "lemma": t.lemma,
                "pos": pos_of.get(t.kind, "other"),
                "head": t.head,
                "deprel": t.deprel,
                "is_stopword": t.text.lower() in STOPWORDS,
            }
            for t in ann.tokens
        ],
        "frames": ann.frames,
    }


def _chunk_capitalized(ann: SentenceAnnotation, chunk: Chunk) -> bool:
    head = ann.tokens[chunk.head_noun]
    return head.text[:1].isupper()


def coref_chains(annotated: list[tuple[str, SentenceAnnotation]]) -> list[dict]:
    """Two-mention chains linking each pronoun to its nearest antecedent.

    Personal pronouns prefer capitalized (name-like) antecedent heads;
    everything else prefers common nouns; either falls back to the other.
    """
    chains = []
    seen: list[tuple[str, Chunk, bool]] = []  # (statement id, chunk, capitalized)
    for sid, ann in annotated:
        for t in ann.tokens:
            if t.kind != "pron" or t.text.lower() not in PRONOUN_HEADS:
                continue
            prior = [(s, c, cap) for s, c, cap in seen
                     if s != sid or c.end <= t.index]
            if not prior:
                continue
            want_upper = t.text.lower() in PERSONAL_PRONOUNS
            preferred = [p for p in prior if p[2] == want_upper]
            source_sid, chunk, _cap = (preferred or prior)[-1]
            chains.append({
                "mentions": [
                    {"statement_id": source_sid, "start": chunk.start,
                     "end": chunk.end, "pronominal": False},
                    {"statement_id": sid, "start": t.index,
                     "end": t.index + 1, "pronominal": True},
                ]
            })
        for chunk in ann.chunks:
            if ann.tokens[chunk.head_noun].kind == "pron":
                continue
            seen.append((sid, chunk, _chunk_capitalized(ann, chunk)))
    return chains


def annotate_document(doc_id: str, text: str) -> tuple[list[dict], list[dict]]:
    """(statement rows, chain rows) for one document."""
    annotated = []
    for n, sentence in enumerate(split_sentences(text)):
        sid = f"{doc_id}#s{n}"
        annotated.append((sid, annotate_sentence(sentence)))
    statements = [statement_obj(sid, doc_id, ann) for sid, ann in annotated]
    return statements, coref_chains(annotated)
