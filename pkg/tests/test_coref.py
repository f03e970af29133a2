from __future__ import annotations

from hypothesis import given, strategies as st

from igw.coref import (
    REPRESENTATIVE_LONGEST, apply_chains, representative_mention, resolve,
    resolved_to_objs,
)
from igw.interchange import CorefChain, Corpus, Mention, PolicyDoc, validate

from conftest import frame, stmt


def paula_corpus():
    s1 = stmt("p1", [
        ("Paula", "Paula", "noun", 1, "nsubj"),
        ("got", "get", "verb", -1, "root"),
        ("a", "a", "other", 4, "det"),
        ("new", "new", "other", 4, "amod"),
        ("sweater", "sweater", "noun", 1, "obj"),
    ], frame(1, ("ARG0", 0, 1), ("ARG1", 2, 5)), source_doc="d1")
    s2 = stmt("p2", [
        ("She", "she", "other", 1, "nsubj"),
        ("loves", "love", "verb", -1, "root"),
        ("it", "it", "other", 1, "obj"),
    ], frame(1, ("ARG0", 0, 1), ("ARG1", 2, 3)), source_doc="d1")
    chains = [
        CorefChain([Mention("p1", 0, 1, False), Mention("p2", 0, 1, True)]),
        CorefChain([Mention("p1", 2, 5, False), Mention("p2", 2, 3, True)]),
    ]
    doc = PolicyDoc("d1", "Paula got a new sweater. She loves it", {})
    return Corpus("paula", docs=[doc], statements=[s1, s2], coref_chains=chains)


# ------------------------------------------------------------- representative

def test_representative_is_first_non_pronominal():
    chain = CorefChain([Mention("p1", 0, 1, False), Mention("p2", 0, 1, True)])
    rep = representative_mention(chain)
    assert (rep.statement_id, rep.start, rep.end) == ("p1", 0, 1)


def test_all_pronominal_chain_has_no_representative():
    chain = CorefChain([Mention("p1", 0, 1, True), Mention("p2", 0, 1, True)])
    assert representative_mention(chain) is None


def test_first_non_pronominal_regardless_of_position():
    chain = CorefChain([Mention("p2", 2, 3, True), Mention("p1", 2, 5, False)])
    rep = representative_mention(chain)
    assert (rep.statement_id, rep.start, rep.end) == ("p1", 2, 5)


def test_longest_strategy_prefers_widest_mention():
    chain = CorefChain([
        Mention("p1", 0, 1, False),
        Mention("p1", 2, 5, False),
        Mention("p2", 0, 1, True),
    ])
    rep = representative_mention(chain, REPRESENTATIVE_LONGEST)
    assert (rep.start, rep.end) == (2, 5)


# ------------------------------------------------------------------- resolve

def test_paula_substitution():
    docs = resolve(paula_corpus())
    assert len(docs) == 1
    texts = {s.statement_id: s.text for s in docs[0].statements}
    assert texts["p1"] == "Paula got a new sweater"
    assert texts["p2"] == "Paula loves a new sweater"
    assert len(docs[0].substitutions) == 2


def test_no_chains_is_identity():
    corpus = paula_corpus()
    corpus.coref_chains = []
    docs = resolve(corpus)
    texts = [s.text for s in docs[0].statements]
    assert texts == ["Paula got a new sweater", "She loves it"]
    assert docs[0].substitutions == []


def test_chain_without_representative_leaves_text_unchanged():
    corpus = paula_corpus()
    corpus.coref_chains = [CorefChain([
        Mention("p2", 0, 1, True), Mention("p2", 2, 3, True)])]
    docs = resolve(corpus)
    texts = {s.statement_id: s.text for s in docs[0].statements}
    assert texts["p2"] == "She loves it"


def test_overlapping_offsets_stay_valid_right_to_left():
    # two mentions in one statement; the earlier span must still index the
    # original tokens after the later one grew
    docs = resolve(paula_corpus())
    subs = sorted(docs[0].substitutions, key=lambda s: s.start)
    assert [(s.start, s.end) for s in subs] == [(0, 1), (2, 3)]
    assert subs[0].replacement == "Paula"
    assert subs[1].replacement == "a new sweater"


def test_substitution_count_equals_pronominal_mentions_with_representative():
    corpus = paula_corpus()
    docs = resolve(corpus)
    expected = sum(
        sum(1 for m in chain.mentions if m.pronominal)
        for chain in corpus.coref_chains
        if any(not m.pronominal for m in chain.mentions)
    )
    assert sum(len(d.substitutions) for d in docs) == expected


def test_idempotence_when_no_pronominal_mentions_remain():
    corpus = paula_corpus()
    for chain in corpus.coref_chains:
        for m in chain.mentions:
            m.pronominal = False
    docs = resolve(corpus)
    assert all(not d.substitutions for d in docs)
    texts = [s.text for d in docs for s in d.statements]
    assert texts == ["Paula got a new sweater", "She loves it"]


def test_resolved_rows_shape():
    rows = resolved_to_objs(resolve(paula_corpus()))
    assert [r["statement_id"] for r in rows] == ["p1", "p2"]
    assert rows[1]["substitutions"][0]["replacement"] == "Paula"


def test_statements_without_source_doc_grouped_last():
    corpus = paula_corpus()
    for s in corpus.statements:
        s.source_doc = None
    docs = resolve(corpus)
    assert len(docs) == 1 and docs[0].doc_id is None


# ------------------------------------------------------------- apply_chains

def test_apply_chains_splices_tokens_and_stays_valid():
    corpus = paula_corpus()
    rewritten = apply_chains(corpus)
    assert validate(rewritten) == []
    p2 = rewritten.statement_by_id("p2")
    assert p2.text() == "Paula loves a new sweater"
    # frames stretched with the splice: ARG1 now covers the three new tokens
    arg1 = [r for r in p2.frames[0].roles if r.label == "ARG1"][0]
    assert (arg1.start, arg1.end) == (2, 5)
    arg0 = [r for r in p2.frames[0].roles if r.label == "ARG0"][0]
    assert (arg0.start, arg0.end) == (0, 1)


def test_apply_chains_is_idempotent():
    once = apply_chains(paula_corpus())
    twice = apply_chains(once)
    assert twice == once


def test_apply_chains_marks_substituted_mentions_non_pronominal():
    rewritten = apply_chains(paula_corpus())
    assert all(not m.pronominal
               for chain in rewritten.coref_chains for m in chain.mentions)


def test_apply_chains_preserves_untouched_statements():
    corpus = paula_corpus()
    rewritten = apply_chains(corpus)
    assert rewritten.statement_by_id("p1") == corpus.statement_by_id("p1")


# ------------------------------------------------------------------ property

@given(st.lists(st.booleans(), min_size=2, max_size=6))
def test_substitutions_match_pronominal_count_property(flags):
    # one chain over p1/p2 mention slots; representative exists iff any
    # mention is non-pronominal
    mentions = []
    slots = [("p1", 0, 1), ("p2", 0, 1), ("p2", 2, 3), ("p1", 2, 5), ("p1", 1, 2),
             ("p2", 1, 2)]
    for flag, slot in zip(flags, slots):
        mentions.append(Mention(slot[0], slot[1], slot[2], flag))
    corpus = paula_corpus()
    corpus.coref_chains = [CorefChain(mentions)]
    docs = resolve(corpus)
    total = sum(len(d.substitutions) for d in docs)
    if all(m.pronominal for m in mentions):
        assert total == 0
    else:
        assert total == sum(1 for m in mentions if m.pronominal)
