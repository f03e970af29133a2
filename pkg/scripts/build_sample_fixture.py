#!/usr/bin/env python3
"""Regenerate the bundled sample corpus fixture.

Every annotation and every gold record below was written by hand; the gold
constituents come from applying the mapping rules manually, never from
running the parser. Re-run after changing the interchange schema:

    python scripts/build_sample_fixture.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from igw.interchange import (
    AnnotatedStatement, CorefChain, Corpus, Mention, PolicyDoc, Role,
    SrlFrame, Token, canonical_json, save_corpus,
)
from igw.stoplist import STOPWORDS

FIXTURE_DIR = Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def T(index, text, lemma, pos, head, deprel):
    return Token(index, text, lemma, pos, head, deprel,
                 is_stopword=text.lower() in STOPWORDS)


def F(predicate, *roles):
    return SrlFrame(predicate, [Role(lbl, st, en) for lbl, st, en in roles])


def S(sid, source, tokens, *frames):
    toks = [T(i, *spec) for i, spec in enumerate(tokens)]
    return AnnotatedStatement(sid, toks, list(frames), source)


STATEMENTS = [
    # --- plain root-verb statements across the deontic range -------------
    S("s01", "d01",
      [("Members", "member", "noun", 2, "nsubj"),
       ("must", "must", "other", 2, "aux"),
       ("submit", "submit", "verb", -1, "root"),
       ("reports", "report", "noun", 2, "obj"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG0", 0, 1), ("ARGM-MOD", 1, 2), ("ARG1", 3, 4))),
    S("s02", "d01",
      [("The", "the", "other", 1, "det"),
       ("committee", "committee", "noun", 3, "nsubj"),
       ("must", "must", "other", 3, "aux"),
       ("approve", "approve", "verb", -1, "root"),
       ("releases", "release", "noun", 3, "obj"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 2), ("ARGM-MOD", 2, 3), ("ARG1", 4, 5))),
    S("s03", "d01",
      [("The", "the", "other", 1, "det"),
       ("board", "board", "noun", 3, "nsubj"),
       ("may", "may", "other", 3, "aux"),
       ("delegate", "delegate", "verb", -1, "root"),
       ("review", "review", "noun", 3, "obj"),
       ("to", "to", "other", 6, "case"),
       ("mentors", "mentor", "noun", 3, "obl"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 2), ("ARGM-MOD", 2, 3), ("ARG1", 4, 5), ("ARG2", 5, 7))),
    # --- negation: separate ARGM-NEG, folded into the modal span, "never"
    S("s04", "d01",
      [("Members", "member", "noun", 3, "nsubj"),
       ("must", "must", "other", 3, "aux"),
       ("not", "not", "other", 3, "advmod"),
       ("submit", "submit", "verb", -1, "root"),
       ("a", "a", "other", 5, "det"),
       ("proposal", "proposal", "noun", 3, "obj"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 1), ("ARGM-MOD", 1, 2), ("ARGM-NEG", 2, 3), ("ARG1", 4, 6))),
    S("s05", "d01",
      [("Contributors", "contributor", "noun", 3, "nsubj"),
       ("may", "may", "other", 3, "aux"),
       ("not", "not", "other", 3, "advmod"),
       ("merge", "merge", "verb", -1, "root"),
       ("changes", "change", "noun", 3, "obj"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 1), ("ARGM-MOD", 1, 3), ("ARG1", 4, 5))),
    S("s06", "d02",
      [("The", "the", "other", 1, "det"),
       ("committee", "committee", "noun", 3, "nsubj"),
       ("should", "should", "other", 3, "aux"),
       ("review", "review", "verb", -1, "root"),
       ("proposals", "proposal", "noun", 3, "obj"),
       ("quarterly", "quarterly", "other", 3, "advmod"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 2), ("ARGM-MOD", 2, 3), ("ARG1", 4, 5), ("ARGM-TMP", 5, 6))),
    S("s07", "d02",
      [("Projects", "project", "noun", 2, "nsubj"),
       ("can", "can", "other", 2, "aux"),
       ("request", "request", "verb", -1, "root"),
       ("additional", "additional", "other", 4, "amod"),
       ("mentors", "mentor", "noun", 2, "obj"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG0", 0, 1), ("ARGM-MOD", 1, 2), ("ARG1", 3, 5))),
    S("s08", "d02",
      [("The", "the", "other", 1, "det"),
       ("secretary", "secretary", "noun", 2, "nsubj"),
       ("records", "record", "verb", -1, "root"),
       ("decisions", "decision", "noun", 2, "obj"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG0", 0, 2), ("ARG1", 3, 4))),
    S("s09", "d02",
      [("The", "the", "other", 1, "det"),
       ("board", "board", "noun", 4, "nsubj"),
       ("shall", "shall", "other", 4, "aux"),
       ("never", "never", "other", 4, "advmod"),
       ("waive", "waive", "verb", -1, "root"),
       ("fees", "fee", "noun", 4, "obj"),
       (".", ".", "other", 4, "punct")],
      F(4, ("ARG0", 0, 2), ("ARGM-MOD", 2, 3), ("ARGM-NEG", 3, 4), ("ARG1", 5, 6))),
    S("s10", "d02",
      [("The", "the", "other", 1, "det"),
       ("committee", "committee", "noun", 2, "nsubj"),
       ("reviews", "review", "verb", -1, "root"),
       ("incoming", "incoming", "other", 4, "amod"),
       ("proposals", "proposal", "noun", 2, "obj"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG0", 0, 2), ("ARG1", 3, 5))),
    S("s11", "d03",
      [("It", "it", "other", 2, "nsubj"),
       ("must", "must", "other", 2, "aux"),
       ("publish", "publish", "verb", -1, "root"),
       ("decisions", "decision", "noun", 2, "obj"),
       ("promptly", "promptly", "other", 2, "advmod"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG0", 0, 1), ("ARGM-MOD", 1, 2), ("ARG1", 3, 4), ("ARGM-MNR", 4, 5))),
    # --- unaccusatives: sole argument annotated ARG1 ---------------------
    S("s12", "d03",
      [("The", "the", "other", 1, "det"),
       ("meeting", "meeting", "noun", 2, "nsubj"),
       ("occurred", "occur", "verb", -1, "root"),
       ("monthly", "monthly", "other", 2, "advmod"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG1", 0, 2), ("ARGM-TMP", 3, 4))),
    S("s13", "d03",
      [("The", "the", "other", 1, "det"),
       ("grant", "grant", "noun", 2, "nsubj"),
       ("defaults", "default", "verb", -1, "root"),
       ("to", "to", "other", 5, "case"),
       ("the", "the", "other", 5, "det"),
       ("foundation", "foundation", "noun", 2, "obl"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG1", 0, 2), ("ARG2", 3, 6))),
    # --- imperatives: no agent anywhere ----------------------------------
    S("s14", "d03",
      [("Submit", "submit", "verb", -1, "root"),
       ("reports", "report", "noun", 0, "obj"),
       ("monthly", "monthly", "other", 0, "advmod"),
       (".", ".", "other", 0, "punct")],
      F(0, ("ARG1", 1, 2), ("ARGM-TMP", 2, 3))),
    S("s15", "d03",
      [("Update", "update", "verb", -1, "root"),
       ("the", "the", "other", 2, "det"),
       ("roadmap", "roadmap", "noun", 0, "obj"),
       ("before", "before", "other", 5, "case"),
       ("each", "each", "other", 5, "det"),
       ("release", "release", "noun", 0, "obl"),
       (".", ".", "other", 0, "punct")],
      F(0, ("ARG1", 1, 3), ("ARGM-TMP", 3, 6))),
    # --- several core arguments ------------------------------------------
    S("s16", "d04",
      [("The", "the", "other", 1, "det"),
       ("committee", "committee", "noun", 3, "nsubj"),
       ("must", "must", "other", 3, "aux"),
       ("send", "send", "verb", -1, "root"),
       ("the", "the", "other", 5, "det"),
       ("report", "report", "noun", 3, "obj"),
       ("to", "to", "other", 8, "case"),
       ("the", "the", "other", 8, "det"),
       ("board", "board", "noun", 3, "obl"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 2), ("ARGM-MOD", 2, 3), ("ARG1", 4, 6), ("ARG2", 6, 9))),
    S("s17", "d04",
      [("Mentors", "mentor", "noun", 2, "nsubj"),
       ("may", "may", "other", 2, "aux"),
       ("assign", "assign", "verb", -1, "root"),
       ("newcomers", "newcomer", "noun", 2, "iobj"),
       ("simple", "simple", "other", 5, "amod"),
       ("tasks", "task", "noun", 2, "obj"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG0", 0, 1), ("ARGM-MOD", 1, 2), ("ARG2", 3, 4), ("ARG1", 4, 6))),
    # --- passive subject: not an agent ------------------------------------
    S("s18", "d04",
      [("Releases", "release", "noun", 2, "nsubj:pass"),
       ("are", "be", "other", 2, "aux"),
       ("approved", "approve", "verb", -1, "root"),
       ("quarterly", "quarterly", "other", 2, "advmod"),
       (".", ".", "other", 2, "punct")],
      F(2, ("ARG1", 0, 1), ("ARGM-TMP", 3, 4))),
    # --- non-verb root: fall back to the most extensive frame -------------
    S("s19", "d04",
      [("Policy", "policy", "noun", -1, "root"),
       ("that", "that", "other", 3, "mark"),
       ("members", "member", "noun", 3, "nsubj"),
       ("follow", "follow", "verb", 0, "acl"),
       ("when", "when", "other", 6, "mark"),
       ("mentors", "mentor", "noun", 6, "nsubj"),
       ("vote", "vote", "verb", 3, "advcl"),
       (".", ".", "other", 0, "punct")],
      F(3, ("ARG0", 2, 3), ("ARG1", 0, 1)),
      F(6, ("ARG0", 5, 6))),
    # --- root is a verb but carries no frame -------------------------------
    S("s20", "d04",
      [("This", "this", "other", 1, "det"),
       ("policy", "policy", "noun", 2, "nsubj"),
       ("applies", "apply", "verb", -1, "root"),
       ("to", "to", "other", 4, "case"),
       ("reports", "report", "noun", 2, "obl"),
       ("submitted", "submit", "verb", 4, "acl"),
       ("by", "by", "other", 7, "case"),
       ("projects", "project", "noun", 5, "obl"),
       (".", ".", "other", 2, "punct")],
      F(5, ("ARG0", 6, 8), ("ARG1", 4, 5))),
    # --- non-verb root, extensiveness decided by token coverage -----------
    S("s21", "d05",
      [("Sections", "section", "noun", -1, "root"),
       ("describing", "describe", "verb", 0, "acl"),
       ("vote", "vote", "noun", 3, "compound"),
       ("procedures", "procedure", "noun", 1, "obj"),
       ("and", "and", "other", 5, "cc"),
       ("rules", "rule", "noun", 3, "conj"),
       ("adopted", "adopt", "verb", 5, "acl"),
       ("thereafter", "thereafter", "other", 6, "advmod"),
       (".", ".", "other", 0, "punct")],
      F(1, ("ARG0", 0, 1), ("ARG1", 2, 6)),
      F(6, ("ARG1", 5, 6), ("ARGM-TMP", 7, 8))),
    S("s22", "d05",
      [("Release", "release", "noun", 1, "compound"),
       ("managers", "manager", "noun", 3, "nsubj"),
       ("shall", "shall", "other", 3, "aux"),
       ("tag", "tag", "verb", -1, "root"),
       ("versions", "version", "noun", 3, "obj"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 2), ("ARGM-MOD", 2, 3), ("ARG1", 4, 5))),
    S("s23", "d05",
      [("The", "the", "other", 1, "det"),
       ("chair", "chair", "noun", 3, "nsubj"),
       ("could", "could", "other", 3, "aux"),
       ("extend", "extend", "verb", -1, "root"),
       ("deadlines", "deadline", "noun", 3, "obj"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 2), ("ARGM-MOD", 2, 3), ("ARG1", 4, 5))),
    S("s24", "d05",
      [("Maintainers", "maintainer", "noun", 3, "nsubj"),
       ("ought", "ought", "other", 3, "aux"),
       ("to", "to", "other", 3, "mark"),
       ("document", "document", "verb", -1, "root"),
       ("changes", "change", "noun", 3, "obj"),
       (".", ".", "other", 3, "punct")],
      F(3, ("ARG0", 0, 1), ("ARGM-MOD", 1, 2), ("ARG1", 4, 5))),
    S("s25", "d05",
      [("The", "the", "other", 1, "det"),
       ("project", "project", "noun", 4, "nsubj"),
       ("does", "do", "other", 4, "aux"),
       ("not", "not", "other", 4, "advmod"),
       ("archive", "archive", "verb", -1, "root"),
       ("old", "old", "other", 6, "amod"),
       ("threads", "thread", "noun", 4, "obj"),
       (".", ".", "other", 4, "punct")],
      F(4, ("ARG0", 0, 2), ("ARGM-NEG", 3, 4), ("ARG1", 5, 7))),
]

# Gold ABDICO records, derived by hand from the mapping rules.
# Shape matches records.jsonl.
GOLD = [
    {"statement_id": "s01", "aim": {"index": 2, "lemma": "submit", "text": "submit"},
     "attribute": {"start": 0, "end": 1, "text": "Members"},
     "object": {"start": 3, "end": 4, "text": "reports"},
     "deontic": "must", "modal_lemma": "must", "negated": False,
     "category": "Requirement", "deontic_absent": False},
    {"statement_id": "s02", "aim": {"index": 3, "lemma": "approve", "text": "approve"},
     "attribute": {"start": 0, "end": 2, "text": "The committee"},
     "object": {"start": 4, "end": 5, "text": "releases"},
     "deontic": "must", "modal_lemma": "must", "negated": False,
     "category": "Requirement", "deontic_absent": False},
    {"statement_id": "s03", "aim": {"index": 3, "lemma": "delegate", "text": "delegate"},
     "attribute": {"start": 0, "end": 2, "text": "The board"},
     "object": {"start": 4, "end": 5, "text": "review"},
     "deontic": "may", "modal_lemma": "may", "negated": False,
     "category": "Strategy", "deontic_absent": False},
    {"statement_id": "s04", "aim": {"index": 3, "lemma": "submit", "text": "submit"},
     "attribute": {"start": 0, "end": 1, "text": "Members"},
     "object": {"start": 4, "end": 6, "text": "a proposal"},
     "deontic": "must not", "modal_lemma": "must", "negated": True,
     "category": "Restriction", "deontic_absent": False},
    {"statement_id": "s05", "aim": {"index": 3, "lemma": "merge", "text": "merge"},
     "attribute": {"start": 0, "end": 1, "text": "Contributors"},
     "object": {"start": 4, "end": 5, "text": "changes"},
     "deontic": "may not", "modal_lemma": "may", "negated": True,
     "category": "Restriction", "deontic_absent": False},
    {"statement_id": "s06", "aim": {"index": 3, "lemma": "review", "text": "review"},
     "attribute": {"start": 0, "end": 2, "text": "The committee"},
     "object": {"start": 4, "end": 5, "text": "proposals"},
     "deontic": "should", "modal_lemma": "should", "negated": False,
     "category": "Norm", "deontic_absent": False},
    {"statement_id": "s07", "aim": {"index": 2, "lemma": "request", "text": "request"},
     "attribute": {"start": 0, "end": 1, "text": "Projects"},
     "object": {"start": 3, "end": 5, "text": "additional mentors"},
     "deontic": "can", "modal_lemma": "can", "negated": False,
     "category": "Strategy", "deontic_absent": False},
    {"statement_id": "s08", "aim": {"index": 2, "lemma": "record", "text": "records"},
     "attribute": {"start": 0, "end": 2, "text": "The secretary"},
     "object": {"start": 3, "end": 4, "text": "decisions"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s09", "aim": {"index": 4, "lemma": "waive", "text": "waive"},
     "attribute": {"start": 0, "end": 2, "text": "The board"},
     "object": {"start": 5, "end": 6, "text": "fees"},
     "deontic": "shall never", "modal_lemma": "shall", "negated": True,
     "category": "Restriction", "deontic_absent": False},
    {"statement_id": "s10", "aim": {"index": 2, "lemma": "review", "text": "reviews"},
     "attribute": {"start": 0, "end": 2, "text": "The committee"},
     "object": {"start": 3, "end": 5, "text": "incoming proposals"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s11", "aim": {"index": 2, "lemma": "publish", "text": "publish"},
     "attribute": {"start": 0, "end": 1, "text": "It"},
     "object": {"start": 3, "end": 4, "text": "decisions"},
     "deontic": "must", "modal_lemma": "must", "negated": False,
     "category": "Requirement", "deontic_absent": False},
    {"statement_id": "s12", "aim": {"index": 2, "lemma": "occur", "text": "occurred"},
     "attribute": {"start": 0, "end": 2, "text": "The meeting"},
     "object": None,
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s13", "aim": {"index": 2, "lemma": "default", "text": "defaults"},
     "attribute": {"start": 0, "end": 2, "text": "The grant"},
     "object": {"start": 3, "end": 6, "text": "to the foundation"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s14", "aim": {"index": 0, "lemma": "submit", "text": "Submit"},
     "attribute": None,
     "object": {"start": 1, "end": 2, "text": "reports"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s15", "aim": {"index": 0, "lemma": "update", "text": "Update"},
     "attribute": None,
     "object": {"start": 1, "end": 3, "text": "the roadmap"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s16", "aim": {"index": 3, "lemma": "send", "text": "send"},
     "attribute": {"start": 0, "end": 2, "text": "The committee"},
     "object": {"start": 4, "end": 6, "text": "the report"},
     "deontic": "must", "modal_lemma": "must", "negated": False,
     "category": "Requirement", "deontic_absent": False},
    {"statement_id": "s17", "aim": {"index": 2, "lemma": "assign", "text": "assign"},
     "attribute": {"start": 0, "end": 1, "text": "Mentors"},
     "object": {"start": 4, "end": 6, "text": "simple tasks"},
     "deontic": "may", "modal_lemma": "may", "negated": False,
     "category": "Strategy", "deontic_absent": False},
    {"statement_id": "s18", "aim": {"index": 2, "lemma": "approve", "text": "approved"},
     "attribute": None,
     "object": {"start": 0, "end": 1, "text": "Releases"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s19", "aim": {"index": 3, "lemma": "follow", "text": "follow"},
     "attribute": {"start": 2, "end": 3, "text": "members"},
     "object": {"start": 0, "end": 1, "text": "Policy"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s20", "aim": {"index": 5, "lemma": "submit", "text": "submitted"},
     "attribute": {"start": 6, "end": 8, "text": "by projects"},
     "object": {"start": 4, "end": 5, "text": "reports"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s21", "aim": {"index": 1, "lemma": "describe", "text": "describing"},
     "attribute": {"start": 0, "end": 1, "text": "Sections"},
     "object": {"start": 2, "end": 6, "text": "vote procedures and rules"},
     "deontic": None, "modal_lemma": None, "negated": False,
     "category": "Strategy", "deontic_absent": True},
    {"statement_id": "s22", "aim": {"index": 3, "lemma": "tag", "text": "tag"},
     "attribute": {"start": 0, "end": 2, "text": "Release managers"},
     "object": {"start": 4, "end": 5, "text": "versions"},
     "deontic": "shall", "modal_lemma": "shall", "negated": False,
     "category": "Requirement", "deontic_absent": False},
    {"statement_id": "s23", "aim": {"index": 3, "lemma": "extend", "text": "extend"},
     "attribute": {"start": 0, "end": 2, "text": "The chair"},
     "object": {"start": 4, "end": 5, "text": "deadlines"},
     "deontic": "could", "modal_lemma": "could", "negated": False,
     "category": "Strategy", "deontic_absent": False},
    {"statement_id": "s24", "aim": {"index": 3, "lemma": "document", "text": "document"},
     "attribute": {"start": 0, "end": 1, "text": "Maintainers"},
     "object": {"start": 4, "end": 5, "text": "changes"},
     "deontic": "ought", "modal_lemma": "ought", "negated": False,
     "category": "Norm", "deontic_absent": False},
    {"statement_id": "s25", "aim": {"index": 4, "lemma": "archive", "text": "archive"},
     "attribute": {"start": 0, "end": 2, "text": "The project"},
     "object": {"start": 5, "end": 7, "text": "old threads"},
     "deontic": "not", "modal_lemma": None, "negated": True,
     "category": "Restriction", "deontic_absent": False},
]

DOC_SPECS = [
    ("d01", "Membership Rules", "apiary"),
    ("d02", "Review Policy", "apiary"),
    ("d03", "Committee Procedures", "apiary"),
    ("d04", "Release Policy", "orchard"),
    ("d05", "Roles and Duties", "orchard"),
    ("d06", "Archived Charter", "orchard"),
]

EMBEDDINGS = {
    "d01": [1, 0, 0, 0, 0, 0, 0, 0],
    "d02": [0, 1, 0, 0, 0, 0, 0, 0],
    "d03": [1, 1, 0, 0, 0, 0, 0, 0],
    "d04": [1, 2, 2, 0, 0, 0, 0, 0],
    "d05": [2, 1, 2, 0, 0, 0, 0, 0],
    "d06": [0, 0, 0, 1, 0, 0, 0, 0],
}

CHAINS = [
    CorefChain([Mention("s10", 0, 2, False), Mention("s11", 0, 1, True)]),
    CorefChain([Mention("s03", 0, 2, False), Mention("s09", 0, 2, False)]),
]


def build_corpus() -> Corpus:
    docs = []
    for doc_id, title, community in DOC_SPECS:
        text = " ".join(s.text() for s in STATEMENTS if s.source_doc == doc_id)
        docs.append(PolicyDoc(
            id=doc_id,
            text=text or f"{title} (no statements retained)",
            metadata={"title": title, "community": community},
            embedding=[float(x) for x in EMBEDDINGS[doc_id]],
        ))
    return Corpus(
        name="sample",
        docs=docs,
        statements=STATEMENTS,
        coref_chains=CHAINS,
        embedding_dim=8,
    )


def main() -> None:
    corpus = build_corpus()
    out = FIXTURE_DIR / "sample_corpus"
    out.mkdir(parents=True, exist_ok=True)
    save_corpus(corpus, out)
    gold_path = FIXTURE_DIR / "gold_records.jsonl"
    with gold_path.open("w", encoding="utf-8") as fh:
        for rec in GOLD:
            fh.write(canonical_json(rec) + "\n")
    print(f"wrote {out} ({len(STATEMENTS)} statements) and {gold_path}")


if __name__ == "__main__":
    main()
