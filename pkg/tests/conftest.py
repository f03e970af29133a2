from __future__ import annotations

import json
from pathlib import Path

import pytest

from igw.interchange import AnnotatedStatement, Role, SrlFrame, Token
from igw.stoplist import STOPWORDS

FIXTURES = Path(__file__).parent / "fixtures"
SAMPLE_CORPUS_DIR = FIXTURES / "sample_corpus"
GOLD_RECORDS_PATH = FIXTURES / "gold_records.jsonl"


def tok(index, text, lemma, pos, head, deprel):
    return Token(index, text, lemma, pos, head, deprel,
                 is_stopword=text.lower() in STOPWORDS)


def stmt(sid, token_specs, *frames, source_doc=None):
    """Build a statement from (text, lemma, pos, head, deprel) tuples."""
    tokens = [tok(i, *spec) for i, spec in enumerate(token_specs)]
    return AnnotatedStatement(sid, tokens, list(frames), source_doc)


def frame(predicate, *roles):
    return SrlFrame(predicate, [Role(lbl, st, en) for lbl, st, en in roles])


@pytest.fixture(scope="session")
def sample_corpus():
    from igw.interchange import load_corpus
    return load_corpus(SAMPLE_CORPUS_DIR)


@pytest.fixture(scope="session")
def gold_records():
    with GOLD_RECORDS_PATH.open(encoding="utf-8") as fh:
        return [json.loads(line) for line in fh]
