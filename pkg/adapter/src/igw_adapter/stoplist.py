"""Versioned English stopword list; token flags exported with its hash.

Must stay word-for-word identical to the engine's list so that stopword
flags written here mean the same thing downstream; the test suite compares
hashes across the package boundary.

The list deliberately excludes prescriptive modals (may, must, shall, ...)
and negation tokens (not, never, n't): both carry regulatory meaning and
must survive word matching.
"""

from __future__ import annotations

import hashlib

STOPLIST_VERSION = "en-v1"

_WORDS = """
a an the this that these those each every either neither any all both some
such same other another few more most own

i me my myself we us our ours ourselves you your yours yourself yourselves
he him his himself she her hers herself it its itself they them their theirs
themselves who whom whose which what

am is are was were be been being have has had having do does did doing
done

and but if or nor because as until while although though since

of at by for with about against between among into through during before
after above below to from up down in out on off over under again further
then once here there when where why how

so than too very just also only ever

s t d ll m o re ve y
"""

STOPWORDS: frozenset[str] = frozenset(_WORDS.split())


def stoplist_hash() -> str:
    """Hex digest of the canonical (sorted, newline-joined) list plus version."""
    canonical = STOPLIST_VERSION + "\n" + "\n".join(sorted(STOPWORDS))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def is_stopword(word: str) -> bool:
    return word.lower() in STOPWORDS
