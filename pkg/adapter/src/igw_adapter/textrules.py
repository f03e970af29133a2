"""Deterministic lexical rules backing the builtin annotation pipeline.

These stand in for pretrained taggers in air-gapped runs: fixed word lists
plus suffix heuristics, no learned weights, bit-identical output for
identical input.
"""

from __future__ import annotations

import re

SENTENCE_RE = re.compile(r"(?<=[.!?])\s+")
TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z]+)?|n't|[^\sA-Za-z0-9]")

MODALS = frozenset({
    "may", "can", "might", "could", "must", "shall", "should", "will",
    "would", "ought",
})
NEGATIONS = frozenset({"not", "never", "n't", "cannot"})
AUXILIARIES = frozenset({
    "is", "are", "was", "were", "be", "been", "being", "am",
    "do", "does", "did", "have", "has", "had",
})
DETERMINERS = frozenset({
    "a", "an", "the", "this", "that", "these", "those", "each", "every",
    "all", "any", "some", "no", "both", "either", "neither", "its", "their",
    "his", "her", "our", "your", "my", "such", "another", "other",
})
PREPOSITIONS = frozenset({
    "of", "to", "in", "on", "at", "by", "for", "with", "from", "into",
    "onto", "over", "under", "before", "after", "during", "between",
    "among", "through", "against", "within", "without", "about", "toward",
    "towards", "per", "via", "upon", "as", "until", "unless", "if", "when",
    "while", "whether",
})
CONJUNCTIONS = frozenset({"and", "or", "but", "nor", "so", "yet"})
PRONOUNS = frozenset({
    "it", "they", "he", "she", "we", "you", "i", "them", "him", "us",
    "who", "whom", "which", "itself", "themselves", "himself", "herself",
})
PERSONAL_PRONOUNS = frozenset({"he", "she", "him", "himself", "herself"})
TEMPORAL_ADVERBS = frozenset({
    "monthly", "quarterly", "yearly", "weekly", "daily", "annually",
    "thereafter", "immediately", "promptly",
})

# verbs common in policy text; inflections resolve through lemma stripping
KNOWN_VERBS = frozenset({
    "submit", "approve", "review", "vote", "comply", "ensure", "provide",
    "require", "maintain", "report", "notify", "grant", "revoke", "remove",
    "merge", "release", "publish", "assign", "delegate", "record",
    "archive", "waive", "extend", "send", "tag", "document", "request",
    "appoint", "adopt", "follow", "apply", "occur", "default", "update",
    "meet", "hold", "issue", "enforce", "monitor", "conduct", "perform",
    "establish", "define", "govern", "regulate", "prohibit", "forbid",
    "restrict", "permit", "allow", "oversee", "coordinate", "participate",
    "contribute", "manage", "operate", "distribute", "collect", "process",
    "store", "share", "disclose", "protect", "verify", "validate",
    "inspect", "audit", "elect", "nominate", "decide", "resolve", "love",
    "get", "give", "take", "make", "keep", "use", "pay", "sign", "post",
    "ban", "mute", "warn", "flag", "lock", "pin", "host", "join", "leave",
    "own", "serve", "act", "abide", "refrain",
})

_VOWELS = set("aeiou")

# irregular forms the suffix rules cannot reach
_IRREGULAR_VERBS = {
    "got": "get", "gotten": "get", "gave": "give", "given": "give",
    "took": "take", "taken": "take", "made": "make", "held": "hold",
    "kept": "keep", "met": "meet", "paid": "pay", "sent": "send",
    "ran": "run", "saw": "see", "seen": "see", "sold": "sell",
    "told": "tell", "left": "leave", "went": "go", "gone": "go",
    "said": "say", "did": "do", "done": "do", "was": "be", "were": "be",
    "been": "be", "chose": "choose", "chosen": "choose",
}


def split_sentences(text: str) -> list[str]:
    parts = [p.strip() for p in SENTENCE_RE.split(text.strip())]
    return [p for p in parts if p]


def tokenize(sentence: str) -> list[str]:
    return TOKEN_RE.findall(sentence)


def is_word(token: str) -> bool:
    return bool(re.match(r"[A-Za-z0-9]", token)) or token == "n't"


def _strip_third_person(word: str) -> str:
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith(("sses", "shes", "ches", "xes", "zes", "oes")):
        return word[:-2]
    if word.endswith("s") and len(word) > 3 and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


def _restore(stem: str) -> str:
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS \
            and stem[-1] not in "lszf":
        return stem[:-1]
    groups = 0
    in_group = False
    for ch in stem:
        if ch in _VOWELS:
            groups += 0 if in_group else 1
            in_group = True
        else:
            in_group = False
    if groups == 1 and len(stem) >= 3 and stem[-1] not in _VOWELS \
            and stem[-1] not in "wxy" and stem[-2] in _VOWELS:
        return stem + "e"
    return stem


def verb_lemma(word: str) -> str:
    w = word.lower()
    if w in _IRREGULAR_VERBS:
        return _IRREGULAR_VERBS[w]
    if w.endswith("ing") and len(w) > 5:
        return _restore(w[:-3])
    if w.endswith("ied") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ed") and len(w) > 4:
        return _restore(w[:-2])
    return _strip_third_person(w)


def noun_lemma(word: str) -> str:
    return _strip_third_person(word.lower())


def looks_like_verb(token: str) -> bool:
    """Lexicon plus morphology; context handled by the tagger."""
    w = token.lower()
    if w in KNOWN_VERBS or verb_lemma(w) in KNOWN_VERBS:
        return True
    return False


def has_participle_shape(token: str) -> bool:
    w = token.lower()
    return (w.endswith("ed") and len(w) > 4) or (w.endswith("ing") and len(w) > 5)
