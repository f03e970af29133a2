"""Tokenization and verb lemmatization shared by labeling and evaluation.

The lemmatizer is a dictionary-free suffix stripper with curated irregular
and silent-e tables. It is approximate by design: both sides of every word
match pass through the same function, so scores stay consistent even where
the true lemma is missed.
"""

from __future__ import annotations

import re

_WORD_RE = re.compile(r"[a-z0-9]+(?:'[a-z]+)?|n't")

_VOWELS = set("aeiou")

# inflected form -> lemma, for verbs the suffix rules get wrong
_IRREGULAR = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "went": "go", "gone": "go", "goes": "go",
    "said": "say", "says": "say",
    "made": "make", "making": "make",
    "took": "take", "taken": "take", "taking": "take",
    "gave": "give", "given": "give", "giving": "give",
    "got": "get", "gotten": "get", "getting": "get",
    "held": "hold", "kept": "keep", "met": "meet", "paid": "pay",
    "sent": "send", "set": "set", "put": "put", "ran": "run",
    "saw": "see", "seen": "see", "sold": "sell", "told": "tell",
    "thought": "think", "brought": "bring", "bought": "buy",
    "built": "build", "came": "come", "coming": "come",
    "chose": "choose", "chosen": "choose", "choosing": "choose",
    "dealt": "deal", "drew": "draw", "drawn": "draw",
    "drove": "drive", "driven": "drive",
    "fell": "fall", "fallen": "fall", "felt": "feel", "found": "find",
    "knew": "know", "known": "know", "led": "lead", "left": "leave",
    "lost": "lose", "losing": "lose", "meant": "mean",
    "rose": "rise", "risen": "rise", "rising": "rise",
    "sought": "seek", "spent": "spend", "stood": "stand",
    "taught": "teach", "threw": "throw", "thrown": "throw",
    "understood": "understand", "wrote": "write", "written": "write",
    "writing": "write", "won": "win", "became": "become",
    "began": "begin", "begun": "begin", "broke": "break", "broken": "break",
    "forbade": "forbid", "forbidden": "forbid",
    "spoke": "speak", "spoken": "speak",
    "upheld": "uphold", "underwent": "undergo", "withdrew": "withdraw",
    "withdrawn": "withdraw", "used": "use", "using": "use",
    "agreed": "agree", "lying": "lie", "dying": "die", "tying": "tie",
}

# stems (after suffix strip) of multi-syllable verbs that end in silent e
_SILENT_E_STEMS = {
    "approv", "remov", "requir", "receiv", "provid", "includ", "exclud",
    "resolv", "involv", "describ", "declar", "prepar", "compar", "complet",
    "delet", "creat", "updat", "evaluat", "operat", "regulat", "delegat",
    "violat", "releas", "decid", "determin", "distribut", "execut", "issu",
    "ensur", "enforc", "manag", "observ", "produc", "reduc", "serv",
    "nominat", "terminat", "participat", "communicat", "coordinat",
    "stipulat", "mandat", "allocat", "authoriz", "organiz", "recogniz",
    "advis", "supervis", "revis", "licens", "practic", "notic", "financ",
    "challeng", "arrang", "engag", "incorporat", "integrat", "designat",
}


def _vowel_groups(word: str) -> int:
    groups = 0
    in_group = False
    for ch in word:
        if ch in _VOWELS:
            if not in_group:
                groups += 1
            in_group = True
        else:
            in_group = False
    return groups


def _restore_stem(stem: str) -> str:
    """Undo consonant doubling or restore a dropped silent e."""
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-1] not in "lszf"  # tell, pass, buzz, staff keep the double
    ):
        return stem[:-1]
    if stem in _SILENT_E_STEMS:
        return stem + "e"
    if (
        len(stem) >= 3
        and _vowel_groups(stem) == 1
        and stem[-1] not in _VOWELS
        and stem[-1] not in "wxy"
        and stem[-2] in _VOWELS
    ):
        return stem + "e"
    return stem


def lemmatize_verb(word: str) -> str:
    """Reduce an English verb form to its lemma (lowercased)."""
    w = word.lower()
    if w in _IRREGULAR:
        return _IRREGULAR[w]
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith(("sses", "shes", "ches", "xes", "zes", "oes")):
        return w[:-2]
    if w.endswith("s") and len(w) > 3 and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    if w.endswith("ied") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ing") and len(w) > 5:
        return _restore_stem(w[:-3])
    if w.endswith("ed") and len(w) > 4:
        return _restore_stem(w[:-2])
    return w


def strip_punctuation(token: str) -> str:
    """Drop every character that is not alphanumeric or an internal apostrophe."""
    kept = [ch for ch in token if ch.isalnum() or ch == "'"]
    return "".join(kept).strip("'")


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens; punctuation is discarded, n't survives."""
    return _WORD_RE.findall(text.lower())
