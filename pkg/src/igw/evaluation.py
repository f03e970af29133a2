"""Word-constituent scoring of parsed records against gold annotations.

Matching is set-based over normalized tokens: lowercase, punctuation and
stopwords dropped, and aim tokens reduced to verb lemmas so tense never
splits a match. Statements the annotators left uncoded are excluded, as is
any constituent instance the gold marks implicit (filled in from outside
the text).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .abdico import AbdicoRecord
from .stoplist import STOPWORDS, stoplist_hash
from .text import lemmatize_verb, strip_punctuation

ATTRIBUTE = "A"
OBJECT = "B"
AIM = "I"
DEONTIC = "D"
CONSTITUENTS = (ATTRIBUTE, OBJECT, AIM, DEONTIC)

MICRO = "micro"
MACRO = "macro"


@dataclass
class GoldConstituent:
    tokens: list[str] = field(default_factory=list)
    implicit: bool = False


@dataclass
class GoldAnnotation:
    statement_id: str
    constituents: dict[str, GoldConstituent] = field(default_factory=dict)
    coded: bool = True


@dataclass
class ConstituentScore:
    precision: float
    recall: float
    f1: float
    evaluated: int


@dataclass
class EvalReport:
    dataset: str
    scores: dict[str, ConstituentScore | None]
    evaluated_statements: int
    skipped_statements: list[str]
    averaging: str
    stopword_list_hash: str


def normalize(tokens: Iterable[str], constituent: str) -> set[str]:
    """Token set used for matching one constituent instance."""
    out: set[str] = set()
    for tok in tokens:
        word = strip_punctuation(tok.lower())
        if not word:
            continue
        if constituent == AIM:
            word = lemmatize_verb(word)
        if word in STOPWORDS:
            continue
        out.add(word)
    return out


def predicted_tokens(record: AbdicoRecord) -> dict[str, list[str]]:
    """Raw (un-normalized) token lists per constituent for one record."""
    return {
        ATTRIBUTE: record.attribute.text.split() if record.attribute else [],
        OBJECT: record.object.text.split() if record.object else [],
        AIM: [record.aim_text],
        DEONTIC: record.deontic.split() if record.deontic else [],
    }


def _f1(p: float, r: float) -> float:
    return 2.0 * p * r / (p + r) if p + r > 0 else 0.0


def _ratio(num: int, den: int) -> float:
    return num / den if den else 0.0


def score_constituent(predicted: Mapping[str, Iterable[str]],
                      gold: Sequence[GoldAnnotation],
                      constituent: str,
                      averaging: str = MICRO) -> ConstituentScore | None:
    """Score one constituent over already-filtered gold annotations.

    `predicted` maps statement id to raw predicted tokens. Gold entries
    that are uncoded or implicit for this constituent are skipped here as
    well, so callers may pass unfiltered annotations. Returns None when no
    instance is evaluable.
    """
    inter_sum = pred_sum = gold_sum = 0
    per_statement: list[tuple[float, float]] = []
    evaluated = 0
    for ann in gold:
        if not ann.coded:
            continue
        gc = ann.constituents.get(constituent)
        if gc is None or gc.implicit:
            continue
        evaluated += 1
        gold_set = normalize(gc.tokens, constituent)
        pred_set = normalize(predicted.get(ann.statement_id, ()), constituent)
        inter = len(gold_set & pred_set)
        inter_sum += inter
        pred_sum += len(pred_set)
        gold_sum += len(gold_set)
        sp = _ratio(inter, len(pred_set)) if pred_set else (1.0 if not gold_set else 0.0)
        sr = _ratio(inter, len(gold_set)) if gold_set else (1.0 if not pred_set else 0.0)
        per_statement.append((sp, sr))
    if evaluated == 0:
        return None
    if averaging == MICRO:
        p = _ratio(inter_sum, pred_sum)
        r = _ratio(inter_sum, gold_sum)
    elif averaging == MACRO:
        p = sum(sp for sp, _ in per_statement) / evaluated
        r = sum(sr for _, sr in per_statement) / evaluated
    else:
        raise ValueError(f"unknown averaging mode: {averaging!r}")
    return ConstituentScore(p, r, _f1(p, r), evaluated)


def evaluate(records: Iterable[AbdicoRecord],
             gold: Sequence[GoldAnnotation],
             dataset: str,
             averaging: str = MICRO) -> EvalReport:
    """Score every constituent; gold ids without a record are skipped and
    reported rather than silently treated as empty predictions."""
    by_id = {r.statement_id: r for r in records}
    usable: list[GoldAnnotation] = []
    skipped: list[str] = []
    for ann in gold:
        if not ann.coded:
            continue
        if ann.statement_id not in by_id:
            skipped.append(ann.statement_id)
            continue
        usable.append(ann)
    predicted = {ann.statement_id: predicted_tokens(by_id[ann.statement_id])
                 for ann in usable}
    scores: dict[str, ConstituentScore | None] = {}
    for constituent in CONSTITUENTS:
        per_constituent = {sid: toks[constituent] for sid, toks in predicted.items()}
        scores[constituent] = score_constituent(
            per_constituent, usable, constituent, averaging)
    return EvalReport(
        dataset=dataset,
        scores=scores,
        evaluated_statements=len(usable),
        skipped_statements=sorted(skipped),
        averaging=averaging,
        stopword_list_hash=stoplist_hash(),
    )


# ---------------------------------------------------------------------------
# serialization

def gold_from_obj(obj: dict) -> GoldAnnotation:
    constituents = {}
    for key, val in obj.get("constituents", {}).items():
        if key not in CONSTITUENTS:
            raise ValueError(f"unknown constituent {key!r}")
        constituents[key] = GoldConstituent(
            tokens=[str(t) for t in val.get("tokens", [])],
            implicit=bool(val.get("implicit", False)),
        )
    return GoldAnnotation(
        statement_id=str(obj["statement_id"]),
        constituents=constituents,
        coded=bool(obj.get("coded", True)),
    )


def gold_to_obj(ann: GoldAnnotation) -> dict:
    return {
        "statement_id": ann.statement_id,
        "coded": ann.coded,
        "constituents": {
            key: {"tokens": gc.tokens, "implicit": gc.implicit}
            for key, gc in sorted(ann.constituents.items())
        },
    }


def report_to_obj(report: EvalReport) -> dict:
    return {
        "schema": "igw.eval@1",
        "dataset": report.dataset,
        "averaging": report.averaging,
        "evaluated_statements": report.evaluated_statements,
        "skipped_statements": report.skipped_statements,
        "stopword_list_hash": report.stopword_list_hash,
        "scores": {
            key: None if sc is None else {
                "precision": sc.precision, "recall": sc.recall, "f1": sc.f1,
                "evaluated": sc.evaluated,
            }
            for key, sc in report.scores.items()
        },
    }
