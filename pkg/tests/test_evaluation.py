from __future__ import annotations

import pytest

from igw.abdico import AbdicoRecord, SpanText
from igw.evaluation import (
    AIM, ATTRIBUTE, DEONTIC, MACRO, OBJECT, GoldAnnotation, GoldConstituent,
    evaluate, gold_from_obj, gold_to_obj, normalize, report_to_obj,
    score_constituent,
)
from igw.stoplist import stoplist_hash
from igw.text import lemmatize_verb


def rec(sid, attr, obj, aim_text, deontic):
    return AbdicoRecord(
        statement_id=sid,
        aim_index=0, aim_lemma=lemmatize_verb(aim_text), aim_text=aim_text,
        attribute=None if attr is None else SpanText(0, 1, attr),
        object=None if obj is None else SpanText(1, 2, obj),
        deontic=deontic, modal_lemma=None, negated=False, category="Strategy",
    )


def gold(sid, a=None, b=None, i=None, d=None, coded=True,
         implicit=()):
    constituents = {}
    for key, tokens in ((ATTRIBUTE, a), (OBJECT, b), (AIM, i), (DEONTIC, d)):
        if tokens is None and key not in implicit:
            continue
        constituents[key] = GoldConstituent(list(tokens or []),
                                            implicit=key in implicit)
    return GoldAnnotation(sid, constituents, coded=coded)


# ------------------------------------------------------------------ normalize

def test_normalize_strips_stopword_article():
    assert normalize({"The", "Committee"}, ATTRIBUTE) == {"committee"}


def test_normalize_lemmatizes_aim_tokens():
    assert normalize({"Driving"}, AIM) == {"drive"}


def test_normalize_empty_set():
    assert normalize(set(), OBJECT) == set()


def test_normalize_removes_punctuation():
    assert normalize({"board,", "(the)", "."}, OBJECT) == {"board"}


def test_normalize_keeps_modals_and_negation():
    assert normalize({"must", "not"}, DEONTIC) == {"must", "not"}


@pytest.mark.parametrize("form,lemma", [
    ("submitted", "submit"), ("submitting", "submit"), ("occurred", "occur"),
    ("reviews", "review"), ("voted", "vote"), ("approves", "approve"),
    ("approved", "approve"), ("applies", "apply"), ("goes", "go"),
    ("telling", "tell"), ("passes", "pass"), ("released", "release"),
    ("was", "be"), ("making", "make"), ("vote", "vote"),
])
def test_verb_lemmatizer_cases(form, lemma):
    assert lemmatize_verb(form) == lemma


# ------------------------------------------------------------ score_constituent

def test_score_exact_after_normalization():
    score = score_constituent(
        {"x": ["the", "committee"]},
        [gold("x", a=["committee"])], ATTRIBUTE)
    assert (score.precision, score.recall, score.f1) == (1.0, 1.0, 1.0)


def test_score_lemma_match_for_aim():
    score = score_constituent({"x": ["submit"]}, [gold("x", i=["submitted"])], AIM)
    assert score.f1 == 1.0


def test_score_empty_prediction():
    score = score_constituent({"x": []}, [gold("x", b=["board"])], OBJECT)
    assert score.recall == 0.0 and score.f1 == 0.0


def test_score_no_evaluable_instances_is_none():
    assert score_constituent({}, [gold("x", a=["committee"],
                                       implicit=(ATTRIBUTE,))], ATTRIBUTE) is None


# ------------------------------------------------- five-statement micro suite

RECORDS = [
    rec("e1", "The committee", "all releases", "approves", "must"),
    rec("e2", "Members", "reports", "submit", "shall not"),
    rec("e3", "The board", "the budget", "reviews", None),
    rec("e4", None, "proposals", "vote", "may"),
    rec("e5", "Drivers", "vehicles", "drive", "should"),
]

GOLD = [
    gold("e1", a=["Committee"], b=["releases"], i=["approve"], d=["must"]),
    gold("e2", a=["The", "members"], b=["reports", "summaries"],
         i=["submitting"], d=["shall", "not"]),
    gold("e3", a=["board", "chair"], b=["budget"], i=["review"], d=[]),
    gold("e4", a=["mentors"], b=[], i=["voted"], d=["may"]),
    gold("e5", i=["Driving"], d=["ought"],
         implicit=(ATTRIBUTE, OBJECT)),
]

# hand-computed micro averages (the oracle for this suite):
#   A: inter 3, pred 3, gold 5  -> P 1.0,  R 0.6,  F1 0.75, evaluated 4
#   B: inter 3, pred 4, gold 4  -> P 0.75, R 0.75, F1 0.75, evaluated 4
#   I: inter 5, pred 5, gold 5  -> P 1.0,  R 1.0,  F1 1.0,  evaluated 5
#   D: inter 4, pred 5, gold 5  -> P 0.8,  R 0.8,  F1 0.8,  evaluated 5
EXPECTED = {
    ATTRIBUTE: (1.0, 0.6, 0.75, 4),
    OBJECT: (0.75, 0.75, 0.75, 4),
    AIM: (1.0, 1.0, 1.0, 5),
    DEONTIC: (0.8, 0.8, 0.8, 5),
}


def test_five_statement_suite_matches_hand_computation():
    report = evaluate(RECORDS, GOLD, dataset="synthetic")
    for constituent, (p, r, f1, count) in EXPECTED.items():
        score = report.scores[constituent]
        assert abs(score.precision - p) < 1e-9, constituent
        assert abs(score.recall - r) < 1e-9, constituent
        assert abs(score.f1 - f1) < 1e-9, constituent
        assert score.evaluated == count
    assert report.evaluated_statements == 5
    assert report.skipped_statements == []
    assert report.stopword_list_hash == stoplist_hash()


def test_evaluation_invariant_to_statement_order():
    forward = report_to_obj(evaluate(RECORDS, GOLD, dataset="synthetic"))
    backward = report_to_obj(
        evaluate(list(reversed(RECORDS)), list(reversed(GOLD)), dataset="synthetic"))
    backward["skipped_statements"] = forward["skipped_statements"]
    assert forward == backward


def test_uncoded_statements_excluded():
    extra_gold = GOLD + [gold("e6", a=["nobody"], coded=False)]
    report = evaluate(RECORDS, extra_gold, dataset="synthetic")
    assert report.evaluated_statements == 5
    assert report.scores[ATTRIBUTE].evaluated == 4


def test_all_implicit_column_is_na():
    annotations = [
        gold("e1", a=["committee"], i=["approve"], implicit=(ATTRIBUTE,)),
        gold("e2", a=["members"], i=["submit"], implicit=(ATTRIBUTE,)),
    ]
    report = evaluate(RECORDS[:2], annotations, dataset="synthetic")
    assert report.scores[ATTRIBUTE] is None
    assert report.scores[AIM] is not None


def test_gold_without_record_skipped_and_reported():
    report = evaluate(RECORDS[:2], GOLD, dataset="synthetic")
    assert report.skipped_statements == ["e3", "e4", "e5"]
    assert report.evaluated_statements == 2


def test_duplicate_tokens_collapse_to_sets():
    score = score_constituent(
        {"x": ["board", "board", "board"]}, [gold("x", b=["board"])], OBJECT)
    assert score.precision == 1.0 and score.recall == 1.0


def test_macro_mode_differs_but_stays_bounded():
    report = evaluate(RECORDS, GOLD, dataset="synthetic", averaging=MACRO)
    for score in report.scores.values():
        if score is not None:
            assert 0.0 <= score.precision <= 1.0
            assert 0.0 <= score.recall <= 1.0
            assert 0.0 <= score.f1 <= 1.0
    # macro attribute recall: mean of (1, 1, 0.5, 0) = 0.625
    assert abs(report.scores[ATTRIBUTE].recall - 0.625) < 1e-9


def test_perfect_match_is_exactly_one():
    records = [rec("p1", "The committee", "reports", "submit", "must")]
    annotations = [gold("p1", a=["committee"], b=["reports"], i=["submits"],
                        d=["must"])]
    report = evaluate(records, annotations, dataset="perfect")
    for constituent in (ATTRIBUTE, OBJECT, AIM, DEONTIC):
        assert report.scores[constituent].f1 == 1.0


def test_adding_equal_statement_never_lowers_micro_scores():
    base = evaluate(RECORDS, GOLD, dataset="s")
    extra_rec = rec("e9", "The panel", "minutes", "records", "must")
    extra_gold = gold("e9", a=["panel"], b=["minutes"], i=["recorded"], d=["must"])
    grown = evaluate(RECORDS + [extra_rec], GOLD + [extra_gold], dataset="s")
    for constituent in (ATTRIBUTE, OBJECT, AIM, DEONTIC):
        assert grown.scores[constituent].precision >= base.scores[constituent].precision - 1e-12
        assert grown.scores[constituent].recall >= base.scores[constituent].recall - 1e-12


# ---------------------------------------------------------------- serialization

def test_gold_obj_round_trip():
    ann = GOLD[1]
    assert gold_from_obj(gold_to_obj(ann)) == ann


def test_gold_from_obj_rejects_unknown_constituent():
    with pytest.raises(ValueError, match="unknown constituent"):
        gold_from_obj({"statement_id": "x", "constituents": {"Z": {"tokens": []}}})


def test_report_obj_shape():
    obj = report_to_obj(evaluate(RECORDS, GOLD, dataset="synthetic"))
    assert obj["schema"] == "igw.eval@1"
    assert obj["dataset"] == "synthetic"
    assert set(obj["scores"]) == {"A", "B", "I", "D"}
    assert obj["stopword_list_hash"] == stoplist_hash()
