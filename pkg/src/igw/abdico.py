"""Rule engine mapping semantic roles plus dependency structure onto
institutional constituents (attribute, object, aim, deontic), and the
deontic-strength taxonomy on top of them.

Aim selection anchors everything: the dependency root when it is a framed
verb, otherwise the predicate whose frame is most extensive. The remaining
constituents read off the aim's frame.
"""

from __future__ import annotations

from dataclasses import dataclass

from .interchange import AnnotatedStatement, POS_VERB, Role, SrlFrame

STRATEGY = "Strategy"
NORM = "Norm"
REQUIREMENT = "Requirement"
RESTRICTION = "Restriction"
CATEGORIES = (STRATEGY, NORM, REQUIREMENT, RESTRICTION)

REQUIREMENT_MODALS = frozenset({"must", "shall"})
NORM_MODALS = frozenset({"should", "ought"})
NEGATION_TOKENS = frozenset({"not", "n't", "never"})

ACTIVE_SUBJECT_RELS = frozenset({"nsubj"})  # passive subjects do not count

CORE_OBJECT_ORDER = ("ARG1", "ARG2", "ARG3", "ARG4", "ARG5")


class NoAimError(Exception):
    """Statement carries no SRL frame, so no aim can be anchored."""

    def __init__(self, statement_id: str):
        self.statement_id = statement_id
        super().__init__(f"statement {statement_id!r} has no SRL frames")


@dataclass(frozen=True)
class SpanText:
    start: int
    end: int
    text: str


@dataclass(frozen=True)
class AbdicoRecord:
    statement_id: str
    aim_index: int
    aim_lemma: str
    aim_text: str
    attribute: SpanText | None
    object: SpanText | None
    deontic: str | None
    modal_lemma: str | None
    negated: bool
    category: str

    @property
    def deontic_absent(self) -> bool:
        return self.deontic is None


def record_to_obj(r: AbdicoRecord) -> dict:
    def span_obj(st: SpanText | None):
        return None if st is None else {"start": st.start, "end": st.end, "text": st.text}

    return {
        "statement_id": r.statement_id,
        "aim": {"index": r.aim_index, "lemma": r.aim_lemma, "text": r.aim_text},
        "attribute": span_obj(r.attribute),
        "object": span_obj(r.object),
        "deontic": r.deontic,
        "modal_lemma": r.modal_lemma,
        "negated": r.negated,
        "category": r.category,
        "deontic_absent": r.deontic_absent,
    }


def record_from_obj(obj: dict) -> AbdicoRecord:
    def span(o):
        return None if o is None else SpanText(int(o["start"]), int(o["end"]), str(o["text"]))

    return AbdicoRecord(
        statement_id=str(obj["statement_id"]),
        aim_index=int(obj["aim"]["index"]),
        aim_lemma=str(obj["aim"]["lemma"]),
        aim_text=str(obj["aim"]["text"]),
        attribute=span(obj["attribute"]),
        object=span(obj["object"]),
        deontic=obj["deontic"],
        modal_lemma=obj["modal_lemma"],
        negated=bool(obj["negated"]),
        category=str(obj["category"]),
    )


# ---------------------------------------------------------------------------
# aim selection

def _covered_tokens(frame: SrlFrame) -> int:
    covered: set[int] = set()
    for r in frame.roles:
        covered.update(range(r.start, r.end))
    return len(covered)


def _extensiveness(stmt: AnnotatedStatement, frame: SrlFrame) -> tuple:
    """Strict total preference order for frames, largest first.

    Distinct role labels, then tokens covered by roles, then dependency
    children of the predicate, then earliest predicate wins.
    """
    distinct = len({r.label for r in frame.roles})
    children = sum(1 for t in stmt.tokens if t.head == frame.predicate)
    return (-distinct, -_covered_tokens(frame), -children, frame.predicate)


def select_aim_frame(stmt: AnnotatedStatement) -> SrlFrame:
    """The frame anchoring the aim; raises NoAimError when there is none."""
    if not stmt.frames:
        raise NoAimError(stmt.id)
    root_index = next((t.index for t in stmt.tokens if t.head == -1), None)
    if root_index is not None and stmt.tokens[root_index].pos == POS_VERB:
        root_frames = [f for f in stmt.frames if f.predicate == root_index]
        if root_frames:
            return min(root_frames, key=lambda f: _extensiveness(stmt, f))
    order = {id(f): i for i, f in enumerate(stmt.frames)}
    return min(stmt.frames, key=lambda f: (_extensiveness(stmt, f), order[id(f)]))


def select_aim(stmt: AnnotatedStatement) -> int:
    """Predicate token index of the aim."""
    return select_aim_frame(stmt).predicate


# ---------------------------------------------------------------------------
# constituent extraction

def _role_span(stmt: AnnotatedStatement, role: Role) -> SpanText:
    return SpanText(role.start, role.end, stmt.span_text(role.start, role.end))


def _find_role(frame: SrlFrame, label: str) -> Role | None:
    for r in frame.roles:
        if r.label == label:
            return r
    return None


def _has_active_subject(stmt: AnnotatedStatement, aim_index: int) -> bool:
    return any(t.head == aim_index and t.deprel in ACTIVE_SUBJECT_RELS
               for t in stmt.tokens)


def extract_attribute(stmt: AnnotatedStatement,
                      frame: SrlFrame) -> SpanText | None:
    """ARG0, or ARG1 when the aim has an active nominal subject, else none."""
    arg0 = _find_role(frame, "ARG0")
    if arg0 is not None:
        return _role_span(stmt, arg0)
    if _has_active_subject(stmt, frame.predicate):
        arg1 = _find_role(frame, "ARG1")
        if arg1 is not None:
            return _role_span(stmt, arg1)
    return None


def _overlaps(a_start: int, a_end: int, b: SpanText) -> bool:
    return a_start < b.end and b.start < a_end


def extract_object(stmt: AnnotatedStatement, frame: SrlFrame,
                   attribute: SpanText | None) -> SpanText | None:
    """First core argument in ARG1..ARG5 order not claimed by the attribute.

    Spans overlapping the attribute are skipped entirely so the two
    constituents can never share tokens.
    """
    for label in CORE_OBJECT_ORDER:
        role = _find_role(frame, label)
        if role is None:
            continue
        if attribute is not None and _overlaps(role.start, role.end, attribute):
            continue
        return _role_span(stmt, role)
    return None


def _modifier_roles(frame: SrlFrame, labels: tuple[str, ...]) -> list[Role]:
    picked = [r for r in frame.roles if r.label in labels]
    picked.sort(key=lambda r: (r.start, r.end))
    return picked


def extract_deontic(stmt: AnnotatedStatement,
                    frame: SrlFrame) -> tuple[str | None, str | None, bool]:
    """(deontic text, modal lemma, frame-level negation flag).

    The deontic is every ARGM-MOD and ARGM-NEG span of the aim's frame,
    concatenated in token order; discontinuous spans merge here.
    """
    roles = _modifier_roles(frame, ("ARGM-MOD", "ARGM-NEG"))
    if not roles:
        return None, None, False
    text = " ".join(stmt.span_text(r.start, r.end) for r in roles)
    negated = any(r.label == "ARGM-NEG" for r in roles)
    modal_lemma = None
    for r in roles:
        if r.label == "ARGM-MOD":
            modal_lemma = stmt.tokens[r.start].lemma.lower()
            break
    return text, modal_lemma, negated


def _text_negated(deontic: str | None) -> bool:
    if not deontic:
        return False
    return any(tok in NEGATION_TOKENS for tok in deontic.lower().split())


# ---------------------------------------------------------------------------
# regulatory strength

def classify(negated: bool, modal_lemma: str | None) -> str:
    """Total decision table over (negation, modal lemma)."""
    if negated:
        return RESTRICTION
    if modal_lemma in REQUIREMENT_MODALS:
        return REQUIREMENT
    if modal_lemma in NORM_MODALS:
        return NORM
    return STRATEGY


def classify_snr(record: AbdicoRecord) -> str:
    return classify(record.negated, record.modal_lemma)


# ---------------------------------------------------------------------------
# full pipeline

def parse_statement(stmt: AnnotatedStatement) -> AbdicoRecord:
    """Compose aim selection, extraction, and classification; deterministic."""
    frame = select_aim_frame(stmt)
    aim_token = stmt.tokens[frame.predicate]
    attribute = extract_attribute(stmt, frame)
    obj = extract_object(stmt, frame, attribute)
    deontic, modal_lemma, frame_negated = extract_deontic(stmt, frame)
    negated = frame_negated or _text_negated(deontic)
    record = AbdicoRecord(
        statement_id=stmt.id,
        aim_index=frame.predicate,
        aim_lemma=aim_token.lemma.lower(),
        aim_text=aim_token.text,
        attribute=attribute,
        object=obj,
        deontic=deontic,
        modal_lemma=modal_lemma,
        negated=negated,
        category=classify(negated, modal_lemma),
    )
    return record


def parse_corpus(corpus_statements,
                 keep_unparsed: bool = False) -> tuple[list[AbdicoRecord], list[dict]]:
    """Parse a statement sequence.

    With keep_unparsed, frame-less statements land in the returned
    diagnostics list instead of aborting the run.
    """
    records: list[AbdicoRecord] = []
    unparsed: list[dict] = []
    for stmt in corpus_statements:
        try:
            records.append(parse_statement(stmt))
        except NoAimError as exc:
            if not keep_unparsed:
                raise
            unparsed.append({"statement_id": exc.statement_id, "reason": "no_aim"})
    return records, unparsed
