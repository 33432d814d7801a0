"""Frame/FE annotation data model for bilingual sentence pairs.

A document holds one source transcript and one interpreted output, sentence
by sentence, each side annotated with the semantic frames it evokes and the
role-labelled frame elements (FEs) inside each frame.  Annotations are plain
values: parsing, validation and serialization never mutate them, so documents
can be shared freely across threads.

The on-disk format is UTF-8 JSON (see `serialize_document` for the canonical
key order).  Spans are optional 0-based half-open character intervals; a
document annotated at text level only is fully scoreable.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, replace
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

KEYWORD_CATEGORIES = ("terminology", "name", "time_expression", "number")

# Label variants observed in real annotation data; targets are canonical
# fixed points so a single application is idempotent.
DEFAULT_LABEL_ALIASES: Mapping[str, str] = {
    "create_entity": "created_entity",
    "cause_of_strength": "cause_change_of_strength",
    "neding": "needing",
}

_LABEL_RUN = re.compile(r"[\s_]+")


class ParseError(ValueError):
    """Raised when the input is not well-formed JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class SchemaError(ValueError):
    """Raised when JSON is well-formed but violates the document schema."""

    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")


class OverrideError(ValueError):
    """Raised when an adjudication overlay references annotation that does not exist."""


class UnknownFieldWarning(UserWarning):
    """Emitted (and the field ignored) when a document carries extra keys."""


@dataclass(frozen=True)
class KeywordMention:
    """A keyword occurring inside an FE filler (terminology, name, time expression, number)."""

    category: str
    text: str


@dataclass(frozen=True)
class FEInstance:
    """One role-labelled frame element: the role name and its filler text."""

    role: str
    text: str = ""
    span: tuple[int, int] | None = None
    keywords: tuple[KeywordMention, ...] = ()


@dataclass(frozen=True)
class FrameInstance:
    """One evoked frame: its name, the lexical unit that evokes it, and its FEs.

    `index` is the frame's position within its sentence side and is the stable
    identity used by adjudication overlays.
    """

    name: str
    lu_text: str = ""
    lu_span: tuple[int, int] | None = None
    elements: tuple[FEInstance, ...] = ()
    index: int = -1


@dataclass(frozen=True)
class SentencePair:
    id: int
    source_text: str = ""
    target_text: str = ""
    source_frames: tuple[FrameInstance, ...] = ()
    target_frames: tuple[FrameInstance, ...] = ()


@dataclass(frozen=True)
class AnnotatedDocument:
    doc_id: str
    source_lang: str = "en"
    target_lang: str = "zh"
    system_id: str = ""
    sentences: tuple[SentencePair, ...] = ()

    def sentence(self, sentence_id: int) -> SentencePair | None:
        for pair in self.sentences:
            if pair.id == sentence_id:
                return pair
        return None


class ValidationIssue(NamedTuple):
    sentence_id: int | None
    path: str
    message: str


@dataclass
class ValidationReport:
    errors: list[ValidationIssue]
    warnings: list[ValidationIssue]

    @property
    def ok(self) -> bool:
        """True iff the document is scoreable as-is."""
        return not self.errors


def make_fe(role: str, text: str = "", span: Sequence[int] | None = None,
            keywords: Iterable[tuple[str, str] | KeywordMention] = ()) -> FEInstance:
    kws = tuple(k if isinstance(k, KeywordMention) else KeywordMention(*k) for k in keywords)
    return FEInstance(role=role, text=text, span=_as_span(span), keywords=kws)


def make_frame(name: str, lu_text: str = "", elements: Iterable[FEInstance] = (),
               lu_span: Sequence[int] | None = None, index: int = -1) -> FrameInstance:
    return FrameInstance(name=name, lu_text=lu_text, lu_span=_as_span(lu_span),
                         elements=tuple(elements), index=index)


def make_sentence(sentence_id: int, source_text: str = "", target_text: str = "",
                  source_frames: Iterable[FrameInstance] = (),
                  target_frames: Iterable[FrameInstance] = ()) -> SentencePair:
    """Build a sentence pair, renumbering frame indices to their list positions."""
    return SentencePair(
        id=sentence_id,
        source_text=source_text,
        target_text=target_text,
        source_frames=_reindex(source_frames),
        target_frames=_reindex(target_frames),
    )


def make_document(doc_id: str, sentences: Iterable[SentencePair] = (), source_lang: str = "en",
                  target_lang: str = "zh", system_id: str = "") -> AnnotatedDocument:
    return AnnotatedDocument(doc_id=doc_id, source_lang=source_lang, target_lang=target_lang,
                             system_id=system_id, sentences=tuple(sentences))


def _as_span(value: Sequence[int] | None) -> tuple[int, int] | None:
    return None if value is None else (value[0], value[1])


def _reindex(frames: Iterable[FrameInstance]) -> tuple[FrameInstance, ...]:
    return tuple(replace(f, index=i) for i, f in enumerate(frames))


def normalize_label(raw: str, aliases: Mapping[str, str] | None = None) -> str:
    """Canonicalize a frame or FE label.

    Lower-cases, trims, collapses runs of whitespace/underscores to a single
    underscore, then applies the alias table.  Idempotent for alias tables
    whose values are canonical fixed points (the default table is).
    """
    if not isinstance(raw, str) or not raw.strip():
        raise ValueError("label must be a non-empty string")
    canonical = _LABEL_RUN.sub("_", raw.strip().lower()).strip("_")
    if not canonical:
        raise ValueError(f"label {raw!r} normalizes to an empty string")
    table = DEFAULT_LABEL_ALIASES if aliases is None else aliases
    return table.get(canonical, canonical)


# ---------------------------------------------------------------------------
# Parsing

_DOC_KEYS = ("doc_id", "source_lang", "target_lang", "system_id", "sentences")
_SENTENCE_KEYS = ("id", "source_text", "target_text", "source_frames", "target_frames")
_FRAME_KEYS = ("name", "lu_text", "lu_span", "elements")
_FE_KEYS = ("role", "text", "span", "keywords")
_KEYWORD_KEYS = ("category", "text")


def parse_document(data: bytes | str) -> AnnotatedDocument:
    """Parse a UTF-8 JSON document into an AnnotatedDocument.

    Unknown fields are ignored with an `UnknownFieldWarning`; structural
    problems raise `ParseError` (bad JSON) or `SchemaError` (bad shape).
    """
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc

    obj = _require_object(raw, "$")
    _warn_unknown(obj, _DOC_KEYS, "$")
    doc_id = _require_str(obj, "doc_id", "$")
    if not doc_id:
        raise SchemaError("doc_id must be non-empty", "$.doc_id")

    sentences = []
    seen_ids: list[int] = []
    for i, raw_sentence in enumerate(_require_list(obj, "sentences", "$")):
        path = f"$.sentences[{i}]"
        sentence = _parse_sentence(raw_sentence, path)
        if sentence.id in seen_ids:
            raise SchemaError(f"duplicate sentence id {sentence.id}", f"{path}.id")
        if seen_ids and sentence.id <= seen_ids[-1]:
            raise SchemaError(
                f"sentence ids must be strictly increasing (got {sentence.id} after {seen_ids[-1]})",
                f"{path}.id")
        seen_ids.append(sentence.id)
        sentences.append(sentence)

    return AnnotatedDocument(
        doc_id=doc_id,
        source_lang=_require_str(obj, "source_lang", "$"),
        target_lang=_require_str(obj, "target_lang", "$"),
        system_id=_require_str(obj, "system_id", "$"),
        sentences=tuple(sentences),
    )


def _parse_sentence(raw: Any, path: str) -> SentencePair:
    obj = _require_object(raw, path)
    _warn_unknown(obj, _SENTENCE_KEYS, path)
    sentence_id = _require_int(obj, "id", path)
    if sentence_id < 1:
        raise SchemaError("sentence id must be a positive integer", f"{path}.id")
    return SentencePair(
        id=sentence_id,
        source_text=_require_str(obj, "source_text", path),
        target_text=_require_str(obj, "target_text", path),
        source_frames=_parse_frames(obj, "source_frames", path),
        target_frames=_parse_frames(obj, "target_frames", path),
    )


def _parse_frames(obj: Mapping[str, Any], key: str, path: str) -> tuple[FrameInstance, ...]:
    frames = []
    for i, raw in enumerate(_require_list(obj, key, path)):
        fpath = f"{path}.{key}[{i}]"
        frame = _require_object(raw, fpath)
        _warn_unknown(frame, _FRAME_KEYS, fpath)
        elements = []
        for j, raw_fe in enumerate(_require_list(frame, "elements", fpath)):
            epath = f"{fpath}.elements[{j}]"
            fe = _require_object(raw_fe, epath)
            _warn_unknown(fe, _FE_KEYS, epath)
            keywords = []
            for k, raw_kw in enumerate(_require_list(fe, "keywords", epath)):
                kpath = f"{epath}.keywords[{k}]"
                kw = _require_object(raw_kw, kpath)
                _warn_unknown(kw, _KEYWORD_KEYS, kpath)
                keywords.append(KeywordMention(
                    category=_require_str(kw, "category", kpath),
                    text=_require_str(kw, "text", kpath),
                ))
            elements.append(FEInstance(
                role=_require_str(fe, "role", epath),
                text=_require_str(fe, "text", epath),
                span=_parse_span(fe.get("span"), f"{epath}.span"),
                keywords=tuple(keywords),
            ))
        frames.append(FrameInstance(
            name=_require_str(frame, "name", fpath),
            lu_text=_require_str(frame, "lu_text", fpath),
            lu_span=_parse_span(frame.get("lu_span"), f"{fpath}.lu_span"),
            elements=tuple(elements),
            index=i,
        ))
    return tuple(frames)


def _parse_span(value: Any, path: str) -> tuple[int, int] | None:
    if value is None:
        return None
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)):
        raise SchemaError("span must be a [start, end] pair of integers", path)
    return (value[0], value[1])


def _require_object(value: Any, path: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise SchemaError("expected a JSON object", path)
    return value


def _require_field(obj: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in obj:
        raise SchemaError(f"missing required field '{key}'", f"{path}.{key}")
    return obj[key]


def _require_str(obj: Mapping[str, Any], key: str, path: str) -> str:
    value = _require_field(obj, key, path)
    if not isinstance(value, str):
        raise SchemaError(f"field '{key}' must be a string", f"{path}.{key}")
    return value


def _require_int(obj: Mapping[str, Any], key: str, path: str) -> int:
    value = _require_field(obj, key, path)
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(f"field '{key}' must be an integer", f"{path}.{key}")
    return value


def _require_list(obj: Mapping[str, Any], key: str, path: str) -> list:
    value = _require_field(obj, key, path)
    if not isinstance(value, list):
        raise SchemaError(f"field '{key}' must be a list", f"{path}.{key}")
    return value


def _warn_unknown(obj: Mapping[str, Any], allowed: Sequence[str], path: str) -> None:
    for key in obj:
        if key not in allowed:
            warnings.warn(f"{path}: ignoring unknown field '{key}'", UnknownFieldWarning,
                          stacklevel=3)


# ---------------------------------------------------------------------------
# Serialization

def document_to_dict(doc: AnnotatedDocument) -> dict:
    """Canonical dict form: fixed key order, spans only when present."""
    return {
        "doc_id": doc.doc_id,
        "source_lang": doc.source_lang,
        "target_lang": doc.target_lang,
        "system_id": doc.system_id,
        "sentences": [_sentence_to_dict(s) for s in doc.sentences],
    }


def _sentence_to_dict(sentence: SentencePair) -> dict:
    return {
        "id": sentence.id,
        "source_text": sentence.source_text,
        "target_text": sentence.target_text,
        "source_frames": [_frame_to_dict(f) for f in sentence.source_frames],
        "target_frames": [_frame_to_dict(f) for f in sentence.target_frames],
    }


def _frame_to_dict(frame: FrameInstance) -> dict:
    out: dict[str, Any] = {"name": frame.name, "lu_text": frame.lu_text}
    if frame.lu_span is not None:
        out["lu_span"] = list(frame.lu_span)
    out["elements"] = [_fe_to_dict(e) for e in frame.elements]
    return out


def _fe_to_dict(fe: FEInstance) -> dict:
    out: dict[str, Any] = {"role": fe.role, "text": fe.text}
    if fe.span is not None:
        out["span"] = list(fe.span)
    out["keywords"] = [{"category": k.category, "text": k.text} for k in fe.keywords]
    return out


def serialize_document(doc: AnnotatedDocument) -> str:
    """Canonical serialization: 2-space indent, LF newlines, UTF-8 text."""
    return json.dumps(document_to_dict(doc), ensure_ascii=False, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Validation

def validate_document(doc: AnnotatedDocument, overlay: Any = None) -> ValidationReport:
    """Check a document (and, optionally, an adjudication overlay) for problems.

    Pure and deterministic; all findings are report entries, nothing raises.
    The overlay argument accepts a `framescore.overlays.DocumentOverlay`.
    """
    errors: list[ValidationIssue] = []
    warning_list: list[ValidationIssue] = []

    if not doc.doc_id:
        errors.append(ValidationIssue(None, "doc_id", "doc_id must be non-empty"))

    previous_id: int | None = None
    for si, sentence in enumerate(doc.sentences):
        spath = f"sentences[{si}]"
        if sentence.id < 1:
            errors.append(ValidationIssue(sentence.id, f"{spath}.id", "sentence id must be positive"))
        if previous_id is not None and sentence.id <= previous_id:
            errors.append(ValidationIssue(
                sentence.id, f"{spath}.id",
                f"sentence ids must be strictly increasing (got {sentence.id} after {previous_id})"))
        previous_id = sentence.id

        for side, text, frames in (("source", sentence.source_text, sentence.source_frames),
                                   ("target", sentence.target_text, sentence.target_frames)):
            for fi, frame in enumerate(frames):
                fpath = f"{spath}.{side}_frames[{fi}]"
                if frame.index != fi:
                    errors.append(ValidationIssue(
                        sentence.id, f"{fpath}.index",
                        f"frame index {frame.index} does not match list position {fi}"))
                _check_label(frame.name, "frame name", sentence.id, f"{fpath}.name", errors)
                _check_span(frame.lu_span, text, sentence.id, f"{fpath}.lu_span", errors)
                if not frame.lu_text:
                    warning_list.append(ValidationIssue(
                        sentence.id, f"{fpath}.lu_text", "empty lexical unit text"))
                for ei, fe in enumerate(frame.elements):
                    epath = f"{fpath}.elements[{ei}]"
                    _check_label(fe.role, "FE role", sentence.id, f"{epath}.role", errors)
                    _check_span(fe.span, text, sentence.id, f"{epath}.span", errors)
                    if not fe.text:
                        warning_list.append(ValidationIssue(
                            sentence.id, f"{epath}.text", "empty FE filler text"))
                    for ki, kw in enumerate(fe.keywords):
                        kpath = f"{epath}.keywords[{ki}]"
                        if kw.category not in KEYWORD_CATEGORIES:
                            errors.append(ValidationIssue(
                                sentence.id, f"{kpath}.category",
                                f"keyword category {kw.category!r} must be one of "
                                f"{', '.join(KEYWORD_CATEGORIES)}"))
                        if not kw.text:
                            warning_list.append(ValidationIssue(
                                sentence.id, f"{kpath}.text", "empty keyword text"))

    if overlay is not None:
        _validate_overlay(doc, overlay, errors)

    return ValidationReport(errors=errors, warnings=warning_list)


def _check_label(raw: str, what: str, sentence_id: int, path: str,
                 errors: list[ValidationIssue]) -> None:
    try:
        normalize_label(raw)
    except ValueError:
        errors.append(ValidationIssue(sentence_id, path, f"{what} must be non-empty"))


def _check_span(span: tuple[int, int] | None, text: str, sentence_id: int, path: str,
                errors: list[ValidationIssue]) -> None:
    if span is None:
        return
    start, end = span
    if not (0 <= start <= end <= len(text)):
        errors.append(ValidationIssue(
            sentence_id, path,
            f"span [{start}, {end}) out of bounds for text of length {len(text)}"))


def _validate_overlay(doc: AnnotatedDocument, overlay: Any,
                      errors: list[ValidationIssue]) -> None:
    if getattr(overlay, "doc_id", doc.doc_id) != doc.doc_id:
        errors.append(ValidationIssue(
            None, "overlay.doc_id",
            f"overlay doc_id {overlay.doc_id!r} does not match document {doc.doc_id!r}"))
    for so in getattr(overlay, "sentence_overlays", ()):
        opath = f"overlay[{so.sentence_id}]"
        sentence = doc.sentence(so.sentence_id)
        if sentence is None:
            errors.append(ValidationIssue(
                so.sentence_id, opath, f"overlay references unknown sentence {so.sentence_id}"))
            continue
        for oi, override in enumerate(so.frame_pair_overrides):
            ppath = f"{opath}.frame_pair_overrides[{oi}]"
            if not 0 <= override.src < len(sentence.source_frames):
                errors.append(ValidationIssue(
                    so.sentence_id, ppath, f"source frame index {override.src} out of range"))
            if not 0 <= override.tgt < len(sentence.target_frames):
                errors.append(ValidationIssue(
                    so.sentence_id, ppath, f"target frame index {override.tgt} out of range"))
        for ki, flag in enumerate(so.keyword_flags):
            kpath = f"{opath}.keyword_flags[{ki}]"
            frames = sentence.source_frames if flag.side == "source" else sentence.target_frames
            if flag.category not in KEYWORD_CATEGORIES:
                errors.append(ValidationIssue(
                    so.sentence_id, kpath,
                    f"keyword category {flag.category!r} must be one of "
                    f"{', '.join(KEYWORD_CATEGORIES)}"))
            if not 0 <= flag.frame < len(frames):
                errors.append(ValidationIssue(
                    so.sentence_id, kpath,
                    f"{flag.side} frame index {flag.frame} out of range"))
                continue
            frame = frames[flag.frame]
            try:
                wanted = normalize_label(flag.role)
            except ValueError:
                errors.append(ValidationIssue(so.sentence_id, kpath, "flag role must be non-empty"))
                continue
            count = sum(1 for fe in frame.elements
                        if _safe_normalize(fe.role) == wanted)
            if count == 0:
                errors.append(ValidationIssue(
                    so.sentence_id, kpath,
                    f"role {flag.role!r} not present in {flag.side} frame {flag.frame}"))
            elif not 0 <= flag.occurrence < count:
                errors.append(ValidationIssue(
                    so.sentence_id, kpath,
                    f"occurrence {flag.occurrence} out of range for role {flag.role!r} "
                    f"({count} occurrence(s))"))


def _safe_normalize(raw: str) -> str | None:
    try:
        return normalize_label(raw)
    except ValueError:
        return None
