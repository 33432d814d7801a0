"""Adjudication overlays: human decisions stored separately from annotations.

An overlay holds, per sentence, the evaluator's frame-pair accepts/rejects
and keyword-mistranslation flags.  Annotations stay pristine ground truth;
recomputing scores with a different overlay never touches the document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Any

from .annotations import ParseError, SchemaError

SIDE_SOURCE = "source"
SIDE_TARGET = "target"
STATUS_ACCEPT = "accept"
STATUS_REJECT = "reject"


@dataclass(frozen=True)
class FramePairOverride:
    """Human accept/reject of a (source frame, target frame) pairing."""

    src: int
    tgt: int
    status: str


@dataclass(frozen=True)
class KeywordFlag:
    """Marks one keyword inside an FE occurrence as mistranslated.

    `occurrence` is the 0-based ordinal of the role within its frame, so a
    frame with Theme, Theme can flag either occurrence independently.
    """

    side: str
    frame: int
    role: str
    occurrence: int
    category: str


@dataclass(frozen=True)
class SentenceOverlay:
    sentence_id: int
    frame_pair_overrides: tuple[FramePairOverride, ...] = ()
    keyword_flags: tuple[KeywordFlag, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.frame_pair_overrides and not self.keyword_flags


@dataclass(frozen=True)
class DocumentOverlay:
    doc_id: str
    sentence_overlays: tuple[SentenceOverlay, ...] = ()

    def for_sentence(self, sentence_id: int) -> SentenceOverlay | None:
        for so in self.sentence_overlays:
            if so.sentence_id == sentence_id:
                return so
        return None

    def with_sentence(self, fragment: SentenceOverlay) -> "DocumentOverlay":
        """Replace (or add) the overlay for one sentence; order kept by sentence id."""
        others = [so for so in self.sentence_overlays if so.sentence_id != fragment.sentence_id]
        kept = others if fragment.empty else others + [fragment]
        return replace(self, sentence_overlays=tuple(sorted(kept, key=lambda so: so.sentence_id)))


def parse_overlay(data: bytes | str) -> DocumentOverlay:
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(raw, dict):
        raise SchemaError("overlay must be a JSON object", "$")
    doc_id = raw.get("doc_id")
    if not isinstance(doc_id, str) or not doc_id:
        raise SchemaError("overlay doc_id must be a non-empty string", "$.doc_id")
    sentence_overlays = []
    seen: set[int] = set()
    for i, raw_so in enumerate(_as_list(raw.get("sentence_overlays", []), "$.sentence_overlays")):
        so = parse_sentence_overlay(raw_so, path=f"$.sentence_overlays[{i}]")
        if so.sentence_id in seen:
            raise SchemaError(f"duplicate overlay for sentence {so.sentence_id}",
                              f"$.sentence_overlays[{i}].sentence_id")
        seen.add(so.sentence_id)
        sentence_overlays.append(so)
    return DocumentOverlay(doc_id=doc_id, sentence_overlays=tuple(sentence_overlays))


def parse_sentence_overlay(raw: Any, path: str = "$", sentence_id: int | None = None) -> SentenceOverlay:
    """Parse one sentence's overlay (or a PUT fragment when `sentence_id` is given)."""
    if not isinstance(raw, dict):
        raise SchemaError("sentence overlay must be a JSON object", path)
    if sentence_id is None:
        sentence_id = raw.get("sentence_id")
        if not isinstance(sentence_id, int) or isinstance(sentence_id, bool) or sentence_id < 1:
            raise SchemaError("sentence_id must be a positive integer", f"{path}.sentence_id")
    overrides = []
    for i, item in enumerate(_as_list(raw.get("frame_pair_overrides", []),
                                      f"{path}.frame_pair_overrides")):
        opath = f"{path}.frame_pair_overrides[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("override must be a JSON object", opath)
        status = item.get("status")
        if status not in (STATUS_ACCEPT, STATUS_REJECT):
            raise SchemaError("status must be 'accept' or 'reject'", f"{opath}.status")
        overrides.append(FramePairOverride(
            src=_as_index(item.get("src"), f"{opath}.src"),
            tgt=_as_index(item.get("tgt"), f"{opath}.tgt"),
            status=status,
        ))
    flags = []
    for i, item in enumerate(_as_list(raw.get("keyword_flags", []), f"{path}.keyword_flags")):
        fpath = f"{path}.keyword_flags[{i}]"
        if not isinstance(item, dict):
            raise SchemaError("keyword flag must be a JSON object", fpath)
        side = item.get("side")
        if side not in (SIDE_SOURCE, SIDE_TARGET):
            raise SchemaError("side must be 'source' or 'target'", f"{fpath}.side")
        role = item.get("role")
        if not isinstance(role, str) or not role:
            raise SchemaError("role must be a non-empty string", f"{fpath}.role")
        category = item.get("category")
        if not isinstance(category, str) or not category:
            raise SchemaError("category must be a non-empty string", f"{fpath}.category")
        flags.append(KeywordFlag(
            side=side,
            frame=_as_index(item.get("frame"), f"{fpath}.frame"),
            role=role,
            occurrence=_as_index(item.get("occurrence"), f"{fpath}.occurrence"),
            category=category,
        ))
    return SentenceOverlay(sentence_id=sentence_id, frame_pair_overrides=tuple(overrides),
                           keyword_flags=tuple(flags))


def overlay_to_dict(overlay: DocumentOverlay) -> dict:
    return {
        "doc_id": overlay.doc_id,
        "sentence_overlays": [sentence_overlay_to_dict(so) for so in overlay.sentence_overlays],
    }


def sentence_overlay_to_dict(so: SentenceOverlay) -> dict:
    return {
        "sentence_id": so.sentence_id,
        "frame_pair_overrides": [
            {"src": o.src, "tgt": o.tgt, "status": o.status} for o in so.frame_pair_overrides
        ],
        "keyword_flags": [
            {"side": f.side, "frame": f.frame, "role": f.role,
             "occurrence": f.occurrence, "category": f.category}
            for f in so.keyword_flags
        ],
    }


def serialize_overlay(overlay: DocumentOverlay) -> str:
    return json.dumps(overlay_to_dict(overlay), ensure_ascii=False, indent=2) + "\n"


def _as_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError("expected a JSON list", path)
    return value


def _as_index(value: Any, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise SchemaError("expected a non-negative integer", path)
    return value


def load_overlay(path, expected_doc_id: str | None = None) -> DocumentOverlay:
    """Read an overlay file from disk, optionally checking it targets the right document."""
    with open(path, "rb") as handle:
        overlay = parse_overlay(handle.read())
    if expected_doc_id is not None and overlay.doc_id != expected_doc_id:
        raise SchemaError(
            f"overlay is for document {overlay.doc_id!r}, not {expected_doc_id!r}", "$.doc_id")
    return overlay
