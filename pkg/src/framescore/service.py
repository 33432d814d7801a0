"""HTTP API for the human adjudication workflow.

Documents are read-only ground truth loaded from a data directory; each
evaluator decision (frame-pair accept/reject, keyword flag) is stored in an
overlay file beside its document and applied at scoring time.  Writes are
guarded by optimistic concurrency: every accepted mutation bumps a
per-document revision, and a stale `If-Match` header gets a 409 carrying the
current revision instead of silently losing a committed write.

Overlay persistence is write-temp-then-rename, so a killed process never
leaves a torn overlay file behind.
"""

from __future__ import annotations

import os
import tempfile
import threading
from pathlib import Path

from fastapi import FastAPI, Header, HTTPException, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .alignment import SentenceAlignment, align_sentence
from .annotations import (
    AnnotatedDocument,
    ParseError,
    SchemaError,
    SentencePair,
    document_to_dict,
    parse_document,
    validate_document,
)
from .overlays import (
    DocumentOverlay,
    SentenceOverlay,
    load_overlay,
    overlay_to_dict,
    parse_sentence_overlay,
    serialize_overlay,
)
from .reports import score_report_dict
from .scoring import score_document, sentence_scores

OVERLAY_SUFFIX = ".overlay.json"


class WorkspaceError(RuntimeError):
    """Raised when the data directory cannot be loaded into a workspace."""


class DocumentNotFound(KeyError):
    pass


class SentenceNotFound(KeyError):
    pass


class RevisionConflict(RuntimeError):
    def __init__(self, current_revision: int):
        self.current_revision = current_revision
        super().__init__(f"revision conflict; current revision is {current_revision}")


class OverlayRejected(ValueError):
    """A PUT fragment that does not validate against its document."""

    def __init__(self, issues: list[str]):
        self.issues = issues
        super().__init__("; ".join(issues))


class Workspace:
    """Documents plus mutable overlays, with per-document revisions and locks."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.documents: dict[str, AnnotatedDocument] = {}
        self.overlays: dict[str, DocumentOverlay] = {}
        self.revisions: dict[str, int] = {}
        self._paths: dict[str, Path] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._load()

    def _load(self) -> None:
        if not self.data_dir.is_dir():
            raise WorkspaceError(f"data directory not found: {self.data_dir}")
        for path in sorted(self.data_dir.glob("*.json")):
            if path.name.endswith(OVERLAY_SUFFIX):
                continue
            try:
                doc = parse_document(path.read_bytes())
            except (ParseError, SchemaError) as exc:
                raise WorkspaceError(f"{path}: {exc}") from exc
            if doc.doc_id in self.documents:
                raise WorkspaceError(
                    f"{path}: duplicate doc_id {doc.doc_id!r} "
                    f"(already loaded from {self._paths[doc.doc_id]})")
            report = validate_document(doc)
            if not report.ok:
                first = report.errors[0]
                raise WorkspaceError(
                    f"{path}: invalid document ({len(report.errors)} error(s); "
                    f"first: {first.path}: {first.message})")
            overlay = DocumentOverlay(doc_id=doc.doc_id)
            overlay_path = self._overlay_path_for(path)
            if overlay_path.exists():
                try:
                    overlay = load_overlay(overlay_path, expected_doc_id=doc.doc_id)
                except (OSError, ParseError, SchemaError) as exc:
                    raise WorkspaceError(f"{overlay_path}: {exc}") from exc
                overlay_report = validate_document(doc, overlay)
                if not overlay_report.ok:
                    first = overlay_report.errors[0]
                    raise WorkspaceError(
                        f"{overlay_path}: overlay does not validate "
                        f"({first.path}: {first.message})")
            self.documents[doc.doc_id] = doc
            self.overlays[doc.doc_id] = overlay
            self.revisions[doc.doc_id] = 0
            self._paths[doc.doc_id] = path
            self._locks[doc.doc_id] = threading.Lock()

    @staticmethod
    def _overlay_path_for(document_path: Path) -> Path:
        return document_path.with_name(document_path.name[:-len(".json")] + OVERLAY_SUFFIX)

    def _document(self, doc_id: str) -> AnnotatedDocument:
        if doc_id not in self.documents:
            raise DocumentNotFound(doc_id)
        return self.documents[doc_id]

    def _sentence(self, doc_id: str, sentence_id: int) -> SentencePair:
        pair = self._document(doc_id).sentence(sentence_id)
        if pair is None:
            raise SentenceNotFound(f"{doc_id}/{sentence_id}")
        return pair

    def list_documents(self) -> list[dict]:
        summaries = []
        for doc_id in sorted(self.documents):
            doc = self.documents[doc_id]
            scores = score_document(doc, self.overlays[doc_id])
            summaries.append({
                "doc_id": doc_id,
                "system_id": doc.system_id,
                "source_lang": doc.source_lang,
                "target_lang": doc.target_lang,
                "sentence_count": len(doc.sentences),
                "sentence_ids": [s.id for s in doc.sentences],
                "avg_f_mine": scores.avg_f_mine,
                "avg_f_maxe": scores.avg_f_maxe,
                "revision": self.revisions[doc_id],
            })
        return summaries

    def get_document(self, doc_id: str) -> dict:
        doc = self._document(doc_id)
        return {
            "document": document_to_dict(doc),
            "overlay": overlay_to_dict(self.overlays[doc_id]),
            "revision": self.revisions[doc_id],
        }

    def get_alignment(self, doc_id: str, sentence_id: int) -> dict:
        pair = self._sentence(doc_id, sentence_id)
        overlay = self.overlays[doc_id].for_sentence(sentence_id)
        alignment = align_sentence(pair, overlay)
        return {
            "doc_id": doc_id,
            "sentence_id": sentence_id,
            "revision": self.revisions[doc_id],
            "alignment": alignment_view(pair, alignment),
            "scores": scores_view(alignment),
        }

    def get_scores(self, doc_id: str) -> dict:
        doc = self._document(doc_id)
        return score_report_dict(score_document(doc, self.overlays[doc_id]))

    def put_overrides(self, doc_id: str, sentence_id: int, fragment: SentenceOverlay,
                      expected_revision: int | None = None) -> dict:
        doc = self._document(doc_id)
        pair = self._sentence(doc_id, sentence_id)
        lock = self._locks[doc_id]
        with lock:
            if expected_revision is not None and expected_revision != self.revisions[doc_id]:
                raise RevisionConflict(self.revisions[doc_id])
            candidate = self.overlays[doc_id].with_sentence(fragment)
            report = validate_document(doc, candidate)
            if not report.ok:
                raise OverlayRejected(
                    [f"sentence {i.sentence_id}: {i.path}: {i.message}" for i in report.errors])
            self._persist_overlay(doc_id, candidate)
            self.overlays[doc_id] = candidate
            self.revisions[doc_id] += 1
            revision = self.revisions[doc_id]
        alignment = align_sentence(pair, candidate.for_sentence(sentence_id))
        return {
            "doc_id": doc_id,
            "sentence_id": sentence_id,
            "revision": revision,
            "alignment": alignment_view(pair, alignment),
            "scores": scores_view(alignment),
        }

    def _persist_overlay(self, doc_id: str, overlay: DocumentOverlay) -> None:
        path = self._overlay_path_for(self._paths[doc_id])
        text = serialize_overlay(overlay)
        handle = tempfile.NamedTemporaryFile(
            mode="w", encoding="utf-8", dir=path.parent,
            prefix=path.name + ".", suffix=".tmp", delete=False)
        try:
            with handle:
                handle.write(text)
            os.replace(handle.name, path)
        except BaseException:
            try:
                os.unlink(handle.name)
            except OSError:
                pass
            raise


def alignment_view(pair: SentencePair, alignment: SentenceAlignment) -> dict:
    matches_by_pair = {(m.src, m.tgt): m for m in alignment.fe_result.per_pair}
    pairs = []
    for frame_pair in alignment.pairing.pairs:
        matches = matches_by_pair[(frame_pair.src, frame_pair.tgt)]
        pairs.append({
            "src": frame_pair.src,
            "tgt": frame_pair.tgt,
            "src_name": pair.source_frames[frame_pair.src].name,
            "tgt_name": pair.target_frames[frame_pair.tgt].name,
            "origin": frame_pair.origin,
            "element_matches": dict(matches.matched),
            "matched_elements": matches.total,
        })
    return {
        "matched_frame_count": alignment.matched_frame_count,
        "target_frame_count": alignment.target_frame_count,
        "source_frame_count": alignment.source_frame_count,
        "matched_element_count": alignment.matched_element_count,
        "target_element_count": alignment.target_element_count,
        "source_element_count": alignment.source_element_count,
        "origin": alignment.pairing.origin,
        "pairs": pairs,
        "unmatched_source": [
            {"index": i, "name": pair.source_frames[i].name}
            for i in alignment.pairing.unmatched_source],
        "unmatched_target": [
            {"index": i, "name": pair.target_frames[i].name}
            for i in alignment.pairing.unmatched_target],
        "flags_applied": alignment.fe_result.flags_applied,
    }


def scores_view(alignment: SentenceAlignment) -> dict:
    s = sentence_scores(alignment)
    return {"p_mine": s.p_mine, "r_mine": s.r_mine, "f_mine": s.f_mine,
            "p_maxe": s.p_maxe, "r_maxe": s.r_maxe, "f_maxe": s.f_maxe}


def create_app(data_dir: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    workspace = Workspace(data_dir)
    app = FastAPI(title="framescore adjudication service")
    app.state.workspace = workspace

    @app.get("/api/documents")
    def list_documents():
        return workspace.list_documents()

    @app.get("/api/documents/{doc_id}")
    def get_document(doc_id: str):
        try:
            return workspace.get_document(doc_id)
        except DocumentNotFound:
            raise HTTPException(status_code=404, detail=f"unknown document {doc_id!r}")

    @app.get("/api/documents/{doc_id}/sentences/{sentence_id}/alignment")
    def get_alignment(doc_id: str, sentence_id: int):
        try:
            return workspace.get_alignment(doc_id, sentence_id)
        except DocumentNotFound:
            raise HTTPException(status_code=404, detail=f"unknown document {doc_id!r}")
        except SentenceNotFound:
            raise HTTPException(status_code=404,
                                detail=f"document {doc_id!r} has no sentence {sentence_id}")

    @app.get("/api/documents/{doc_id}/scores")
    def get_scores(doc_id: str):
        try:
            return workspace.get_scores(doc_id)
        except DocumentNotFound:
            raise HTTPException(status_code=404, detail=f"unknown document {doc_id!r}")

    @app.put("/api/documents/{doc_id}/sentences/{sentence_id}/overrides")
    async def put_overrides(doc_id: str, sentence_id: int, request: Request,
                            if_match: str | None = Header(default=None, alias="If-Match")):
        expected_revision = None
        if if_match is not None:
            try:
                expected_revision = int(if_match.strip().strip('"'))
            except ValueError:
                raise HTTPException(status_code=400,
                                    detail=f"If-Match must be a revision number, got {if_match!r}")
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="request body must be JSON")
        try:
            fragment = parse_sentence_overlay(body, sentence_id=sentence_id)
        except SchemaError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        try:
            return workspace.put_overrides(doc_id, sentence_id, fragment, expected_revision)
        except DocumentNotFound:
            raise HTTPException(status_code=404, detail=f"unknown document {doc_id!r}")
        except SentenceNotFound:
            raise HTTPException(status_code=404,
                                detail=f"document {doc_id!r} has no sentence {sentence_id}")
        except OverlayRejected as exc:
            raise HTTPException(status_code=400, detail=exc.issues)
        except RevisionConflict as exc:
            return JSONResponse(
                status_code=409,
                content={"detail": str(exc), "revision": exc.current_revision})

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
