import json
import shutil

import pytest
from fastapi.testclient import TestClient

from framescore.service import Workspace, WorkspaceError, create_app
from conftest import CORPUS

SENTENCE20_FILES = ["sentence20_si.json", "sentence20_ji01.json",
                    "sentence20_ji02.json", "sentence20_ji03.json"]


@pytest.fixture()
def workspace_dir(tmp_path):
    data = tmp_path / "data"
    data.mkdir()
    for name in SENTENCE20_FILES + ["sentence42_si.json"]:
        shutil.copy(CORPUS / name, data / name)
    return data


@pytest.fixture()
def client(workspace_dir):
    with TestClient(create_app(workspace_dir)) as c:
        yield c


class TestListDocuments:
    def test_fixture_workspace_has_five_documents(self, client):
        docs = client.get("/api/documents").json()
        assert [d["doc_id"] for d in docs] == [
            "obama2012-s20-ji01", "obama2012-s20-ji02", "obama2012-s20-ji03",
            "obama2012-s20-si", "obama2012-s42-si"]
        by_system = {d["doc_id"]: d for d in docs}
        si = by_system["obama2012-s20-si"]
        assert si["system_id"] == "SI"
        assert si["sentence_count"] == 1
        assert si["sentence_ids"] == [20]
        assert si["avg_f_mine"] == pytest.approx(5 / 6)
        assert si["revision"] == 0

    def test_empty_data_dir(self, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        with TestClient(create_app(empty)) as c:
            assert c.get("/api/documents").json() == []

    def test_missing_data_dir_rejected(self, tmp_path):
        with pytest.raises(WorkspaceError):
            Workspace(tmp_path / "nope")


class TestGetDocument:
    def test_document_round_trip(self, client):
        body = client.get("/api/documents/obama2012-s20-si").json()
        assert body["revision"] == 0
        assert body["document"]["system_id"] == "SI"
        assert len(body["document"]["sentences"][0]["target_frames"]) == 6
        assert body["overlay"]["sentence_overlays"] == []

    def test_unknown_document_404(self, client):
        response = client.get("/api/documents/nope")
        assert response.status_code == 404


class TestGetAlignment:
    def test_si20_alignment_view(self, client):
        body = client.get("/api/documents/obama2012-s20-si/sentences/20/alignment").json()
        alignment = body["alignment"]
        assert alignment["matched_frame_count"] == 5
        assert alignment["target_frame_count"] == 6
        assert alignment["matched_element_count"] == 10
        assert len(alignment["pairs"]) == 5
        assert all(p["origin"] == "proposed" for p in alignment["pairs"])
        assert alignment["unmatched_target"] == [{"index": 1, "name": "Existence"}]
        assert body["scores"]["f_maxe"] == pytest.approx(20 / 27)

    def test_unknown_sentence_404(self, client):
        response = client.get("/api/documents/obama2012-s20-si/sentences/99/alignment")
        assert response.status_code == 404


class TestPutOverrides:
    URL = "/api/documents/obama2012-s20-si/sentences/20/overrides"

    def test_reject_pair_recomputes(self, client):
        body = {"frame_pair_overrides": [{"src": 1, "tgt": 0, "status": "reject"}],
                "keyword_flags": []}
        response = client.put(self.URL, json=body, headers={"If-Match": "0"})
        assert response.status_code == 200
        payload = response.json()
        assert payload["revision"] == 1
        assert payload["alignment"]["matched_frame_count"] == 4
        assert payload["scores"]["p_mine"] == pytest.approx(4 / 6)

    def test_empty_fragment_increments_revision_only(self, client):
        before = client.get("/api/documents/obama2012-s20-si/scores").json()
        response = client.put(self.URL, json={})
        assert response.status_code == 200
        assert response.json()["revision"] == 1
        after = client.get("/api/documents/obama2012-s20-si/scores").json()
        assert after == before

    def test_idempotent_puts_keep_incrementing_revision(self, client):
        body = {"frame_pair_overrides": [{"src": 1, "tgt": 0, "status": "reject"}]}
        first = client.put(self.URL, json=body).json()
        second = client.put(self.URL, json=body).json()
        assert (first["revision"], second["revision"]) == (1, 2)
        assert first["scores"] == second["scores"]

    def test_dangling_reference_rejected_and_state_unchanged(self, client):
        body = {"frame_pair_overrides": [{"src": 99, "tgt": 0, "status": "reject"}]}
        response = client.put(self.URL, json=body)
        assert response.status_code == 400
        assert "99" in json.dumps(response.json())
        docs = {d["doc_id"]: d for d in client.get("/api/documents").json()}
        assert docs["obama2012-s20-si"]["revision"] == 0

    def test_stale_if_match_conflicts(self, client):
        assert client.put(self.URL, json={}).status_code == 200
        response = client.put(self.URL, json={}, headers={"If-Match": "0"})
        assert response.status_code == 409
        assert response.json()["revision"] == 1
        # the committed write is still there
        docs = {d["doc_id"]: d for d in client.get("/api/documents").json()}
        assert docs["obama2012-s20-si"]["revision"] == 1

    def test_bad_if_match_rejected(self, client):
        response = client.put(self.URL, json={}, headers={"If-Match": "banana"})
        assert response.status_code == 400

    def test_malformed_fragment_rejected(self, client):
        response = client.put(self.URL, json={"frame_pair_overrides": [{"src": 0}]})
        assert response.status_code == 400

    def test_unknown_document_404(self, client):
        response = client.put("/api/documents/nope/sentences/1/overrides", json={})
        assert response.status_code == 404

    def test_keyword_flag_drops_matched_element(self, client):
        url = "/api/documents/obama2012-s42-si/sentences/42/overrides"
        before = client.get(
            "/api/documents/obama2012-s42-si/sentences/42/alignment").json()
        assert before["alignment"]["matched_element_count"] == 2
        body = {"keyword_flags": [{"side": "target", "frame": 0, "role": "Manner",
                                   "occurrence": 0, "category": "terminology"}]}
        response = client.put(url, json=body)
        assert response.status_code == 200
        payload = response.json()
        assert payload["alignment"]["matched_element_count"] == 1
        assert payload["alignment"]["flags_applied"] == 1
        assert payload["scores"]["p_maxe"] == 0.5


class TestPersistence:
    def test_overlay_written_atomically_and_reloaded(self, client, workspace_dir):
        body = {"frame_pair_overrides": [{"src": 1, "tgt": 0, "status": "reject"}]}
        client.put("/api/documents/obama2012-s20-si/sentences/20/overrides", json=body)
        overlay_path = workspace_dir / "sentence20_si.overlay.json"
        assert overlay_path.exists()
        assert not list(workspace_dir.glob("*.tmp"))
        overlay = json.loads(overlay_path.read_text(encoding="utf-8"))
        assert overlay["doc_id"] == "obama2012-s20-si"

        # a fresh workspace picks the overlay up from disk
        fresh = Workspace(workspace_dir)
        scores = fresh.get_scores("obama2012-s20-si")
        assert scores["per_sentence"]["20"]["p_mine"] == pytest.approx(4 / 6)

    def test_bundled_overlay_auto_loads(self, tmp_path):
        data = tmp_path / "data"
        data.mkdir()
        shutil.copy(CORPUS / "sentence42_si.json", data / "sentence42_si.json")
        shutil.copy(CORPUS / "sentence42_si.overlay.json", data / "sentence42_si.overlay.json")
        workspace = Workspace(data)
        scores = workspace.get_scores("obama2012-s42-si")
        assert scores["per_sentence"]["42"]["p_maxe"] == 0.5


class TestScoreConsistency:
    def test_service_scores_equal_cli_scores(self, client, workspace_dir, capsys):
        from framescore.cli import main

        service_scores = client.get("/api/documents/obama2012-s20-si/scores").json()
        assert main(["score", str(workspace_dir / "sentence20_si.json"),
                     "--format", "json"]) == 0
        cli_scores = json.loads(capsys.readouterr().out)
        assert service_scores == cli_scores

    def test_consistency_after_override_with_overlay_file(self, client, workspace_dir, capsys):
        from framescore.cli import main

        body = {"frame_pair_overrides": [{"src": 1, "tgt": 0, "status": "reject"}]}
        client.put("/api/documents/obama2012-s20-si/sentences/20/overrides", json=body)
        service_scores = client.get("/api/documents/obama2012-s20-si/scores").json()
        assert main(["score", str(workspace_dir / "sentence20_si.json"),
                     "--overlay", str(workspace_dir / "sentence20_si.overlay.json"),
                     "--format", "json"]) == 0
        cli_scores = json.loads(capsys.readouterr().out)
        assert service_scores == cli_scores
        assert service_scores["per_sentence"]["20"]["p_mine"] == pytest.approx(4 / 6)


class TestWorkspaceLoadErrors:
    def test_broken_document_rejected(self, tmp_path):
        data = tmp_path / "data"
        data.mkdir()
        (data / "broken.json").write_text("{not json")
        with pytest.raises(WorkspaceError, match="broken.json"):
            Workspace(data)

    def test_duplicate_doc_id_rejected(self, tmp_path):
        data = tmp_path / "data"
        data.mkdir()
        shutil.copy(CORPUS / "sentence20_si.json", data / "a.json")
        shutil.copy(CORPUS / "sentence20_si.json", data / "b.json")
        with pytest.raises(WorkspaceError, match="duplicate doc_id"):
            Workspace(data)

    def test_mismatched_overlay_rejected(self, tmp_path):
        data = tmp_path / "data"
        data.mkdir()
        shutil.copy(CORPUS / "sentence42_si.json", data / "sentence42_si.json")
        (data / "sentence42_si.overlay.json").write_text(
            '{"doc_id": "other", "sentence_overlays": []}')
        with pytest.raises(WorkspaceError, match="other"):
            Workspace(data)
