import { describe, expect, it } from "vitest";

import type { Api } from "../src/api";
import { SentenceController } from "../src/controller";
import type { SessionState } from "../src/controller";
import type {
  AlignmentPayload,
  DocumentPayload,
  OverlayFragment,
  PutResult,
} from "../src/types";
import { sampleAlignment, sampleScores, sampleSentence } from "./fixtures";

function alignmentPayload(revision: number, patch: Partial<AlignmentPayload> = {}): AlignmentPayload {
  return {
    doc_id: "doc", sentence_id: 7, revision,
    alignment: sampleAlignment(), scores: sampleScores(), ...patch,
  };
}

function documentPayload(revision: number, overlays: OverlayFragment | null = null): DocumentPayload {
  return {
    revision,
    document: {
      doc_id: "doc", source_lang: "en", target_lang: "zh", system_id: "S",
      sentences: [sampleSentence()],
    },
    overlay: {
      doc_id: "doc",
      sentence_overlays: overlays ? [{ sentence_id: 7, ...overlays }] : [],
    },
  };
}

interface Script {
  puts: PutResult[];
}

function mockApi(script: Script, revision = 0): { api: Api; putBodies: OverlayFragment[]; putRevisions: (number | undefined)[] } {
  const putBodies: OverlayFragment[] = [];
  const putRevisions: (number | undefined)[] = [];
  let serverOverlay: OverlayFragment | null = null;
  const api: Api = {
    listDocuments: async () => [],
    getDocument: async () => documentPayload(revision, serverOverlay),
    getAlignment: async () => alignmentPayload(revision),
    putOverrides: async (_doc, _sid, fragment, rev) => {
      putBodies.push(fragment);
      putRevisions.push(rev);
      const next = script.puts.shift();
      if (!next) throw new Error("unexpected PUT");
      if (next.kind === "ok") serverOverlay = fragment;
      return next;
    },
  };
  return { api, putBodies, putRevisions };
}

function collectStates(): { hooks: { onChange: (s: SessionState) => void; onToast: (m: string) => void }; states: SessionState[]; toasts: string[] } {
  const states: SessionState[] = [];
  const toasts: string[] = [];
  return {
    hooks: {
      onChange: (s) => states.push(s),
      onToast: (m) => toasts.push(m),
    },
    states,
    toasts,
  };
}

describe("SentenceController", () => {
  it("loads the sentence, alignment, scores and overlay fragment", async () => {
    const { api } = mockApi({ puts: [] });
    const { hooks, states } = collectStates();
    const controller = new SentenceController(api, hooks);
    const state = await controller.load("doc", 7);
    expect(state.alignment.matched_frame_count).toBe(2);
    expect(state.fragment.frame_pair_overrides).toEqual([]);
    expect(state.saving).toBe(false);
    expect(states).toHaveLength(1);
  });

  it("applies edits optimistically and commits server results", async () => {
    const updated = alignmentPayload(1);
    updated.alignment = { ...sampleAlignment(), matched_frame_count: 1 };
    updated.scores = { ...sampleScores(), p_mine: 1 / 3 };
    const { api, putBodies, putRevisions } = mockApi({ puts: [{ kind: "ok", payload: updated }] });
    const { hooks, states } = collectStates();
    const controller = new SentenceController(api, hooks);
    await controller.load("doc", 7);

    await controller.rejectPair(1, 1);

    // optimistic frame: fragment already edited, scores still acknowledged ones
    const optimistic = states[1];
    expect(optimistic.saving).toBe(true);
    expect(optimistic.fragment.frame_pair_overrides).toEqual(
      [{ src: 1, tgt: 1, status: "reject" }]);
    expect(optimistic.scores.p_mine).toBe(sampleScores().p_mine);

    const committed = states[2];
    expect(committed.saving).toBe(false);
    expect(committed.revision).toBe(1);
    expect(committed.scores.p_mine).toBe(1 / 3);
    expect(committed.alignment.matched_frame_count).toBe(1);

    expect(putBodies).toHaveLength(1);
    expect(putRevisions).toEqual([0]);
  });

  it("reverts the fragment and toasts when the server rejects the change", async () => {
    const { api } = mockApi({ puts: [{ kind: "rejected", detail: "frame 99 missing" }] });
    const { hooks, states, toasts } = collectStates();
    const controller = new SentenceController(api, hooks);
    await controller.load("doc", 7);

    await controller.rejectPair(0, 0);

    const final = states.at(-1)!;
    expect(final.fragment.frame_pair_overrides).toEqual([]);
    expect(final.saving).toBe(false);
    expect(final.revision).toBe(0);
    expect(toasts[0]).toContain("frame 99 missing");
  });

  it("replays the edit on top of the server overlay after a conflict", async () => {
    const replayedPayload = alignmentPayload(3);
    const { api, putBodies, putRevisions } = mockApi(
      { puts: [{ kind: "conflict", revision: 2 }, { kind: "ok", payload: replayedPayload }] }, 2);
    const { hooks, states, toasts } = collectStates();
    const controller = new SentenceController(api, hooks);
    await controller.load("doc", 7);

    await controller.flagKeyword("target", 0, "Theme", 0, "terminology");

    expect(putBodies).toHaveLength(2);
    // replay carries the same edit and the refreshed revision
    expect(putBodies[1].keyword_flags).toEqual([
      { side: "target", frame: 0, role: "Theme", occurrence: 0, category: "terminology" }]);
    expect(putRevisions[1]).toBe(2);
    const final = states.at(-1)!;
    expect(final.revision).toBe(3);
    expect(final.saving).toBe(false);
    expect(toasts).toHaveLength(0);
  });

  it("converges on server state when the replay also conflicts", async () => {
    const { api } = mockApi(
      { puts: [{ kind: "conflict", revision: 2 }, { kind: "conflict", revision: 4 }] }, 2);
    const { hooks, states, toasts } = collectStates();
    const controller = new SentenceController(api, hooks);
    await controller.load("doc", 7);

    await controller.rejectPair(0, 0);

    const final = states.at(-1)!;
    expect(final.revision).toBe(2);  // refetched from the mock server
    expect(final.saving).toBe(false);
    expect(toasts[0]).toContain("conflict");
  });
});
