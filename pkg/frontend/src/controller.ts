/** Sentence session state and the optimistic mutation flow.
 *
 * Every mutation edits the local overlay fragment, repaints immediately
 * (pair/flag chips show the intent; the score strip keeps the last
 * server-acknowledged values and shows a saving marker), then PUTs the whole
 * fragment with If-Match.  On 409 the controller refetches the server
 * overlay, replays the same edit on top of it, and retries once; on a
 * validation rejection it reverts the fragment and surfaces the message.
 */

import type { Api } from "./api";
import {
  EMPTY_FRAGMENT,
  cloneFragment,
  setKeywordFlag,
  setPairDecision,
} from "./overlay";
import type {
  AlignmentView,
  OverlayFragment,
  PairStatus,
  ScoresView,
  Sentence,
  Side,
} from "./types";

export interface SessionState {
  docId: string;
  sentenceId: number;
  sentence: Sentence;
  alignment: AlignmentView;
  scores: ScoresView;
  revision: number;
  fragment: OverlayFragment;
  saving: boolean;
}

export interface ControllerHooks {
  onChange(state: SessionState): void;
  onToast(message: string): void;
}

type Edit = (fragment: OverlayFragment) => OverlayFragment;

export class SentenceController {
  private state: SessionState | null = null;

  constructor(
    private api: Api,
    private hooks: ControllerHooks,
  ) {}

  get current(): SessionState | null {
    return this.state;
  }

  async load(docId: string, sentenceId: number): Promise<SessionState> {
    const [doc, alignmentPayload] = await Promise.all([
      this.api.getDocument(docId),
      this.api.getAlignment(docId, sentenceId),
    ]);
    const sentence = doc.document.sentences.find((s) => s.id === sentenceId);
    if (!sentence) throw new Error(`document ${docId} has no sentence ${sentenceId}`);
    const entry = doc.overlay.sentence_overlays.find((o) => o.sentence_id === sentenceId);
    this.state = {
      docId,
      sentenceId,
      sentence,
      alignment: alignmentPayload.alignment,
      scores: alignmentPayload.scores,
      revision: alignmentPayload.revision,
      fragment: entry
        ? { frame_pair_overrides: entry.frame_pair_overrides,
            keyword_flags: entry.keyword_flags }
        : cloneFragment(EMPTY_FRAGMENT),
      saving: false,
    };
    this.hooks.onChange(this.state);
    return this.state;
  }

  rejectPair(src: number, tgt: number): Promise<void> {
    return this.mutate((f) => setPairDecision(f, src, tgt, "reject"));
  }

  restorePair(src: number, tgt: number): Promise<void> {
    return this.mutate((f) => setPairDecision(f, src, tgt, null));
  }

  acceptPair(src: number, tgt: number): Promise<void> {
    return this.mutate((f) => setPairDecision(f, src, tgt, "accept"));
  }

  setDecision(src: number, tgt: number, status: PairStatus | null): Promise<void> {
    return this.mutate((f) => setPairDecision(f, src, tgt, status));
  }

  flagKeyword(side: Side, frame: number, role: string, occurrence: number,
              category: string | null): Promise<void> {
    return this.mutate((f) => setKeywordFlag(f, side, frame, role, occurrence, category));
  }

  private async mutate(edit: Edit): Promise<void> {
    if (!this.state) throw new Error("no sentence loaded");
    const snapshot = this.state.fragment;
    const candidate = edit(snapshot);

    // optimistic: chips show the intent at once, scores stay acknowledged
    this.state = { ...this.state, fragment: candidate, saving: true };
    this.hooks.onChange(this.state);

    const outcome = await this.putWithReplay(candidate, edit);
    if (!this.state) return;
    if (outcome === "reverted") {
      this.state = { ...this.state, fragment: snapshot, saving: false };
    } else {
      this.state = { ...this.state, saving: false };
    }
    this.hooks.onChange(this.state);
  }

  private async putWithReplay(candidate: OverlayFragment, edit: Edit):
      Promise<"committed" | "reverted"> {
    const state = this.state!;
    const first = await this.api.putOverrides(
      state.docId, state.sentenceId, candidate, state.revision);

    if (first.kind === "ok") {
      this.commit(candidate, first.payload.alignment, first.payload.scores,
        first.payload.revision);
      return "committed";
    }
    if (first.kind === "rejected") {
      this.hooks.onToast(`change rejected: ${first.detail}`);
      return "reverted";
    }

    // conflict: converge on the server revision, replay the edit, retry once
    const doc = await this.api.getDocument(state.docId);
    const entry = doc.overlay.sentence_overlays.find(
      (o) => o.sentence_id === state.sentenceId);
    const serverFragment: OverlayFragment = entry
      ? { frame_pair_overrides: entry.frame_pair_overrides,
          keyword_flags: entry.keyword_flags }
      : cloneFragment(EMPTY_FRAGMENT);
    const replayed = edit(serverFragment);
    const second = await this.api.putOverrides(
      state.docId, state.sentenceId, replayed, doc.revision);
    if (second.kind === "ok") {
      this.commit(replayed, second.payload.alignment, second.payload.scores,
        second.payload.revision);
      return "committed";
    }
    if (second.kind === "rejected") {
      this.hooks.onToast(`change rejected: ${second.detail}`);
    } else {
      this.hooks.onToast("edit conflicts with another session; reloading server state");
    }
    // give up: fall back to whatever the server has
    const fresh = await this.api.getAlignment(state.docId, state.sentenceId);
    if (this.state) {
      this.state = {
        ...this.state,
        fragment: serverFragment,
        alignment: fresh.alignment,
        scores: fresh.scores,
        revision: fresh.revision,
      };
    }
    return "committed";
  }

  private commit(fragment: OverlayFragment, alignment: AlignmentView,
                 scores: ScoresView, revision: number): void {
    if (!this.state) return;
    this.state = { ...this.state, fragment, alignment, scores, revision };
  }
}
