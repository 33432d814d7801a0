/** End-to-end: the UI controller and renderer against a live scoring service.
 *
 * Covers the adjudication loop on the worked-example corpus: the senior
 * interpreter's sentence 20 shows five connected pairs with the published
 * score strip; rejecting a pair updates the strip to server-recomputed
 * values; flagging the sentence-42 Manner keyword removes one matched FE.
 */

import { beforeEach, describe, expect, inject, it } from "vitest";

import { createApi } from "../src/api";
import { SentenceController } from "../src/controller";
import type { SessionState } from "../src/controller";
import { renderSentenceView } from "../src/view";

const baseUrl = inject("e2eBaseUrl");

function mountApp() {
  const api = createApi(baseUrl);
  const root = document.createElement("div");
  document.body.appendChild(root);
  const toasts: string[] = [];
  const controller = new SentenceController(api, {
    onChange: (state: SessionState) => {
      renderSentenceView(root, {
        sentence: state.sentence,
        alignment: state.alignment,
        scores: state.scores,
        revision: state.revision,
        saving: state.saving,
      }, state.fragment, {
        onRejectPair: (src, tgt) => void controller.rejectPair(src, tgt),
        onRestorePair: (src, tgt) => void controller.restorePair(src, tgt),
        onAcceptPair: (src, tgt) => void controller.acceptPair(src, tgt),
        onFlag: (side, frame, role, occurrence, category) =>
          void controller.flagKeyword(side, frame, role, occurrence, category),
      });
    },
    onToast: (message) => toasts.push(message),
  });
  return { api, root, controller, toasts };
}

function stripValues(root: HTMLElement): string[] {
  return [...root.querySelectorAll(".score-value")].map((n) => n.textContent ?? "");
}

describe.skipIf(!baseUrl)("adjudication UI against a live service", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
  });

  it("renders sentence 20 with five matched pairs and the published score strip", async () => {
    const { root, controller } = mountApp();
    await controller.load("obama2012-s20-si", 20);

    const pairRows = root.querySelectorAll(".pair-row:not(.rejected)");
    expect(pairRows.length).toBe(5);
    expect(stripValues(root)).toEqual(["0.83", "0.83", "0.83", "0.83", "0.67", "0.74"]);
    expect(root.textContent).toContain("Existence");
    expect(root.querySelectorAll(".frame-card.unmatched").length).toBe(2);
  });

  it("rejecting and restoring a pair round-trips through the server", async () => {
    const { root, controller, toasts } = mountApp();
    await controller.load("obama2012-s20-si", 20);
    const before = controller.current!.revision;

    await controller.rejectPair(1, 0); // the Capability pair
    expect(controller.current!.revision).toBe(before + 1);
    expect(controller.current!.alignment.matched_frame_count).toBe(4);
    // P_MinE recomputed by the server: 4/6
    expect(stripValues(root)[0]).toBe("0.67");
    expect(root.querySelectorAll(".pair-row:not(.rejected)").length).toBe(4);
    expect(root.querySelector(".pair-row.rejected")).not.toBeNull();

    await controller.restorePair(1, 0);
    expect(stripValues(root)).toEqual(["0.83", "0.83", "0.83", "0.83", "0.67", "0.74"]);
    expect(root.querySelectorAll(".pair-row:not(.rejected)").length).toBe(5);
    expect(toasts).toHaveLength(0);
  });

  it("flagging the sentence-42 Manner keyword removes one matched FE", async () => {
    const { root, controller } = mountApp();
    await controller.load("obama2012-s42-si", 42);
    expect(controller.current!.alignment.matched_element_count).toBe(2);

    const mannerChip = root.querySelector(
      '.pair-column.pair-target .fe-chip[data-role="Manner"]')!;
    const select = mannerChip.querySelector(".flag-select") as HTMLSelectElement;
    select.value = "terminology";
    select.dispatchEvent(new Event("change"));
    await new Promise((r) => setTimeout(r, 400));

    expect(controller.current!.alignment.matched_element_count).toBe(1);
    expect(controller.current!.alignment.flags_applied).toBe(1);
    expect(controller.current!.scores.p_maxe).toBe(0.5);
    const flagged = root.querySelector(
      '.pair-column.pair-target .fe-chip[data-role="Manner"]')!;
    expect(flagged.classList.contains("flagged")).toBe(true);

    // unflag restores the match
    const select2 = flagged.querySelector(".flag-select") as HTMLSelectElement;
    select2.value = "";
    select2.dispatchEvent(new Event("change"));
    await new Promise((r) => setTimeout(r, 400));
    expect(controller.current!.alignment.matched_element_count).toBe(2);
  });

  it("a stale revision is replayed transparently", async () => {
    const { controller } = mountApp();
    await controller.load("obama2012-s20-si", 20);

    // second session writes first; our session's revision goes stale
    const other = createApi(baseUrl);
    const result = await other.putOverrides("obama2012-s20-si", 20, {
      frame_pair_overrides: [{ src: 0, tgt: 3, status: "reject" }],
      keyword_flags: [],
    }, controller.current!.revision);
    expect(result.kind).toBe("ok");

    await controller.rejectPair(1, 0);
    // both decisions survive: the other session's reject and ours
    expect(controller.current!.alignment.matched_frame_count).toBe(3);
    expect(controller.current!.fragment.frame_pair_overrides).toEqual(
      expect.arrayContaining([
        { src: 0, tgt: 3, status: "reject" },
        { src: 1, tgt: 0, status: "reject" },
      ]));

    // clean up for other tests: restore both pairs
    await controller.restorePair(1, 0);
    await controller.restorePair(0, 3);
    expect(controller.current!.alignment.matched_frame_count).toBe(5);
  });
});
