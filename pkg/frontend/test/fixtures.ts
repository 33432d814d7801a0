import type {
  AlignmentView,
  Frame,
  ScoresView,
  Sentence,
} from "../src/types";

export function frame(name: string, lu: string, roles: [string, string][]): Frame {
  return {
    name,
    lu_text: lu,
    elements: roles.map(([role, text]) => ({ role, text, keywords: [] })),
  };
}

/** Two matched frames plus one unmatched on each side. */
export function sampleSentence(): Sentence {
  return {
    id: 7,
    source_text: "We must bring new jobs to our shores.",
    target_text: "我们必须带来新的工作。",
    source_frames: [
      frame("Bringing", "bring", [["Theme", "new jobs"], ["Theme", "businesses"], ["Goal", "to our shores"]]),
      frame("Capability", "can", [["Entity", "we"]]),
      frame("Supply", "equip", [["Recipient", "children"]]),
    ],
    target_frames: [
      frame("Bringing", "带来", [["Theme", "新的工作"], ["Goal", "我们"]]),
      frame("Capability", "能够", [["Entity", "我们"]]),
      frame("Existence", "没有", [["Entity", "一个人"]]),
    ],
  };
}

export function sampleAlignment(): AlignmentView {
  return {
    matched_frame_count: 2,
    target_frame_count: 3,
    source_frame_count: 3,
    matched_element_count: 3,
    target_element_count: 4,
    source_element_count: 5,
    origin: "proposed",
    pairs: [
      {
        src: 0, tgt: 0, src_name: "Bringing", tgt_name: "Bringing",
        origin: "proposed", element_matches: { theme: 1, goal: 1 }, matched_elements: 2,
      },
      {
        src: 1, tgt: 1, src_name: "Capability", tgt_name: "Capability",
        origin: "proposed", element_matches: { entity: 1 }, matched_elements: 1,
      },
    ],
    unmatched_source: [{ index: 2, name: "Supply" }],
    unmatched_target: [{ index: 2, name: "Existence" }],
    flags_applied: 0,
  };
}

export function sampleScores(): ScoresView {
  return {
    p_mine: 2 / 3, r_mine: 2 / 3, f_mine: 2 / 3,
    p_maxe: 3 / 4, r_maxe: 3 / 5, f_maxe: 2 / 3,
  };
}
