/** Payload shapes of the adjudication HTTP API. */

export interface DocumentSummary {
  doc_id: string;
  system_id: string;
  source_lang: string;
  target_lang: string;
  sentence_count: number;
  sentence_ids: number[];
  avg_f_mine: number | null;
  avg_f_maxe: number | null;
  revision: number;
}

export interface KeywordMention {
  category: string;
  text: string;
}

export interface FrameElement {
  role: string;
  text: string;
  span?: [number, number];
  keywords: KeywordMention[];
}

export interface Frame {
  name: string;
  lu_text: string;
  lu_span?: [number, number];
  elements: FrameElement[];
}

export interface Sentence {
  id: number;
  source_text: string;
  target_text: string;
  source_frames: Frame[];
  target_frames: Frame[];
}

export interface AnnotatedDocument {
  doc_id: string;
  source_lang: string;
  target_lang: string;
  system_id: string;
  sentences: Sentence[];
}

export type Side = "source" | "target";
export type PairStatus = "accept" | "reject";

export interface FramePairOverride {
  src: number;
  tgt: number;
  status: PairStatus;
}

export interface KeywordFlag {
  side: Side;
  frame: number;
  role: string;
  occurrence: number;
  category: string;
}

/** The per-sentence overlay fragment PUT to the server. */
export interface OverlayFragment {
  frame_pair_overrides: FramePairOverride[];
  keyword_flags: KeywordFlag[];
}

export interface SentenceOverlayEntry extends OverlayFragment {
  sentence_id: number;
}

export interface DocumentPayload {
  document: AnnotatedDocument;
  overlay: { doc_id: string; sentence_overlays: SentenceOverlayEntry[] };
  revision: number;
}

export interface PairView {
  src: number;
  tgt: number;
  src_name: string;
  tgt_name: string;
  origin: "proposed" | "overridden";
  element_matches: Record<string, number>;
  matched_elements: number;
}

export interface AlignmentView {
  matched_frame_count: number;
  target_frame_count: number;
  source_frame_count: number;
  matched_element_count: number;
  target_element_count: number;
  source_element_count: number;
  origin: "proposed" | "overridden";
  pairs: PairView[];
  unmatched_source: { index: number; name: string }[];
  unmatched_target: { index: number; name: string }[];
  flags_applied: number;
}

export interface ScoresView {
  p_mine: number | null;
  r_mine: number | null;
  f_mine: number | null;
  p_maxe: number | null;
  r_maxe: number | null;
  f_maxe: number | null;
}

export interface AlignmentPayload {
  doc_id: string;
  sentence_id: number;
  revision: number;
  alignment: AlignmentView;
  scores: ScoresView;
}

export type PutResult =
  | { kind: "ok"; payload: AlignmentPayload }
  | { kind: "conflict"; revision: number }
  | { kind: "rejected"; detail: string };
