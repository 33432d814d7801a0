/** DOM rendering for the sentence adjudication view.
 *
 * Pure construction from state: no score arithmetic happens here; every
 * number shown was computed by the server.
 */

import { canonicalLabel, roleBorderColor, roleColor } from "./colors";
import { flagOn } from "./overlay";
import type {
  AlignmentView,
  Frame,
  OverlayFragment,
  ScoresView,
  Sentence,
  Side,
} from "./types";

export const KEYWORD_CATEGORIES = ["terminology", "name", "time_expression", "number"];

export interface ViewCallbacks {
  onRejectPair(src: number, tgt: number): void;
  onRestorePair(src: number, tgt: number): void;
  onAcceptPair(src: number, tgt: number): void;
  onFlag(side: Side, frame: number, role: string, occurrence: number,
         category: string | null): void;
}

export interface SentenceViewState {
  sentence: Sentence;
  alignment: AlignmentView;
  scores: ScoresView;
  revision: number;
  saving: boolean;
}

export function formatScore(value: number | null): string {
  return value === null ? "–" : value.toFixed(2);
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

/** Ordinal of an element among same-role elements of its frame. */
export function roleOccurrence(frame: Frame, elementIndex: number): number {
  const wanted = canonicalLabel(frame.elements[elementIndex].role);
  let ordinal = 0;
  for (let i = 0; i < elementIndex; i++) {
    if (canonicalLabel(frame.elements[i].role) === wanted) ordinal++;
  }
  return ordinal;
}

export function renderScoreStrip(state: SentenceViewState): HTMLElement {
  const strip = el("div", "score-strip");
  const entries: [string, number | null][] = [
    ["P_MinE", state.scores.p_mine],
    ["R_MinE", state.scores.r_mine],
    ["F_MinE", state.scores.f_mine],
    ["P_MaxE", state.scores.p_maxe],
    ["R_MaxE", state.scores.r_maxe],
    ["F_MaxE", state.scores.f_maxe],
  ];
  for (const [label, value] of entries) {
    const cell = el("div", "score-cell");
    cell.appendChild(el("div", "score-label", label));
    const valueNode = el("div", "score-value", formatScore(value));
    valueNode.dataset.metric = label;
    cell.appendChild(valueNode);
    strip.appendChild(cell);
  }
  const revision = el("div", "revision-indicator",
    state.saving ? `rev ${state.revision} · saving…` : `rev ${state.revision}`);
  if (state.saving) revision.classList.add("saving");
  strip.appendChild(revision);
  return strip;
}

function renderKeywordBadges(frame: Frame, elementIndex: number): HTMLElement | null {
  const keywords = frame.elements[elementIndex].keywords;
  if (!keywords.length) return null;
  const wrap = el("span", "keyword-badges");
  for (const kw of keywords) {
    const badge = el("span", "keyword-badge", kw.text);
    badge.title = kw.category;
    wrap.appendChild(badge);
  }
  return wrap;
}

function renderElementChip(
  side: Side,
  frameIndex: number,
  frame: Frame,
  elementIndex: number,
  fragment: OverlayFragment,
  callbacks: ViewCallbacks,
  interactive: boolean,
): HTMLElement {
  const element = frame.elements[elementIndex];
  const occurrence = roleOccurrence(frame, elementIndex);
  const chip = el("span", "fe-chip");
  chip.style.background = roleColor(element.role);
  chip.style.borderColor = roleBorderColor(element.role);
  chip.dataset.side = side;
  chip.dataset.frame = String(frameIndex);
  chip.dataset.role = element.role;
  chip.dataset.occurrence = String(occurrence);

  const flag = flagOn(fragment, side, frameIndex, element.role, occurrence);
  const label = el("span", "fe-text", element.text ? `${element.role}: ${element.text}` : element.role);
  if (flag) {
    label.classList.add("flagged");
    chip.classList.add("flagged");
    chip.title = `keyword flagged as ${flag.category}`;
  }
  chip.appendChild(label);
  const badges = renderKeywordBadges(frame, elementIndex);
  if (badges) chip.appendChild(badges);

  if (interactive) {
    const select = el("select", "flag-select") as HTMLSelectElement;
    const none = document.createElement("option");
    none.value = "";
    none.textContent = "no flag";
    select.appendChild(none);
    for (const category of KEYWORD_CATEGORIES) {
      const option = document.createElement("option");
      option.value = category;
      option.textContent = `flag: ${category}`;
      select.appendChild(option);
    }
    select.value = flag ? flag.category : "";
    select.addEventListener("change", () => {
      callbacks.onFlag(side, frameIndex, element.role, occurrence,
        select.value === "" ? null : select.value);
    });
    chip.appendChild(select);
  }
  return chip;
}

function renderFrameCard(
  side: Side,
  frameIndex: number,
  frame: Frame,
  matched: boolean,
  fragment: OverlayFragment,
  callbacks: ViewCallbacks,
): HTMLElement {
  const card = el("div", matched ? "frame-card matched" : "frame-card unmatched");
  card.dataset.side = side;
  card.dataset.index = String(frameIndex);
  const header = el("div", "frame-header");
  header.appendChild(el("span", "frame-name", frame.name));
  header.appendChild(el("span", "frame-lu", frame.lu_text));
  if (!matched) header.appendChild(el("span", "unmatched-tag", "unmatched"));
  card.appendChild(header);
  const elements = el("div", "frame-elements");
  frame.elements.forEach((_, elementIndex) => {
    elements.appendChild(renderElementChip(
      side, frameIndex, frame, elementIndex, fragment, callbacks, false));
  });
  card.appendChild(elements);
  return card;
}

export function renderPanel(
  side: Side,
  sentence: Sentence,
  alignment: AlignmentView,
  fragment: OverlayFragment,
  callbacks: ViewCallbacks,
): HTMLElement {
  const frames = side === "source" ? sentence.source_frames : sentence.target_frames;
  const text = side === "source" ? sentence.source_text : sentence.target_text;
  const matchedIndexes = new Set(
    alignment.pairs.map((p) => (side === "source" ? p.src : p.tgt)));

  const panel = el("section", `panel panel-${side}`);
  panel.appendChild(el("h3", "panel-title", side === "source" ? "Source" : "Interpretation"));
  panel.appendChild(el("p", "sentence-text", text));
  if (!frames.length) {
    panel.appendChild(el("p", "zero-state", "No frames annotated on this side."));
    return panel;
  }
  const list = el("div", "frame-list");
  frames.forEach((frame, index) => {
    list.appendChild(renderFrameCard(
      side, index, frame, matchedIndexes.has(index), fragment, callbacks));
  });
  panel.appendChild(list);
  return panel;
}

function pairDetail(
  sentence: Sentence,
  src: number,
  tgt: number,
  fragment: OverlayFragment,
  callbacks: ViewCallbacks,
): HTMLElement {
  const detail = el("div", "pair-detail");
  const sides: [Side, Frame, number][] = [
    ["source", sentence.source_frames[src], src],
    ["target", sentence.target_frames[tgt], tgt],
  ];
  for (const [side, frame, frameIndex] of sides) {
    const column = el("div", `pair-column pair-${side}`);
    column.appendChild(el("div", "pair-column-title",
      side === "source" ? "source FEs" : "target FEs"));
    if (!frame.elements.length) {
      column.appendChild(el("div", "zero-state", "no FEs"));
    }
    frame.elements.forEach((_, elementIndex) => {
      column.appendChild(renderElementChip(
        side, frameIndex, frame, elementIndex, fragment, callbacks, true));
    });
    detail.appendChild(column);
  }
  return detail;
}

export function renderMatchList(
  sentence: Sentence,
  alignment: AlignmentView,
  fragment: OverlayFragment,
  callbacks: ViewCallbacks,
): HTMLElement {
  const section = el("section", "match-list");
  section.appendChild(el("h3", undefined, "Frame matches"));

  if (!alignment.pairs.length && !fragment.frame_pair_overrides.length) {
    section.appendChild(el("p", "zero-state", "No matched frames."));
  }

  for (const pair of alignment.pairs) {
    const row = el("div", "pair-row");
    row.dataset.src = String(pair.src);
    row.dataset.tgt = String(pair.tgt);
    const head = el("div", "pair-head");
    head.appendChild(el("span", "pair-names", `${pair.src_name} ↔ ${pair.tgt_name}`));
    const status = el("span", `status-chip ${pair.origin}`, pair.origin);
    head.appendChild(status);
    head.appendChild(el("span", "pair-matched", `matched FEs: ${pair.matched_elements}`));
    const reject = el("button", "reject-button", "reject") as HTMLButtonElement;
    reject.addEventListener("click", () => callbacks.onRejectPair(pair.src, pair.tgt));
    head.appendChild(reject);
    row.appendChild(head);
    row.appendChild(pairDetail(sentence, pair.src, pair.tgt, fragment, callbacks));
    section.appendChild(row);
  }

  // pairs the evaluator rejected: offer to restore them
  for (const override of fragment.frame_pair_overrides) {
    if (override.status !== "reject") continue;
    const stillPaired = alignment.pairs.some(
      (p) => p.src === override.src && p.tgt === override.tgt);
    if (stillPaired) continue;
    const srcName = sentence.source_frames[override.src]?.name ?? `#${override.src}`;
    const tgtName = sentence.target_frames[override.tgt]?.name ?? `#${override.tgt}`;
    const row = el("div", "pair-row rejected");
    row.dataset.src = String(override.src);
    row.dataset.tgt = String(override.tgt);
    const head = el("div", "pair-head");
    head.appendChild(el("span", "pair-names", `${srcName} ↔ ${tgtName}`));
    head.appendChild(el("span", "status-chip rejected", "rejected"));
    const restore = el("button", "restore-button", "restore") as HTMLButtonElement;
    restore.addEventListener("click", () => callbacks.onRestorePair(override.src, override.tgt));
    head.appendChild(restore);
    row.appendChild(head);
    section.appendChild(row);
  }

  section.appendChild(renderUnmatched(alignment, callbacks));
  return section;
}

function renderUnmatched(
  alignment: AlignmentView,
  callbacks: ViewCallbacks,
): HTMLElement {
  const wrap = el("div", "unmatched-section");
  if (!alignment.unmatched_source.length && !alignment.unmatched_target.length) {
    return wrap;
  }
  wrap.appendChild(el("h4", undefined, "Unmatched frames"));
  const picker = el("div", "unmatched-picker");
  let chosenSrc: number | null = null;
  let chosenTgt: number | null = null;

  const acceptButton = el("button", "accept-button", "accept selected pair") as HTMLButtonElement;
  acceptButton.disabled = true;

  const refresh = () => {
    acceptButton.disabled = chosenSrc === null || chosenTgt === null;
  };

  const column = (side: Side, entries: { index: number; name: string }[]) => {
    const box = el("div", `unmatched-column unmatched-${side}`);
    box.appendChild(el("div", "pair-column-title", `${side} frames`));
    if (!entries.length) box.appendChild(el("div", "zero-state", "none"));
    for (const entry of entries) {
      const label = el("label", "unmatched-option");
      const radio = document.createElement("input");
      radio.type = "radio";
      radio.name = `unmatched-${side}`;
      radio.value = String(entry.index);
      radio.addEventListener("change", () => {
        if (side === "source") chosenSrc = entry.index;
        else chosenTgt = entry.index;
        refresh();
      });
      label.appendChild(radio);
      label.appendChild(el("span", undefined, `${entry.name} (#${entry.index})`));
      box.appendChild(label);
    }
    return box;
  };

  picker.appendChild(column("source", alignment.unmatched_source));
  picker.appendChild(column("target", alignment.unmatched_target));
  wrap.appendChild(picker);
  acceptButton.addEventListener("click", () => {
    if (chosenSrc !== null && chosenTgt !== null) {
      callbacks.onAcceptPair(chosenSrc, chosenTgt);
    }
  });
  wrap.appendChild(acceptButton);
  return wrap;
}

export function renderSentenceView(
  root: HTMLElement,
  state: SentenceViewState,
  fragment: OverlayFragment,
  callbacks: ViewCallbacks,
): void {
  root.textContent = "";
  if (!state.sentence.source_frames.length && !state.sentence.target_frames.length
      && !state.sentence.source_text && !state.sentence.target_text) {
    root.appendChild(el("p", "zero-state", "This sentence has no annotation."));
    return;
  }
  root.appendChild(renderScoreStrip(state));
  const panels = el("div", "panels");
  panels.appendChild(renderPanel("source", state.sentence, state.alignment, fragment, callbacks));
  panels.appendChild(renderPanel("target", state.sentence, state.alignment, fragment, callbacks));
  root.appendChild(panels);
  root.appendChild(renderMatchList(state.sentence, state.alignment, fragment, callbacks));
}

export function renderError(root: HTMLElement, message: string, onRetry: () => void): void {
  root.textContent = "";
  const box = el("div", "error-state");
  box.appendChild(el("p", undefined, message));
  const retry = el("button", "retry-button", "retry") as HTMLButtonElement;
  retry.addEventListener("click", onRetry);
  box.appendChild(retry);
  root.appendChild(box);
}
