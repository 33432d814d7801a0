/** Pure edits on the per-sentence overlay fragment.
 *
 * The fragment is the unit the server PUTs replace, so every operation
 * returns a fresh value; callers send the whole fragment and let the server
 * recompute.  The UI never derives scores from these structures.
 */

import type { KeywordFlag, OverlayFragment, PairStatus, Side } from "./types";

export const EMPTY_FRAGMENT: OverlayFragment = {
  frame_pair_overrides: [],
  keyword_flags: [],
};

export function cloneFragment(fragment: OverlayFragment): OverlayFragment {
  return {
    frame_pair_overrides: fragment.frame_pair_overrides.map((o) => ({ ...o })),
    keyword_flags: fragment.keyword_flags.map((f) => ({ ...f })),
  };
}

/** Set or clear the human decision on one (source, target) pair. */
export function setPairDecision(
  fragment: OverlayFragment,
  src: number,
  tgt: number,
  status: PairStatus | null,
): OverlayFragment {
  const rest = fragment.frame_pair_overrides.filter(
    (o) => !(o.src === src && o.tgt === tgt),
  );
  if (status !== null) rest.push({ src, tgt, status });
  return { ...cloneFragment({ ...fragment, frame_pair_overrides: rest }) };
}

export function pairDecision(
  fragment: OverlayFragment,
  src: number,
  tgt: number,
): PairStatus | null {
  const found = fragment.frame_pair_overrides.find((o) => o.src === src && o.tgt === tgt);
  return found ? found.status : null;
}

function sameOccurrence(a: KeywordFlag, side: Side, frame: number, role: string, occurrence: number): boolean {
  return a.side === side && a.frame === frame && a.role === role && a.occurrence === occurrence;
}

/** Replace the flag (if any) on one FE occurrence; empty category unflags. */
export function setKeywordFlag(
  fragment: OverlayFragment,
  side: Side,
  frame: number,
  role: string,
  occurrence: number,
  category: string | null,
): OverlayFragment {
  const rest = fragment.keyword_flags.filter(
    (f) => !sameOccurrence(f, side, frame, role, occurrence),
  );
  if (category) rest.push({ side, frame, role, occurrence, category });
  return { ...cloneFragment({ ...fragment, keyword_flags: rest }) };
}

export function flagOn(
  fragment: OverlayFragment,
  side: Side,
  frame: number,
  role: string,
  occurrence: number,
): KeywordFlag | null {
  return (
    fragment.keyword_flags.find((f) => sameOccurrence(f, side, frame, role, occurrence)) ?? null
  );
}

export function isEmpty(fragment: OverlayFragment): boolean {
  return fragment.frame_pair_overrides.length === 0 && fragment.keyword_flags.length === 0;
}
