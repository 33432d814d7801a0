"""Frame and frame-element matching between a source sentence and its interpretation.

Matching is multiset-based on canonical labels: a frame in the output matches
a frame in the input when their normalized names agree, and within a matched
frame pair each role contributes min(source occurrences, target occurrences)
matched FEs.  Repeated roles on one side beyond the other side's count add
nothing, which keeps every recall in [0, 1].

Human adjudication enters through overlays: rejecting a proposed pair drops
it (no re-pairing), accepting a pair replaces whatever proposed pairs touched
those frames, and keyword-mistranslation flags each deduct one matched FE
(floored at zero).  All functions are pure; sentences can be aligned
concurrently.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .annotations import FrameInstance, OverrideError, SentencePair, normalize_label
from .overlays import (
    STATUS_ACCEPT,
    STATUS_REJECT,
    KeywordFlag,
    SentenceOverlay,
    SIDE_SOURCE,
)

ORIGIN_PROPOSED = "proposed"
ORIGIN_OVERRIDDEN = "overridden"

# Above this many same-name duplicates per side, pairing switches from
# exhaustive search to greedy best-pair-first.
EXHAUSTIVE_LIMIT = 4


@dataclass(frozen=True)
class FramePair:
    src: int
    tgt: int
    origin: str = ORIGIN_PROPOSED


@dataclass(frozen=True)
class FramePairing:
    pairs: tuple[FramePair, ...]
    unmatched_source: tuple[int, ...]
    unmatched_target: tuple[int, ...]
    origin: str = ORIGIN_PROPOSED


@dataclass(frozen=True)
class PairElementMatches:
    """Per-pair FE match counts, keyed by canonical role label."""

    src: int
    tgt: int
    matched: Mapping[str, int]

    @property
    def total(self) -> int:
        return sum(self.matched.values())


@dataclass(frozen=True)
class FEMatchResult:
    per_pair: tuple[PairElementMatches, ...]
    flags_applied: int = 0

    @property
    def total(self) -> int:
        return sum(p.total for p in self.per_pair)


@dataclass(frozen=True)
class SentenceAlignment:
    """All counts the MinE/MaxE metrics need for one sentence.

    Frame counts cover whole frames; element counts cover FEs.  The matched
    element count is restricted to matched frame pairs and already reflects
    keyword penalties; the target/source element counts are raw totals over
    every frame on that side, matched or not.
    """

    matched_frame_count: int
    target_frame_count: int
    source_frame_count: int
    matched_element_count: int
    target_element_count: int
    source_element_count: int
    pairing: FramePairing
    fe_result: FEMatchResult


def match_frames(source_frames: Sequence[FrameInstance],
                 target_frames: Sequence[FrameInstance],
                 aliases: Mapping[str, str] | None = None) -> tuple[int, dict[str, int]]:
    """Count name-level frame matches: per canonical name, min of the two sides.

    Returns the total matched-frame count and the per-name match multiset.
    Order-independent and deterministic.
    """
    source_names = Counter(normalize_label(f.name, aliases) for f in source_frames)
    target_names = Counter(normalize_label(f.name, aliases) for f in target_frames)
    common = {name: min(count, target_names[name])
              for name, count in source_names.items() if name in target_names}
    return sum(common.values()), common


def match_frame_elements(source_frame: FrameInstance, target_frame: FrameInstance,
                         aliases: Mapping[str, str] | None = None) -> dict[str, int]:
    """Per-role matched FE counts for one frame pair (canonical role labels).

    matched(role) = min(occurrences in source frame, occurrences in target
    frame); surplus occurrences on either side contribute nothing.
    """
    source_roles = Counter(normalize_label(e.role, aliases) for e in source_frame.elements)
    target_roles = Counter(normalize_label(e.role, aliases) for e in target_frame.elements)
    return {role: min(count, target_roles[role])
            for role, count in source_roles.items() if role in target_roles}


def pair_frame_instances(source_instances: Sequence[FrameInstance],
                         target_instances: Sequence[FrameInstance],
                         k: int,
                         aliases: Mapping[str, str] | None = None) -> list[tuple[int, int]]:
    """Injectively pair same-name frame instances, maximizing total matched FEs.

    Exhaustive over all injective assignments while min(|source|, |target|)
    stays small; greedy best-pair-first beyond that.  Positions are relative
    to the given lists.  `k` must equal min(len(source), len(target)).
    """
    ns, nt = len(source_instances), len(target_instances)
    if k != min(ns, nt):
        raise ValueError(f"k must be min(|source|, |target|) = {min(ns, nt)}, got {k}")
    if k == 0:
        return []
    value = [[sum(match_frame_elements(s, t, aliases).values()) for t in target_instances]
             for s in source_instances]
    if k <= EXHAUSTIVE_LIMIT:
        return _pair_exhaustive(value, ns, nt)
    return _pair_greedy(value, source_instances, target_instances, k, aliases)


def _pair_exhaustive(value: list[list[int]], ns: int, nt: int) -> list[tuple[int, int]]:
    # First maximum in lexicographic assignment order; identical instances
    # therefore pair up index-by-index.
    best_pairs: list[tuple[int, int]] | None = None
    best_total = -1
    if ns <= nt:
        for perm in itertools.permutations(range(nt), ns):
            total = sum(value[i][perm[i]] for i in range(ns))
            if total > best_total:
                best_total = total
                best_pairs = [(i, perm[i]) for i in range(ns)]
    else:
        for perm in itertools.permutations(range(ns), nt):
            total = sum(value[perm[j]][j] for j in range(nt))
            if total > best_total:
                best_total = total
                best_pairs = sorted((perm[j], j) for j in range(nt))
    assert best_pairs is not None
    return best_pairs


def _pair_greedy(value: list[list[int]], source_instances: Sequence[FrameInstance],
                 target_instances: Sequence[FrameInstance], k: int,
                 aliases: Mapping[str, str] | None) -> list[tuple[int, int]]:
    # Candidates are ordered by value, then by the unordered pair of frame
    # contents: priorities depend only on content, never on which side or
    # which list position an instance came from, so the chosen totals are
    # invariant under list permutation and source/target swap.  Indices only
    # break ties between interchangeable instances.
    def content_key(frame: FrameInstance) -> tuple:
        return tuple(sorted(Counter(normalize_label(e.role, aliases)
                                    for e in frame.elements).items()))

    source_keys = [content_key(f) for f in source_instances]
    target_keys = [content_key(f) for f in target_instances]
    candidates = sorted(
        ((i, j) for i in range(len(source_instances)) for j in range(len(target_instances))),
        key=lambda ij: (-value[ij[0]][ij[1]],
                        tuple(sorted((source_keys[ij[0]], target_keys[ij[1]]))), ij),
    )
    pairs: list[tuple[int, int]] = []
    used_src: set[int] = set()
    used_tgt: set[int] = set()
    for i, j in candidates:
        if i in used_src or j in used_tgt:
            continue
        pairs.append((i, j))
        used_src.add(i)
        used_tgt.add(j)
        if len(pairs) == k:
            break
    return sorted(pairs)


def apply_keyword_penalties(fe_result: FEMatchResult,
                            flags: Sequence[KeywordFlag],
                            source_frames: Sequence[FrameInstance] | None = None,
                            target_frames: Sequence[FrameInstance] | None = None,
                            aliases: Mapping[str, str] | None = None) -> FEMatchResult:
    """Deduct one matched FE per flag that lands on a currently-matched occurrence.

    An occurrence counts as matched while its ordinal is below the role's
    current matched count, so flags on surplus occurrences have no effect and
    counts never go below zero.  Frame-level counts are untouched.  When the
    sentence frames are supplied, dangling flag references raise OverrideError.
    """
    if source_frames is not None and target_frames is not None:
        for flag in flags:
            _check_flag(flag, source_frames, target_frames, aliases)
    per_pair = [dict(p.matched) for p in fe_result.per_pair]
    applied = 0
    for flag in flags:
        pair_idx = _pair_for_flag(fe_result.per_pair, flag)
        if pair_idx is None:
            continue
        role = normalize_label(flag.role, aliases)
        current = per_pair[pair_idx].get(role, 0)
        if flag.occurrence < current:
            per_pair[pair_idx][role] = current - 1
            applied += 1
    new_pairs = tuple(replace(p, matched=counts)
                      for p, counts in zip(fe_result.per_pair, per_pair))
    return FEMatchResult(per_pair=new_pairs, flags_applied=fe_result.flags_applied + applied)


def _pair_for_flag(per_pair: Sequence[PairElementMatches], flag: KeywordFlag) -> int | None:
    for idx, p in enumerate(per_pair):
        frame = p.src if flag.side == SIDE_SOURCE else p.tgt
        if frame == flag.frame:
            return idx
    return None


def _check_flag(flag: KeywordFlag, source_frames: Sequence[FrameInstance],
                target_frames: Sequence[FrameInstance],
                aliases: Mapping[str, str] | None) -> None:
    frames = source_frames if flag.side == SIDE_SOURCE else target_frames
    if not 0 <= flag.frame < len(frames):
        raise OverrideError(
            f"keyword flag references missing {flag.side} frame {flag.frame}")
    role = normalize_label(flag.role, aliases)
    count = sum(1 for fe in frames[flag.frame].elements
                if normalize_label(fe.role, aliases) == role)
    if count == 0:
        raise OverrideError(
            f"keyword flag references role {flag.role!r} absent from "
            f"{flag.side} frame {flag.frame}")
    if not 0 <= flag.occurrence < count:
        raise OverrideError(
            f"keyword flag occurrence {flag.occurrence} out of range for role "
            f"{flag.role!r} in {flag.side} frame {flag.frame} ({count} occurrence(s))")


def align_sentence(pair: SentencePair, overlay: SentenceOverlay | None = None,
                   aliases: Mapping[str, str] | None = None) -> SentenceAlignment:
    """Full alignment of one sentence: frame pairing, FE matching, penalties."""
    source_frames = pair.source_frames
    target_frames = pair.target_frames
    if overlay is not None:
        _check_overrides(overlay, source_frames, target_frames)

    pairs = _propose_pairs(source_frames, target_frames, aliases)
    overridden = False
    if overlay is not None and overlay.frame_pair_overrides:
        overridden = True
        pairs = _apply_overrides(pairs, overlay.frame_pair_overrides)

    per_pair = tuple(
        PairElementMatches(
            src=p.src, tgt=p.tgt,
            matched=match_frame_elements(source_frames[p.src], target_frames[p.tgt], aliases))
        for p in pairs)
    fe_result = FEMatchResult(per_pair=per_pair)
    if overlay is not None and overlay.keyword_flags:
        fe_result = apply_keyword_penalties(fe_result, overlay.keyword_flags,
                                            source_frames, target_frames, aliases)

    paired_src = {p.src for p in pairs}
    paired_tgt = {p.tgt for p in pairs}
    pairing = FramePairing(
        pairs=tuple(pairs),
        unmatched_source=tuple(i for i in range(len(source_frames)) if i not in paired_src),
        unmatched_target=tuple(i for i in range(len(target_frames)) if i not in paired_tgt),
        origin=ORIGIN_OVERRIDDEN if overridden else ORIGIN_PROPOSED,
    )
    return SentenceAlignment(
        matched_frame_count=len(pairs),
        target_frame_count=len(target_frames),
        source_frame_count=len(source_frames),
        matched_element_count=fe_result.total,
        target_element_count=sum(len(f.elements) for f in target_frames),
        source_element_count=sum(len(f.elements) for f in source_frames),
        pairing=pairing,
        fe_result=fe_result,
    )


def _propose_pairs(source_frames: Sequence[FrameInstance],
                   target_frames: Sequence[FrameInstance],
                   aliases: Mapping[str, str] | None) -> list[FramePair]:
    by_name_src: dict[str, list[int]] = {}
    for i, frame in enumerate(source_frames):
        by_name_src.setdefault(normalize_label(frame.name, aliases), []).append(i)
    by_name_tgt: dict[str, list[int]] = {}
    for j, frame in enumerate(target_frames):
        by_name_tgt.setdefault(normalize_label(frame.name, aliases), []).append(j)

    pairs: list[FramePair] = []
    for name, src_positions in by_name_src.items():
        tgt_positions = by_name_tgt.get(name)
        if not tgt_positions:
            continue
        k = min(len(src_positions), len(tgt_positions))
        local = pair_frame_instances([source_frames[i] for i in src_positions],
                                     [target_frames[j] for j in tgt_positions], k, aliases)
        pairs.extend(FramePair(src=src_positions[li], tgt=tgt_positions[lj])
                     for li, lj in local)
    return sorted(pairs, key=lambda p: p.src)


def _check_overrides(overlay: SentenceOverlay, source_frames: Sequence[FrameInstance],
                     target_frames: Sequence[FrameInstance]) -> None:
    for override in overlay.frame_pair_overrides:
        if not 0 <= override.src < len(source_frames):
            raise OverrideError(
                f"override references missing source frame {override.src}")
        if not 0 <= override.tgt < len(target_frames):
            raise OverrideError(
                f"override references missing target frame {override.tgt}")


def _apply_overrides(pairs: list[FramePair],
                     overrides: Sequence) -> list[FramePair]:
    current = list(pairs)
    for override in overrides:
        if override.status == STATUS_REJECT:
            current = [p for p in current
                       if not (p.src == override.src and p.tgt == override.tgt)]
        elif override.status == STATUS_ACCEPT:
            current = [p for p in current
                       if p.src != override.src and p.tgt != override.tgt]
            current.append(FramePair(src=override.src, tgt=override.tgt,
                                     origin=ORIGIN_OVERRIDDEN))
    return sorted(current, key=lambda p: p.src)
