"""Independent brute-force oracles used by unit and acceptance tests.

These deliberately re-derive expected values from first principles
(enumeration over all injective assignments) and never call the library's
pairing search, so they stay independent of the code paths they check.
"""

from __future__ import annotations

import itertools
from collections import Counter

from framescore import normalize_label


def multiset_overlap(source_frame, target_frame) -> int:
    source_roles = Counter(normalize_label(e.role) for e in source_frame.elements)
    target_roles = Counter(normalize_label(e.role) for e in target_frame.elements)
    return sum(min(c, target_roles[r]) for r, c in source_roles.items() if r in target_roles)


def brute_force_best_total(source_instances, target_instances) -> int:
    """Max total matched FEs over every injective pairing of the two lists."""
    ns, nt = len(source_instances), len(target_instances)
    k = min(ns, nt)
    if k == 0:
        return 0
    best = 0
    for src_choice in itertools.permutations(range(ns), k):
        for tgt_choice in itertools.permutations(range(nt), k):
            total = sum(multiset_overlap(source_instances[i], target_instances[j])
                        for i, j in zip(src_choice, tgt_choice))
            best = max(best, total)
    return best


def brute_force_matched_elements(pair) -> int:
    """Optimal matched-FE total for a whole sentence, grouped by frame name."""
    source_groups: dict[str, list] = {}
    for frame in pair.source_frames:
        source_groups.setdefault(normalize_label(frame.name), []).append(frame)
    target_groups: dict[str, list] = {}
    for frame in pair.target_frames:
        target_groups.setdefault(normalize_label(frame.name), []).append(frame)
    return sum(brute_force_best_total(source_groups[name], target_groups[name])
               for name in source_groups if name in target_groups)
