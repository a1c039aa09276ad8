"""Plane sweep over the run-length-compressed offset lists.

Each tandem run is processed as a single unit: one position test covers all
``ctr`` copies, and ``gamma`` accumulates the ``ctr - 1`` tests skipped per
touched run. Critical-range boundaries that land on a run snap to the run
endpoint nearest the rest of the range, so answers match the raw sweep:

* a left boundary run contributes its last position,
* a right boundary run contributes its first position,
* a critical lying wholly inside one run (single-keyword candidacy) is
  reported once, anchored at the run start, instead of once per copy.
"""

from __future__ import annotations

import heapq

from .index import PositionalIndex
from .sweep import Interval, Query, SearchStats, SweepResult, minimal_of


class UnsupportedFrequencyError(ValueError):
    """Run-aware sweeps only support per-keyword frequency 1."""

    def __init__(self, message: str = "unsupported frequency"):
        super().__init__(message)


# One merged-list element: (start, ctr, keyword slot, underlying entry id).
RunItem = tuple[int, int, int, tuple[int, int]]


def _sweep_runs(
    items: list[RunItem],
    threshold: int,
    nkeywords: int,
    stats: SearchStats,
    seen_r: set | None = None,
    seen_l: set | None = None,
) -> list[Interval]:
    """Two-pointer critical-range sweep at run granularity (all freqs = 1).

    ``seen_r``/``seen_l`` let a caller sweeping several disjoint regions avoid
    re-counting an entry that straddles a region boundary: its offset-list
    entry was already probed once, so revisiting a fragment of it is free.
    """
    counts = [0] * nkeywords
    satisfied = 0
    criticals: list[Interval] = []
    m = len(items)
    r = -1
    for l in range(m):
        while satisfied < threshold and r + 1 < m:
            r += 1
            start, ctr, ki, eid = items[r]
            if seen_r is None or eid not in seen_r:
                stats.count(skipped=ctr - 1)
                if seen_r is not None:
                    seen_r.add(eid)
            counts[ki] += 1
            if counts[ki] == 1:
                satisfied += 1
        if satisfied < threshold:
            break
        stats.ranges_examined += 1
        lstart, lctr, lki, leid = items[l]
        if seen_l is None or leid not in seen_l:
            # the l pointer revisits a run the r pointer already tested, so
            # its skipped copies are already in gamma
            stats.count()
            if seen_l is not None:
                seen_l.add(leid)
        if counts[lki] == 1:
            satisfied -= 1
        counts[lki] -= 1
        if satisfied < threshold:
            if l == r:
                criticals.append(Interval(lstart, lstart))
            else:
                criticals.append(Interval(lstart + lctr - 1, items[r][0]))
    return criticals


def _merged_runs(index: PositionalIndex, query: Query) -> list[RunItem]:
    streams = []
    for ki, keyword in enumerate(query.keywords):
        entries = index.runs(keyword)
        if entries:
            streams.append([(e.start, e.ctr, ki, (ki, e.start)) for e in entries])
    return list(heapq.merge(*streams))


def wpsr_sweep(index: PositionalIndex, query: Query) -> SweepResult:
    """Run-aware plane sweep; same critical set as :func:`plane_sweep` except
    that copies of a critical shifted inside one tandem run collapse to the
    run-boundary representative.

    Restricted to unit frequencies; raises :class:`UnsupportedFrequencyError`
    otherwise. ``comparisons`` never exceeds the raw sweep's and is strictly
    smaller whenever a run with ``ctr > 1`` is touched.
    """
    if any(f != 1 for f in query.freqs):
        raise UnsupportedFrequencyError()
    stats = SearchStats()
    satisfiable = sum(1 for keyword in query.keywords if index.runs(keyword))
    if satisfiable < query.threshold:
        return SweepResult([], None, stats, index)

    criticals = _sweep_runs(_merged_runs(index, query), query.threshold, query.size, stats)
    stats.ranges_emitted = len(criticals)
    return SweepResult(criticals, minimal_of(criticals), stats, index)
