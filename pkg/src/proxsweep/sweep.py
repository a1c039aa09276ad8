"""Classic plane sweep over raw (uncompressed) position lists.

A window ``[s, e]`` of token positions is a *candidate* for a query when at
least ``threshold`` distinct query keywords each occur at least ``f_i`` times
inside it. A *critical range* is a candidate whose endpoints sit on query
keyword occurrences and which stops being a candidate if either endpoint is
shrunk by one position. The sweep enumerates exactly the critical ranges with
two pointers over the merged occurrence list, counting every pointer-advance
position test.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .index import PositionalIndex


@dataclass(frozen=True)
class Query:
    """An unordered proximity query.

    ``keywords`` are pairwise distinct; ``freqs[i]`` is the required number of
    occurrences of ``keywords[i]`` inside a candidate window (default 1);
    ``threshold`` is how many distinct keywords must meet their requirement
    (default: all of them). Keyword order only matters for tie-breaking.
    """

    keywords: tuple[str, ...]
    freqs: tuple[int, ...]
    threshold: int

    def __init__(self, keywords, freqs=None, threshold=None):
        kws = tuple(keywords)
        if not kws:
            raise ValueError("query needs at least one keyword")
        if len(set(kws)) != len(kws):
            raise ValueError("query keywords must be pairwise distinct")
        fs = tuple(freqs) if freqs is not None else (1,) * len(kws)
        if len(fs) != len(kws):
            raise ValueError("freqs must align with keywords")
        if any(f < 1 for f in fs):
            raise ValueError("frequencies must be >= 1")
        th = threshold if threshold is not None else len(kws)
        if not 1 <= th <= len(kws):
            raise ValueError("threshold must be in [1, number of keywords]")
        object.__setattr__(self, "keywords", kws)
        object.__setattr__(self, "freqs", fs)
        object.__setattr__(self, "threshold", th)

    @property
    def size(self) -> int:
        """Number of query keywords (k')."""
        return len(self.keywords)


@dataclass(frozen=True, order=True)
class Interval:
    """Closed token-position range ``[start, end]``."""

    start: int
    end: int

    @property
    def size(self) -> int:
        return self.end - self.start + 1


@dataclass
class SearchStats:
    """Comparison counters for one search.

    ``comparisons`` counts executed position tests (one per offset-list entry
    touched by a pointer). ``beta`` is what an uncompressed sweep would have
    executed over the same region, ``gamma`` the tests skipped thanks to run
    counters; ``cn == beta - gamma == comparisons`` holds exactly, by counter
    arithmetic. ``ranges_examined`` counts candidate windows tested for
    criticality, ``ranges_emitted`` the critical ranges returned.
    """

    comparisons: int = 0
    beta: int = 0
    gamma: int = 0
    ranges_examined: int = 0
    ranges_emitted: int = 0

    @property
    def cn(self) -> int:
        return self.beta - self.gamma

    def count(self, skipped: int = 0) -> None:
        """Record one executed position test that spared ``skipped`` others."""
        self.comparisons += 1
        self.beta += 1 + skipped
        self.gamma += skipped


@dataclass
class SweepResult:
    """Critical ranges of one search plus its comparison counters.

    ``criticals`` come in the algorithm's output order (ascending start for
    the sweeps, size-then-start for the windowed search); ``minimal`` is the
    smallest critical, ties broken by start.
    """

    criticals: list[Interval]
    minimal: Interval | None
    stats: SearchStats
    index: PositionalIndex = field(repr=False)


def minimal_of(criticals: list[Interval]) -> Interval | None:
    if not criticals:
        return None
    return min(criticals, key=lambda iv: (iv.size, iv.start))


def is_candidate(window: Interval, index: PositionalIndex, query: Query) -> bool:
    """True iff ``window`` contains >= threshold satisfied query keywords.

    A keyword is satisfied when its raw occurrences (runs expanded) inside
    ``window`` reach its required frequency.
    """
    if not (0 <= window.start <= window.end < index.token_count):
        raise ValueError(f"window {window} outside document bounds")
    satisfied = 0
    for keyword, freq in zip(query.keywords, query.freqs):
        inside = 0
        for e in index.runs(keyword):
            if e.start > window.end:
                break
            lo = max(e.start, window.start)
            hi = min(e.end, window.end)
            if lo <= hi:
                inside += hi - lo + 1
                if inside >= freq:
                    satisfied += 1
                    if satisfied >= query.threshold:
                        return True
                    break
    return False


def _merged_occurrences(index: PositionalIndex, query: Query) -> list[tuple[int, int]]:
    streams = []
    for ki, keyword in enumerate(query.keywords):
        entries = index.runs(keyword)
        if entries:
            streams.append([(p, ki) for e in entries for p in range(e.start, e.start + e.ctr)])
    return list(heapq.merge(*streams))


def plane_sweep(index: PositionalIndex, query: Query) -> SweepResult:
    """Enumerate all critical ranges over the raw position lists.

    When some required keyword cannot reach its frequency anywhere in the
    document the result is empty (no error, no comparisons). Pure function of
    its inputs; safe to run concurrently against a shared index.
    """
    stats = SearchStats()
    satisfiable = sum(
        1
        for keyword, freq in zip(query.keywords, query.freqs)
        if sum(e.ctr for e in index.runs(keyword)) >= freq
    )
    if satisfiable < query.threshold:
        return SweepResult([], None, stats, index)

    occs = _merged_occurrences(index, query)
    m = len(occs)
    freqs = query.freqs
    counts = [0] * query.size
    satisfied = 0
    criticals: list[Interval] = []
    r = -1
    for l in range(m):
        # grow the right end to the first candidate window for this left end
        while satisfied < query.threshold and r + 1 < m:
            r += 1
            stats.count()
            ki = occs[r][1]
            counts[ki] += 1
            if counts[ki] == freqs[ki]:
                satisfied += 1
        if satisfied < query.threshold:
            break
        stats.ranges_examined += 1
        left_pos, left_ki = occs[l]
        # advance the left pointer; if candidacy breaks, [l, r] was critical
        stats.count()
        if counts[left_ki] == freqs[left_ki]:
            satisfied -= 1
        counts[left_ki] -= 1
        if satisfied < query.threshold:
            criticals.append(Interval(left_pos, occs[r][0]))
    stats.ranges_emitted = len(criticals)
    return SweepResult(criticals, minimal_of(criticals), stats, index)
