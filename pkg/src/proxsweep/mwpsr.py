"""Windowed run-aware search around the minimum-frequency keyword.

Instead of sweeping the whole document, pick the query keyword with the
fewest collapsed runs, put a window of radius ``k' - 1`` around each of its
run starts, coalesce overlapping windows into disjoint partial ranges, and
run the run-aware sweep independently inside each range. Anything the raw
sweep would find wholly inside a partial range is still found; ranges wider
than a window are deliberately given up in exchange for fewer comparisons.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .index import PositionalIndex, RunEntry
from .sweep import Interval, Query, SearchStats, SweepResult
from .wpsr import RunItem, UnsupportedFrequencyError, _sweep_runs


class KeywordNotInDocumentError(ValueError):
    """The windowed search requires every query keyword to occur."""

    def __init__(self, keyword: str):
        super().__init__(f"keyword not in document: {keyword}")
        self.keyword = keyword


class UnsupportedThresholdError(ValueError):
    """The windowed search requires all query keywords to match (k == k')."""

    def __init__(self, message: str = "unsupported threshold"):
        super().__init__(message)


@dataclass(frozen=True)
class MinKeywordSelection:
    """The chosen minimum keyword, its runs, and a tie-break audit trace."""

    keyword: str
    occurrences: tuple[RunEntry, ...]
    rationale: str


@dataclass(frozen=True)
class DistanceFactors:
    """Gaps between consecutive collapsed occurrences of one keyword."""

    gaps: tuple[int, ...]

    def min_gap(self) -> float:
        """Smallest gap; +inf for a keyword that occurs once (nothing to overlap)."""
        return min(self.gaps) if self.gaps else float("inf")


@dataclass(frozen=True)
class PartialRange:
    """A disjoint search window and the min-keyword run starts it covers."""

    interval: Interval
    anchors: tuple[int, ...]


def distance_factors(selection: MinKeywordSelection) -> DistanceFactors:
    """Distances between consecutive run starts of the selected keyword."""
    starts = [e.start for e in selection.occurrences]
    return DistanceFactors(tuple(b - a for a, b in zip(starts, starts[1:])))


def select_min_keyword(index: PositionalIndex, query: Query) -> MinKeywordSelection:
    """Pick the query keyword with the fewest collapsed runs.

    Ties go to the keyword whose occurrences are most spread out (largest
    minimum gap, so its windows overlap least), then to query order. Every
    query keyword must occur in the document.
    """
    best: tuple[int, float, int] | None = None
    best_kw = ""
    for qi, keyword in enumerate(query.keywords):
        entries = index.runs(keyword)
        if not entries:
            raise KeywordNotInDocumentError(keyword)
        starts = [e.start for e in entries]
        min_gap = min((b - a for a, b in zip(starts, starts[1:])), default=float("inf"))
        key = (len(entries), -min_gap, qi)
        if best is None or key < best:
            best = key
            best_kw = keyword
    assert best is not None
    entries = index.runs(best_kw)
    gap = -best[1]
    rationale = f"{best_kw}: {best[0]} entries, min gap {gap}, query position {best[2]}"
    return MinKeywordSelection(best_kw, entries, rationale)


def partial_ranges(
    selection: MinKeywordSelection, index: PositionalIndex, query_size: int
) -> list[PartialRange]:
    """Disjoint windows of radius ``query_size - 1`` around each run start.

    Windows are clamped to the document; overlapping consecutive windows are
    coalesced into their union, which never discards a range either trimmed
    window could have matched.
    """
    radius = query_size - 1
    last = index.token_count - 1
    ranges: list[tuple[int, int, list[int]]] = []
    for entry in selection.occurrences:
        a = max(0, entry.start - radius)
        b = min(last, entry.start + radius)
        if ranges and a <= ranges[-1][1]:
            ranges[-1] = (ranges[-1][0], max(ranges[-1][1], b), ranges[-1][2] + [entry.start])
        else:
            ranges.append((a, b, [entry.start]))
    return [PartialRange(Interval(a, b), tuple(anchors)) for a, b, anchors in ranges]


def _entries_in_window(
    starts: list[int], entries: tuple[RunEntry, ...], ki: int, a: int, b: int
) -> list[RunItem]:
    """Clip one keyword's runs to ``[a, b]``, keeping the original entry id."""
    items: list[RunItem] = []
    i = bisect_right(starts, a) - 1
    if i < 0 or entries[i].end < a:
        i += 1
    while i < len(entries) and entries[i].start <= b:
        e = entries[i]
        lo, hi = max(e.start, a), min(e.end, b)
        items.append((lo, hi - lo + 1, ki, (ki, e.start)))
        i += 1
    return items


def mwpsr_search(index: PositionalIndex, query: Query) -> SweepResult:
    """Run the run-aware sweep inside the partial ranges only.

    Requires unit frequencies, threshold k == k', and every keyword present.
    Criticals are emitted size-ascending (ties by start), so the first one is
    the minimal range. ``beta`` counts what a plain sweep would execute inside
    the partial ranges, ``gamma`` the tests skipped via run counters, and
    ``comparisons == cn == beta - gamma``. An entry straddling a window
    boundary is probed once, not once per window.
    """
    if any(f != 1 for f in query.freqs):
        raise UnsupportedFrequencyError()
    if query.threshold != query.size:
        raise UnsupportedThresholdError()
    for keyword in query.keywords:
        if not index.runs(keyword):
            raise KeywordNotInDocumentError(keyword)

    selection = select_min_keyword(index, query)
    windows = partial_ranges(selection, index, query.size)

    per_kw = [(index.runs(w), [e.start for e in index.runs(w)]) for w in query.keywords]
    stats = SearchStats()
    seen_r: set = set()
    seen_l: set = set()
    criticals: list[Interval] = []
    for window in windows:
        a, b = window.interval.start, window.interval.end
        items: list[RunItem] = []
        for ki, (entries, starts) in enumerate(per_kw):
            items.extend(_entries_in_window(starts, entries, ki, a, b))
        items.sort()
        criticals.extend(_sweep_runs(items, query.threshold, query.size, stats, seen_r, seen_l))

    criticals.sort(key=lambda iv: (iv.size, iv.start))
    stats.ranges_emitted = len(criticals)
    minimal = criticals[0] if criticals else None
    return SweepResult(criticals, minimal, stats, index)
