"""Ground truth for the test suite: a brute-force critical-range oracle and a
seedable corpus generator with a controllable repetition factor.

The oracle shares no sweep machinery: it counts keyword occurrences with
cumulative sums over the merged occurrence list and checks every window pair
directly against the candidate definition.
"""

from __future__ import annotations

import random
import string

from .index import PositionalIndex, TokenSeq
from .sweep import Interval, Query


class CorpusGenerationError(RuntimeError):
    """The requested repetition factor was not reached within the retry budget."""


def brute_force_critical_ranges(tokens: TokenSeq, query: Query) -> list[Interval]:
    """All critical ranges of ``query`` in ``tokens``, by exhaustive enumeration.

    A window is critical when it is a candidate and neither one-token shrink
    ([start+1, end] or [start, end-1]) is. Endpoints are enumerated over query
    keyword occurrences only; shrinking past an endpoint removes exactly that
    occurrence, so candidacy is evaluated on occurrence index ranges.
    """
    slot = {w: i for i, w in enumerate(query.keywords)}
    positions = [p for p, tok in enumerate(tokens) if tok in slot]
    m = len(positions)
    k = query.size
    # cum[ki][j] = occurrences of keyword ki among the first j merged occurrences
    cum = [[0] * (m + 1) for _ in range(k)]
    for j, p in enumerate(positions):
        ki = slot[tokens[p]]
        for x in range(k):
            cum[x][j + 1] = cum[x][j] + (1 if x == ki else 0)

    freqs = query.freqs
    threshold = query.threshold

    def candidate(i: int, j: int) -> bool:
        if i > j:
            return False
        satisfied = 0
        for x in range(k):
            if cum[x][j + 1] - cum[x][i] >= freqs[x]:
                satisfied += 1
                if satisfied >= threshold:
                    return True
        return False

    out: list[Interval] = []
    for i in range(m):
        for j in range(i, m):
            if candidate(i, j - 1):
                break  # every wider window shrinks right into a candidate
            if candidate(i, j) and not candidate(i + 1, j):
                out.append(Interval(positions[i], positions[j]))
    return out


def collapse_run_duplicates(criticals: list[Interval], index: PositionalIndex) -> list[Interval]:
    """Map single-point criticals inside a tandem run to the run-start copy.

    This is the representative the run-aware sweep reports; multi-point
    criticals already sit on run boundaries and pass through unchanged.
    """
    run_start = {}
    for runs in index.lists.values():
        for e in runs:
            for p in range(e.start, e.start + e.ctr):
                run_start[p] = e.start
    seen = set()
    out = []
    for iv in criticals:
        if iv.start == iv.end:
            iv = Interval(run_start[iv.start], run_start[iv.start])
        if iv not in seen:
            seen.add(iv)
            out.append(iv)
    return out


def generate_corpus(
    seed: int | str,
    size: int,
    alphabet_size: int,
    wsim_target: float,
    max_attempts: int = 32,
) -> TokenSeq:
    """Deterministically generate ``size`` single-letter tokens whose measured
    repetition factor lands within ±0.02 of ``wsim_target``.

    Each token repeats the previous one with probability ``wsim_target``,
    otherwise it is drawn uniformly from the other letters; the sequence is
    regenerated (bounded retries) until the measured factor is in tolerance.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    if not 2 <= alphabet_size <= 26:
        raise ValueError("alphabet_size must be in [2, 26]")
    if not 0.0 <= wsim_target <= 1.0 - 1.0 / size:
        raise ValueError(f"wsim_target must be in [0, {1.0 - 1.0 / size:.4f}] for size {size}")

    letters = string.ascii_uppercase[:alphabet_size]
    rng = random.Random(seed)
    for _ in range(max_attempts):
        tokens = [rng.choice(letters)]
        for _ in range(size - 1):
            if rng.random() < wsim_target:
                tokens.append(tokens[-1])
            else:
                j = rng.randrange(alphabet_size - 1)
                nxt = letters[j]
                if nxt == tokens[-1]:
                    nxt = letters[alphabet_size - 1]
                tokens.append(nxt)
        alpha = sum(1 for a, b in zip(tokens, tokens[1:]) if a == b)
        if abs(alpha / size - wsim_target) <= 0.02:
            return tokens
    raise CorpusGenerationError(
        f"wsim target {wsim_target} +/-0.02 unreachable for size {size} "
        f"after {max_attempts} attempts"
    )
