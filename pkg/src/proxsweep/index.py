"""Tokenization and run-length-compressed positional inverted indexes.

A document is an ordered sequence of tokens. For every distinct keyword the
index stores the ascending list of maximal tandem runs: a run ``(start, ctr)``
covers token positions ``start .. start + ctr - 1``, all holding the same
keyword. ``alpha`` counts the redundant tokens inside those runs, i.e. the
positions a run-aware sweep never has to test individually.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import IO, Union

TokenSeq = list[str]

FORMAT_MAGIC = "PROXIDX"
FORMAT_VERSION = 1


class IndexFormatError(ValueError):
    """Raised when an index file violates the PROXIDX format."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def tokenize(text: str, mode: str = "chars") -> TokenSeq:
    """Split ``text`` into tokens.

    ``chars`` yields one token per non-whitespace character; ``words`` splits
    on runs of whitespace. Order is preserved; empty text gives an empty list.
    """
    if mode == "chars":
        return [ch for ch in text if not ch.isspace()]
    if mode == "words":
        return text.split()
    raise ValueError(f"unknown tokenize mode: {mode!r}")


@dataclass(frozen=True)
class RunEntry:
    """One maximal tandem run: ``ctr`` consecutive copies starting at ``start``."""

    start: int
    ctr: int

    @property
    def end(self) -> int:
        return self.start + self.ctr - 1


@dataclass(frozen=True)
class PositionalIndex:
    """Immutable run-compressed positional inverted index of one document.

    ``lists`` maps each keyword to its ascending tuple of runs. The runs of
    all keywords together tile the token positions ``0 .. token_count - 1``
    exactly, so ``total_occurrences == token_count``. Safe to share across
    concurrent searches.
    """

    lists: dict[str, tuple[RunEntry, ...]] = field(repr=False)
    token_count: int
    total_occurrences: int
    alpha: int

    def runs(self, keyword: str) -> tuple[RunEntry, ...]:
        """Run list for ``keyword``; empty tuple when absent from the document."""
        return self.lists.get(keyword, ())

    def occurrences(self, keyword: str) -> list[int]:
        """All raw token positions of ``keyword``, ascending (runs expanded)."""
        return [p for e in self.runs(keyword) for p in range(e.start, e.start + e.ctr)]

    @property
    def keywords(self) -> list[str]:
        return sorted(self.lists)

    @property
    def wsim(self) -> float:
        return compute_wsim(self)


def build_index(tokens: TokenSeq) -> PositionalIndex:
    """Build the run-compressed index of ``tokens``.

    Consecutive identical tokens collapse into a single run anchored at the
    first position. Deterministic; the result does not depend on anything but
    the token sequence.
    """
    lists: dict[str, list[RunEntry]] = {}
    alpha = 0
    i, n = 0, len(tokens)
    while i < n:
        tok = tokens[i]
        if not isinstance(tok, str) or not tok:
            raise ValueError(f"position {i}: tokens must be non-empty strings")
        j = i + 1
        while j < n and tokens[j] == tok:
            j += 1
        lists.setdefault(tok, []).append(RunEntry(i, j - i))
        alpha += (j - i) - 1
        i = j
    return PositionalIndex(
        lists={w: tuple(es) for w, es in lists.items()},
        token_count=n,
        total_occurrences=n,
        alpha=alpha,
    )


def compute_alpha(index: PositionalIndex) -> int:
    """Redundant tokens inside tandem runs: sum of ``ctr - 1`` over all runs."""
    return sum(e.ctr - 1 for runs in index.lists.values() for e in runs)


def compute_wsim(index: PositionalIndex) -> float:
    """Repetition factor ``alpha / token_count``, in ``[0, 1]``.

    The denominator is the document token count, which is query-independent
    and keeps the ratio bounded by 1.
    """
    if index.token_count == 0:
        raise ValueError("empty index")
    return index.alpha / index.token_count


def decompress(index: PositionalIndex) -> TokenSeq:
    """Reconstruct the original token sequence from the run lists.

    Raises ``ValueError`` if the runs do not tile the document exactly.
    """
    tokens: list[str | None] = [None] * index.token_count
    for keyword, runs in index.lists.items():
        for e in runs:
            if e.start < 0 or e.end >= index.token_count:
                raise ValueError(f"run {e} of {keyword!r} outside the document")
            for p in range(e.start, e.start + e.ctr):
                if tokens[p] is not None:
                    raise ValueError(f"overlapping runs at position {p}")
                tokens[p] = keyword
    if any(t is None for t in tokens):
        gap = tokens.index(None)
        raise ValueError(f"no run covers position {gap}")
    return tokens  # type: ignore[return-value]


def to_text(index: PositionalIndex) -> str:
    """Serialize to the PROXIDX line format (keywords in sorted order)."""
    lines = [f"{FORMAT_MAGIC} {FORMAT_VERSION} {index.token_count} {len(index.lists)}"]
    for keyword in sorted(index.lists):
        if any(ch.isspace() for ch in keyword):
            raise ValueError(f"keyword {keyword!r} contains whitespace, not serializable")
        runs = ",".join(f"{e.start}:{e.ctr}" for e in index.lists[keyword])
        lines.append(f"{keyword}\t{runs}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> PositionalIndex:
    """Parse the PROXIDX format, validating every stored invariant."""
    lines = text.splitlines()
    if not lines:
        raise IndexFormatError("empty file", line=1)
    header = lines[0].split(" ")
    if len(header) != 4 or header[0] != FORMAT_MAGIC:
        raise IndexFormatError(f"bad header {lines[0]!r}", line=1)
    try:
        version, token_count, keyword_count = int(header[1]), int(header[2]), int(header[3])
    except ValueError:
        raise IndexFormatError(f"non-numeric header fields in {lines[0]!r}", line=1) from None
    if version != FORMAT_VERSION:
        raise IndexFormatError(f"unsupported version {version}", line=1)
    if token_count < 0 or keyword_count < 0:
        raise IndexFormatError("negative counts in header", line=1)
    if len(lines) != 1 + keyword_count:
        raise IndexFormatError(
            f"expected {keyword_count} keyword lines, found {len(lines) - 1}", line=len(lines)
        )

    lists: dict[str, tuple[RunEntry, ...]] = {}
    total = 0
    for lineno, raw in enumerate(lines[1:], start=2):
        keyword, sep, payload = raw.partition("\t")
        if not sep or not keyword:
            raise IndexFormatError(f"expected '<keyword>\\t<runs>', got {raw!r}", line=lineno)
        if keyword in lists:
            raise IndexFormatError(f"duplicate keyword {keyword!r}", line=lineno)
        runs: list[RunEntry] = []
        prev_end = -2
        for item in payload.split(","):
            start_s, sep2, ctr_s = item.partition(":")
            try:
                start, ctr = int(start_s), int(ctr_s)
            except ValueError:
                raise IndexFormatError(f"bad run {item!r}", line=lineno) from None
            if not sep2:
                raise IndexFormatError(f"bad run {item!r}", line=lineno)
            if ctr < 1:
                raise IndexFormatError(f"ctr must be >= 1, got {ctr}", line=lineno)
            if start <= prev_end:
                raise IndexFormatError(f"positions not ascending at {item!r}", line=lineno)
            if start == prev_end + 1:
                raise IndexFormatError(
                    f"adjacent runs of one keyword must be merged (at {item!r})", line=lineno
                )
            if start < 0 or start + ctr - 1 >= token_count:
                raise IndexFormatError(f"run {item!r} outside the document", line=lineno)
            runs.append(RunEntry(start, ctr))
            prev_end = start + ctr - 1
            total += ctr
        lists[keyword] = tuple(runs)

    if total != token_count:
        raise IndexFormatError(
            f"runs cover {total} positions but header declares {token_count} tokens"
        )
    index = PositionalIndex(
        lists=lists,
        token_count=token_count,
        total_occurrences=total,
        alpha=sum(e.ctr - 1 for runs in lists.values() for e in runs),
    )
    try:
        decompress(index)  # rejects cross-keyword overlaps that per-line checks miss
    except ValueError as exc:
        raise IndexFormatError(str(exc)) from None
    return index


def save_index(index: PositionalIndex, destination: Union[str, os.PathLike, IO[str]]) -> None:
    """Write the index in PROXIDX format (LF endings, UTF-8)."""
    text = to_text(index)
    if hasattr(destination, "write"):
        destination.write(text)  # type: ignore[union-attr]
    else:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def load_index(source: Union[str, os.PathLike, IO[str]]) -> PositionalIndex:
    """Read an index written by :func:`save_index`. ``load(save(x)) == x``."""
    if hasattr(source, "read"):
        text = source.read()  # type: ignore[union-attr]
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    return from_text(text)
