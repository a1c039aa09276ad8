"""k-keyword proximity search over run-length-compressed positional indexes.

Three search strategies share one contract (critical proximity ranges plus
comparison counters): ``plane_sweep`` over raw position lists, ``wpsr_sweep``
over tandem runs, and ``mwpsr_search`` over disjoint windows around the
rarest query keyword. ``testkit`` provides the brute-force oracle and corpus
generator the test suite trusts; ``metrics`` the benchmark harness.
"""

from .index import (
    IndexFormatError,
    PositionalIndex,
    RunEntry,
    TokenSeq,
    build_index,
    compute_alpha,
    compute_wsim,
    decompress,
    from_text,
    load_index,
    save_index,
    to_text,
    tokenize,
)
from .metrics import (
    ALGORITHMS,
    BenchConfig,
    BenchConfigError,
    BenchRecord,
    compute_rd,
    run_bench,
    write_csv,
)
from .mwpsr import (
    DistanceFactors,
    KeywordNotInDocumentError,
    MinKeywordSelection,
    PartialRange,
    UnsupportedThresholdError,
    distance_factors,
    mwpsr_search,
    partial_ranges,
    select_min_keyword,
)
from .sweep import Interval, Query, SearchStats, SweepResult, is_candidate, plane_sweep
from .testkit import (
    CorpusGenerationError,
    brute_force_critical_ranges,
    collapse_run_duplicates,
    generate_corpus,
)
from .wpsr import UnsupportedFrequencyError, wpsr_sweep

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BenchConfig",
    "BenchConfigError",
    "BenchRecord",
    "CorpusGenerationError",
    "DistanceFactors",
    "IndexFormatError",
    "Interval",
    "KeywordNotInDocumentError",
    "MinKeywordSelection",
    "PartialRange",
    "PositionalIndex",
    "Query",
    "RunEntry",
    "SearchStats",
    "SweepResult",
    "TokenSeq",
    "UnsupportedFrequencyError",
    "UnsupportedThresholdError",
    "brute_force_critical_ranges",
    "build_index",
    "collapse_run_duplicates",
    "compute_alpha",
    "compute_rd",
    "compute_wsim",
    "decompress",
    "distance_factors",
    "from_text",
    "generate_corpus",
    "is_candidate",
    "load_index",
    "mwpsr_search",
    "partial_ranges",
    "plane_sweep",
    "run_bench",
    "save_index",
    "select_min_keyword",
    "to_text",
    "tokenize",
    "wpsr_sweep",
    "write_csv",
]
