"""``prox`` command line interface: a thin client over the core package.

Subcommands: ``index`` builds and saves a PROXIDX file, ``search`` runs one
of the sweep algorithms against a saved index, ``gen`` writes a generated
corpus, ``bench`` runs the benchmark grid to CSV. Results go to stdout,
diagnostics to stderr; usage and input errors exit with status 2.
"""

from __future__ import annotations

import argparse
import sys

from .index import build_index, compute_wsim, load_index, save_index, tokenize
from .metrics import ALGORITHMS, BenchConfig, run_bench, write_csv
from .sweep import Query
from .testkit import generate_corpus


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects comma-separated integers") from None


def _parse_float_list(text: str, flag: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects comma-separated numbers") from None


def cmd_index(args: argparse.Namespace) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    if args.lower:
        text = text.lower()
    index = build_index(tokenize(text, args.tokens))
    try:
        wsim = compute_wsim(index)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    save_index(index, args.output)
    print(
        f"|D|={index.token_count} n={index.total_occurrences} "
        f"alpha={index.alpha} wsim={wsim:.6f}"
    )
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    keywords = args.query.split()
    freqs = None
    if args.freq is not None:
        try:
            freqs = [int(part) for part in args.freq.split(",") if part != ""]
        except ValueError:
            print("--freq expects comma-separated integers", file=sys.stderr)
            return 2
        if len(freqs) != len(keywords):
            print(
                f"--freq expects {len(keywords)} values, got {len(freqs)}",
                file=sys.stderr,
            )
            return 2
    query = Query(keywords, freqs=freqs, threshold=args.threshold)
    result = ALGORITHMS[args.algo](index, query)
    intervals = result.criticals
    if args.top is not None:
        # "top" means best: the N smallest ranges, whatever the algorithm
        intervals = sorted(intervals, key=lambda iv: (iv.size, iv.start))[: args.top]
    for iv in intervals:
        print(f"{iv.start}\t{iv.end}\t{iv.size}")
    if args.stats:
        s = result.stats
        print(f"comparisons={s.comparisons} beta={s.beta} gamma={s.gamma} cn={s.cn}")
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    tokens = generate_corpus(args.seed, args.size, args.alphabet, args.wsim)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("".join(tokens))
    alpha = sum(1 for a, b in zip(tokens, tokens[1:]) if a == b)
    print(f"wrote {args.size} tokens to {args.output} (wsim={alpha / args.size:.4f})",
          file=sys.stderr)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    config = BenchConfig(
        sizes=tuple(args.sizes),
        wsim_levels=tuple(args.wsim),
        algos=tuple(args.algos),
        seeds=args.seeds,
        k=args.k,
        alphabet_size=args.alphabet,
    )
    records = run_bench(config)
    write_csv(records, args.csv)
    print(f"wrote {len(records)} records to {args.csv}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prox",
        description="k-keyword proximity search over run-length-compressed indexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build a PROXIDX file from a document")
    p_index.add_argument("file", help="input document")
    p_index.add_argument("--tokens", choices=("chars", "words"), default="chars")
    p_index.add_argument("--lower", action="store_true", help="lowercase before tokenizing")
    p_index.add_argument("-o", "--output", required=True, help="index file to write")
    p_index.set_defaults(func=cmd_index)

    p_search = sub.add_parser("search", help="run a proximity search against an index")
    p_search.add_argument("index", help="PROXIDX file")
    p_search.add_argument("-q", "--query", required=True,
                          help="space-separated query keywords")
    p_search.add_argument("--algo", choices=sorted(ALGORITHMS), default="ps")
    p_search.add_argument("--freq", default=None,
                          help="comma-separated per-keyword frequencies (default all 1)")
    p_search.add_argument("--threshold", type=int, default=None,
                          help="distinct keywords required (default: all)")
    p_search.add_argument("--top", type=int, default=None,
                          help="print only the N smallest ranges")
    p_search.add_argument("--stats", action="store_true",
                          help="append a comparison-counter line")
    p_search.set_defaults(func=cmd_search)

    p_gen = sub.add_parser("gen", help="generate a seeded random corpus")
    p_gen.add_argument("-o", "--output", required=True, help="file to write (chars mode)")
    p_gen.add_argument("--size", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--alphabet", type=int, default=3)
    p_gen.add_argument("--wsim", type=float, default=0.0, help="target repetition factor")
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="run the comparison-count benchmark grid")
    p_bench.add_argument("--sizes", type=lambda t: _parse_int_list(t, "--sizes"),
                         required=True)
    p_bench.add_argument("--wsim", type=lambda t: _parse_float_list(t, "--wsim"),
                         required=True)
    p_bench.add_argument("--algos", type=lambda t: t.split(","),
                         default=["ps", "wpsr", "mwpsr"])
    p_bench.add_argument("--seeds", type=int, default=5)
    p_bench.add_argument("--k", type=int, default=3)
    p_bench.add_argument("--alphabet", type=int, default=3)
    p_bench.add_argument("--csv", required=True, help="CSV file to write")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
