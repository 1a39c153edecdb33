"""Command-line interface.

Subcommands: train, detect, eval, sweep, similarity, query, bench.
Every flag can also be set through an environment variable named
HDLANG_<FLAG> (e.g. HDLANG_DIM=4096); explicit flags win over the
environment, which wins over built-in defaults.

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path

from .classify import classify, query_next_symbol, similarity_matrix
from .encoder import EncoderConfig, throughput_probe
from .errors import ConfigError, DegenerateVectorError, HdlangError, TextTooShortError
from .harness import (
    accuracy_sweep,
    corpus_to_training_sets,
    evaluate,
    ingest_corpus,
    sweep_to_csv,
    sweep_to_text,
)
from .model import build_model, load_model, save_model

log = logging.getLogger("hdlang")

THROUGHPUT_FLOOR = 100_000  # chars/s


def _env_default(name: str, fallback):
    raw = os.environ.get(f"HDLANG_{name.upper().replace('-', '_')}")
    if raw is None:
        return fallback
    if isinstance(fallback, bool):
        return raw.lower() in ("1", "true", "yes")
    if fallback is None:
        return raw
    return type(fallback)(raw)


def _add_encoder_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=_env_default("n", 4),
                        help="n-gram size (default 4)")
    parser.add_argument("--dim", type=int, default=_env_default("dim", 10_000),
                        help="vector dimensionality, even (default 10000)")
    parser.add_argument("--seed", type=int, default=_env_default("seed", 1),
                        help="unsigned 64-bit PRNG seed (default 1)")


def _add_threads_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int,
                        default=_env_default("threads", os.cpu_count() or 1),
                        help="worker cap for per-language/per-n jobs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdlang",
        description="Language identification with hyperdimensional n-gram vectors",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a model from a labeled corpus")
    p.add_argument("--corpus", required=True,
                   help="directory of <lang>.txt files or a lang<TAB>sentence TSV")
    _add_encoder_flags(p)
    _add_threads_flag(p)
    p.add_argument("--model", required=True, help="output model file")

    p = sub.add_parser("detect", help="classify texts with a trained model")
    p.add_argument("--model", required=True)
    p.add_argument("--top", type=int, default=_env_default("top", 3))
    p.add_argument("inputs", nargs="*",
                   help="text files (one text each); reads stdin lines if omitted")

    p = sub.add_parser("eval", help="evaluate a model on a labeled test corpus")
    p.add_argument("--model", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--out", required=True, help="output directory")
    _add_threads_flag(p)

    p = sub.add_parser("sweep", help="accuracy as a function of n-gram size")
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--n-list", default=_env_default("n_list", "1,2,3,4,5"))
    p.add_argument("--dim", type=int, default=_env_default("dim", 10_000))
    p.add_argument("--seed", type=int, default=_env_default("seed", 1))
    p.add_argument("--out", required=True, help="output directory")
    _add_threads_flag(p)

    p = sub.add_parser("similarity", help="export pairwise language cosines")
    p.add_argument("--model", required=True)
    p.add_argument("--out", required=True, help="output CSV path")

    p = sub.add_parser("query", help="rank symbols likely to follow a context")
    p.add_argument("--model", required=True)
    p.add_argument("--lang", required=True)
    p.add_argument("--context", required=True,
                   help="exactly n-1 alphabet characters")
    p.add_argument("--top", type=int, default=_env_default("top", 10))

    p = sub.add_parser("bench", help="measure streaming-encoder throughput")
    _add_encoder_flags(p)
    p.add_argument("--chars", type=int, default=_env_default("chars", 1_000_000))
    p.add_argument("--assert", dest="assert_floor", action="store_true",
                   help=f"exit 1 below {THROUGHPUT_FLOOR} chars/s")

    return parser


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8", errors="replace")


def cmd_train(args) -> int:
    cfg = EncoderConfig(n=args.n, dim=args.dim, seed=args.seed)
    corpus = ingest_corpus(args.corpus)
    t0 = time.perf_counter()
    model = build_model(corpus_to_training_sets(corpus), cfg, threads=args.threads)
    elapsed = time.perf_counter() - t0
    save_model(model, args.model)
    for lv in model.languages:
        print(f"{lv.name}\t{lv.byte_count} bytes\t{lv.sample_count} samples")
    print(f"trained {len(model.languages)} languages in {elapsed:.2f}s "
          f"(n={cfg.n}, D={cfg.dim}, seed={cfg.seed}) -> {args.model}")
    return 0


def cmd_detect(args) -> int:
    model = load_model(args.model)
    if args.inputs:
        texts = [(path, _read_text(path)) for path in args.inputs]
    else:
        texts = [(f"stdin:{i}", line) for i, line in enumerate(sys.stdin, start=1)
                 if line.strip()]
    if not texts:
        print("no input texts", file=sys.stderr)
        return 1
    classified = 0
    for origin, text in texts:
        try:
            ranking = classify(text, model)
        except (TextTooShortError, DegenerateVectorError) as exc:
            print(f"warning: {origin}: {exc}", file=sys.stderr)
            continue
        classified += 1
        fields = [f"{name}:{score:.6f}" for name, score in
                  ranking.entries[: args.top]]
        print("\t".join(fields))
    return 0 if classified else 1


def _report_header(model, corpus) -> str:
    cfg = model.config
    lines = [
        f"model: n={cfg.n} D={cfg.dim} seed={cfg.seed} "
        f"languages={len(model.names)}",
        f"test corpus: {corpus.source} ({len(corpus.samples)} samples, "
        f"{corpus.malformed_lines} malformed lines)",
        "training and test corpora must be disjoint files; "
        "this report does not verify overlap",
    ]
    return "\n".join(lines)


def cmd_eval(args) -> int:
    from .report import render_confusion_heatmap

    model = load_model(args.model)
    corpus = ingest_corpus(args.test)
    cm = evaluate(model, corpus, threads=args.threads)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cm.to_csv(out / "confusion.csv")
    (out / "confusion.txt").write_text(
        _report_header(model, corpus) + "\n\n" + cm.to_text() + "\n",
        encoding="utf-8",
    )
    render_confusion_heatmap(cm, out / "confusion.png")
    print(cm.to_text())
    print(f"wrote {out}/confusion.{{csv,txt,png}}")
    return 0


def cmd_sweep(args) -> int:
    from .report import render_sweep_curve

    try:
        n_values = [int(x) for x in str(args.n_list).split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"bad --n-list: {args.n_list!r}")
    if not n_values:
        raise ConfigError("--n-list is empty")
    cfg = EncoderConfig(n=max(n_values), dim=args.dim, seed=args.seed)
    train_corpus = ingest_corpus(args.train)
    test_corpus = ingest_corpus(args.test)
    rows = accuracy_sweep(train_corpus, test_corpus, n_values, cfg,
                          threads=args.threads)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    sweep_to_csv(rows, out / "sweep.csv")
    (out / "sweep.txt").write_text(sweep_to_text(rows) + "\n", encoding="utf-8")
    render_sweep_curve(rows, out / "sweep.png")
    print(sweep_to_text(rows))
    print(f"wrote {out}/sweep.{{csv,txt,png}}")
    return 0


def cmd_similarity(args) -> int:
    from .report import render_similarity_heatmap

    model = load_model(args.model)
    sim = similarity_matrix(model)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    sim.to_csv(out)
    png = out.with_suffix(".png")
    render_similarity_heatmap(sim, png)
    print(f"wrote {out} and {png}")
    return 0


def cmd_query(args) -> int:
    model = load_model(args.model)
    try:
        ranking = query_next_symbol(model, args.lang, args.context)
    except KeyError:
        print(f"unknown language: {args.lang}", file=sys.stderr)
        return 1
    for symbol, score in ranking.entries[: args.top]:
        shown = "␣" if symbol == " " else symbol
        print(f"{shown}\t{score:.6f}")
    return 0


def cmd_bench(args) -> int:
    cfg = EncoderConfig(n=args.n, dim=args.dim, seed=args.seed)
    rate = throughput_probe(args.chars, cfg)
    print(f"{rate:.0f} chars/s (n={cfg.n}, D={cfg.dim}, {args.chars} chars)")
    if args.assert_floor and rate < THROUGHPUT_FLOOR:
        print(f"below the {THROUGHPUT_FLOOR} chars/s floor", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "train": cmd_train,
    "detect": cmd_detect,
    "eval": cmd_eval,
    "sweep": cmd_sweep,
    "similarity": cmd_similarity,
    "query": cmd_query,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        parser.exit(2, f"usage error: {exc}\n")
    except HdlangError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
