"""Corpus ingestion, evaluation and n-gram size sweeps.

A labeled corpus comes either from a directory of ``<lang>.txt`` files
(one sentence per line) or from a single TSV file of
``lang<TAB>sentence`` lines.  Evaluation fills a confusion matrix with
top-1 predictions; sentences too short to form a block are counted as
skipped and excluded from the accuracy denominator.
"""

from __future__ import annotations

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .classify import classify
from .encoder import EncoderConfig
from .errors import CorpusError, DegenerateVectorError, TextTooShortError
from .model import LanguageModel, build_model

log = logging.getLogger(__name__)


@dataclass
class LabeledCorpus:
    samples: list[tuple[str, str]]  # (language, sentence), stable order
    source: str
    malformed_lines: int = 0

    @property
    def languages(self) -> list[str]:
        return sorted({lang for lang, _ in self.samples})

    def per_language_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for lang, _ in self.samples:
            counts[lang] = counts.get(lang, 0) + 1
        return counts


def ingest_corpus(path: str | Path) -> LabeledCorpus:
    """Load a directory of <lang>.txt files or a single TSV file."""
    path = Path(path)
    samples: list[tuple[str, str]] = []
    malformed = 0
    if path.is_dir():
        files = sorted(path.glob("*.txt"))
        if not files:
            raise CorpusError(f"no .txt files in directory {path}")
        for f in files:
            lang = f.stem
            text = f.read_text(encoding="utf-8", errors="replace")
            for line in text.splitlines():
                if line.strip():
                    samples.append((lang, line))
    elif path.is_file():
        text = path.read_text(encoding="utf-8", errors="replace")
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            lang, sep, sentence = line.partition("\t")
            if not sep or not lang.strip() or not sentence.strip():
                malformed += 1
                log.warning("%s:%d: malformed line skipped", path, lineno)
                continue
            samples.append((lang.strip(), sentence))
    else:
        raise CorpusError(f"unreadable corpus path: {path}")
    if not samples:
        raise CorpusError(f"no usable samples in {path}")
    return LabeledCorpus(samples=samples, source=str(path), malformed_lines=malformed)


def corpus_to_training_sets(corpus: LabeledCorpus) -> list[tuple[str, list[str]]]:
    """Group samples by language, preserving language order of first appearance."""
    grouped: dict[str, list[str]] = {}
    for lang, sentence in corpus.samples:
        grouped.setdefault(lang, []).append(sentence)
    return list(grouped.items())


@dataclass
class ConfusionMatrix:
    names: tuple[str, ...]
    counts: np.ndarray  # int64, counts[i, j] = true i predicted j
    skipped_per_language: dict[str, int] = field(default_factory=dict)

    @property
    def skipped(self) -> int:
        return sum(self.skipped_per_language.values())

    @property
    def total_classified(self) -> int:
        return int(self.counts.sum())

    @property
    def accuracy(self) -> float:
        return float(np.trace(self.counts)) / self.total_classified

    def per_language_accuracy(self) -> dict[str, float]:
        out = {}
        for i, name in enumerate(self.names):
            row = self.counts[i].sum()
            out[name] = float(self.counts[i, i]) / row if row else float("nan")
        return out

    def to_csv(self, destination: str | Path) -> None:
        with open(destination, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["true\\predicted", *self.names, "skipped"])
            for i, name in enumerate(self.names):
                writer.writerow(
                    [name, *map(int, self.counts[i]),
                     self.skipped_per_language.get(name, 0)]
                )

    def to_text(self) -> str:
        width = max(7, max(len(n) for n in self.names) + 1)
        lines = [
            " " * width
            + "".join(f"{n:>{width}}" for n in self.names)
            + f"{'skip':>{width}}"
        ]
        for i, name in enumerate(self.names):
            cells = "".join(f"{int(c):>{width}}" for c in self.counts[i])
            skip = self.skipped_per_language.get(name, 0)
            lines.append(f"{name:<{width}}{cells}{skip:>{width}}")
        lines.append(f"accuracy: {self.accuracy:.4f} over {self.total_classified}"
                     f" classified, {self.skipped} skipped")
        return "\n".join(lines)


def evaluate(
    model: LanguageModel,
    corpus: LabeledCorpus,
    *,
    threads: int | None = None,
) -> ConfusionMatrix:
    """Top-1 classification of every corpus sample."""
    missing = set(corpus.languages) - set(model.names)
    if missing:
        raise CorpusError(
            f"corpus languages missing from the model: {sorted(missing)}"
        )
    names = tuple(model.names)
    index = {n: i for i, n in enumerate(names)}
    counts = np.zeros((len(names), len(names)), dtype=np.int64)
    skipped: dict[str, int] = {}

    def predict(item):
        lang, sentence = item
        try:
            return lang, classify(sentence, model).top[0]
        except (TextTooShortError, DegenerateVectorError):
            return lang, None

    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(predict, corpus.samples))
    else:
        results = [predict(item) for item in corpus.samples]
    for lang, predicted in results:
        if predicted is None:
            skipped[lang] = skipped.get(lang, 0) + 1
        else:
            counts[index[lang], index[predicted]] += 1
    return ConfusionMatrix(
        names=names, counts=counts, skipped_per_language=skipped
    )


@dataclass
class SweepRow:
    n: int
    accuracy: float
    classified: int
    skipped: int


def accuracy_sweep(
    train_corpus: LabeledCorpus,
    test_corpus: LabeledCorpus,
    n_values: Sequence[int],
    config: EncoderConfig,
    *,
    threads: int | None = None,
) -> list[SweepRow]:
    """Train a fresh model per n (shared seed) and evaluate each."""
    training_sets = corpus_to_training_sets(train_corpus)
    rows = []
    for n in sorted(n_values):
        cfg = EncoderConfig(
            n=n, dim=config.dim, seed=config.seed, alphabet=config.alphabet
        )
        model = build_model(training_sets, cfg, threads=threads)
        cm = evaluate(model, test_corpus, threads=threads)
        rows.append(
            SweepRow(
                n=n,
                accuracy=cm.accuracy,
                classified=cm.total_classified,
                skipped=cm.skipped,
            )
        )
        log.info("n=%d: accuracy %.4f", n, cm.accuracy)
    return rows


def sweep_to_csv(rows: Sequence[SweepRow], destination: str | Path) -> None:
    with open(destination, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "accuracy", "classified", "skipped"])
        for row in rows:
            writer.writerow([row.n, repr(row.accuracy), row.classified, row.skipped])


def sweep_to_text(rows: Sequence[SweepRow]) -> str:
    lines = [f"{'n':>3} {'accuracy':>9} {'classified':>11} {'skipped':>8}"]
    for row in rows:
        lines.append(
            f"{row.n:>3} {row.accuracy:>9.4f} {row.classified:>11} {row.skipped:>8}"
        )
    return "\n".join(lines)
