"""Classification, language similarity export and next-symbol queries."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .alphabet import fold_char, normalize
from .encoder import encode_text_stream
from .errors import DegenerateVectorError, DimensionMismatchError
from .model import LanguageModel


@dataclass(frozen=True)
class Ranking:
    """Scores in descending order; ties broken by name."""

    entries: tuple[tuple[str, float], ...]

    @property
    def top(self) -> tuple[str, float]:
        return self.entries[0]


def _rank(names: list[str], scores: np.ndarray) -> Ranking:
    order = sorted(range(len(names)), key=lambda i: (-scores[i], names[i]))
    return Ranking(entries=tuple((names[i], float(scores[i])) for i in order))


def classify(raw_text: str, model: LanguageModel) -> Ranking:
    """Rank every model language by cosine against the text's vector.

    Raises TextTooShortError when the normalized text cannot form one
    block, and DegenerateVectorError if its vector sums to zero.
    """
    symbols = normalize(raw_text, model.config.alphabet)
    tv = encode_text_stream(symbols, model.basis)
    v = tv.vector.astype(np.float64)
    vnorm = math.sqrt(float(v @ v))
    if vnorm == 0.0:
        raise DegenerateVectorError("text vector is all zeros")
    scores = (model._matrix @ tv.vector) / (model._norms * vnorm)
    return _rank(model.names, scores)


@dataclass(frozen=True)
class SimilarityMatrix:
    names: tuple[str, ...]
    values: np.ndarray  # float64, symmetric, unit diagonal

    def to_csv(self, destination: str | Path) -> None:
        with open(destination, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(self.names)
            for row in self.values:
                writer.writerow([repr(float(x)) for x in row])


def similarity_matrix(model: LanguageModel) -> SimilarityMatrix:
    """Pairwise cosines of the (unnormalized) language vectors."""
    mat = model._matrix.astype(np.float64)
    gram = mat @ mat.T
    norms = model._norms
    values = gram / np.outer(norms, norms)
    values = (values + values.T) / 2.0  # exact symmetry under float rounding
    np.fill_diagonal(values, 1.0)
    return SimilarityMatrix(names=tuple(model.names), values=values)


def query_next_symbol(
    model: LanguageModel, language: str, context: str
) -> Ranking:
    """Rank alphabet symbols by how likely they are to follow `context`.

    For each candidate x a probe block  P^(n-1)L[c1] * ... * P L[c(n-1)] * L[x]
    is scored by cosine against the language vector; n-gram blocks of the
    training text that match the probe add D to the dot product while
    non-matching blocks contribute near-orthogonal noise.
    """
    lv = model[language]  # KeyError for unknown languages
    cfg = model.config
    n = cfg.n
    lookup = cfg.alphabet.index_of
    folded = "".join(fold_char(ch, cfg.alphabet) for ch in context)
    try:
        ctx = [lookup[ch] for ch in folded]
    except KeyError as exc:
        raise DimensionMismatchError(
            f"context character {exc.args[0]!r} not in the alphabet"
        ) from exc
    if len(ctx) != n - 1:
        raise DimensionMismatchError(
            f"context must be n-1 = {n - 1} symbols, got {len(ctx)}"
        )
    p = model.basis.permutation
    prefix = np.ones(cfg.dim, dtype=np.int64)
    for j, sym in enumerate(ctx):
        permuted = np.empty(cfg.dim, dtype=np.int8)
        permuted[p.powers[n - 1 - j]] = model.basis.label(sym)
        prefix *= permuted
    # cos(prefix * L[x], X) = L[x] . (prefix * X) / (sqrt(D) * |X|)
    weighted = prefix * lv.vector
    dots = model.basis.labels.astype(np.int64) @ weighted
    xnorm = math.sqrt(float(lv.vector.astype(np.float64) @ lv.vector))
    if xnorm == 0.0:
        raise DegenerateVectorError("language vector is all zeros")
    scores = dots / (math.sqrt(cfg.dim) * xnorm)
    return _rank(list(cfg.alphabet.symbols), scores)
