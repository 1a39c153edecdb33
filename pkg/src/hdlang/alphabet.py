"""Text normalization onto a fixed symbol inventory.

The default inventory is the 26 lowercase Latin letters plus Space.  Raw
text goes through a fixed pipeline: case folding, canonical (NFD)
decomposition with combining marks dropped, mapping of every unmapped
character (digits, punctuation, other scripts, all whitespace) to Space,
collapsing of Space runs and trimming.  Character classes follow the
standard Unicode categories (combining marks = category Mn).

A normalized text is an int32 numpy array of symbol indices; it never
contains two consecutive Spaces and never starts or ends with one.
"""

from __future__ import annotations

import string
import unicodedata
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

DEFAULT_SYMBOLS = tuple(string.ascii_lowercase) + (" ",)


@dataclass(frozen=True)
class AlphabetConfig:
    """Symbol inventory and folding flags.

    Symbol order is significant: it fixes the order in which random
    labels are assigned, so two models agree only if their alphabets
    match exactly.
    """

    symbols: tuple[str, ...] = DEFAULT_SYMBOLS
    fold_case: bool = True
    fold_diacritics: bool = True

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise ConfigError("alphabet symbols must be distinct")
        if any(len(s) != 1 for s in self.symbols):
            raise ConfigError("alphabet symbols must be single characters")
        if " " not in self.symbols:
            raise ConfigError("alphabet must contain Space")

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def space_index(self) -> int:
        return self.symbols.index(" ")

    @property
    def index_of(self) -> dict[str, int]:
        return _index_map(self.symbols)


def _index_map(symbols: tuple[str, ...]) -> dict[str, int]:
    # tiny; rebuilt on demand so the config stays hashable/frozen
    return {ch: i for i, ch in enumerate(symbols)}


def fold_char(ch: str, cfg: AlphabetConfig) -> str:
    """Case/diacritic folding for a single character (may expand, e.g. ß→ss)."""
    if cfg.fold_case:
        ch = ch.casefold()
    if cfg.fold_diacritics:
        ch = "".join(
            c for c in unicodedata.normalize("NFD", ch)
            if unicodedata.category(c) != "Mn"
        )
    return ch


def normalize(raw: str, cfg: AlphabetConfig = AlphabetConfig()) -> np.ndarray:
    """Map raw text to symbol indices.

    Empty or all-nonalphabet input yields an empty sequence; this is not
    an error here (encoders decide whether a text is long enough).
    """
    text = raw
    if cfg.fold_case:
        text = text.casefold()
    if cfg.fold_diacritics:
        text = unicodedata.normalize("NFD", text)
    lookup = cfg.index_of
    space = cfg.space_index
    out: list[int] = []
    last_was_space = True  # suppresses leading Space
    drop_marks = cfg.fold_diacritics
    for ch in text:
        if drop_marks and unicodedata.category(ch) == "Mn":
            continue
        idx = lookup.get(ch, space)
        if idx == space:
            if last_was_space:
                continue
            last_was_space = True
        else:
            last_was_space = False
        out.append(idx)
    if out and out[-1] == space:
        out.pop()
    return np.asarray(out, dtype=np.int32)


def render(symbols: np.ndarray, cfg: AlphabetConfig = AlphabetConfig()) -> str:
    """Inverse of normalize for already-normalized sequences."""
    return "".join(cfg.symbols[i] for i in symbols)
