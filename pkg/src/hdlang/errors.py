"""Exception types shared across the package."""


class HdlangError(Exception):
    """Base class for all hdlang errors."""


class ConfigError(HdlangError, ValueError):
    """Invalid configuration (odd dimensionality, bad alphabet, ...)."""


class DimensionMismatchError(HdlangError, ValueError):
    """Operands of a vector operation have different lengths."""


class DegenerateVectorError(HdlangError, ValueError):
    """Cosine of an all-zero vector was requested.

    A zero vector here almost always means an upstream encoding bug or
    empty input, so it is reported loudly instead of silently scoring 0.
    """


class TextTooShortError(HdlangError, ValueError):
    """Text has fewer than n - 2 usable symbols and cannot form one block."""


class TrainingError(HdlangError, ValueError):
    """No usable training material for a language."""


class ModelFormatError(HdlangError, ValueError):
    """A model file failed structural or invariant validation.

    ``invariant`` names the specific check that failed (e.g. "magic",
    "checksum", "label balance", "permutation bijectivity").
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = f"invalid model file: {invariant}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CorpusError(HdlangError, ValueError):
    """Corpus path unreadable or contains no usable samples."""
