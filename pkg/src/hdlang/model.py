"""Language profiles: training, and a self-contained binary model format.

A language vector is the exact integer sum of the text vectors of all
training samples for that language; nothing is normalized at training
time (cosine normalizes at comparison time), so incremental training is
exact: train(A ∪ B) = train(A) + train(B).

Model file format (little-endian, version 1):

    magic          4 bytes  b"HDLM"
    version        u16
    dim            u32
    n              u8
    seed           u64
    alphabet_len   u16      followed by that many UTF-8 bytes
    fold_flags     u8       bit0 = fold_case, bit1 = fold_diacritics
    permutation    dim x u32
    labels         per symbol: ceil(dim/8) bytes, one bit per component,
                   MSB-first within each byte, bit 1 = +1
    lang_count     u16
    per language:  name_len u16 + UTF-8 name,
                   sample_count u32, byte_count u64, vector dim x i32
    crc32          u32 over every preceding byte

Labels and permutation are stored even though they are derivable from
the seed, so files remain valid across PRNG implementations.
"""

from __future__ import annotations

import logging
import struct
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .alphabet import AlphabetConfig, normalize
from .encoder import Basis, EncoderConfig, encode_text_stream
from .errors import ModelFormatError, TextTooShortError, TrainingError
from .hv import permutation_from_mapping

log = logging.getLogger(__name__)

MAGIC = b"HDLM"
FORMAT_VERSION = 1


@dataclass(eq=False)
class LanguageVector:
    name: str
    vector: np.ndarray  # int64, length D
    sample_count: int
    byte_count: int

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LanguageVector)
            and self.name == other.name
            and self.sample_count == other.sample_count
            and self.byte_count == other.byte_count
            and np.array_equal(self.vector, other.vector)
        )


class LanguageModel:
    """Encoder basis plus one profile vector per language."""

    def __init__(self, basis: Basis, languages: Sequence[LanguageVector]):
        names = [lv.name for lv in languages]
        if len(set(names)) != len(names):
            raise TrainingError(f"duplicate language names: {sorted(names)}")
        for lv in languages:
            if lv.vector.shape[0] != basis.dim:
                raise TrainingError(
                    f"language {lv.name!r} vector length {lv.vector.shape[0]} != D"
                )
        self.basis = basis
        self.languages = list(languages)
        # cached comparison matrix: rows are language vectors
        self._matrix = np.stack([lv.vector for lv in self.languages])
        self._norms = np.sqrt((self._matrix.astype(np.float64) ** 2).sum(axis=1))

    @property
    def config(self) -> EncoderConfig:
        return self.basis.config

    @property
    def names(self) -> list[str]:
        return [lv.name for lv in self.languages]

    def __getitem__(self, name: str) -> LanguageVector:
        for lv in self.languages:
            if lv.name == name:
                return lv
        raise KeyError(name)


def train_language(
    name: str, samples: Iterable[str], basis: Basis
) -> LanguageVector:
    """Sum the text vectors of all samples long enough to form one block.

    Too-short samples (blank lines and the like) are skipped and logged,
    not fatal; zero usable samples is a TrainingError.
    """
    acc = np.zeros(basis.dim, dtype=np.int64)
    used = 0
    skipped = 0
    byte_count = 0
    cfg = basis.config.alphabet
    for raw in samples:
        symbols = normalize(raw, cfg)
        try:
            tv = encode_text_stream(symbols, basis)
        except TextTooShortError:
            skipped += 1
            continue
        acc += tv.vector
        used += 1
        byte_count += len(raw.encode("utf-8"))
    if used == 0:
        raise TrainingError(f"language {name!r}: no usable training samples")
    if skipped:
        log.info("language %s: skipped %d too-short sample(s)", name, skipped)
    return LanguageVector(
        name=name, vector=acc, sample_count=used, byte_count=byte_count
    )


def build_model(
    samples_by_language: Sequence[tuple[str, Iterable[str]]],
    config: EncoderConfig,
    *,
    threads: int | None = None,
) -> LanguageModel:
    """Train one language vector per (name, samples) pair on a shared basis.

    Per-language training jobs are independent; `threads` caps the worker
    pool (the encoder kernel releases the GIL).
    """
    names = [name for name, _ in samples_by_language]
    if len(names) < 2:
        raise TrainingError("a model needs at least two languages")
    if len(set(names)) != len(names):
        raise TrainingError(f"duplicate language names: {sorted(names)}")
    basis = Basis(config)

    def job(item):
        name, samples = item
        try:
            return train_language(name, samples, basis)
        except TrainingError:
            raise
        except Exception as exc:  # attach the language to any failure
            raise TrainingError(f"language {name!r}: {exc}") from exc

    if threads is not None and threads <= 1:
        languages = [job(item) for item in samples_by_language]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            languages = list(pool.map(job, samples_by_language))
    return LanguageModel(basis, languages)


# -- serialization ----------------------------------------------------


def save_model(model: LanguageModel, destination: str | Path) -> None:
    data = _serialize(model)
    Path(destination).write_bytes(data)


def _serialize(model: LanguageModel) -> bytes:
    cfg = model.config
    if cfg.n > 255:
        raise ModelFormatError("block size", "n does not fit in u8")
    parts = [MAGIC, struct.pack("<HIBQ", FORMAT_VERSION, cfg.dim, cfg.n, cfg.seed)]
    alpha = "".join(cfg.alphabet.symbols).encode("utf-8")
    parts.append(struct.pack("<H", len(alpha)))
    parts.append(alpha)
    flags = (1 if cfg.alphabet.fold_case else 0) | (
        2 if cfg.alphabet.fold_diacritics else 0
    )
    parts.append(struct.pack("<B", flags))
    parts.append(
        model.basis.permutation.mapping.astype("<u4").tobytes()
    )
    bits = np.packbits((model.basis.labels > 0).astype(np.uint8), axis=1)
    parts.append(bits.tobytes())
    parts.append(struct.pack("<H", len(model.languages)))
    for lv in model.languages:
        if np.any(lv.vector > np.iinfo(np.int32).max) or np.any(
            lv.vector < np.iinfo(np.int32).min
        ):
            raise ModelFormatError(
                "vector range", f"language {lv.name!r} exceeds i32"
            )
        name = lv.name.encode("utf-8")
        parts.append(struct.pack("<H", len(name)))
        parts.append(name)
        parts.append(struct.pack("<IQ", lv.sample_count, lv.byte_count))
        parts.append(lv.vector.astype("<i4").tobytes())
    body = b"".join(parts)
    return body + struct.pack("<I", zlib.crc32(body))


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, count: int, what: str) -> bytes:
        if self.pos + count > len(self.data):
            raise ModelFormatError("truncation", f"while reading {what}")
        chunk = self.data[self.pos : self.pos + count]
        self.pos += count
        return chunk

    def unpack(self, fmt: str, what: str):
        return struct.unpack(fmt, self.take(struct.calcsize(fmt), what))


def load_model(source: str | Path) -> LanguageModel:
    data = Path(source).read_bytes()
    if len(data) < 4 or data[:4] != MAGIC:
        raise ModelFormatError("magic")
    if len(data) < 8:
        raise ModelFormatError("truncation", "file shorter than header")
    (stored_crc,) = struct.unpack("<I", data[-4:])
    if zlib.crc32(data[:-4]) != stored_crc:
        raise ModelFormatError("checksum")
    r = _Reader(data[: len(data) - 4])
    r.take(4, "magic")
    version, dim, n, seed = r.unpack("<HIBQ", "header")
    if version != FORMAT_VERSION:
        raise ModelFormatError("version", f"unsupported version {version}")
    (alpha_len,) = r.unpack("<H", "alphabet length")
    symbols = tuple(r.take(alpha_len, "alphabet").decode("utf-8"))
    (flags,) = r.unpack("<B", "fold flags")
    try:
        alphabet = AlphabetConfig(
            symbols=symbols,
            fold_case=bool(flags & 1),
            fold_diacritics=bool(flags & 2),
        )
        config = EncoderConfig(n=n, dim=dim, seed=seed, alphabet=alphabet)
    except Exception as exc:
        raise ModelFormatError("configuration", str(exc)) from exc
    mapping = np.frombuffer(r.take(4 * dim, "permutation"), dtype="<u4").astype(
        np.int64
    )
    if not np.array_equal(np.sort(mapping), np.arange(dim)):
        raise ModelFormatError("permutation bijectivity")
    permutation = permutation_from_mapping(mapping, max(n, 1))
    row_bytes = (dim + 7) // 8
    bits = np.frombuffer(
        r.take(row_bytes * alphabet.size, "labels"), dtype=np.uint8
    ).reshape(alphabet.size, row_bytes)
    unpacked = np.unpackbits(bits, axis=1)[:, :dim]
    labels = np.where(unpacked == 1, 1, -1).astype(np.int8)
    if np.any(labels.sum(axis=1) != 0):
        raise ModelFormatError("label balance")
    basis = Basis(config, labels=labels, permutation=permutation)
    (lang_count,) = r.unpack("<H", "language count")
    languages = []
    for _ in range(lang_count):
        (name_len,) = r.unpack("<H", "language name length")
        name = r.take(name_len, "language name").decode("utf-8")
        sample_count, byte_count = r.unpack("<IQ", f"{name} counts")
        vector = np.frombuffer(
            r.take(4 * dim, f"{name} vector"), dtype="<i4"
        ).astype(np.int64)
        languages.append(
            LanguageVector(
                name=name,
                vector=vector,
                sample_count=sample_count,
                byte_count=byte_count,
            )
        )
    if r.pos != len(r.data):
        raise ModelFormatError("trailing data")
    try:
        return LanguageModel(basis, languages)
    except TrainingError as exc:
        raise ModelFormatError("model structure", str(exc)) from exc
