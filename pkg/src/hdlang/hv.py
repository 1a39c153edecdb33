"""Hyperdimensional vector algebra: random bipolar labels, bind, bundle,
coordinate permutation and cosine similarity.

Vectors are plain numpy integer arrays of a fixed even length D.  Labels
are balanced bipolar vectors (exactly D/2 entries of +1 and D/2 of -1,
int8); accumulated vectors are int64 so sums never clip.

Randomness comes from ``numpy.random.Generator`` seeded with PCG64
(``numpy.random.default_rng``).  The same seed always reproduces the same
labels and permutation, bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DegenerateVectorError, DimensionMismatchError

__all__ = [
    "Permutation",
    "bind",
    "bundle",
    "cosine",
    "make_rng",
    "new_permutation",
    "new_random_label",
    "permute",
]


def make_rng(seed: int) -> np.random.Generator:
    """Deterministic PRNG for label/permutation generation (PCG64)."""
    if not 0 <= seed < 2**64:
        raise ConfigError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.default_rng(seed)


def _check_dim(dim: int) -> None:
    if dim < 2 or dim % 2 != 0:
        raise ConfigError(f"dimensionality must be even and >= 2, got {dim}")


def new_random_label(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Draw a balanced bipolar label: a uniform shuffle of D/2 ones and
    D/2 minus-ones.  Balance is exact, not merely expected."""
    _check_dim(dim)
    label = np.empty(dim, dtype=np.int8)
    label[: dim // 2] = 1
    label[dim // 2 :] = -1
    rng.shuffle(label)
    return label


@dataclass(frozen=True, eq=False)
class Permutation:
    """A fixed random bijection on [0, D) with precomputed powers.

    ``powers[k]`` sends source index i to destination index powers[k][i],
    i.e. applying the permutation k times places input coordinate i at
    output coordinate powers[k][i] (result[mapping[i]] = input[i]).
    ``powers[0]`` is the identity.
    """

    mapping: np.ndarray
    powers: np.ndarray  # shape (n_max + 1, D)
    inverse_powers: np.ndarray = field(repr=False, default=None)  # gather form

    @property
    def dim(self) -> int:
        return self.mapping.shape[0]

    @property
    def n_max(self) -> int:
        return self.powers.shape[0] - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and np.array_equal(
            self.mapping, other.mapping
        ) and self.n_max == other.n_max


def _build_powers(mapping: np.ndarray, n_max: int) -> Permutation:
    dim = mapping.shape[0]
    powers = np.empty((n_max + 1, dim), dtype=np.int64)
    powers[0] = np.arange(dim)
    for k in range(1, n_max + 1):
        # result[mapping[mapping[i]]] = input[i] after two applications
        powers[k] = mapping[powers[k - 1]]
    inverse = np.empty_like(powers)
    for k in range(n_max + 1):
        inverse[k, powers[k]] = np.arange(dim)
    return Permutation(mapping=mapping, powers=powers, inverse_powers=inverse)


def new_permutation(rng: np.random.Generator, dim: int, n_max: int) -> Permutation:
    """Uniform random coordinate permutation with powers 0..n_max precomputed."""
    _check_dim(dim)
    if n_max < 1:
        raise ConfigError(f"n_max must be >= 1, got {n_max}")
    mapping = rng.permutation(dim).astype(np.int64)
    return _build_powers(mapping, n_max)


def permutation_from_mapping(mapping: np.ndarray, n_max: int) -> Permutation:
    """Rebuild a Permutation (with powers) from a stored mapping."""
    dim = mapping.shape[0]
    if not np.array_equal(np.sort(mapping), np.arange(dim)):
        raise ConfigError("mapping is not a bijection on [0, D)")
    return _build_powers(mapping.astype(np.int64), n_max)


def _check_same_length(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"length mismatch: {a.shape} vs {b.shape}")


def bind(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Componentwise product.  Self-inverse on bipolar vectors."""
    _check_same_length(a, b)
    return a * b


def bundle(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Componentwise integer sum.  No clipping, no normalization."""
    _check_same_length(a, b)
    return a.astype(np.int64) + b.astype(np.int64)


def permute(v: np.ndarray, p: Permutation, k: int = 1) -> np.ndarray:
    """Apply the k-th power of the permutation; k = 0 is the identity."""
    if not 0 <= k <= p.n_max:
        raise DimensionMismatchError(
            f"permutation power {k} outside precomputed range 0..{p.n_max}"
        )
    if v.shape[0] != p.dim:
        raise DimensionMismatchError(f"vector length {v.shape[0]} != {p.dim}")
    out = np.empty_like(v)
    out[p.powers[k]] = v
    return out


def cosine(x: np.ndarray, v: np.ndarray) -> float:
    """Signed cosine similarity, integer dot product in int64.

    Raises DegenerateVectorError on an all-zero operand.
    """
    _check_same_length(x, v)
    x64 = x.astype(np.int64, copy=False)
    v64 = v.astype(np.int64, copy=False)
    nx = int(np.dot(x64, x64))
    nv = int(np.dot(v64, v64))
    if nx == 0 or nv == 0:
        raise DegenerateVectorError("cosine of an all-zero vector")
    return int(np.dot(x64, v64)) / math.sqrt(nx * nv)
