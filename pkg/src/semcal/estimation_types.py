"""Data types shared by the estimation layer.

Kept separate from the estimation operations so that the information
measures can accept a Channel without a circular import.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .distributions import NORMALIZATION_TOLERANCE, Alphabet
from .errors import (
    DegenerateGeometry,
    GridTooCoarse,
    NegativeMass,
    NotNormalized,
    UnknownLabel,
)


@dataclass(frozen=True)
class Channel:
    """A Shannon channel P(H|E): one selecting-rule row per hypothesis.

    ``matrix[j][i]`` is P(h_j | e_i).  For each fixed evidence letter the
    column over hypotheses is normalized; an individual row is not.
    """

    alphabet: Alphabet
    hypotheses: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]

    def __init__(self, alphabet: Alphabet, hypotheses: Sequence[str],
                 matrix: Sequence[Sequence[float]],
                 tolerance: float = NORMALIZATION_TOLERANCE):
        hypotheses = tuple(str(h) for h in hypotheses)
        if len(set(hypotheses)) != len(hypotheses):
            raise NotNormalized(f"duplicate hypothesis names: {hypotheses}")
        rows = tuple(tuple(float(v) for v in row) for row in matrix)
        if len(rows) != len(hypotheses):
            raise NotNormalized(
                f"{len(rows)} rows for {len(hypotheses)} hypotheses")
        for row in rows:
            if len(row) != len(alphabet):
                raise NotNormalized(
                    f"row length {len(row)} != alphabet size {len(alphabet)}")
            if any(v < 0 or v > 1 for v in row):
                raise NegativeMass(f"channel values must lie in [0,1]: {row}")
        for i in range(len(alphabet)):
            col = math.fsum(row[i] for row in rows)
            if abs(col - 1.0) > tolerance:
                raise NotNormalized(
                    f"column for {alphabet.labels[i]!r} sums to {col}, not 1")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "hypotheses", hypotheses)
        object.__setattr__(self, "matrix", rows)

    def row(self, j: int) -> tuple[float, ...]:
        return self.matrix[j]

    def hypothesis_index(self, name: str) -> int:
        try:
            return self.hypotheses.index(name)
        except ValueError:
            raise UnknownLabel(f"unknown hypothesis {name!r}") from None


@dataclass(frozen=True)
class SampleSet:
    """Observed (condition tag, evidence label) records."""

    alphabet: Alphabet
    records: tuple[tuple[str, str], ...]

    def __init__(self, alphabet: Alphabet, records: Sequence[tuple[str, str]]):
        records = tuple((str(c), str(e)) for c, e in records)
        for _, e in records:
            if e not in alphabet:
                raise UnknownLabel(f"evidence label {e!r} not in alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "records", records)

    def conditions(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for c, _ in self.records:
            seen.setdefault(c)
        return tuple(seen)

    def __len__(self) -> int:
        return len(self.records)


def _toroidal_offsets(size: int) -> np.ndarray:
    """Signed wrap-around offsets 0..size-1 mapped into (-size/2, size/2]."""
    k = np.arange(size, dtype=float)
    return np.where(k > size / 2, k - size, k)


@dataclass(frozen=True)
class GpsModel:
    """Discretized 1-D deviation model for a position estimator.

    The reported position given a true cell follows a Gaussian around the
    true cell shifted by a systematic deviation ``delta_e``, on top of a
    uniform long-tail floor ``c`` (probability per cell).  The grid wraps
    around, so every row of the channel has the same shape.
    """

    grid_size: int
    delta_e: float
    d: float
    c: float

    def __post_init__(self):
        if self.grid_size < 2:
            raise DegenerateGeometry(f"grid_size must be >= 2, got {self.grid_size}")
        if self.d <= 0:
            raise NegativeMass(f"standard deviation must be positive, got {self.d}")
        if self.d < 2.0:
            raise GridTooCoarse(
                f"standard deviation {self.d} is below 2 grid steps")
        if self.c < 0:
            raise NegativeMass(f"long-tail floor must be >= 0, got {self.c}")
        if self.grid_size * self.c >= 1.0:
            raise NotNormalized(
                f"floor mass {self.grid_size * self.c} leaves no room for the peak")

    def _gaussian_profile(self) -> np.ndarray:
        offsets = _toroidal_offsets(self.grid_size)
        return np.exp(-(offsets**2) / (2.0 * self.d**2))

    @property
    def peak_coefficient(self) -> float:
        """The k of the row model k*exp(...) + c, fixed by row normalization."""
        profile_sum = float(self._gaussian_profile().sum())
        return (1.0 - self.grid_size * self.c) / profile_sum

    @property
    def reference_belief(self) -> float:
        """The belief k/(k+c) that the max-normalized row corresponds to."""
        k = self.peak_coefficient
        return k / (k + self.c)

    def channel_matrix(self) -> np.ndarray:
        """Rows P(reported | true) indexed [true, reported], each normalized."""
        m = self.grid_size
        k = self.peak_coefficient
        true_idx = np.arange(m).reshape(-1, 1)
        rep_idx = np.arange(m).reshape(1, -1)
        raw = rep_idx - self.delta_e - true_idx
        dist = (raw + m / 2) % m - m / 2
        rows = k * np.exp(-(dist**2) / (2.0 * self.d**2)) + self.c
        return rows / rows.sum(axis=1, keepdims=True)
