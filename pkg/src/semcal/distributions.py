"""Finite discrete probability distributions and classical information primitives.

All information quantities are in bits (log base 2).  Negative infinity is a
first-class value: an impossible posterior yields ``-inf``, never an exception.
The convention 0*log2(0/p) = 0 is used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    AbsoluteContinuityViolated,
    AlphabetMismatch,
    NegativeMass,
    NotNormalized,
    UnknownLabel,
    ZeroPrior,
    ZeroSelectionMass,
)

#: Default tolerance on |sum(probs) - 1| before a distribution is rejected.
NORMALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite set of evidence labels."""

    labels: tuple[str, ...]

    def __init__(self, labels: Sequence[str]):
        labels = tuple(str(l) for l in labels)
        if not labels:
            raise NotNormalized("alphabet must not be empty")
        if len(set(labels)) != len(labels):
            raise NotNormalized(f"duplicate labels in alphabet: {labels}")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self.labels

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"label {label!r} not in alphabet {self.labels}") from None


def _binary_alphabet() -> Alphabet:
    return Alphabet(("e1", "e0"))


@dataclass(frozen=True)
class Distribution:
    """A probability distribution over an :class:`Alphabet`.

    Probabilities within ``tolerance`` of summing to 1 are renormalized
    exactly at construction, so ``sum(d.probs) == 1.0`` up to float rounding.
    """

    alphabet: Alphabet
    probs: tuple[float, ...] = field(default=())

    def __init__(self, alphabet: Alphabet, probs: Sequence[float],
                 tolerance: float = NORMALIZATION_TOLERANCE):
        probs = tuple(float(p) for p in probs)
        if len(probs) != len(alphabet):
            raise AlphabetMismatch(
                f"{len(probs)} probabilities for {len(alphabet)} labels")
        if any(p < 0 for p in probs):
            raise NegativeMass(f"negative probability in {probs}")
        total = math.fsum(probs)
        if abs(total - 1.0) > tolerance:
            raise NotNormalized(f"probabilities sum to {total}, not 1")
        probs = tuple(p / total for p in probs)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "probs", probs)

    def __getitem__(self, label: str) -> float:
        return self.probs[self.alphabet.index(label)]

    def items(self):
        return zip(self.alphabet.labels, self.probs)


def validate(d: Distribution) -> None:
    """Re-check the Distribution invariants (construction already enforces them)."""
    if any(p < 0 for p in d.probs):
        raise NegativeMass(f"negative probability in {d.probs}")
    total = math.fsum(d.probs)
    if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
        raise NotNormalized(f"probabilities sum to {total}, not 1")


def pointwise_info(posterior_prob: float, prior_prob: float) -> float:
    """log2(posterior/prior) in bits; -inf when the posterior is 0."""
    if prior_prob <= 0:
        raise ZeroPrior(f"prior probability must be positive, got {prior_prob}")
    if posterior_prob < 0:
        raise NegativeMass(f"posterior probability must be >= 0, got {posterior_prob}")
    if posterior_prob == 0.0:
        return float("-inf")
    return math.log2(posterior_prob / prior_prob)


def _require_same_alphabet(a: Distribution, b: Distribution) -> None:
    if a.alphabet.labels != b.alphabet.labels:
        raise AlphabetMismatch(
            f"alphabets differ: {a.alphabet.labels} vs {b.alphabet.labels}")


def kl_divergence(q: Distribution, p: Distribution) -> float:
    """Kullback-Leibler divergence KL(q || p) in bits.

    Requires p to dominate q; terms with q_i = 0 contribute nothing.
    """
    _require_same_alphabet(q, p)
    total = 0.0
    for qi, pi in zip(q.probs, p.probs):
        if qi == 0.0:
            continue
        if pi == 0.0:
            raise AbsoluteContinuityViolated(
                "q has mass where p has none; KL(q||p) is infinite")
        total += qi * math.log2(qi / pi)
    return total


def _kl_or_inf(q: Distribution, p: Distribution) -> float:
    """KL(q || p), returning +inf instead of raising on a dominance failure."""
    try:
        return kl_divergence(q, p)
    except AbsoluteContinuityViolated:
        return float("inf")


def bayes_invert(prior: Distribution, channel_row: Sequence[float],
                 selection_prob: float | None = None) -> Distribution:
    """Posterior P(E|h) from prior P(E) and a selecting-rule row P(h|E).

    ``selection_prob`` (P(h)) is accepted for interface completeness but
    cancels out of the normalized posterior, so it is never used.
    """
    row = [float(v) for v in channel_row]
    if len(row) != len(prior.alphabet):
        raise AlphabetMismatch(
            f"channel row length {len(row)} != alphabet size {len(prior.alphabet)}")
    if any(v < 0 or v > 1 for v in row):
        raise NegativeMass(f"channel row values must lie in [0,1]: {row}")
    joint = [p * v for p, v in zip(prior.probs, row)]
    mass = math.fsum(joint)
    if mass <= 0:
        raise ZeroSelectionMass("prior puts no mass where the channel row is positive")
    return Distribution(prior.alphabet, [j / mass for j in joint])
