"""Fuzzy truth functions: conditional logical probability and its algebra.

A truth function maps each piece of evidence to a truth value in [0, 1].
The key constructions are logical probability (the prior-weighted average
truth value), the semantic Bayes prediction, Zadeh negation, and belief
adjustment, which mixes a hypothesis with the tautology (positive belief)
or suppresses it toward its negation structure (negative belief):

    belief b >= 0:  (1 - b) + b * t(e)
    belief b <  0:  1 + b * t(e)
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Mapping, Sequence

from .distributions import Alphabet, Distribution
from .errors import (
    AlphabetMismatch,
    BeliefOutOfRange,
    NegativeMass,
    UnknownLabel,
    ZeroLogicalProbability,
)


class TruthFunction(ABC):
    """Mapping evidence -> truth value in [0, 1]."""

    @abstractmethod
    def value(self, e) -> float:
        """Truth value at evidence ``e`` (a label, or a real for Gaussian)."""

    def values(self, alphabet: Alphabet) -> tuple[float, ...]:
        return tuple(self.value(label) for label in alphabet)


@dataclass(frozen=True)
class Crisp(TruthFunction):
    """Classical (0/1) truth function of a subset of the alphabet."""

    alphabet: Alphabet
    positive_set: frozenset

    def __init__(self, alphabet: Alphabet, positive_set):
        positive_set = frozenset(positive_set)
        for label in positive_set:
            if label not in alphabet:
                raise UnknownLabel(f"{label!r} not in alphabet {alphabet.labels}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "positive_set", positive_set)

    def value(self, e) -> float:
        if e not in self.alphabet:
            raise UnknownLabel(f"{e!r} not in alphabet {self.alphabet.labels}")
        return 1.0 if e in self.positive_set else 0.0


@dataclass(frozen=True)
class Gaussian(TruthFunction):
    """Bell-shaped truth function of a numeric estimation "E is about center".

    Evaluates on real numbers directly.  For discrete labels, ``positions``
    supplies the real value associated with each label; without it, labels
    that parse as floats are used as their own positions.
    """

    center: float
    stddev: float
    positions: Mapping[str, float] | None = None

    def __post_init__(self):
        if self.stddev <= 0:
            raise NegativeMass(f"stddev must be positive, got {self.stddev}")

    def _position(self, e) -> float:
        if isinstance(e, (int, float)):
            return float(e)
        if self.positions is not None and e in self.positions:
            return float(self.positions[e])
        try:
            return float(e)
        except (TypeError, ValueError):
            raise UnknownLabel(f"no numeric position for label {e!r}") from None

    def value(self, e) -> float:
        x = self._position(e)
        return math.exp(-((x - self.center) ** 2) / (2.0 * self.stddev**2))


@dataclass(frozen=True)
class Tabular(TruthFunction):
    """Truth function given explicitly per label."""

    alphabet: Alphabet
    table: tuple[float, ...]

    def __init__(self, alphabet: Alphabet, table: Sequence[float]):
        table = tuple(float(v) for v in table)
        if len(table) != len(alphabet):
            raise AlphabetMismatch(
                f"{len(table)} values for {len(alphabet)} labels")
        if any(v < 0 or v > 1 for v in table):
            raise NegativeMass(f"truth values must lie in [0,1]: {table}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "table", table)

    def value(self, e) -> float:
        return self.table[self.alphabet.index(e)]


@dataclass(frozen=True)
class BeliefAdjusted(TruthFunction):
    """A base hypothesis softened (b >= 0) or inverted (b < 0) by a belief."""

    base: TruthFunction
    belief: float

    def __post_init__(self):
        if not -1.0 <= self.belief <= 1.0:
            raise BeliefOutOfRange(f"belief must lie in [-1,1], got {self.belief}")

    def value(self, e) -> float:
        t = self.base.value(e)
        if self.belief >= 0:
            return (1.0 - self.belief) + self.belief * t
        return 1.0 + self.belief * t


@dataclass(frozen=True)
class Negated(TruthFunction):
    """Zadeh complement 1 - t(e)."""

    base: TruthFunction

    def value(self, e) -> float:
        return 1.0 - self.base.value(e)


def tautology(alphabet: Alphabet) -> TruthFunction:
    return Tabular(alphabet, (1.0,) * len(alphabet))


def contradiction(alphabet: Alphabet) -> TruthFunction:
    return Tabular(alphabet, (0.0,) * len(alphabet))


def negate(tf: TruthFunction) -> TruthFunction:
    """Pointwise complement; crisp and tabular forms stay in their own class."""
    if isinstance(tf, Crisp):
        complement = frozenset(tf.alphabet.labels) - tf.positive_set
        return Crisp(tf.alphabet, complement)
    if isinstance(tf, Tabular):
        return Tabular(tf.alphabet, tuple(1.0 - v for v in tf.table))
    if isinstance(tf, Negated):
        return tf.base
    return Negated(tf)


def belief_adjust(tf: TruthFunction, b: float) -> TruthFunction:
    """Attach a degree of belief b in [-1, 1] to ``tf``."""
    return BeliefAdjusted(tf, float(b))


def logical_probability(tf: TruthFunction, prior: Distribution) -> float:
    """Prior-weighted average truth value (Zadeh's fuzzy-event probability)."""
    return math.fsum(p * tf.value(label) for label, p in prior.items())


def semantic_bayes(prior: Distribution, tf: TruthFunction) -> Distribution:
    """Likelihood prediction P(E | "tf is true").

    P(e_i | A) = P(e_i) t(e_i) / T(A), where T(A) is the logical probability.
    """
    lp = logical_probability(tf, prior)
    if lp <= 0:
        raise ZeroLogicalProbability(
            "truth function is a contradiction under this prior")
    return Distribution(
        prior.alphabet,
        [p * tf.value(label) / lp for label, p in prior.items()],
        tolerance=1e-6,
    )
