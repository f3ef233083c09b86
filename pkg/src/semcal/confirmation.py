"""Degree-of-confirmation calculus.

The degree of confirmation b* of a hypothesis is the degree of belief that
maximizes its average semantic information under the observed sampling
distribution.  For a crisp two-outcome hypothesis this has closed forms:
with prior counterexample/positive masses (P0, P1) and posterior masses
(Q0, Q1),

    Q0/Q1 <= P0/P1:  b'* = (Q0/Q1)/(P0/P1),  b* = 1 - b'*   (affirmation holds)
    Q0/Q1 >  P0/P1:  b'' = (P0/P1)/(Q0/Q1),  b* = b'' - 1   (over-asserted)

The achieved information always equals KL((Q1,Q0) || (P1,P0)) in bits.
Contingency-table and sensitivity/specificity front ends reduce to these
forms; the raven-paradox increments are the partial derivatives of b* in
the table counts under a continuous relaxation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import (
    DegenerateRates,
    EmptyColumn,
    EmptyRow,
    NegativeMass,
    NotNormalized,
    ZeroDenominator,
    ZeroSensitivity,
)


class DocCase(str, Enum):
    PROPER_AFFIRMATION = "proper-affirmation"
    EXCESSIVE_AFFIRMATION = "excessive-affirmation"
    PROPER_NEGATION = "proper-negation"
    EXCESSIVE_NEGATION = "excessive-negation"


@dataclass(frozen=True)
class DocResult:
    """An optimized degree of belief and the information it achieves."""

    b_star: float
    b_prime_star: float
    case: DocCase
    information_bits: Optional[float] = None


@dataclass(frozen=True)
class RateSpec:
    """Prior and posterior (counterexample, positive-example) mass pairs."""

    prior: tuple[float, float]       # (P0, P1)
    posterior: tuple[float, float]   # (Q0, Q1)

    def __post_init__(self):
        for name, pair in (("prior", self.prior), ("posterior", self.posterior)):
            if len(pair) != 2:
                raise NotNormalized(f"{name} must be a pair, got {pair}")
            if any(v < 0 for v in pair):
                raise NegativeMass(f"{name} pair has negative mass: {pair}")
            if abs(math.fsum(pair) - 1.0) > 1e-9:
                raise NotNormalized(f"{name} pair sums to {math.fsum(pair)}, not 1")


@dataclass(frozen=True)
class ContingencyTable:
    """2x2 counts: n11 positive examples, n10 counterexamples of s1 -> s2."""

    n11: float
    n10: float
    n01: float
    n00: float

    def __post_init__(self):
        counts = (self.n11, self.n10, self.n01, self.n00)
        if any(c < 0 for c in counts):
            raise NegativeMass(f"counts must be >= 0: {counts}")
        if sum(counts) <= 0:
            raise EmptyRow("contingency table is empty")

    @property
    def total(self) -> float:
        return self.n11 + self.n10 + self.n01 + self.n00


def _info_positive_branch(b_prime: float, q0: float, q1: float,
                          p0: float, p1: float) -> float:
    """Average information of the belief-softened hypothesis at disbelief b'.

    T on positive examples is 1 and on counterexamples b'; the logical
    probability is b'*P0 + P1.  Zero-mass terms drop by the 0*log convention.
    """
    lp = b_prime * p0 + p1
    total = 0.0
    if q1 > 0:
        total += q1 * math.log2(1.0 / lp)
    if q0 > 0:
        total += q0 * (math.log2(b_prime / lp) if b_prime > 0 else float("-inf"))
    return total


def _info_negative_branch(b_pp: float, q0: float, q1: float,
                          p0: float, p1: float) -> float:
    """Average information of the negatively-believed hypothesis at disbelief b''.

    T on positive examples is b'' and on counterexamples 1; the logical
    probability is P0 + b''*P1.
    """
    lp = p0 + b_pp * p1
    total = 0.0
    if q0 > 0:
        total += q0 * math.log2(1.0 / lp)
    if q1 > 0:
        total += q1 * (math.log2(b_pp / lp) if b_pp > 0 else float("-inf"))
    return total


def doc_from_rates(spec: RateSpec, hypothesis: str = "affirmative") -> DocResult:
    """Closed-form degree of confirmation from mass pairs.

    ``hypothesis="affirmative"`` confirms the hypothesis whose positive
    examples carry the (P1, Q1) masses; ``"denial"`` confirms its negation,
    whose belief is the sign-flipped one (excessive negation mirrors proper
    affirmation and vice versa).
    """
    if hypothesis not in ("affirmative", "denial"):
        raise DegenerateRates(f"unknown hypothesis kind {hypothesis!r}")
    p0, p1 = spec.prior
    q0, q1 = spec.posterior

    if p1 == 0.0 and q1 > 0.0:
        raise DegenerateRates("prior gives positive examples zero mass but posterior does not")
    if p0 == 0.0 and q0 > 0.0:
        raise DegenerateRates("prior gives counterexamples zero mass but posterior does not")
    if p0 == 0.0 and q0 == 0.0:
        raise DegenerateRates("no counterexample mass anywhere; belief is unidentified")
    if p1 == 0.0 and q1 == 0.0:
        raise DegenerateRates("no positive-example mass anywhere; belief is unidentified")

    # Branch on Q0/Q1 <= P0/P1 via cross products (safe for zero masses).
    if q0 * p1 <= p0 * q1:
        b_prime = (q0 * p1) / (q1 * p0)
        b = 1.0 - b_prime
        case = DocCase.PROPER_AFFIRMATION
        info = _info_positive_branch(b_prime, q0, q1, p0, p1)
    else:
        b_prime = (p0 * q1) / (p1 * q0)
        b = b_prime - 1.0
        case = DocCase.EXCESSIVE_AFFIRMATION
        info = _info_negative_branch(b_prime, q0, q1, p0, p1)

    if hypothesis == "denial":
        b = -b
        case = (DocCase.EXCESSIVE_NEGATION if case is DocCase.PROPER_AFFIRMATION
                else DocCase.PROPER_NEGATION)
    return DocResult(b_star=b, b_prime_star=1.0 - abs(b), case=case,
                     information_bits=info)


def rates_for_h1(t: ContingencyTable) -> RateSpec:
    """Prior/posterior mass pairs of the forward inference s1 -> s2."""
    if t.n11 + t.n10 <= 0:
        raise EmptyRow("no evidence with the antecedent s1")
    if t.n11 + t.n01 <= 0:
        raise EmptyColumn("no positive-example column mass")
    if t.n00 + t.n10 <= 0:
        raise EmptyColumn("no counterexample column mass")
    n = t.total
    prior = ((t.n10 + t.n00) / n, (t.n11 + t.n01) / n)
    row = t.n11 + t.n10
    posterior = (t.n10 / row, t.n11 / row)
    return RateSpec(prior=prior, posterior=posterior)


def doc_h1_from_table(t: ContingencyTable) -> DocResult:
    """Degree of confirmation of s1 -> s2 from 2x2 counts."""
    return doc_from_rates(rates_for_h1(t))


def doc_h2_from_table(t: ContingencyTable) -> DocResult:
    """Degree of confirmation of the contrapositive not-s2 -> not-s1.

    Generally differs from :func:`doc_h1_from_table`: the calculus denies
    the equivalence condition because the two inferences trade the same
    counterexamples against different positive examples.
    """
    swapped = ContingencyTable(n11=t.n00, n10=t.n10, n01=t.n01, n00=t.n11)
    return doc_h1_from_table(swapped)


def doc_from_test(sensitivity: float, specificity: float,
                  prior_positive: float | None = None) -> tuple[DocResult, DocResult]:
    """Degrees of confirmation of a diagnostic test's "+" and "-" readings.

    b+* = 1 - (1 - specificity)/sensitivity and b-* = 1 - (1 - sensitivity)/
    specificity; both are prior-free.  When ``prior_positive`` (the disease
    base rate) is supplied, each result carries the average information of
    the reading, which does depend on the prior.
    """
    if not 0.0 < sensitivity <= 1.0:
        raise ZeroSensitivity(f"sensitivity must lie in (0,1], got {sensitivity}")
    if not 0.0 <= specificity <= 1.0:
        raise NegativeMass(f"specificity must lie in [0,1], got {specificity}")

    positive = _doc_from_row(counter_rate=1.0 - specificity, positive_rate=sensitivity)
    if specificity == 0.0:
        negative = DocResult(b_star=-1.0, b_prime_star=0.0,
                             case=DocCase.EXCESSIVE_AFFIRMATION)
    else:
        negative = _doc_from_row(counter_rate=1.0 - sensitivity, positive_rate=specificity)

    if prior_positive is not None:
        from .distributions import Distribution, _binary_alphabet, bayes_invert, kl_divergence

        prior = Distribution(_binary_alphabet(), (prior_positive, 1.0 - prior_positive))
        pos_sampling = bayes_invert(prior, (sensitivity, 1.0 - specificity))
        neg_sampling = bayes_invert(prior, (1.0 - sensitivity, specificity))
        positive = DocResult(positive.b_star, positive.b_prime_star, positive.case,
                             kl_divergence(pos_sampling, prior))
        negative = DocResult(negative.b_star, negative.b_prime_star, negative.case,
                             kl_divergence(neg_sampling, prior))
    return positive, negative


def _doc_from_row(counter_rate: float, positive_rate: float) -> DocResult:
    """DOC from a selecting-rule row: b'* = P(h|counterexample)/P(h|positive)."""
    if positive_rate <= 0:
        raise ZeroSensitivity("selecting rate on positive examples must be positive")
    b_prime = counter_rate / positive_rate
    if b_prime <= 1.0:
        return DocResult(b_star=1.0 - b_prime, b_prime_star=b_prime,
                         case=DocCase.PROPER_AFFIRMATION)
    b_pp = positive_rate / counter_rate
    return DocResult(b_star=b_pp - 1.0, b_prime_star=b_pp,
                     case=DocCase.EXCESSIVE_AFFIRMATION)


def predicted_probability(p_e1: float, b_prime_star: float) -> float:
    """Probability of a positive case predicted from the confirmed hypothesis.

    P(e1 | h^b*) = P(e1) / (P(e1) + b'* (1 - P(e1))).
    """
    if not 0.0 <= p_e1 <= 1.0:
        raise NegativeMass(f"p_e1 must lie in [0,1], got {p_e1}")
    if not 0.0 <= b_prime_star <= 1.0:
        raise NegativeMass(f"b_prime_star must lie in [0,1], got {b_prime_star}")
    denom = p_e1 + b_prime_star * (1.0 - p_e1)
    if denom == 0.0:
        raise ZeroDenominator("both p_e1 and b_prime_star are zero")
    return p_e1 / denom


def raven_increments(t: ContingencyTable) -> tuple[float, float]:
    """How much one more positive example of each kind raises b* of s1 -> s2.

    Returns (db*/dn11, db*/dn00) under the continuous relaxation of counts.
    """
    if t.n11 <= 0:
        raise EmptyRow("derivatives need n11 > 0")
    if t.n00 + t.n10 <= 0:
        raise EmptyRow("derivatives need n00 + n10 > 0")
    d_n11 = (t.n10 * t.n01) / ((t.n00 + t.n10) * t.n11**2)
    d_n00 = (t.n10 * (t.n01 + t.n11)) / (t.n11 * (t.n00 + t.n10) ** 2)
    return d_n11, d_n00
