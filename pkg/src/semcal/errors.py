"""Exception hierarchy.

Two families: validation errors (malformed inputs, exit code 1 at the CLI)
and degeneracy errors (mathematically undefined requests, exit code 2).
"""


class SemcalError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ValidationError(SemcalError):
    """Input violates a structural invariant."""

    exit_code = 1


class DegeneracyError(SemcalError):
    """Input is structurally fine but the requested quantity is undefined."""

    exit_code = 2


# -- validation ---------------------------------------------------------

class NotNormalized(ValidationError):
    pass


class NegativeMass(ValidationError):
    pass


class AlphabetMismatch(ValidationError):
    pass


class UnknownLabel(ValidationError):
    pass


class BeliefOutOfRange(ValidationError):
    pass


class IndexMismatch(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class EmptyConditionSubset(ValidationError):
    pass


# -- degeneracy ---------------------------------------------------------

class ZeroPrior(DegeneracyError):
    pass


class AbsoluteContinuityViolated(DegeneracyError):
    pass


class ZeroSelectionMass(DegeneracyError):
    pass


class ZeroLogicalProbability(DegeneracyError):
    pass


class DegenerateRates(DegeneracyError):
    pass


class EmptyRow(DegeneracyError):
    pass


class EmptyColumn(DegeneracyError):
    pass


class ZeroSensitivity(DegeneracyError):
    pass


class ZeroDenominator(DegeneracyError):
    pass


class ZeroRow(DegeneracyError):
    pass


class DegenerateInput(DegeneracyError):
    pass


class DegenerateGeometry(DegeneracyError):
    pass


class GridTooCoarse(DegeneracyError):
    pass
