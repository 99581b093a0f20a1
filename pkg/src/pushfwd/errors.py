"""Exception types raised across the package.

Every error names the violated precondition; callers (including the CLI)
surface the message verbatim.
"""


class PushforwardError(Exception):
    """Base class for all domain errors in this package."""


class InvalidDegree(PushforwardError):
    """A map degree or bundle degree outside the allowed range."""


class InvalidSequence(PushforwardError):
    """A cohomology sequence that violates a window invariant."""


class NegativeSecondDifference(InvalidSequence):
    """The sequence is not the h0 (or h1) sequence of any split bundle."""


class RankMismatch(InvalidSequence):
    """Second differences do not sum to the expected rank (window too small)."""


class MissingFlag(PushforwardError):
    """Degree-zero elliptic data needs the exceptional-class flag."""


class ExcessFlag(PushforwardError):
    """The exceptional-class flag was supplied where it does not apply."""


class NegativeH1(PushforwardError):
    """Converting h0 to h1 values produced a negative dimension."""


class Overfull(PushforwardError):
    """h0 + h1 exceeds the map degree; the stable-regime hypothesis fails."""


class OutOfScope(PushforwardError):
    """Spread bounds are only stated for genus at least 2."""


class PointNotOnCurve(PushforwardError):
    """Coordinates that do not satisfy the curve equation."""


class CharacteristicTwo(PushforwardError):
    """Hyperelliptic models y^2 = f(x) need an odd field characteristic."""


class SingularCurve(PushforwardError):
    """The defining polynomial is not squarefree over the base field."""


class WrongGenus(PushforwardError):
    """An operation restricted to a specific genus got another one."""


class DegreeNotMultiple(PushforwardError):
    """The divisor degree must be a multiple of the map degree here."""
