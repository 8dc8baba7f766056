"""Exception types shared across the package.

Every error raised on bad input or on a broken internal invariant has a
named class so callers (and the CLI exit-code mapping) can tell usage
mistakes apart from bugs.
"""

from __future__ import annotations


class HitomezashiError(Exception):
    """Base class for all package errors."""


class ParseError(HitomezashiError, ValueError):
    """A sign string could not be parsed."""


class SizeTooSmall(HitomezashiError, ValueError):
    """Torus side below the minimum of 3."""


class LengthMismatch(HitomezashiError, ValueError):
    """Sign string length does not match the torus dimensions."""


class InvalidEdge(HitomezashiError, ValueError):
    """Directed edge that violates the pattern's orientation."""


class DivisibilityViolation(HitomezashiError, AssertionError):
    """Loop displacement not divisible by the torus period (tracer bug)."""


class NotBalanced(HitomezashiError, ValueError):
    """Operation requires k(x) = k(y) = 0."""


class OrientationViolation(HitomezashiError, ValueError):
    """Planar edge inconsistent with the lift orientation (left != right + 1)."""


class InconsistentHeight(HitomezashiError, AssertionError):
    """Edges of one loop reported different heights (internal bug)."""


class WrongHomology(HitomezashiError, ValueError):
    """Loop homology class outside the operation's precondition."""


class InvalidMap(HitomezashiError, ValueError):
    """Combinatorial map violating the link-like constraints."""


class NotATriangle(HitomezashiError, ValueError):
    """Face passed to a triple-point move is not a triangle."""


class NotAlternating(HitomezashiError, ValueError):
    """Configuration query on a face whose strand orientations are adjacent."""


class MoveScheduleFailure(HitomezashiError, RuntimeError):
    """A scheduled triple-point move found no (or an ambiguous) triangle."""


class SweepRangeError(HitomezashiError, ValueError):
    """Sweep range exceeds the configured ceilings."""
