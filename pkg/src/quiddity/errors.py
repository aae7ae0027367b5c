"""Shared exception types.

The CLI maps these onto exit codes: UsageError becomes exit 2 (bad input or
schema), everything else derived from QuiddityError becomes exit 1 (a
mathematically negative answer such as "rule not applicable here").
"""

from __future__ import annotations


class QuiddityError(Exception):
    """Base class for all library errors."""


class UsageError(QuiddityError):
    """Malformed input: unknown ring tag, mixed rings, bad JSON shape."""


class UnsupportedRingError(QuiddityError):
    """Operation requires a property the ring lacks (e.g. discreteness)."""


class NotApplicableError(QuiddityError):
    """A rule or case was requested where its preconditions fail."""


class SingularError(NotApplicableError):
    """A required inverse does not exist (zero parameter, uv = 1 window)."""


class NotRepresentableError(NotApplicableError):
    """Exact division failed in a non-field ring."""


class InvalidCycleError(QuiddityError):
    """An operation needed a quiddity cycle (or epsilon-cycle) and got none."""


class InvalidLabellingError(QuiddityError):
    """An operation needed an admissible labelling and got none."""
