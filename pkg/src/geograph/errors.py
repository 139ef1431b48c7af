"""Exception types raised across the package."""

from __future__ import annotations


class GeographError(Exception):
    """Base class for every error raised by :mod:`geograph`."""


class NotAdmissible(GeographError):
    def __init__(self, report):
        self.report = report
        detail = ", ".join(f"{rel} residue {res}" for rel, res in report.violations)
        super().__init__(f"quintuple is not admissible ({detail})")


class Mod3Violation(GeographError):
    pass


class DimensionMismatch(GeographError):
    pass


class UnknownBlock(GeographError):
    pass


class AbstractManifold(GeographError):
    """The manifold has no explicit lattice / first Chern class vector."""


class DivisibilityViolation(GeographError):
    """A blow-up delta on 4m or 12k is not divisible by 4 or 12."""


class SingularSystem(GeographError):
    pass


class SearchExhausted(GeographError):
    def __init__(self, bounds):
        self.bounds = bounds
        super().__init__(f"no nonnegative integer plan within search bounds {bounds}")


class MalformedPlan(GeographError):
    pass
