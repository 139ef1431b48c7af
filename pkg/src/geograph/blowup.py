"""How the parameters (a, m, j, k, b) change under a symplectic blow-up.

Three kinds of centre are supported: a point, an embedded curve of genus g,
and an embedded fourfold.  Deltas are worked out in the integer coordinates
``(a, 4m, 12k, b)`` and only then divided; an inexact division means the
profile cannot belong to a real submanifold, and is reported as
:class:`DivisibilityViolation` rather than rounded.  ``j`` never changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .admissibility import ParamVector
from .errors import DivisibilityViolation

__all__ = [
    "SubmanifoldProfile",
    "raw_delta",
    "profile_delta",
    "apply_blowup",
    "apply_sequence",
]

_FOURFOLD_FIELDS = ("c2X", "c1sqX", "c1X_c1nu", "c1nu_sq", "c2nu")


@dataclass(frozen=True)
class SubmanifoldProfile:
    """Characteristic numbers of a blow-up centre.

    curve:    ``genus`` and ``nu_deg`` = <c1(normal bundle), [C]>.
    fourfold: c2[X], c1^2[X], <c1(X) c1(nu)>, <c1(nu)^2>, <c2(nu)>.
    """

    kind: str
    genus: Optional[int] = None
    nu_deg: Optional[int] = None
    c2X: Optional[int] = None
    c1sqX: Optional[int] = None
    c1X_c1nu: Optional[int] = None
    c1nu_sq: Optional[int] = None
    c2nu: Optional[int] = None

    def __post_init__(self):
        curve = (self.genus, self.nu_deg)
        four = tuple(getattr(self, f) for f in _FOURFOLD_FIELDS)
        if self.kind == "point":
            ok = all(x is None for x in curve + four)
        elif self.kind == "curve":
            ok = all(x is not None for x in curve) and all(x is None for x in four)
        elif self.kind == "fourfold":
            ok = all(x is None for x in curve) and all(x is not None for x in four)
        else:
            raise ValueError(f"unknown centre kind {self.kind!r}")
        if not ok:
            raise ValueError(f"fields do not match centre kind {self.kind!r}")

    @classmethod
    def point(cls) -> "SubmanifoldProfile":
        return cls("point")

    @classmethod
    def curve(cls, genus: int, nu_deg: int) -> "SubmanifoldProfile":
        return cls("curve", genus=genus, nu_deg=nu_deg)

    @classmethod
    def fourfold(cls, c2X: int, c1sqX: int, c1X_c1nu: int, c1nu_sq: int, c2nu: int = 0) -> "SubmanifoldProfile":
        return cls("fourfold", c2X=c2X, c1sqX=c1sqX, c1X_c1nu=c1X_c1nu, c1nu_sq=c1nu_sq, c2nu=c2nu)


def raw_delta(profile: SubmanifoldProfile) -> tuple[int, int, int, int]:
    """Change of ``(a, 4m, 12k, b)``; no divisibility is checked here."""
    if profile.kind == "point":
        return (3, 0, -180, -81)
    if profile.kind == "curve":
        chi = 1 - profile.genus
        d = profile.nu_deg
        return (4 * chi, -4 * chi, -144 * chi - 36 * d, -64 * chi - 16 * d)
    p = profile
    return (
        p.c2X,
        p.c1sqX - 3 * p.c2X,
        -13 * p.c1sqX - p.c2X - 18 * p.c1X_c1nu - 6 * p.c1nu_sq,
        -6 * p.c1sqX - 8 * p.c1X_c1nu - 3 * p.c1nu_sq + p.c2nu,
    )


def profile_delta(profile: SubmanifoldProfile) -> ParamVector:
    da, d4m, d12k, db = raw_delta(profile)
    if d4m % 4 or d12k % 12:
        raise DivisibilityViolation(
            f"{profile.kind} profile gives delta 4m = {d4m}, 12k = {d12k}; "
            "not divisible by 4 and 12"
        )
    return ParamVector(da, d4m // 4, 0, d12k // 12, db)


def apply_blowup(p: ParamVector, profile: SubmanifoldProfile) -> ParamVector:
    return p + profile_delta(profile)


Counts = Union[Mapping[SubmanifoldProfile, int], Iterable[tuple[SubmanifoldProfile, int]]]


def apply_sequence(p: ParamVector, counts: Counts) -> ParamVector:
    """Blow up ``count`` copies of each profile.

    Deltas do not depend on the current parameters, so the result is ``p``
    plus an integer combination of per-profile deltas.  A profile may appear
    more than once in an iterable of pairs; the counts add up.
    """
    items = counts.items() if isinstance(counts, Mapping) else counts
    out = p
    for profile, c in items:
        if c < 0:
            raise ValueError(f"negative blow-up count {c}")
        if c:
            out = out + profile_delta(profile).scale(c)
    return out
