"""Chern numbers of sphere bundles S = P(E + C) over a 4-manifold N.

Two independent routes are provided:

* closed formulas in the characteristic numbers of N and E
  (:func:`projectivize_chern`), and
* a small model of the cohomology ring ``H*(N)[xi] / (xi^2 + c1(E) xi)``
  (:class:`SphereBundleRing`) that expands the Chern classes of S and
  evaluates top-degree products (:func:`projectivize_chern_oracle`).

Then ``M = S x F_g`` (:func:`product_with_surface`), the blow-up data of the
two sections N_+ and N_- (:func:`section_profile`), and the square of a
curve lifted along a section (:func:`lift_square`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .admissibility import ChernQuintuple
from .blowup import SubmanifoldProfile
from .errors import AbstractManifold, DimensionMismatch
from .lattice import FourManifoldData, IntersectionLattice, LineClass, pair

__all__ = [
    "SixChern",
    "SubmanifoldProfile",
    "RingElement",
    "SphereBundleRing",
    "projectivize_chern",
    "projectivize_chern_oracle",
    "product_with_surface",
    "lift_square",
    "section_profile",
]


@dataclass(frozen=True)
class SixChern:
    """Chern numbers ``c1^3, c1 c2, c3`` of a closed almost complex 6-manifold."""

    c1_3: int
    c1c2: int
    c3: int

    def __post_init__(self):
        if self.c3 % 2:
            raise ValueError(f"c3 = {self.c3} is odd; not the Euler number of an S^2-bundle")


def projectivize_chern(N: FourManifoldData, c1sqE: int, c1N_c1E: int) -> SixChern:
    # c1N_c1E cancels out of every Chern number of S; kept for a uniform signature
    del c1N_c1E
    return SixChern(
        c1_3=6 * N.c1sq + 2 * c1sqE,
        c1c2=2 * (N.c1sq + N.c2),
        c3=2 * N.c2,
    )


def product_with_surface(s: SixChern, g: int) -> ChernQuintuple:
    """Chern numbers of ``S x F_g`` with F_g a closed surface of genus g."""
    t = 1 - g
    return ChernQuintuple(
        c4=2 * t * s.c3,
        c1c3=2 * t * (s.c1c2 + s.c3),
        c2sq=4 * t * s.c1c2,
        c1sq_c2=2 * t * (s.c1_3 + 2 * s.c1c2),
        c1_4=8 * t * s.c1_3,
    )


def lift_square(F_sq: int, c1E_on_F: int) -> int:
    """Normal degree of a curve F of N after lifting it along a section of S."""
    return F_sq + c1E_on_F


def section_profile(N: FourManifoldData, c1sqE: int, c1N_c1E: int, sign: int) -> SubmanifoldProfile:
    """Blow-up data of the section N_+ (``sign=+1``) or N_- (``sign=-1``) in S x F_g.

    The normal bundle in M is E (or its conjugate) plus a trivial line, so
    its second Chern class vanishes.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return SubmanifoldProfile.fourfold(
        c2X=N.c2,
        c1sqX=N.c1sq,
        c1X_c1nu=sign * c1N_c1E,
        c1nu_sq=c1sqE,
        c2nu=0,
    )


# ----------------------------------------------------------------------------
# quotient-ring model


class _NCohomology:
    """H^0 + H^2 + H^4 of a closed 4-manifold; H^4 stored by its value on [N]."""

    def __init__(self, lattice: IntersectionLattice):
        self.lattice = lattice
        self.zero2 = (0,) * lattice.rank

    def mul(self, x, y):
        x0, x2, x4 = x
        y0, y2, y4 = y
        deg2 = tuple(x0 * b + y0 * a for a, b in zip(x2, y2))
        deg4 = x0 * y4 + y0 * x4 + pair(self.lattice, x2, y2)
        return (x0 * y0, deg2, deg4)

    def add(self, x, y):
        return (x[0] + y[0], tuple(a + b for a, b in zip(x[1], y[1])), x[2] + y[2])

    def scale(self, c, x):
        return (c * x[0], tuple(c * a for a in x[1]), c * x[2])


@dataclass(frozen=True)
class RingElement:
    """``p + q xi`` with p, q in H*(N); ``xi^2`` is already rewritten away."""

    ring: "SphereBundleRing"
    p: tuple
    q: tuple

    def __add__(self, other: "RingElement") -> "RingElement":
        h = self.ring.base
        return RingElement(self.ring, h.add(self.p, other.p), h.add(self.q, other.q))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-1) * other

    def __rmul__(self, c: int) -> "RingElement":
        h = self.ring.base
        return RingElement(self.ring, h.scale(c, self.p), h.scale(c, self.q))

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        h = self.ring.base
        pp = h.mul(self.p, other.p)
        cross = h.add(h.mul(self.p, other.q), h.mul(self.q, other.p))
        # xi^2 = -c1(E) xi
        qq = h.mul(self.q, other.q)
        qq = h.mul(self.ring.c1E_class, qq)
        return RingElement(self.ring, pp, h.add(cross, h.scale(-1, qq)))

    def __pow__(self, e: int) -> "RingElement":
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out


class SphereBundleRing:
    """``H*(S) = H*(N)[xi] / (xi^2 + c1(E) xi)`` for ``S = P(E + C)``.

    Top-degree evaluation uses ``<rho^* x . xi, [S]> = <x, [N]>`` for x of
    degree 4; pulled-back classes of degree 6 vanish.
    """

    def __init__(self, lattice: IntersectionLattice, c1E: Sequence[int] | LineClass):
        self.base = _NCohomology(lattice)
        coeffs = c1E.coeffs if isinstance(c1E, LineClass) else tuple(c1E)
        if len(coeffs) != lattice.rank:
            raise DimensionMismatch("c1(E) has the wrong length")
        self.c1E_class = (0, tuple(coeffs), 0)

    def _zero(self):
        return (0, self.base.zero2, 0)

    def one(self) -> RingElement:
        return RingElement(self, (1, self.base.zero2, 0), self._zero())

    def xi(self) -> RingElement:
        return RingElement(self, self._zero(), (1, self.base.zero2, 0))

    def pull2(self, v: Sequence[int] | LineClass) -> RingElement:
        coeffs = v.coeffs if isinstance(v, LineClass) else tuple(v)
        if len(coeffs) != len(self.base.zero2):
            raise DimensionMismatch("class has the wrong length")
        return RingElement(self, (0, tuple(coeffs), 0), self._zero())

    def pull4(self, value: int) -> RingElement:
        """Pull back the degree-4 class of N whose value on [N] is ``value``."""
        return RingElement(self, (0, self.base.zero2, value), self._zero())

    def evaluate(self, x: RingElement) -> int:
        """Value on [S] of the degree-6 part of ``x``."""
        return x.q[2]


def projectivize_chern_oracle(N: FourManifoldData, c1E) -> SixChern:
    if not N.explicit:
        raise AbstractManifold(f"{N.name} has no explicit lattice and c1")
    ring = SphereBundleRing(N.lattice, c1E)
    xi = ring.xi()
    c1N = ring.pull2(N.c1)
    e = ring.pull2(c1E)
    c2N = ring.pull4(N.c2)
    c1 = c1N + e + 2 * xi
    c2 = c1N * e + c2N + 2 * (c1N * xi)
    c3 = 2 * (c2N * xi)
    return SixChern(
        c1_3=ring.evaluate(c1 ** 3),
        c1c2=ring.evaluate(c1 * c2),
        c3=ring.evaluate(c3),
    )
