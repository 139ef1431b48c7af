"""Chern-number quintuples of 8-manifolds and their integer parameters.

An almost complex 8-manifold has five Chern numbers
``(c4, c1c3, c2sq, c1sq_c2, c1_4)``.  They satisfy three Riemann-Roch
congruences (modulo 720, 12 and 4); a quintuple satisfying all three is
*admissible*.  Admissible quintuples are in bijection with integer vectors
``(a, m, j, k, b)`` subject to ``a + m = 0 (mod 3)``::

    a    = c4
    4m   = -2 c4 + c1c3
    720j = -c4 + c1c3 + 3 c2sq + 4 c1sq_c2 - c1_4
    12k  = 2 c1_4 + c1sq_c2
    b    = c1_4

The parameter ``j`` is invariant under every blow-up, which is what makes
these coordinates convenient for the planner.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Mod3Violation, NotAdmissible

__all__ = [
    "ChernQuintuple",
    "ParamVector",
    "AdmissibilityReport",
    "RELATIONS",
    "chern_to_params",
    "params_to_chern",
    "is_admissible",
]


@dataclass(frozen=True)
class ChernQuintuple:
    c4: int
    c1c3: int
    c2sq: int
    c1sq_c2: int
    c1_4: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.c4, self.c1c3, self.c2sq, self.c1sq_c2, self.c1_4)


@dataclass(frozen=True)
class ParamVector:
    """Integer coordinates ``(a, m, j, k, b)``.

    Also used for parameter *deltas* (the change caused by one blow-up), where
    the mod-3 condition need not hold.
    """

    a: int
    m: int
    j: int
    k: int
    b: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.m, self.j, self.k, self.b)

    def __add__(self, other: "ParamVector") -> "ParamVector":
        return ParamVector(*(x + y for x, y in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other: "ParamVector") -> "ParamVector":
        return ParamVector(*(x - y for x, y in zip(self.as_tuple(), other.as_tuple())))

    def __neg__(self) -> "ParamVector":
        return ParamVector(*(-x for x in self.as_tuple()))

    def scale(self, c: int) -> "ParamVector":
        return ParamVector(*(c * x for x in self.as_tuple()))


ZERO = ParamVector(0, 0, 0, 0, 0)

# relation id -> modulus, in the order the report lists them
RELATIONS = {"mod720": 720, "mod12": 12, "mod4": 4}


@dataclass(frozen=True)
class AdmissibilityReport:
    residues: dict[str, int]
    violations: list[tuple[str, int]] = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return not self.violations


def _numerators(q: ChernQuintuple) -> dict[str, int]:
    return {
        "mod720": -q.c4 + q.c1c3 + 3 * q.c2sq + 4 * q.c1sq_c2 - q.c1_4,
        "mod12": 2 * q.c1_4 + q.c1sq_c2,
        "mod4": -2 * q.c4 + q.c1c3,
    }


def is_admissible(q: ChernQuintuple) -> AdmissibilityReport:
    """Evaluate the three congruences; residues lie in ``[0, modulus)``."""
    nums = _numerators(q)
    residues = {rel: nums[rel] % mod for rel, mod in RELATIONS.items()}
    violations = [(rel, r) for rel, r in residues.items() if r != 0]
    return AdmissibilityReport(residues=residues, violations=violations)


def chern_to_params(q: ChernQuintuple) -> ParamVector:
    report = is_admissible(q)
    if not report.admissible:
        raise NotAdmissible(report)
    nums = _numerators(q)
    return ParamVector(
        a=q.c4,
        m=nums["mod4"] // 4,
        j=nums["mod720"] // 720,
        k=nums["mod12"] // 12,
        b=q.c1_4,
    )


def params_to_chern(p: ParamVector) -> ChernQuintuple:
    if (p.a + p.m) % 3:
        raise Mod3Violation(f"a + m = {p.a + p.m} is not divisible by 3")
    three_c2sq = 720 * p.j - p.a - 4 * p.m - 48 * p.k + 9 * p.b
    # a + m = 0 (mod 3) makes three_c2sq = -(a + m) (mod 3) vanish
    return ChernQuintuple(
        c4=p.a,
        c1c3=4 * p.m + 2 * p.a,
        c2sq=three_c2sq // 3,
        c1sq_c2=12 * p.k - 2 * p.b,
        c1_4=p.b,
    )
