"""Construction plans: base manifold plus blow-up counts.

For a target ``(a, m, j, k, b)`` the base manifold is chosen by the sign of
``j``:

* ``j >= 1``: ``N = X(n)`` with ``n = j``, ``M = P(L + C) x S^2``;
* ``j == 0``: ``N = Q*`` with ``c1(L) = -2 e3``, ``M = P(L + C) x S^2``;
* ``j <= -1``: as for ``j >= 1`` with ``n = -j`` but ``M = P(L + C) x F_2``.

M is then blown up at ``x`` points, ``y`` exceptional spheres, ``z`` genus-2
surfaces, ``u`` copies of the section N_- and ``v`` Donaldson hypersurfaces
X_lambda.  Each kind of blow-up adds a fixed column to ``(a, m, k, b)``, so
finding a plan means finding nonnegative integers with
``target = base + x X + y Y + z Z + u U + v V(lambda)``.

For fixed lambda and v the first four columns form an invertible 4x4
system; the counts are affine in v, so the smallest admissible v follows
from a few linear congruences and bounds instead of a scan.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .admissibility import ChernQuintuple, ParamVector, chern_to_params
from .blowup import SubmanifoldProfile, profile_delta
from .bundle import lift_square, product_with_surface, projectivize_chern, section_profile
from .donaldson import HypersurfaceConfig, blowup_column
from .errors import DivisibilityViolation, Mod3Violation, SearchExhausted
from .exact import adjugate, matvec, solve
from .lattice import FourManifoldData, building_block, bundle_on_Xn, pair

__all__ = [
    "BetaConfig",
    "Counts",
    "SearchBudget",
    "SystemColumns",
    "BaseSetup",
    "Plan",
    "SolveResult",
    "BUDGET_ENV",
    "J0_BASE_ERRATUM",
    "branch_of",
    "base_setup",
    "solve_rational",
    "solve_counts",
    "realize",
    "closed_form_counts_v0",
]

BUDGET_ENV = "GEOGRAPH_SEARCH_BUDGET"
J0_BASE_ERRATUM = "j0-base-recomputed"

# curves inside Q*, in its lattice basis: an exceptional sphere and the
# genus-2 surface obtained by resolving T^2 x p + p x T^2 and blowing up twice
_F2_CLASS = {"t1": 1, "t2": 1, "e1": -1, "e2": -1}


@dataclass(frozen=True)
class BetaConfig:
    """Pairings of the base symplectic class [beta] on N."""

    beta_sq: int = 2
    c1N_beta: int = 0
    c1E_beta: int = 0

    def __post_init__(self):
        if self.beta_sq <= 0:
            raise ValueError("beta_sq must be positive: beta^2 is a volume form on N")


@dataclass(frozen=True)
class Counts:
    x: int = 0
    y: int = 0
    z: int = 0
    u: int = 0
    v: int = 0

    def __post_init__(self):
        if min(self.as_tuple()) < 0:
            raise ValueError(f"blow-up counts must be nonnegative, got {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.x, self.y, self.z, self.u, self.v)

    @property
    def total(self) -> int:
        return sum(self.as_tuple())


@dataclass(frozen=True)
class SearchBudget:
    """Search bounds: lambda runs over ``1..lambda_max``, v over ``0..v_max``."""

    lambda_max: int = 40
    v_max: int = 10**6

    def __post_init__(self):
        if self.lambda_max < 1 or self.v_max < 0:
            raise ValueError("search budget must have lambda_max >= 1 and v_max >= 0")

    @classmethod
    def from_env(cls, default: Optional["SearchBudget"] = None) -> "SearchBudget":
        """Read ``LAMBDA_MAX`` or ``LAMBDA_MAX:V_MAX`` from the environment."""
        base = default or cls()
        raw = os.environ.get(BUDGET_ENV, "").strip()
        if not raw:
            return base
        parts = raw.split(":")
        try:
            lam = int(parts[0]) if parts[0] else base.lambda_max
            vmax = int(parts[1]) if len(parts) > 1 and parts[1] else base.v_max
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must look like LAMBDA_MAX[:V_MAX], got {raw!r}") from None
        if len(parts) > 2:
            raise ValueError(f"{BUDGET_ENV} must look like LAMBDA_MAX[:V_MAX], got {raw!r}")
        return cls(lambda_max=lam, v_max=vmax)


@dataclass(frozen=True)
class SystemColumns:
    x: ParamVector
    y: ParamVector
    z: ParamVector
    u: ParamVector
    v: ParamVector

    def __post_init__(self):
        if any(c.j != 0 for c in self.as_tuple()):
            raise ValueError("blow-up columns must not change j")

    def as_tuple(self) -> tuple[ParamVector, ...]:
        return (self.x, self.y, self.z, self.u, self.v)


@dataclass(frozen=True)
class BaseSetup:
    """Everything the planner and verifier need about one branch."""

    branch: str
    n: int
    manifold: FourManifoldData
    c1sqE: int
    c1N_c1E: int
    genus: int
    base: ParamVector
    profiles: tuple[SubmanifoldProfile, ...]  # x, y, z, u
    errata: tuple[str, ...] = ()

    def hypersurface_config(self, lam: int, K: int, beta: BetaConfig) -> HypersurfaceConfig:
        return HypersurfaceConfig(
            lam=lam,
            K=K,
            c1sqN=self.manifold.c1sq,
            c2N=self.manifold.c2,
            c1sqE=self.c1sqE,
            c1N_c1E=self.c1N_c1E,
            beta_sq=beta.beta_sq,
            c1N_beta=beta.c1N_beta,
            c1E_beta=beta.c1E_beta,
        )

    def fixed_columns(self) -> tuple[ParamVector, ...]:
        return tuple(profile_delta(p) for p in self.profiles)

    def columns(self, lam: int, K: int = 1, beta: BetaConfig = BetaConfig()) -> SystemColumns:
        v = blowup_column(self.hypersurface_config(lam, K, beta))
        return SystemColumns(*self.fixed_columns(), v)


@dataclass(frozen=True)
class Plan:
    """A realisation certificate.

    ``geometric_disclaimer`` is always set: lambda and K are not checked
    against the "sufficiently large" thresholds of Donaldson's and
    Thurston's theorems.
    """

    branch: str
    n: int
    lam: int
    K: int
    beta_config: BetaConfig
    counts: Counts
    base: ParamVector
    target: ParamVector
    geometric_disclaimer: bool = True
    errata_applied: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class SolveResult:
    counts: Counts
    lam: int
    v: int


def branch_of(j: int) -> str:
    return "j_positive" if j > 0 else "j_zero" if j == 0 else "j_negative"


def _qstar_curve(q_star: FourManifoldData, coeffs: dict, c1E) -> SubmanifoldProfile:
    """Curve of Q* lifted to the section N_-: genus by adjunction, square by the lemma."""
    cls = q_star.lattice.class_from(coeffs)
    sq = pair(q_star.lattice, cls, cls)
    genus2 = sq - q_star.c1_dot(cls) + 2
    assert genus2 % 2 == 0
    e_on_curve = 0 if c1E is None else pair(q_star.lattice, c1E, cls)
    return SubmanifoldProfile.curve(genus=genus2 // 2, nu_deg=lift_square(sq, e_on_curve))


@lru_cache(maxsize=None)
def base_setup(j: int) -> BaseSetup:
    """Build M for the branch of ``j`` and recompute its parameters."""
    q_star = building_block("Q*")
    errata: tuple[str, ...] = ()
    if j == 0:
        n, genus = 0, 0
        manifold = q_star
        c1E = (-2) * q_star.lattice.basis_class("e3")
        c1sqE = pair(q_star.lattice, c1E, c1E)
        c1N_c1E = q_star.c1_dot(c1E)
        sphere = {"e1": 1}
        errata = (J0_BASE_ERRATUM,)
    else:
        n, genus = abs(j), (0 if j > 0 else 2)
        manifold = building_block(f"X({n})")
        c1sqE, c1N_c1E = bundle_on_Xn(n)
        # c1(L) is carried by tau classes of E(n), which miss the Q* side of
        # the fibre sum where the sphere and F2 live
        c1E = None
        sphere = {"e3": 1}
    s = projectivize_chern(manifold, c1sqE, c1N_c1E)
    base = chern_to_params(product_with_surface(s, genus))
    if base.j != j:
        raise RuntimeError(f"base construction for j={j} realises j={base.j}")
    profiles = (
        SubmanifoldProfile.point(),
        _qstar_curve(q_star, sphere, c1E),
        _qstar_curve(q_star, _F2_CLASS, c1E),
        section_profile(manifold, c1sqE, c1N_c1E, -1),
    )
    return BaseSetup(
        branch=branch_of(j),
        n=n,
        manifold=manifold,
        c1sqE=c1sqE,
        c1N_c1E=c1N_c1E,
        genus=genus,
        base=base,
        profiles=profiles,
        errata=errata,
    )


def _amkb(p: ParamVector) -> tuple[int, int, int, int]:
    return (p.a, p.m, p.k, p.b)


@lru_cache(maxsize=None)
def _system(j: int) -> tuple[list[list[int]], int]:
    """Adjugate and determinant of the x, y, z, u columns on (a, m, k, b)."""
    cols = [_amkb(c) for c in base_setup(j).fixed_columns()]
    matrix = [[cols[c][r] for c in range(4)] for r in range(4)]
    return adjugate(matrix)


@lru_cache(maxsize=4096)
def _v_column(j: int, lam: int, K: int, beta: BetaConfig) -> Optional[tuple[int, int, int, int]]:
    try:
        return _amkb(base_setup(j).columns(lam, K, beta).v)
    except DivisibilityViolation:
        return None


def _check_target(setup: BaseSetup, target: ParamVector) -> None:
    if target.j != setup.base.j:
        raise ValueError(f"target has j={target.j}, base has j={setup.base.j}")
    if (target.a + target.m) % 3:
        raise Mod3Violation(f"a + m = {target.a + target.m} is not divisible by 3")


def solve_rational(
    setup: BaseSetup,
    target: ParamVector,
    lam: int,
    v,
    K: int = 1,
    beta: BetaConfig = BetaConfig(),
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Exact rational ``(x, y, z, u)`` for a given lambda and v (any rational v).

    No integrality or sign requirement; this is the plain 4x4 solve.
    """
    if target.j != setup.base.j:
        raise ValueError(f"target has j={target.j}, base has j={setup.base.j}")
    cols = [_amkb(c) for c in setup.fixed_columns()]
    vcol = _amkb(setup.columns(lam, K, beta).v)
    residual = [t - b - Fraction(v) * c for t, b, c in zip(_amkb(target), _amkb(setup.base), vcol)]
    matrix = [[cols[c][r] for c in range(4)] for r in range(4)]
    return tuple(solve(matrix, residual))


def _merge(r1: int, m1: int, r2: int, m2: int) -> Optional[tuple[int, int]]:
    """Combine v = r1 (mod m1) and v = r2 (mod m2); None if incompatible."""
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    l = m1 // g * m2
    t = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g) if m2 // g > 1 else 0
    return (r1 + m1 * t) % l, l


def _first_feasible_v(A: list[int], B: list[int], D: int, v_max: int) -> Optional[int]:
    """Smallest v in [0, v_max] with every (A_i - v B_i) / D a nonnegative integer."""
    if D < 0:
        A, B, D = [-a for a in A], [-b for b in B], -D
    r, mod = 0, 1
    lo, hi = 0, v_max
    for a, b in zip(A, B):
        # b v = a (mod D)
        g = math.gcd(b, D)
        if a % g:
            return None
        m = D // g
        ri = (a // g) * pow(b // g, -1, m) % m if m > 1 else 0
        merged = _merge(r, mod, ri, m)
        if merged is None:
            return None
        r, mod = merged
        # a - v b >= 0
        if b > 0:
            hi = min(hi, a // b)
        elif b < 0:
            lo = max(lo, _ceil_div(a, b))
        elif a < 0:
            return None
    if lo > hi:
        return None
    v = lo + (r - lo) % mod
    return v if v <= hi else None


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def solve_counts(
    setup: BaseSetup,
    target: ParamVector,
    *,
    K: int = 1,
    beta: BetaConfig = BetaConfig(),
    budget: SearchBudget = SearchBudget(),
) -> SolveResult:
    """Nonnegative integer counts with the smallest lambda, then smallest v.

    Lambdas whose hypersurface column fails the 4m / 12k divisibility test
    are skipped.  Raises :class:`SearchExhausted` when nothing in the budget
    works.
    """
    _check_target(setup, target)
    j = setup.base.j
    adj, det = _system(j)
    residual = [t - b for t, b in zip(_amkb(target), _amkb(setup.base))]
    A = matvec(adj, residual)
    for lam in range(1, budget.lambda_max + 1):
        vcol = _v_column(j, lam, K, beta)
        if vcol is None:
            continue
        B = matvec(adj, vcol)
        v = _first_feasible_v(A, B, det, budget.v_max)
        if v is None:
            continue
        x, y, z, u = ((a - v * b) // det for a, b in zip(A, B))
        return SolveResult(Counts(x, y, z, u, v), lam, v)
    raise SearchExhausted({"lambda_max": budget.lambda_max, "v_max": budget.v_max, "K": K})


def realize(
    target: Union[ParamVector, ChernQuintuple],
    *,
    K: int = 1,
    beta: BetaConfig = BetaConfig(),
    budget: Optional[SearchBudget] = None,
) -> Plan:
    """Find a construction plan for an admissible target."""
    if isinstance(target, ChernQuintuple):
        target = chern_to_params(target)
    elif (target.a + target.m) % 3:
        raise Mod3Violation(f"a + m = {target.a + target.m} is not divisible by 3")
    if budget is None:
        budget = SearchBudget.from_env()
    setup = base_setup(target.j)
    res = solve_counts(setup, target, K=K, beta=beta, budget=budget)
    return Plan(
        branch=setup.branch,
        n=setup.n,
        lam=res.lam,
        K=K,
        beta_config=beta,
        counts=res.counts,
        base=setup.base,
        target=target,
        errata_applied=setup.errata,
    )


def closed_form_counts_v0(branch: str, n: int, target: ParamVector) -> tuple[Fraction, ...]:
    """Printed closed-form ``(x, y, z, u)`` at ``v = 0``, in terms of the target."""
    a, m, k, b = (Fraction(t) for t in _amkb(target))
    if branch == "j_zero":
        return (
            Fraction(10, 3) * a + Fraction(40, 3) * m - 48 * k + 9 * b,
            4 * a + 12 * m - 37 * k + 7 * b + 1,
            7 * a + 25 * m - 85 * k + 16 * b + 4,
            a + 4 * m - 16 * k + 3 * b,
        )
    if branch not in ("j_positive", "j_negative"):
        raise ValueError(f"unknown branch {branch!r}")
    sign = 1 if branch == "j_positive" else -1
    return (
        (8 * n + Fraction(10, 3)) * a + (32 * n + Fraction(40, 3)) * m + (-128 * n - 48) * k + (24 * n + 9) * b
        + sign * (640 * n**2 + 224 * n),
        (3 * n + 3) * a + (12 * n + 8) * m + (-48 * n - 21) * k + (9 * n + 4) * b + sign * (240 * n**2 + 32 * n + 1),
        (12 * n + 6) * a + (48 * n + 21) * m + (-192 * n - 69) * k + (36 * n + 13) * b
        + sign * (960 * n**2 + 272 * n + 4),
        a + 4 * m - 16 * k + 3 * b + sign * 80 * n,
    )
