"""Independent replay of construction plans.

The verifier never calls the planner.  It rebuilds the base manifold from
the building-block catalog and the sphere-bundle formulas, rebuilds the
five blow-up centres, applies the blow-ups one profile at a time and
compares the result with the plan's target.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .admissibility import ParamVector, chern_to_params
from .blowup import SubmanifoldProfile, apply_sequence, profile_delta
from .bundle import lift_square, product_with_surface, projectivize_chern, section_profile
from .donaldson import HypersurfaceConfig, hypersurface_profile
from .errors import GeographError, MalformedPlan
from .lattice import building_block, bundle_on_Xn, line_bundle_on_Xn, pair
from .planner import BetaConfig, Plan, SearchBudget, realize

__all__ = [
    "VerificationReport",
    "EnumerationSummary",
    "verify_plan",
    "enumerate_box",
]

_BRANCH_GENUS = {"j_positive": 0, "j_zero": 0, "j_negative": 2}


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    recomputed_base: ParamVector
    final: ParamVector
    target: ParamVector
    steps: list[tuple[str, int, ParamVector]]
    errata_notes: list[str] = field(default_factory=list)

    @property
    def mismatches(self) -> dict[str, tuple[int, int]]:
        """Coordinates where the replay misses the target, as (final, target)."""
        names = ("a", "m", "j", "k", "b")
        return {
            nm: (f, t)
            for nm, f, t in zip(names, self.final.as_tuple(), self.target.as_tuple())
            if f != t
        }


def _check_well_formed(plan: Plan) -> None:
    if plan.branch not in _BRANCH_GENUS:
        raise MalformedPlan(f"unknown branch {plan.branch!r}")
    if plan.branch == "j_zero" and plan.n != 0:
        raise MalformedPlan("j_zero plans must have n = 0")
    if plan.branch != "j_zero" and plan.n < 1:
        raise MalformedPlan(f"{plan.branch} plans need n >= 1")
    if plan.lam < 1 or plan.K < 1:
        raise MalformedPlan("lambda and K must be positive")
    if min(plan.counts.as_tuple()) < 0:
        raise MalformedPlan("negative blow-up count")
    if plan.beta_config.beta_sq <= 0:
        raise MalformedPlan("beta_sq must be positive")


def _replay_centres(plan: Plan):
    """Return (base, [(label, profile)]) rebuilt from the catalog."""
    genus = _BRANCH_GENUS[plan.branch]
    q_star = building_block("Q*")
    lat = q_star.lattice
    sphere = lat.basis_class("e3")
    f2 = lat.class_from({"t1": 1, "t2": 1, "e1": -1, "e2": -1})
    if plan.branch == "j_zero":
        N = q_star
        c1E = (-2) * lat.basis_class("e3")
        c1sqE = pair(lat, c1E, c1E)
        c1N_c1E = q_star.c1_dot(c1E)
        # e3 carries c1(L); use the first exceptional sphere instead
        sphere = lat.basis_class("e1")
        sphere_shift = pair(lat, c1E, sphere)
        f2_shift = pair(lat, c1E, f2)
    else:
        N = building_block(f"X({plan.n})")
        c1E_tau = line_bundle_on_Xn(plan.n)
        c1sqE = pair(N.lattice, c1E_tau, c1E_tau)
        c1N_c1E = N.c1_dot(c1E_tau)
        if (c1sqE, c1N_c1E) != bundle_on_Xn(plan.n):
            raise RuntimeError("line bundle data on X(n) is inconsistent")
        # tau classes are disjoint from the Q* part holding the sphere and F2
        sphere_shift = f2_shift = 0
    base = chern_to_params(product_with_surface(projectivize_chern(N, c1sqE, c1N_c1E), genus))

    def curve(cls, shift):
        sq = pair(lat, cls, cls)
        return SubmanifoldProfile.curve(genus=(sq - q_star.c1_dot(cls) + 2) // 2, nu_deg=lift_square(sq, shift))

    beta = plan.beta_config
    hyp = hypersurface_profile(
        HypersurfaceConfig(
            lam=plan.lam,
            K=plan.K,
            c1sqN=N.c1sq,
            c2N=N.c2,
            c1sqE=c1sqE,
            c1N_c1E=c1N_c1E,
            beta_sq=beta.beta_sq,
            c1N_beta=beta.c1N_beta,
            c1E_beta=beta.c1E_beta,
        )
    )
    centres = [
        ("x:point", SubmanifoldProfile.point()),
        ("y:sphere", curve(sphere, sphere_shift)),
        ("z:genus2", curve(f2, f2_shift)),
        ("u:section", section_profile(N, c1sqE, c1N_c1E, -1)),
        ("v:hypersurface", hyp),
    ]
    return base, centres


def verify_plan(plan: Plan) -> VerificationReport:
    """Replay ``plan`` from scratch; ``passed`` iff the replay hits the target exactly."""
    _check_well_formed(plan)
    base, centres = _replay_centres(plan)
    counts = plan.counts.as_tuple()
    steps = []
    for (label, profile), c in zip(centres, counts):
        steps.append((label, c, profile_delta(profile).scale(c)))
    final = apply_sequence(base, [(profile, c) for (_, profile), c in zip(centres, counts)])
    notes = []
    if plan.branch == "j_zero":
        notes.append("j=0 base recomputed as (a, 4m, 12k, b) = (12, -12, -468, -208); printed (12, -24, -488, -218)")
    if plan.base != base:
        notes.append(f"plan base {plan.base.as_tuple()} differs from recomputed {base.as_tuple()}")
    return VerificationReport(
        passed=final == plan.target,
        recomputed_base=base,
        final=final,
        target=plan.target,
        steps=steps,
        errata_notes=notes,
    )


# ----------------------------------------------------------------------------
# desk-scale enumeration


@dataclass
class EnumerationSummary:
    realized: int = 0
    failed: int = 0
    inadmissible_skipped: int = 0
    max_certificate_size: int = 0
    failures: list[tuple[tuple[int, ...], str]] = field(default_factory=list)

    def merge(self, other: "EnumerationSummary", keep: int = 20) -> None:
        self.realized += other.realized
        self.failed += other.failed
        self.inadmissible_skipped += other.inadmissible_skipped
        self.max_certificate_size = max(self.max_certificate_size, other.max_certificate_size)
        self.failures.extend(other.failures[: max(0, keep - len(self.failures))])

    def as_dict(self) -> dict:
        return {
            "realized": self.realized,
            "failed": self.failed,
            "inadmissible_skipped": self.inadmissible_skipped,
            "max_certificate_size": self.max_certificate_size,
            "failures": [{"target": list(t), "reason": r} for t, r in self.failures],
        }


def _inclusive(r: Sequence[int]) -> range:
    lo, hi = r
    return range(lo, hi + 1)


def _run_chunk(args) -> EnumerationSummary:
    j, a_values, m_r, k_r, b_r, K, beta, budget = args
    out = EnumerationSummary()
    for a, m in product(a_values, _inclusive(m_r)):
        if (a + m) % 3:
            out.inadmissible_skipped += len(_inclusive(k_r)) * len(_inclusive(b_r))
            continue
        for k, b in product(_inclusive(k_r), _inclusive(b_r)):
            target = ParamVector(a, m, j, k, b)
            try:
                plan = realize(target, K=K, beta=beta, budget=budget)
                report = verify_plan(plan)
            except GeographError as exc:
                out.failed += 1
                if len(out.failures) < 20:
                    out.failures.append((target.as_tuple(), f"{type(exc).__name__}: {exc}"))
                continue
            if report.passed:
                out.realized += 1
                out.max_certificate_size = max(out.max_certificate_size, plan.counts.total)
            else:
                out.failed += 1
                if len(out.failures) < 20:
                    out.failures.append((target.as_tuple(), f"replay mismatch {report.mismatches}"))
    return out


def enumerate_box(
    a_range: Sequence[int],
    m_range: Sequence[int],
    k_range: Sequence[int],
    b_range: Sequence[int],
    j_set: Iterable[int],
    *,
    parallel: int = 0,
    K: int = 1,
    beta: BetaConfig = BetaConfig(),
    budget: Optional[SearchBudget] = None,
) -> EnumerationSummary:
    """Realize and verify every target in an inclusive box of (a, m, k, b) values.

    Tuples with ``a + m`` not divisible by 3 are counted as skipped.  With
    ``parallel > 1`` chunks (one per (j, a) pair) run in worker processes;
    workers are pure and only their summaries are merged.
    """
    if budget is None:
        budget = SearchBudget.from_env()
    chunks = [
        (j, (a,), tuple(m_range), tuple(k_range), tuple(b_range), K, beta, budget)
        for j in sorted(set(j_set))
        for a in _inclusive(a_range)
    ]
    total = EnumerationSummary()
    if parallel and parallel > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            for part in pool.map(_run_chunk, chunks):
                total.merge(part)
    else:
        for chunk in chunks:
            total.merge(_run_chunk(chunk))
    return total
