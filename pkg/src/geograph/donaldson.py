"""Donaldson hypersurfaces X_lambda in S and their blow-up column.

X_lambda is Poincare dual to ``lambda (xi + K rho^* beta)`` in S = P(E + C).
Its characteristic numbers are cubic polynomials in lambda whose
coefficients are pairings on N; blowing M = S x F_g up along X_lambda x pt
changes the parameters by the ``v`` column of the planner's linear system.

The canonical column is the composition of :func:`hypersurface_profile`
with the fourfold blow-up rule.  :func:`printed_b_coefficients` keeps a
term-by-term transcription of the expanded polynomials b1..b4 as an
independent cross-check; its ``[beta]^2`` term in b2 is printed without the
``K^2`` that the composition produces, so both readings are available.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .blowup import SubmanifoldProfile, profile_delta, raw_delta
from .admissibility import ParamVector

__all__ = [
    "HypersurfaceConfig",
    "PAIRINGS",
    "hypersurface_profile",
    "blowup_column",
    "blowup_column_raw",
    "printed_b_coefficients",
    "printed_b_terms",
    "composed_b_terms",
    "compare_b_coefficients",
    "B2_VARIANTS",
]

# the seven pairings on [N] that the hypersurface invariants are linear in
PAIRINGS = ("c1sqN", "c2N", "c1sqE", "c1N_c1E", "beta_sq", "c1N_beta", "c1E_beta")
B2_VARIANTS = ("printed", "corrected")


@dataclass(frozen=True)
class HypersurfaceConfig:
    """Input data for X_lambda.

    ``lam`` and ``K`` are formal: no check is made that lambda is large
    enough for Donaldson's theorem or K for Thurston's.  ``beta_sq`` must be
    positive for a genuine symplectic form; :attr:`is_symplectic_input`
    reports it, but the polynomials are evaluated regardless.
    """

    lam: int
    K: int
    c1sqN: int
    c2N: int
    c1sqE: int
    c1N_c1E: int
    beta_sq: int
    c1N_beta: int = 0
    c1E_beta: int = 0

    @property
    def is_symplectic_input(self) -> bool:
        return self.beta_sq > 0

    def pairings(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in PAIRINGS}


def hypersurface_profile(cfg: HypersurfaceConfig) -> SubmanifoldProfile:
    lam, K = cfg.lam, cfg.K
    NE, Nb, Eb, bb = cfg.c1N_c1E, cfg.c1N_beta, cfg.c1E_beta, cfg.beta_sq
    c2X = (
        lam * cfg.c2N
        + lam * (lam - 1) * NE
        - 2 * lam * K * (lam - 1) * Nb
        + lam**2 * (lam - 1) * cfg.c1sqE
        + lam**2 * K * (2 - 3 * lam) * Eb
        + lam**2 * K**2 * (3 * lam - 2) * bb
    )
    c1sqX = (
        lam * cfg.c1sqN
        + 2 * lam * (lam - 1) * NE
        + 4 * lam * K * (1 - lam) * Nb
        + lam * (lam**2 - 2 * lam + 1) * cfg.c1sqE
        + lam**2 * K * (4 - 3 * lam) * Eb
        + lam**2 * K**2 * (3 * lam - 4) * bb
    )
    c1nu_sq = lam**3 * cfg.c1sqE - 3 * lam**3 * K * Eb + 3 * lam**3 * K**2 * bb
    c1X_c1nu = (
        -(lam**2) * NE
        + 2 * lam**2 * K * Nb
        + lam**2 * (1 - lam) * cfg.c1sqE
        + lam**2 * K * (3 * lam - 2) * Eb
        + lam**2 * K**2 * (2 - 3 * lam) * bb
    )
    # normal bundle in M is the one in S plus a trivial line
    return SubmanifoldProfile.fourfold(c2X=c2X, c1sqX=c1sqX, c1X_c1nu=c1X_c1nu, c1nu_sq=c1nu_sq, c2nu=0)


def blowup_column_raw(cfg: HypersurfaceConfig) -> tuple[int, int, int, int]:
    """Change of ``(a, 4m, 12k, b)`` from one blow-up along X_lambda."""
    return raw_delta(hypersurface_profile(cfg))


def blowup_column(cfg: HypersurfaceConfig) -> ParamVector:
    """Parameter delta of one blow-up along X_lambda.

    Raises :class:`~geograph.errors.DivisibilityViolation` when the deltas on
    4m or 12k are not multiples of 4 or 12 for this configuration.
    """
    return profile_delta(hypersurface_profile(cfg))


def printed_b_terms(lam: int, K: int, b2_variant: str = "printed") -> dict[str, tuple[int, int, int, int]]:
    """Coefficient of each pairing in the expanded b1..b4 (b1 = delta a, b2 = delta 4m, ...)."""
    if b2_variant not in B2_VARIANTS:
        raise ValueError(f"b2_variant must be one of {B2_VARIANTS}")
    l, l2, l3 = lam, lam**2, lam**3
    b2_beta = 2 * l2 - 6 * l3 * K**2 if b2_variant == "printed" else 2 * l2 * K**2 - 6 * l3 * K**2
    return {
        "c1sqN": (0, l, -13 * l, -6 * l),
        "c2N": (l, -3 * l, -l, 0),
        "c1sqE": (l3 - l2, l2 - 2 * l3 + l, 9 * l2 - 2 * l3 - 13 * l, 4 * l2 - 6 * l - l3),
        "beta_sq": (
            3 * l3 * K**2 - 2 * l2 * K**2,
            b2_beta,
            18 * l2 * K**2 - 6 * l3 * K**2,
            8 * l2 * K**2 - 3 * l3 * K**2,
        ),
        "c1N_c1E": (l2 - l, l - l2, 27 * l - 9 * l2, 12 * l - 4 * l2),
        "c1N_beta": (2 * l * K - 2 * l2 * K, 2 * (l2 * K - l * K), 18 * l2 * K - 54 * l * K, 8 * l2 * K - 24 * l * K),
        "c1E_beta": (2 * l2 * K - 3 * l3 * K, 6 * l3 * K - 2 * l2 * K, 6 * l3 * K - 18 * l2 * K, 3 * l3 * K - 8 * l2 * K),
    }


def printed_b_coefficients(cfg: HypersurfaceConfig, b2_variant: str = "printed") -> tuple[int, int, int, int]:
    """Evaluate the expanded b1..b4 on the configuration's pairings."""
    terms = printed_b_terms(cfg.lam, cfg.K, b2_variant)
    vals = cfg.pairings()
    return tuple(sum(terms[t][i] * vals[t] for t in PAIRINGS) for i in range(4))


def composed_b_terms(lam: int, K: int) -> dict[str, tuple[int, int, int, int]]:
    """Per-pairing coefficients of the composed column, by finite differences.

    The raw column is linear in the pairings with no constant term, so
    switching one pairing from 0 to 1 isolates its coefficient.
    """
    zero = HypersurfaceConfig(lam=lam, K=K, **{t: 0 for t in PAIRINGS})
    out = {}
    for t in PAIRINGS:
        out[t] = blowup_column_raw(replace(zero, **{t: 1}))
    return out


def compare_b_coefficients(cfg: HypersurfaceConfig, b2_variant: str = "printed") -> list[dict]:
    """Localise disagreements between the composed column and the printed b_i.

    Returns one record per (pairing, b_i) whose contributions differ on this
    configuration; an empty list means full agreement.
    """
    printed = printed_b_terms(cfg.lam, cfg.K, b2_variant)
    composed = composed_b_terms(cfg.lam, cfg.K)
    vals = cfg.pairings()
    report = []
    for t in PAIRINGS:
        for i in range(4):
            cp, pp = composed[t][i] * vals[t], printed[t][i] * vals[t]
            if cp != pp:
                report.append({"term": t, "b": i + 1, "composed": cp, "printed": pp})
    return report

