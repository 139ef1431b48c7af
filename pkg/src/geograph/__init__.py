"""Exact geography of Chern numbers of closed symplectic 8-manifolds.

Convert Chern quintuples to (a, m, j, k, b) parameters, build a base
manifold for each j, solve for blow-up counts and replay the resulting
plan independently.
"""

from .admissibility import (
    AdmissibilityReport,
    ChernQuintuple,
    ParamVector,
    chern_to_params,
    is_admissible,
    params_to_chern,
)
from .blowup import SubmanifoldProfile, apply_blowup, apply_sequence
from .bundle import (
    SixChern,
    SphereBundleRing,
    lift_square,
    product_with_surface,
    projectivize_chern,
    projectivize_chern_oracle,
    section_profile,
)
from .donaldson import HypersurfaceConfig, blowup_column, hypersurface_profile, printed_b_coefficients
from .errors import (
    AbstractManifold,
    DimensionMismatch,
    DivisibilityViolation,
    GeographError,
    MalformedPlan,
    Mod3Violation,
    NotAdmissible,
    SearchExhausted,
    SingularSystem,
    UnknownBlock,
)
from .lattice import (
    FourManifoldData,
    IntersectionLattice,
    LineClass,
    building_block,
    bundle_on_Xn,
    elliptic_surface,
    pair,
)
from .planner import BetaConfig, Counts, Plan, SearchBudget, base_setup, closed_form_counts_v0, realize, solve_counts
from .verifier import EnumerationSummary, VerificationReport, enumerate_box, verify_plan

__version__ = "0.1.0"
