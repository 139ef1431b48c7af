"""
Blow-up columns
===============

Each kind of blow-up centre shifts (a, m, k, b) by a fixed vector and
leaves j alone.  The Donaldson hypersurfaces X_lambda give a column that
grows like lambda^3; their expanded coefficient polynomials are compared
with the composition of the hypersurface invariants and the blow-up rule.
"""

from geograph.blowup import SubmanifoldProfile, profile_delta
from geograph.donaldson import HypersurfaceConfig, compare_b_coefficients, hypersurface_profile
from geograph.planner import BetaConfig, base_setup

setup = base_setup(1)
for label, col in zip("xyzu", setup.fixed_columns()):
    print(label, col)

# the v column for a few lambda
for lam in (1, 2, 3, 10):
    print(f"v(lambda={lam}):", setup.columns(lam, 1, BetaConfig()).v)

# invariants of X_2 in the Q* bundle
cfg = HypersurfaceConfig(lam=2, K=1, c1sqN=-3, c2N=3, c1sqE=-4, c1N_c1E=-2, beta_sq=2)
print(hypersurface_profile(cfg))

# the printed b2 has (2 lam^2) in front of beta^2; only (2 lam^2 K^2) matches
cfg = HypersurfaceConfig(lam=3, K=2, c1sqN=-3, c2N=3, c1sqE=-4, c1N_c1E=-2, beta_sq=2)
print("as printed:", compare_b_coefficients(cfg, "printed"))
print("with K^2:  ", compare_b_coefficients(cfg, "corrected"))

# a point is not a degenerate curve or fourfold
print(profile_delta(SubmanifoldProfile.point()), profile_delta(SubmanifoldProfile.curve(1, 0)))
