"""
Desk-scale geography
====================

Every admissible target in a small box is realised and verified.  Then
the dependence of the counts on v is examined: the slopes are cubic in
lambda, and their lambda^3 K^2 beta^2 coefficients are the leading terms
expected from the closed-form solution.
"""

import time
from fractions import Fraction

from geograph.planner import BetaConfig, base_setup, solve_rational
from geograph.verifier import enumerate_box

t0 = time.perf_counter()
summary = enumerate_box((-3, 3), (-3, 3), (-3, 3), (-3, 3), range(-2, 3))
print(summary.as_dict(), f"{time.perf_counter() - t0:.1f}s")


def slopes(j, lam, K=1, beta=BetaConfig()):
    setup = base_setup(j)
    s0 = solve_rational(setup, setup.base, lam, 0, K, beta)
    s1 = solve_rational(setup, setup.base, lam, 1, K, beta)
    return [b - a for a, b in zip(s0, s1)]


# third finite difference in lambda / 6 is the lambda^3 coefficient of a cubic
def lam3(j, K, bsq):
    vals = [slopes(j, lam, K, BetaConfig(bsq)) for lam in range(1, 5)]
    return [Fraction(v[3] - 3 * v[2] + 3 * v[1] - v[0], 6) for v in zip(*vals)]


for n in (1, 2):
    c = lam3(n, 1, 2)
    d_beta = [a - b for a, b in zip(lam3(n, 1, 3), c)]
    c1sqE = base_setup(n).c1sqE
    print(f"n={n}: lambda^3 coefficient {[str(x) for x in c]}")
    print(f"      per unit K^2 beta^2   {[str(x) for x in d_beta]}")
    print(f"      extra c1sqE/3 part    {[str(x * Fraction(c1sqE, 3)) for x in d_beta]}")
