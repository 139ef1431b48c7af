import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from geograph.admissibility import ChernQuintuple, ParamVector
from geograph.blowup import SubmanifoldProfile, profile_delta
from geograph.errors import Mod3Violation, NotAdmissible, SearchExhausted
from geograph.exact import bareiss_det
from geograph.planner import (
    BUDGET_ENV,
    BetaConfig,
    Counts,
    SearchBudget,
    base_setup,
    closed_form_counts_v0,
    realize,
    solve_counts,
    solve_rational,
)
from geograph.verifier import verify_plan

POINT = profile_delta(SubmanifoldProfile.point())
# printed leading coefficients of the v-slopes of x, y, z, u
LEADING = {
    "x": lambda n: Fraction(32 * n + 13),
    "y": lambda n: Fraction(24 * n + 9, 2),
    "z": lambda n: Fraction(48 * n + 18),
    "u": lambda n: Fraction(4),
}
LEADING_J0 = {"x": Fraction(13), "y": Fraction(17, 2), "z": Fraction(22), "u": Fraction(4)}


def _printed_base(n):
    """Base constants in (a, 4m, 12k, b) as printed for j >= 1."""
    return (48 * n + 12, -12, -192 * n - 468, -128 * n - 208)


def _amkb4(p):
    return (p.a, 4 * p.m, 12 * p.k, p.b)


@pytest.mark.parametrize("n", range(1, 6))
def test_positive_base_matches_printed_constants(n):
    base = base_setup(n).base
    assert _amkb4(base) == _printed_base(n) and base.j == n


@pytest.mark.parametrize("n", range(1, 6))
def test_negative_base_is_negated(n):
    assert base_setup(-n).base == -base_setup(n).base


def test_base_examples():
    assert base_setup(1).base == ParamVector(60, -3, 1, -55, -336)
    assert base_setup(0).base == ParamVector(12, -3, 0, -39, -208)
    assert base_setup(-1).base == ParamVector(-60, 3, -1, 55, 336)


def test_j0_base_is_recomputed_not_printed():
    setup = base_setup(0)
    assert _amkb4(setup.base) == (12, -12, -468, -208)
    assert _amkb4(setup.base) != (12, -24, -488, -218)
    assert setup.errata


@pytest.mark.parametrize("j", [-3, -1, 0, 1, 2, 4])
def test_fixed_columns(j):
    setup = base_setup(j)
    x, y, z, u = setup.fixed_columns()
    assert x == ParamVector(3, 0, 0, -15, -81)
    assert y == ParamVector(4, -1, 0, -9, -48)
    assert z == ParamVector(-4, 1, 0, 12, 64)
    if j == 0:
        assert u == ParamVector(3, -3, 0, 2, 14)
    else:
        n = abs(j)
        assert u == ParamVector(12 * n + 3, -9 * n - 3, 0, 3 * n + 5, 24 * n + 30)
    m = [[c.a, c.m, c.k, c.b] for c in (x, y, z, u)]
    assert bareiss_det(m) == sp.Matrix(m).det() != 0


def test_columns_keep_j():
    cols = base_setup(2).columns(3, 2, BetaConfig(5))
    assert all(c.j == 0 for c in cols.as_tuple())


# --- solve_counts -------------------------------------------------------------


def test_target_equal_to_base():
    setup = base_setup(1)
    res = solve_counts(setup, setup.base)
    assert res.counts == Counts(0, 0, 0, 0, 0)
    assert (res.lam, res.v) == (1, 0)


def test_target_base_plus_point():
    setup = base_setup(1)
    res = solve_counts(setup, setup.base + POINT)
    assert res.counts == Counts(1, 0, 0, 0, 0)


def test_spec_target_is_verified():
    plan = realize(ParamVector(63, -6, 1, -70, -417))
    assert verify_plan(plan).passed
    assert plan.counts.as_tuple() == (45, 12, 61, 2, 2)


def test_first_feasible_v_is_minimal():
    rng = random.Random(2)
    for _ in range(40):
        j = rng.randint(-3, 3)
        a, m = rng.randint(-30, 30), rng.randint(-30, 30)
        m -= (a + m) % 3
        target = ParamVector(a, m, j, rng.randint(-30, 30), rng.randint(-30, 30))
        setup = base_setup(j)
        res = solve_counts(setup, target)
        for v in range(res.v):
            sol = solve_rational(setup, target, res.lam, v)
            assert not all(s.denominator == 1 and s >= 0 for s in sol)
        sol = solve_rational(setup, target, res.lam, res.v)
        assert tuple(int(s) for s in sol) == res.counts.as_tuple()[:4]


def test_search_exhausted():
    setup = base_setup(1)
    with pytest.raises(SearchExhausted) as info:
        solve_counts(setup, setup.base - POINT, budget=SearchBudget(lambda_max=1, v_max=0))
    assert info.value.bounds["v_max"] == 0


def test_mismatched_or_bad_targets():
    with pytest.raises(ValueError):
        solve_counts(base_setup(1), base_setup(2).base)
    with pytest.raises(Mod3Violation):
        solve_counts(base_setup(1), ParamVector(1, 0, 1, 0, 0))


# --- realize ----------------------------------------------------------------


def test_realize_base_quintuple():
    plan = realize(ChernQuintuple(60, 108, 96, 12, -336))
    assert (plan.branch, plan.n) == ("j_positive", 1)
    assert plan.counts == Counts(0, 0, 0, 0, 0)
    assert plan.geometric_disclaimer


def test_realize_zero():
    plan = realize(ParamVector(0, 0, 0, 0, 0))
    assert plan.counts.total > 0
    assert verify_plan(plan).passed


def test_realize_rejects():
    with pytest.raises(NotAdmissible):
        realize(ChernQuintuple(1, 0, 0, 0, 0))
    with pytest.raises(Mod3Violation):
        realize(ParamVector(1, 1, 0, 0, 0))


def test_realize_with_other_k_and_beta():
    plan = realize(ParamVector(3, 0, 5, -2, 11), K=3, beta=BetaConfig(beta_sq=7, c1N_beta=1, c1E_beta=-1))
    assert plan.K == 3 and plan.beta_config.beta_sq == 7
    assert verify_plan(plan).passed


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "7:99")
    assert SearchBudget.from_env() == SearchBudget(7, 99)
    monkeypatch.setenv(BUDGET_ENV, "5")
    assert SearchBudget.from_env() == SearchBudget(5, 10**6)
    monkeypatch.setenv(BUDGET_ENV, "x")
    with pytest.raises(ValueError):
        SearchBudget.from_env()
    monkeypatch.delenv(BUDGET_ENV)
    assert SearchBudget.from_env() == SearchBudget()


def test_beta_must_be_positive():
    with pytest.raises(ValueError):
        BetaConfig(beta_sq=0)


# --- printed closed forms at v = 0 -----------------------------------------


def test_closed_form_vanishes_at_base():
    for n in (1, 2, 3):
        assert closed_form_counts_v0("j_positive", n, base_setup(n).base) == (0, 0, 0, 0)
        assert closed_form_counts_v0("j_negative", n, base_setup(-n).base) == (0, 0, 0, 0)
    assert closed_form_counts_v0("j_zero", 0, base_setup(0).base) == (0, 0, 0, 0)


def test_closed_form_base_plus_point():
    assert closed_form_counts_v0("j_positive", 1, base_setup(1).base + POINT) == (1, 0, 0, 0)


def test_closed_form_does_not_vanish_at_printed_j0_base():
    printed = ParamVector(12, -6, 0, Fraction(-488, 12), -218)
    assert closed_form_counts_v0("j_zero", 0, printed) != (0, 0, 0, 0)


@pytest.mark.parametrize("j", [-3, -2, -1, 0, 1, 2, 3])
def test_closed_form_agrees_with_solver(j):
    setup = base_setup(j)
    rng = random.Random(j)
    for _ in range(100):
        a, m = rng.randint(-500, 500), rng.randint(-500, 500)
        m -= (a + m) % 3
        target = ParamVector(a, m, j, rng.randint(-500, 500), rng.randint(-500, 500))
        assert solve_rational(setup, target, 1, 0) == closed_form_counts_v0(setup.branch, setup.n, target)


@settings(max_examples=200)
@given(st.integers(-3, 3), st.integers(-10**4, 10**4), st.integers(-10**4, 10**4),
       st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
def test_x_is_never_integral_off_the_mod3_lattice(j, a, m, k, b):
    if (a + m) % 3 == 0:
        m += 1
    setup = base_setup(j)
    x = solve_rational(setup, ParamVector(a, m, j, k, b), 1, 0)[0]
    assert x.denominator != 1


# --- v-slopes as polynomials in lambda -------------------------------------

lam_sym = sp.Symbol("lam")


def _slope_polys(j, K, beta):
    setup = base_setup(j)
    pts = []
    for lam in range(1, 5):
        s0 = solve_rational(setup, setup.base, lam, 0, K, beta)
        s1 = solve_rational(setup, setup.base, lam, 1, K, beta)
        pts.append([b - a for a, b in zip(s0, s1)])
    polys = {}
    for i, name in enumerate("xyzu"):
        data = [(lam, sp.Rational(pts[lam - 1][i].numerator, pts[lam - 1][i].denominator)) for lam in range(1, 5)]
        polys[name] = sp.Poly(sp.interpolate(data, lam_sym), lam_sym)
    return setup, polys


def _lam3(poly):
    return Fraction(str(poly.coeff_monomial(lam_sym**3)))


@pytest.mark.parametrize("j", [1, 2, 3, -1, -2, 0])
def test_slope_is_affine_and_cubic(j):
    setup, polys = _slope_polys(j, 1, BetaConfig())
    for lam in (5, 6):
        s0 = solve_rational(setup, setup.base, lam, 0)
        s1 = solve_rational(setup, setup.base, lam, 1)
        s2 = solve_rational(setup, setup.base, lam, 2)
        for i, name in enumerate("xyzu"):
            assert s2[i] - s1[i] == s1[i] - s0[i]
            assert Fraction(str(polys[name].eval(lam))) == s1[i] - s0[i]


@pytest.mark.parametrize("n", [1, 2])
def test_leading_monomial_coefficients(n):
    """The coefficient of lam^3 K^2 beta_sq in each slope is the printed one."""
    coeff = {}
    for K in (1, 2):
        for bsq in (2, 3):
            coeff[K, bsq] = {name: _lam3(p) for name, p in _slope_polys(n, K, BetaConfig(bsq))[1].items()}
    for name, lead in LEADING.items():
        # lam^3 coefficient is c0 + c2 K^2 beta_sq (c1E_beta = 0); difference out c0
        d_beta = coeff[1, 3][name] - coeff[1, 2][name]
        d_k = (coeff[2, 2][name] - coeff[1, 2][name]) / (2 * 3)
        assert d_beta == d_k == lead(n)


@pytest.mark.parametrize("j", [1, 2, 3, 0, -1, -2])
@pytest.mark.parametrize("K", [1, 2, 3])
def test_full_lambda_cubed_coefficient(j, K):
    """Exact lam^3 coefficient: L (K^2 beta_sq - K c1E_beta + c1sqE / 3)."""
    beta = BetaConfig(beta_sq=5, c1N_beta=2, c1E_beta=-3)
    setup, polys = _slope_polys(j, K, beta)
    factor = K**2 * beta.beta_sq - K * beta.c1E_beta + Fraction(setup.c1sqE, 3)
    lead = LEADING_J0 if j == 0 else {name: f(abs(j)) for name, f in LEADING.items()}
    for name in "xyzu":
        assert _lam3(polys[name]) == lead[name] * factor
