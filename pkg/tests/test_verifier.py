import math

import numpy as np
import pytest

from lemnisub import (
    CATALOG,
    AdmissibilityQuantity,
    Janowski,
    LemmaId,
    LemmaParams,
    PowerSeries,
    SqrtLemniscate,
    Verdict,
    admissibility_min,
    boundary_margin_profile,
    check_superordination,
    closed_form_threshold,
    implication_trial,
    monomial,
    numeric_threshold,
    subordination_check,
)
from lemnisub.catalog import lower_bound_g
from lemnisub.errors import (
    ConstantTermMismatch,
    InfeasibleParameters,
    NoThresholdInBracket,
    NonMonotoneMargin,
    PremiseMapPoleInsideDisk,
    TruncationInsufficient,
)
from lemnisub.verify import (
    _analyze_scan,
    _golden_refine_vec,
    winding_number,
)

from conftest import draw_valid_params

SQRT2 = math.sqrt(2.0)
MARGIN_LEMMAS = [l for l in LemmaId if CATALOG[l].margin_criterion]


# --- primitives ---------------------------------------------------------------

def test_winding_number_basic():
    t = np.linspace(-np.pi, np.pi, 256, endpoint=False)
    assert winding_number(np.exp(1j * t)) == 1
    assert winding_number(np.exp(-2j * t)) == -2
    assert winding_number(3.0 + np.exp(1j * t)) == 0


def test_golden_refine_vectorised():
    f = lambda x: (x - 1.3) ** 2 + 0.2
    lo = np.array([0.0, 1.0])
    hi = np.array([2.0, 2.0])
    xb, fb = _golden_refine_vec(f, lo, hi, 1e-10)
    assert np.max(np.abs(xb - 1.3)) <= 1e-8
    assert np.max(np.abs(fb - 0.2)) <= 1e-12


def test_analyze_scan_single_upcrossing():
    assert _analyze_scan(np.array([0.2, 0.5, 0.9, 1.1, 1.5])) == 2


def test_analyze_scan_detects_descent():
    with pytest.raises(NonMonotoneMargin):
        _analyze_scan(np.array([0.2, 1.2, 0.8, 1.4, 2.0]))


def test_analyze_scan_no_threshold():
    with pytest.raises(NoThresholdInBracket):
        _analyze_scan(np.array([0.1, 0.2, 0.3]))


# --- margin profiles -----------------------------------------------------------

def test_profile_l9_degenerate_constant():
    p = boundary_margin_profile(
        LemmaId.L9, LemmaParams(A=1.0, B=0.0, D=1.0, E=0.0, beta=2.0))
    assert p.min_margin == pytest.approx(2.0, abs=1e-12)
    assert p.argmin_t == 0.0
    assert p.is_constant()


def test_profile_l2_at_threshold():
    beta = 1.0 + SQRT2
    p = boundary_margin_profile(LemmaId.L2, LemmaParams(A=1.0, B=0.0, beta=beta))
    assert p.min_margin == pytest.approx(1.0, abs=1e-9)
    # the binding angle is t = +-pi, where |2 + beta e^{it}| = beta - 2
    assert abs(p.argmin_t) == pytest.approx(math.pi, abs=1e-6)


def test_profile_l1_cosine_margin():
    # A=1, B=0, k=1: margin(t) = beta/(4 cos(t/2)); at beta=4 it is 1/cos(t/2)
    p = boundary_margin_profile(LemmaId.L1,
                                LemmaParams(A=1.0, B=0.0, k=1.0, beta=4.0))
    assert p.min_margin == pytest.approx(1.0, abs=1e-9)
    assert p.argmin_t == pytest.approx(0.0, abs=1e-7)
    expect = 1.0 / np.cos(p.t_samples / 2.0)
    assert np.max(np.abs(p.margins - expect)) <= 1e-9


def test_profile_punctures_exclude_singular_angles():
    p = boundary_margin_profile(LemmaId.L2, LemmaParams(A=0.0, B=-1.0, beta=10.0))
    assert p.punctures == (0.0,)
    assert np.min(np.abs(p.t_samples)) > 1e-6
    assert np.all(np.isfinite(p.margins))


@pytest.mark.parametrize("lemma", MARGIN_LEMMAS)
def test_profile_even_symmetry(lemma):
    rng = np.random.default_rng(abs(hash(lemma.value + "even")) % 2**32)
    for _ in range(5):
        params = draw_valid_params(lemma, rng)
        thr = closed_form_threshold(lemma, params)
        if thr.beta_star is None:
            continue
        p = boundary_margin_profile(lemma, params.with_beta(1.1 * thr.beta_star),
                                    grid_size=1024, refine=False,
                                    diagnose_poles=False)
        # pair each angle with its negative (grid from -pi, endpoint excluded)
        m = dict(zip(np.round(p.t_samples, 12), p.margins))
        finite = [(t, v) for t, v in m.items() if np.isfinite(v) and -t in m]
        for t, v in finite:
            assert v == pytest.approx(m[-t], rel=1e-9, abs=1e-9)


def test_profile_requires_margin_lemma():
    with pytest.raises(ValueError):
        boundary_margin_profile(LemmaId.L5, LemmaParams(beta=1.0))


def test_profile_stores_refined_samples_consistently():
    p = boundary_margin_profile(LemmaId.L2, LemmaParams(A=1.0, B=0.0, beta=3.0))
    assert p.refined
    assert p.t_samples.shape == p.margins.shape
    assert p.min_margin == float(np.min(p.margins))
    assert np.all(np.diff(p.t_samples) >= 0.0)
    idx = np.flatnonzero(p.margins == p.min_margin)
    assert any(p.t_samples[i] == p.argmin_t for i in idx)


def test_interior_pole_diagnostic_flag_and_raise():
    # L1 with B > 1/2: A - B h(z) vanishes inside the disk at beta*
    params = LemmaParams(A=1.0, B=0.75, k=1.0, beta=4.0)
    p = boundary_margin_profile(LemmaId.L1, params)
    assert p.pole_inside and p.den_winding != 0
    assert p.min_margin >= 1.0 - 1e-9    # the margin itself is unaffected
    with pytest.raises(PremiseMapPoleInsideDisk):
        boundary_margin_profile(LemmaId.L1, params, on_interior_pole="raise")
    # with B < 1/2 the denominator stays zero-free at beta*
    clean = boundary_margin_profile(
        LemmaId.L1, LemmaParams(A=1.0, B=0.25, k=1.0, beta=4.0))
    assert not clean.pole_inside


def test_l1_lower_bound_g_argmin_at_zero():
    rng = np.random.default_rng(31)
    t = np.linspace(-math.pi + 1e-6, math.pi - 1e-6, 4001)
    for _ in range(20):
        params = draw_valid_params(LemmaId.L1, rng)
        thr = closed_form_threshold(LemmaId.L1, params)
        g = lower_bound_g(LemmaId.L1, params.with_beta(thr.beta_star), t)
        assert abs(t[int(np.argmin(g))]) <= 2e-3
        assert np.min(g) == pytest.approx(1.0, abs=1e-9)


# --- admissibility --------------------------------------------------------------

@pytest.mark.parametrize("lemma,expect", [(LemmaId.L5, 0.75),
                                          (LemmaId.L6, 0.50),
                                          (LemmaId.L7, 0.25)])
def test_admissibility_exact_boundary_constants(lemma, expect):
    m = admissibility_min(lemma, LemmaParams(beta=1.0),
                          AdmissibilityQuantity.RE_ZQP_OVER_Q, radius=1.0)
    assert abs(m - expect) <= 1e-9


def test_admissibility_l9_interior_value():
    m = admissibility_min(LemmaId.L9,
                          LemmaParams(A=1.0, B=0.0, D=1.0, E=0.0, beta=1.0),
                          AdmissibilityQuantity.RE_ZQP_OVER_Q, radius=0.99)
    assert m == pytest.approx(1.0, abs=1e-12)   # (1-Bz)/(1+Bz) with B=0


def test_admissibility_l1_k3_degenerates_on_boundary_only():
    params = LemmaParams(A=1.0, B=0.0, k=3.0, beta=8.0)
    on_boundary = admissibility_min(LemmaId.L1, params,
                                    AdmissibilityQuantity.RE_ZQP_OVER_Q, 1.0)
    inside = admissibility_min(LemmaId.L1, params,
                               AdmissibilityQuantity.RE_ZQP_OVER_Q, 1.0 - 1e-6)
    assert abs(on_boundary) <= 1e-9
    assert inside > 0.0


def test_admissibility_phi_of_q():
    # L7: Re(beta/(1+z)) = beta/2 exactly on the circle
    m = admissibility_min(LemmaId.L7, LemmaParams(beta=0.9),
                          AdmissibilityQuantity.RE_PHI_OF_Q, radius=1.0)
    assert m == pytest.approx(0.45, abs=1e-12)


def test_admissibility_l8_uses_true_h_derivative():
    # the h-derivative quantity contains q/beta, not 1/beta; the finite
    # difference cross-check inside admissibility_min enforces it
    params = LemmaParams(A=0.5, B=0.0, beta=3.0)
    m = admissibility_min(LemmaId.L8, params,
                          AdmissibilityQuantity.RE_ZHP_OVER_Q, radius=0.999)
    t = np.linspace(-np.pi, np.pi, 8192, endpoint=False)
    z = 0.999 * np.exp(1j * t)
    q = (1.0 + params.A * z) / (1.0 + params.B * z)
    zqp = (1.0 - params.A * params.B * z * z) / ((1.0 + params.A * z) * (1.0 + params.B * z))
    direct = (q / params.beta + zqp).real
    assert m == pytest.approx(float(direct.min()), abs=1e-6)


# --- verdicts -------------------------------------------------------------------

def test_verdict_l2_verified():
    rep = check_superordination(LemmaId.L2, LemmaParams(A=1.0, B=0.0, beta=3.0))
    assert rep.verdict is Verdict.VERIFIED
    assert rep.margin.min_margin == pytest.approx(3.0, abs=1e-9)  # beta(beta-2)


def test_verdict_l2_criterion_fails_at_two():
    rep = check_superordination(LemmaId.L2, LemmaParams(A=1.0, B=0.0, beta=2.0))
    assert rep.verdict is Verdict.CRITERION_FAILS
    assert rep.margin.min_margin == pytest.approx(0.0, abs=1e-9)


def test_verdict_l2_hypothesis_fails_at_one():
    rep = check_superordination(LemmaId.L2, LemmaParams(A=1.0, B=0.0, beta=1.0))
    assert rep.verdict is Verdict.HYPOTHESIS_FAILS
    assert not rep.feasible
    assert rep.margin.min_margin == pytest.approx(1.0, abs=1e-9)


def test_verdict_l5_admissibility_only():
    rep = check_superordination(LemmaId.L5, LemmaParams(beta=0.7))
    assert rep.verdict is Verdict.VERIFIED
    assert rep.margin is None
    assert rep.admissibility["ReZQprimeOverQ"] > 0.7


# --- numeric thresholds ----------------------------------------------------------

def test_numeric_threshold_l1_k2():
    b = numeric_threshold(LemmaId.L1, LemmaParams(A=1.0, B=0.0, k=2.0))
    assert b == pytest.approx(2.0 ** 2.5, rel=1e-4)


def test_numeric_threshold_l2_exact_point():
    b = numeric_threshold(LemmaId.L2, LemmaParams(A=1.0, B=0.0))
    assert b == pytest.approx(1.0 + SQRT2, rel=1e-4)


def test_numeric_threshold_l9_degenerate():
    b = numeric_threshold(LemmaId.L9, LemmaParams(A=1.0, B=0.0, D=1.0, E=0.0))
    assert b == pytest.approx(1.0, abs=1e-6)


def test_numeric_threshold_rejects_infeasible():
    with pytest.raises(InfeasibleParameters):
        numeric_threshold(LemmaId.L10, LemmaParams(A=1.0, B=-1.0, D=1.0, E=-1.0))


@pytest.mark.parametrize("lemma", [LemmaId.L1, LemmaId.L2, LemmaId.L9,
                                   LemmaId.L10, LemmaId.L11])
def test_conservative_sufficiency_sample(lemma):
    # small sample here; the acceptance suite runs the full sweep
    rng = np.random.default_rng(abs(hash(lemma.value + "cons")) % 2**32)
    for _ in range(8):
        params = draw_valid_params(lemma, rng)
        thr = closed_form_threshold(lemma, params)
        nt = numeric_threshold(lemma, params, grid_size=512)
        assert nt <= thr.beta_star * (1.0 + 1e-6)


# --- subordination ----------------------------------------------------------------

def test_subordination_schwarz_composition_positive():
    p = (1.0 + 0.5 * PowerSeries.identity(64)).sqrt()
    r = subordination_check(p, SqrtLemniscate())
    assert r.margin > 0.0
    assert r.certified


def test_subordination_outside_negative():
    p = PowerSeries([1.0, 1.0], order=64)
    r = subordination_check(p, SqrtLemniscate())
    assert r.margin < 0.0


def test_subordination_boundary_touching_within_truncation():
    q = (1.0 + PowerSeries.identity(64)).sqrt()
    r = subordination_check(q, SqrtLemniscate())
    assert abs(r.margin) <= 0.1    # ~0 up to the (uncertified) truncation tail
    assert not r.certified
    with pytest.raises(TruncationInsufficient):
        subordination_check(q, SqrtLemniscate(), strict_tail=True)


def test_subordination_requires_centred_series():
    with pytest.raises(ConstantTermMismatch):
        subordination_check(PowerSeries([1.5, 0.5], order=8), SqrtLemniscate())


def test_subordination_janowski_exact_margin():
    # p = 1 + c z has margin 1 - |c| r / |A - B(1+cz)| like the map itself
    p = PowerSeries([1.0, 0.4], order=32)
    r = subordination_check(p, Janowski(0.5, 0.0), radii=(0.9,))
    assert r.margin == pytest.approx(1.0 - 0.4 * 0.9 / 0.5, abs=1e-12)


# --- implication trials -------------------------------------------------------------

def test_trial_l2_identity_schwarz():
    t = implication_trial(LemmaId.L2, LemmaParams(A=1.0, B=0.0, beta=3.0),
                          monomial(1))
    assert t.premise_residual <= 1e-9
    assert t.conclusion_margin > 0.0


def test_trial_l9_single():
    thr = closed_form_threshold(LemmaId.L9, LemmaParams(A=1.0, B=0.0, D=1.0, E=0.0))
    t = implication_trial(LemmaId.L9,
                          LemmaParams(A=1.0, B=0.0, D=1.0, E=0.0,
                                      beta=thr.beta_star),
                          monomial(1))
    assert t.conclusion_margin >= 0.0


def test_trial_l1_k0_squared_schwarz_at_threshold():
    from lemnisub import monomial as mono
    thr = closed_form_threshold(LemmaId.L1, LemmaParams(A=1.0, B=0.0, k=0.0))
    t = implication_trial(
        LemmaId.L1,
        LemmaParams(A=1.0, B=0.0, k=0.0, beta=thr.beta_star), mono(2))
    assert t.premise_residual <= 1e-9
    assert t.conclusion_margin >= -1e-9


def test_trial_requires_feasibility_unless_exploratory():
    params = LemmaParams(A=1.0, B=0.0, beta=1.0)   # below the L2 threshold
    with pytest.raises(InfeasibleParameters):
        implication_trial(LemmaId.L2, params, monomial(1))
    t = implication_trial(LemmaId.L2, params, monomial(1), require_feasible=False)
    assert not t.feasible
    assert t.premise_residual <= 1e-9
