import numpy as np
import pytest

from lemnisub import (
    LemmaId,
    LemmaParams,
    PowerSeries,
    blaschke_factor,
    closed_form_threshold,
    monomial,
    random_schwarz,
    scaled_polynomial,
    solve_premise,
    solve_premise_ode,
)
from lemnisub.errors import NotAContraction
from lemnisub.generate import compose_target
from lemnisub.regions import SqrtLemniscate

from conftest import draw_valid_params

ALL = list(LemmaId)


def boundary_sup(series, n=4096):
    t = np.linspace(-np.pi, np.pi, n, endpoint=False)
    return float(np.max(np.abs(series.eval(np.exp(1j * t)))))


# --- Schwarz families ---------------------------------------------------------

def test_monomial_families():
    w = monomial(1)
    assert w.series[1] == pytest.approx(1.0)
    assert w.boundary_sup == pytest.approx(1.0, abs=1e-12)
    w2 = monomial(2)
    assert w2.series[2] == pytest.approx(1.0) and w2.series[1] == pytest.approx(0.0)


def test_blaschke_collapses_at_zero():
    w = blaschke_factor(0.0)
    assert w.series[2] == pytest.approx(1.0)
    assert w.series[1] == pytest.approx(0.0)


def test_blaschke_series_is_certified_contraction():
    for a in (0.3, 0.6 + 0.2j, -0.79, 0.5j):
        w = blaschke_factor(a)
        assert abs(w.series[0]) == 0.0
        assert boundary_sup(w.series) <= 1.0 + 1e-12
        # exact values on a few interior points
        z = np.array([0.3, -0.2 + 0.4j, 0.1 - 0.6j])
        expect = z * (z + a) / (1.0 + np.conj(a) * z)
        assert np.max(np.abs(w.series.eval(z) - expect)) <= 1e-10


def test_blaschke_order_rises_with_a():
    assert blaschke_factor(0.79).series.order > monomial(1).series.order


def test_scaled_polynomial_normalisation(rng):
    c = np.zeros(9, dtype=complex)
    c[1:] = rng.normal(size=8) + 1j * rng.normal(size=8)
    w = scaled_polynomial(c)
    sup = boundary_sup(w.series)
    assert sup <= 1.0 + 1e-12
    assert sup == pytest.approx(1.0 / 1.0000001, rel=1e-6)


def test_contraction_violations_raise():
    with pytest.raises(NotAContraction):
        blaschke_factor(1.0)
    with pytest.raises(NotAContraction):
        scaled_polynomial([0.0, 0.0, 0.0])
    with pytest.raises(NotAContraction):
        scaled_polynomial([1.0, 0.5])


def test_random_schwarz_reproducible():
    a = random_schwarz(np.random.default_rng(7))
    b = random_schwarz(np.random.default_rng(7))
    assert a.kind == b.kind
    assert np.array_equal(a.series.coeffs, b.series.coeffs)


def test_random_schwarz_invariants(rng):
    for _ in range(25):
        w = random_schwarz(rng)
        assert abs(w.series[0]) == 0.0
        assert w.boundary_sup <= 1.0 + 1e-12


# --- premise-exact solutions ----------------------------------------------------

def test_l2_quadrature_coefficients():
    # 1 + beta z p' = sqrt(1+z): c_n = binom(1/2, n)/(beta n)
    beta = 3.0
    sol = solve_premise_ode(LemmaId.L2, LemmaParams(A=1.0, B=0.0, beta=beta),
                            monomial(1), 32)
    assert sol.p[1] == pytest.approx(1.0 / (2.0 * beta))     # 1/6
    assert sol.p[2] == pytest.approx(-1.0 / (16.0 * beta))   # -1/48
    b = 1.0
    for n in range(1, 33):
        b = b * (0.5 - n + 1) / n
        assert sol.p[n] == pytest.approx(b / (beta * n), abs=1e-14)


def test_l9_linear_closed_form():
    # E = 0: p' = D/beta, so p = 1 + D z / beta
    sol = solve_premise_ode(LemmaId.L9,
                            LemmaParams(A=1.0, B=0.0, D=1.0, E=0.0, beta=2.0),
                            monomial(1), 16)
    assert sol.p[1] == pytest.approx(0.5)
    assert np.max(np.abs(sol.p.coeffs[2:])) <= 1e-15
    sol = solve_premise_ode(LemmaId.L9,
                            LemmaParams(A=1.0, B=0.0, D=1.0, E=0.0, beta=1.5),
                            monomial(1), 16)
    assert sol.p[1] == pytest.approx(2.0 / 3.0)


def test_l1_log_closed_form():
    # k = 2: 1/p = 1 - ((A-B)/(beta B)) log(1+Bz)
    A, B, beta = 1.0, -0.5, 8.0
    sol = solve_premise_ode(LemmaId.L1, LemmaParams(A=A, B=B, k=2.0, beta=beta),
                            monomial(1), 64)
    lg = (1.0 + B * PowerSeries.identity(64)).log()
    closed = 1.0 / (1.0 - (A - B) / (beta * B) * lg)
    assert np.max(np.abs(sol.p.coeffs - closed.coeffs)) <= 1e-10


def test_l5_resolvent_closed_form():
    # p + beta z p' = sqrt(1+z): c_n = binom(1/2,n)/(1 + beta n)
    beta = 0.7
    sol = solve_premise_ode(LemmaId.L5, LemmaParams(beta=beta), monomial(1), 32)
    b = 1.0
    for n in range(1, 33):
        b = b * (0.5 - n + 1) / n
        assert sol.p[n] == pytest.approx(b / (1.0 + beta * n), abs=1e-14)


def test_l1_exponent_coherence():
    # the recursion at k=2 agrees with substituting p^2 into the premise
    params = LemmaParams(A=0.6, B=-0.3, k=2.0, beta=6.0)
    sol = solve_premise_ode(LemmaId.L1, params, blaschke_factor(0.4), 64)
    lhs = 1.0 + params.beta * sol.p.zderiv() / sol.p.power(2.0)
    w = blaschke_factor(0.4).series.pad_to(64)
    rhs = (1.0 + params.A * w) / (1.0 + params.B * w)
    assert (lhs - rhs).max_abs_coeff() <= 1e-12


@pytest.mark.parametrize("lemma", ALL)
def test_premise_residuals_across_catalog(lemma):
    rng = np.random.default_rng(abs(hash(lemma.value + "res")) % 2**32)
    for _ in range(10):
        params = draw_valid_params(lemma, rng)
        thr = closed_form_threshold(lemma, params)
        beta = 1.05 * thr.beta_star if thr.beta_star is not None else 1.0
        w = random_schwarz(rng)
        sol = solve_premise_ode(lemma, params.with_beta(beta), w, 64)
        assert sol.residual <= 1e-9
        assert sol.p[0] == pytest.approx(1.0)


def test_adaptive_solve_caps_and_reports():
    sol = solve_premise(LemmaId.L2, LemmaParams(A=1.0, B=0.0, beta=3.0),
                        monomial(1))
    assert sol.order <= 512
    assert sol.residual <= 1e-9


def test_compose_target_tail_certificate():
    w = blaschke_factor(0.5)
    p = compose_target(SqrtLemniscate(), w)
    assert p.tail_bound(0.999) < 1e-9
    # the composed series equals sqrt(1 + w) pointwise
    z = 0.7 * np.exp(1j * np.linspace(-3, 3, 11))
    expect = np.sqrt(1.0 + w.series.eval(z))
    assert np.max(np.abs(p.eval(z) - expect)) <= 1e-9
