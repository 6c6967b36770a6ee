"""Test-function generators: Schwarz self-maps and premise-exact solutions.

A Schwarz function is an analytic self-map w of the unit disk with
w(0) = 0 (hence |w(z)| <= |z|).  Three families are provided:

* ``monomial(m)``: w(z) = z^m,
* ``blaschke_factor(a)``: w(z) = z (z + a)/(1 + conj(a) z), |a| < 1,
* ``scaled_polynomial(coeffs)``: a random polynomial with zero constant
  term, normalised by its measured boundary maximum times a safety
  factor so the truncated series is certifiably a contraction.

``solve_premise_ode`` inverts a lemma's defining functional equation
with equality: given w it produces the coefficients of the unique p
with p(0) = 1 satisfying

    1 + beta z p'(z) / p(z)^m = F(w(z))      (affine entries), or
    p(z) + beta z p'(z) / p(z)^m = F(w(z))   (convective entries),

where F is the premise target.  Writing u = p^m and updating u by the
logarithmic-derivative recursion keeps every step O(n), so a full solve
is O(N^2).  The recursion is exact: the reported residual is the
largest coefficient of (premise functional - F(w)) after the fact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULTS
from .catalog import CATALOG, LemmaId, LemmaParams, validate
from .errors import NotAContraction, RecursionBreakdown, TruncationInsufficient
from .series import PowerSeries

_SUP_SAMPLES = 4096
_SUP_TOL = 1e-12
_SAFETY = 1.0000001


@dataclass(frozen=True)
class SchwarzFunction:
    """A disk self-map fixing the origin, held as a truncated series."""

    kind: str
    series: PowerSeries
    boundary_sup: float

    def __call__(self, z):
        return self.series.eval(z)

    def describe(self) -> str:
        return self.kind


def _boundary_sup(series: PowerSeries, samples: int = _SUP_SAMPLES) -> float:
    t = np.linspace(-np.pi, np.pi, samples, endpoint=False)
    return float(np.max(np.abs(series.eval(np.exp(1j * t)))))


def _certify(kind: str, series: PowerSeries) -> SchwarzFunction:
    if abs(series.coeffs[0]) > DEFAULTS.coeff_tol:
        raise NotAContraction(f"{kind}: constant term {series.coeffs[0]!r} is not 0")
    sup = _boundary_sup(series)
    if sup > 1.0 + _SUP_TOL:
        raise NotAContraction(f"{kind}: boundary sup {sup} exceeds 1 + {_SUP_TOL}")
    return SchwarzFunction(kind, series, sup)


def monomial(m: int, order: int = DEFAULTS.series_order) -> SchwarzFunction:
    """w(z) = z^m."""
    if m < 1:
        raise ValueError("monomial exponent must be a positive integer")
    order = max(order, m)
    c = np.zeros(order + 1, dtype=complex)
    c[m] = 1.0
    return _certify(f"monomial({m})", PowerSeries(c))


def blaschke_factor(a: complex, order: int = DEFAULTS.series_order) -> SchwarzFunction:
    """w(z) = z (z + a)/(1 + conj(a) z); a = 0 collapses to z^2.

    The geometric tail of the expansion decays like |a|^n, so the order
    is raised automatically until the truncated series itself passes the
    boundary-sup certificate.
    """
    a = complex(a)
    if abs(a) >= 1.0:
        raise NotAContraction(f"blaschke factor needs |a| < 1, got {abs(a)}")
    need = order
    if abs(a) > 0.0:
        # |a|^(n-1) <= 1e-13 guarantees the truncation stays a contraction
        need = max(order, int(np.ceil(np.log(1e-13) / np.log(abs(a)))) + 2)
    c = np.zeros(need + 1, dtype=complex)
    # z(z+a) * sum_n (-conj(a))^n z^n
    geo = (-np.conj(a)) ** np.arange(need + 1)
    c[1:] += a * geo[: need]
    c[2:] += geo[: need - 1]
    return _certify(f"blaschke({a.real:.6g}{a.imag:+.6g}j)", PowerSeries(c))


def scaled_polynomial(coeffs, order: int = DEFAULTS.series_order) -> SchwarzFunction:
    """Polynomial with zero constant term, normalised to boundary sup 1/safety."""
    c = np.asarray(coeffs, dtype=complex)
    if c.size == 0 or abs(c[0]) > 0.0:
        raise NotAContraction("scaled polynomial needs a zero constant term")
    raw = PowerSeries(c, order=max(order, c.size - 1))
    sup = _boundary_sup(raw)
    if sup <= 0.0:
        raise NotAContraction("cannot normalise the zero polynomial")
    return _certify("poly", PowerSeries(raw.coeffs / (sup * _SAFETY)))


def random_schwarz(rng: np.random.Generator,
                   order: int = DEFAULTS.series_order,
                   degree: int = 8) -> SchwarzFunction:
    """Seeded draw from the three families, reproducible given the rng state."""
    family = int(rng.integers(0, 3))
    if family == 0:
        return monomial(int(rng.integers(1, 7)), order)
    if family == 1:
        radius = 0.8 * np.sqrt(rng.uniform())
        angle = rng.uniform(-np.pi, np.pi)
        return blaschke_factor(radius * np.exp(1j * angle), order)
    c = np.zeros(degree + 1, dtype=complex)
    c[1:] = rng.normal(size=degree) + 1j * rng.normal(size=degree)
    w = scaled_polynomial(c, order)
    return SchwarzFunction(f"poly(deg={degree})", w.series, w.boundary_sup)


def compose_target(region, w: SchwarzFunction,
                   order: int | None = None,
                   max_order: int = 16384,
                   tail_radius: float = max(DEFAULTS.radii),
                   tail_tol: float = DEFAULTS.tail_tol) -> PowerSeries:
    """Series of q(w(z)) for a target region q.

    Because q(w) is exactly subordinate to q, these series exercise the
    subordination checker on functions that approach the target boundary.
    With ``order=None`` the truncation is doubled until the geometric tail
    certificate at ``tail_radius`` passes; near-inner w (boundary sup
    close to 1) pushes the branch point of sqrt(1+w) toward the circle,
    which is why the cap sits well above the generator default.
    """
    from .regions import SqrtLemniscate  # local to avoid cycle

    def build(n: int) -> PowerSeries:
        ws = w.series.pad_to(n)
        if isinstance(region, SqrtLemniscate):
            return (1.0 + ws).sqrt()
        return (1.0 + region.A * ws) / (1.0 + region.B * ws)

    if order is not None:
        return build(order)
    n = 1024
    p = build(n)
    while p.tail_bound(tail_radius) >= tail_tol and n < max_order:
        n = min(2 * n, max_order)
        p = build(n)
    return p


# --- premise-exact solutions ------------------------------------------------

@dataclass(frozen=True)
class PremiseSolution:
    """p with premise(p) = F(w) coefficientwise up to the truncation order."""

    p: PowerSeries
    residual: float
    order: int
    tail_certified: bool


def _premise_rhs(lemma: LemmaId, params: LemmaParams, w: PowerSeries) -> PowerSeries:
    """Series of the premise target composed with w."""
    kind = CATALOG[lemma].premise_kind
    if kind == "sqrt":
        return (1.0 + w).sqrt()
    if kind == "janowski_AB":
        return (1.0 + params.A * w) / (1.0 + params.B * w)
    return (1.0 + params.D * w) / (1.0 + params.E * w)


def _power_update(m: float, c: np.ndarray, u: np.ndarray, n: int) -> complex:
    """u_n of u = p^m given c_1..c_n and u_0..u_{n-1} (Euler's recursion)."""
    j = np.arange(1, n + 1)
    w = (m * j - (n - j)) * c[1 : n + 1]
    return np.dot(w, u[n - 1 :: -1][: n]) / n


def solve_premise_ode(lemma: LemmaId, params: LemmaParams, w: SchwarzFunction,
                      order: int = DEFAULTS.series_order) -> PremiseSolution:
    """Coefficient recursion for the premise-exact p at a fixed order."""
    validate(lemma, params)
    row = CATALOG[lemma]
    beta = params.beta
    m = row.ode_exponent(params)
    ws = w.series.truncate(order) if w.series.order >= order else w.series.pad_to(order)
    F = _premise_rhs(lemma, params, ws).coeffs

    c = np.zeros(order + 1, dtype=complex)
    u = np.zeros(order + 1, dtype=complex)
    c[0] = 1.0
    u[0] = 1.0

    if row.ode_style == "affine":
        S = F.copy()
        S[0] -= 1.0              # zero constant term since F(0) = 1
        for n in range(1, order + 1):
            pivot = beta * n
            if abs(pivot) < 1e-14:
                raise RecursionBreakdown(f"vanishing pivot beta*n at n={n}")
            rhs = np.dot(S[1 : n + 1], u[n - 1 :: -1][: n])
            c[n] = rhs / pivot
            if m != 0.0:
                u[n] = _power_update(m, c, u, n)
    else:
        # p + beta z p'/p^m = F:  (beta n + 1) c_n = F_n + sum_{j=1}^{n-1} G_j u_{n-j}
        G = np.zeros(order + 1, dtype=complex)   # G = F - p
        G[0] = F[0] - 1.0
        for n in range(1, order + 1):
            pivot = beta * n + 1.0
            if abs(pivot) < 1e-14:
                raise RecursionBreakdown(f"vanishing pivot beta*n+1 at n={n}")
            rhs = F[n]
            if n > 1:
                rhs = rhs + np.dot(G[1:n], u[n - 1 : 0 : -1][: n - 1])
            c[n] = rhs / pivot
            G[n] = F[n] - c[n]
            if m != 0.0:
                u[n] = _power_update(m, c, u, n)

    p = PowerSeries(c)
    residual = _premise_residual(lemma, params, p, PowerSeries(F))
    return PremiseSolution(p, residual, order,
                           p.tail_bound(max(DEFAULTS.radii)) < DEFAULTS.tail_tol)


def _premise_residual(lemma: LemmaId, params: LemmaParams,
                      p: PowerSeries, F: PowerSeries) -> float:
    """Max coefficient of (premise functional applied to p) - F."""
    row = CATALOG[lemma]
    m = row.ode_exponent(params)
    ratio = p.zderiv()
    if m != 0.0:
        ratio = ratio / p.power(m)
    lhs = params.beta * ratio + (p if row.ode_style == "convective" else 1.0)
    return (lhs - F).max_abs_coeff()


def solve_premise(lemma: LemmaId, params: LemmaParams, w: SchwarzFunction,
                  order: int | None = None,
                  max_order: int = DEFAULTS.max_series_order) -> PremiseSolution:
    """Adaptive-order solve: double N until residual and tail pass, capped.

    The residual criterion is met immediately by construction; the tail
    certificate at the outermost sampling radius often is not attainable
    within the cap for targets with circle singularities, in which case
    the solution at the cap is returned with ``tail_certified=False``.
    """
    if order is not None:
        sol = solve_premise_ode(lemma, params, w, order)
        if sol.residual > DEFAULTS.residual_tol:
            raise TruncationInsufficient(
                f"premise residual {sol.residual} at order {order}")
        return sol
    n = DEFAULTS.series_order
    sol = solve_premise_ode(lemma, params, w, n)
    while (sol.residual > DEFAULTS.residual_tol or not sol.tail_certified) \
            and n < max_order:
        n = min(2 * n, max_order)
        sol = solve_premise_ode(lemma, params, w, n)
    if sol.residual > DEFAULTS.residual_tol:
        raise TruncationInsufficient(
            f"premise residual {sol.residual} at the order cap {max_order}")
    return sol
