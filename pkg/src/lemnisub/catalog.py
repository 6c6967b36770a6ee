"""The catalog of eleven differential-subordination implications.

Each entry states an implication of the form

    premise(p)  subordinate to  premise target   =>   p subordinate to  conclusion target

together with the closed-form condition on beta under which it holds.
The table below fixes the notation used across the package; kappa
abbreviates (k+1)/2.

    id   premise functional        premise target      conclusion target
    L1   1 + b z p'/p^k            (1+Az)/(1+Bz)       sqrt(1+z)      (-1<k<=3, -1<B<A<=1)
    L2   1 + b z p'                sqrt(1+z)           (1+Az)/(1+Bz)
    L3   1 + b z p'/p              sqrt(1+z)           (1+Az)/(1+Bz)
    L4   1 + b z p'/p^2            sqrt(1+z)           (1+Az)/(1+Bz)
    L5   p + b z p'                sqrt(1+z)           sqrt(1+z)      (b>0)
    L6   p + b z p'/p              sqrt(1+z)           sqrt(1+z)      (b>0)
    L7   p + b z p'/p^2            sqrt(1+z)           sqrt(1+z)      (b>0)
    L8   p + b z p'/p              sqrt(1+z)           (1+Az)/(1+Bz)  (b>0, two conditions)
    L9   1 + b z p'                (1+Dz)/(1+Ez)       (1+Az)/(1+Bz)
    L10  1 + b z p'/p              (1+Dz)/(1+Ez)       (1+Az)/(1+Bz)
    L11  1 + b z p'/p^2            (1+Dz)/(1+Ez)       (1+Az)/(1+Bz)

For every entry, h denotes the dominant curve of the superordination
step (the premise functional evaluated on the conclusion target q) and
Q its derivative piece:

    L1   h = 1 + b z / (2 (1+z)^kappa)                 Q = h - 1
    L2,L9   h = 1 + b (A-B) z / (1+Bz)^2               Q = h - 1
    L3,L10  h = 1 + b (A-B) z / ((1+Az)(1+Bz))         Q = h - 1
    L4,L11  h = 1 + b (A-B) z / (1+Az)^2               Q = h - 1
    L5   h = sqrt(1+z) + b z / (2 sqrt(1+z))           Q = h - q
    L6   h = sqrt(1+z) + b z / (2 (1+z))               Q = h - q
    L7   h = sqrt(1+z) + b z / (2 (1+z)^{3/2})         Q = h - q
    L8   h = (1+Az)/(1+Bz) + b (A-B) z / ((1+Az)(1+Bz))  Q = h - q

Closed-form beta thresholds (minimal beta > 0 satisfying the stated
hypothesis inequality, transcribed verbatim):

    L1   |b| >= 2^{(k+3)/2} (A-B) + |B b|
    L2   (A-B) b >= sqrt(2) (1+|B|)^2 + (1-B)^2
    L3   (A-B) b >= (sqrt(2)-1) (1+|A|)(1+|B|)
    L4   (A-B) b >= (sqrt(2)-1) (1+|A|)^2 + (1-A)^2
    L5-L7  any b > 0
    L8   (A-B) b >= sqrt(2)(1+|A|)(1+|B|) + |A|^2 - 1   and
         1/b >= max(0, (A-B)/((1+|A|)(1+|B|)) - (1-|B|)/(1+|B|))
    L9   b(A-B) >= (D-E)(1+B^2)  + |2B(D-E)  - E b (A-B)|
    L10  b(A-B) >= (D-E)(1+|AB|) + |(A+B)(D-E) - E b (A-B)|
    L11  |b|(A-B) >= (D-E)(1+A^2) + |2A(D-E) - E b (A-B)|

The implicit inequalities (L1 through |B b|, L9-L11 through the
|c - E x| term, L8 through its cap) are resolved exactly by
piecewise-linear analysis; a monotone bisection oracle cross-checks the
solve in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .config import DEFAULTS
from .errors import InvalidParameters, SingularPoint
from .regions import Janowski, SqrtLemniscate, TargetRegion

SQRT2 = math.sqrt(2.0)

_OPEN_BOUND_TOL = 1e-9   # open interval ends are enforced with this slack
_SING_TOL = 1e-13


class LemmaId(str, Enum):
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L5 = "L5"
    L6 = "L6"
    L7 = "L7"
    L8 = "L8"
    L9 = "L9"
    L10 = "L10"
    L11 = "L11"


STATEMENTS = {
    LemmaId.L1: "1 + b*z*p'/p^k < (1+Az)/(1+Bz)  =>  p < sqrt(1+z)",
    LemmaId.L2: "1 + b*z*p' < sqrt(1+z)  =>  p < (1+Az)/(1+Bz)",
    LemmaId.L3: "1 + b*z*p'/p < sqrt(1+z)  =>  p < (1+Az)/(1+Bz)",
    LemmaId.L4: "1 + b*z*p'/p^2 < sqrt(1+z)  =>  p < (1+Az)/(1+Bz)",
    LemmaId.L5: "p + b*z*p' < sqrt(1+z)  =>  p < sqrt(1+z)",
    LemmaId.L6: "p + b*z*p'/p < sqrt(1+z)  =>  p < sqrt(1+z)",
    LemmaId.L7: "p + b*z*p'/p^2 < sqrt(1+z)  =>  p < sqrt(1+z)",
    LemmaId.L8: "p + b*z*p'/p < sqrt(1+z)  =>  p < (1+Az)/(1+Bz)",
    LemmaId.L9: "1 + b*z*p' < (1+Dz)/(1+Ez)  =>  p < (1+Az)/(1+Bz)",
    LemmaId.L10: "1 + b*z*p'/p < (1+Dz)/(1+Ez)  =>  p < (1+Az)/(1+Bz)",
    LemmaId.L11: "1 + b*z*p'/p^2 < (1+Dz)/(1+Ez)  =>  p < (1+Az)/(1+Bz)",
}


@dataclass(frozen=True)
class LemmaParams:
    """Parameter bundle; each field is used only where the lemma requires it."""

    A: Optional[float] = None
    B: Optional[float] = None
    D: Optional[float] = None
    E: Optional[float] = None
    k: Optional[float] = None
    beta: Optional[float] = None

    def with_beta(self, beta: float) -> "LemmaParams":
        return replace(self, beta=beta)


class ThresholdStatus(Enum):
    FEASIBLE = "Feasible"
    ALWAYS_FEASIBLE = "AlwaysFeasible"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class ThresholdResult:
    status: ThresholdStatus
    beta_star: Optional[float]
    binding_constraint: str


class AdmissibilityQuantity(str, Enum):
    RE_ZQP_OVER_Q = "ReZQprimeOverQ"   # starlikeness of Q
    RE_ZHP_OVER_Q = "ReZHprimeOverQ"   # second Miller-Mocanu condition
    RE_PHI_OF_Q = "RePhiOfQ"           # positivity of phi on q(D)


@dataclass(frozen=True)
class CatalogRow:
    lemma: LemmaId
    statement: str
    uses: frozenset
    margin_criterion: bool
    premise_kind: str        # "sqrt" | "janowski_AB" | "janowski_DE"
    conclusion_kind: str     # "sqrt" | "janowski_AB"
    ode_style: str           # "affine" (1 + b z p'/p^m) | "convective" (p + b z p'/p^m)
    ode_exponent: Callable[[LemmaParams], float]
    verdict_quantities: tuple


def _exp_k(p: LemmaParams) -> float:
    return float(p.k)


_ZQ = AdmissibilityQuantity.RE_ZQP_OVER_Q
_ZH = AdmissibilityQuantity.RE_ZHP_OVER_Q
_PHI = AdmissibilityQuantity.RE_PHI_OF_Q

CATALOG = {
    LemmaId.L1: CatalogRow(LemmaId.L1, STATEMENTS[LemmaId.L1],
                           frozenset("ABk") | {"beta"}, True,
                           "janowski_AB", "sqrt", "affine", _exp_k, (_ZQ,)),
    LemmaId.L2: CatalogRow(LemmaId.L2, STATEMENTS[LemmaId.L2],
                           frozenset("AB") | {"beta"}, True,
                           "sqrt", "janowski_AB", "affine", lambda p: 0.0, (_ZQ,)),
    LemmaId.L3: CatalogRow(LemmaId.L3, STATEMENTS[LemmaId.L3],
                           frozenset("AB") | {"beta"}, True,
                           "sqrt", "janowski_AB", "affine", lambda p: 1.0, (_ZQ,)),
    LemmaId.L4: CatalogRow(LemmaId.L4, STATEMENTS[LemmaId.L4],
                           frozenset("AB") | {"beta"}, True,
                           "sqrt", "janowski_AB", "affine", lambda p: 2.0, (_ZQ,)),
    LemmaId.L5: CatalogRow(LemmaId.L5, STATEMENTS[LemmaId.L5],
                           frozenset({"beta"}), False,
                           "sqrt", "sqrt", "convective", lambda p: 0.0, (_ZQ, _PHI)),
    LemmaId.L6: CatalogRow(LemmaId.L6, STATEMENTS[LemmaId.L6],
                           frozenset({"beta"}), False,
                           "sqrt", "sqrt", "convective", lambda p: 1.0, (_ZQ, _PHI)),
    LemmaId.L7: CatalogRow(LemmaId.L7, STATEMENTS[LemmaId.L7],
                           frozenset({"beta"}), False,
                           "sqrt", "sqrt", "convective", lambda p: 2.0, (_ZQ, _PHI)),
    LemmaId.L8: CatalogRow(LemmaId.L8, STATEMENTS[LemmaId.L8],
                           frozenset("AB") | {"beta"}, True,
                           "sqrt", "janowski_AB", "convective", lambda p: 1.0, (_ZQ, _ZH)),
    LemmaId.L9: CatalogRow(LemmaId.L9, STATEMENTS[LemmaId.L9],
                           frozenset("ABDE") | {"beta"}, True,
                           "janowski_DE", "janowski_AB", "affine", lambda p: 0.0, (_ZQ,)),
    LemmaId.L10: CatalogRow(LemmaId.L10, STATEMENTS[LemmaId.L10],
                            frozenset("ABDE") | {"beta"}, True,
                            "janowski_DE", "janowski_AB", "affine", lambda p: 1.0, (_ZQ,)),
    LemmaId.L11: CatalogRow(LemmaId.L11, STATEMENTS[LemmaId.L11],
                            frozenset("ABDE") | {"beta"}, True,
                            "janowski_DE", "janowski_AB", "affine", lambda p: 2.0, (_ZQ,)),
}


# --- validation ---

def validation_errors(lemma: LemmaId, params: LemmaParams,
                      require_beta: bool = True) -> list:
    """All domain violations at once; empty list means valid."""
    row = CATALOG[lemma]
    errs = []
    need = set(row.uses)
    if not require_beta:
        need.discard("beta")
    for name in sorted(need):
        if getattr(params, name) is None:
            errs.append(f"{lemma.value} requires parameter {name}")
    if errs:
        return errs

    A, B, D, E, k, beta = (params.A, params.B, params.D, params.E,
                           params.k, params.beta)
    if "A" in row.uses:
        if lemma is LemmaId.L1:
            # strict lower bound on B, enforced with the open-interval slack
            if not (B > -1.0 + _OPEN_BOUND_TOL):
                errs.append(f"L1 needs -1 < B, got B={B}")
            if not (B < A <= 1.0):
                errs.append(f"L1 needs B < A <= 1, got A={A}, B={B}")
        else:
            if not (-1.0 <= B < A <= 1.0):
                errs.append(f"{lemma.value} needs -1 <= B < A <= 1, got A={A}, B={B}")
    if "D" in row.uses:
        if not (-1.0 <= E < D <= 1.0):
            errs.append(f"{lemma.value} needs -1 <= E < D <= 1, got D={D}, E={E}")
    if "k" in row.uses:
        if not (-1.0 + _OPEN_BOUND_TOL < k <= 3.0):
            errs.append(f"L1 needs -1 < k <= 3, got k={k}")
    if require_beta and beta is not None:
        if lemma in (LemmaId.L5, LemmaId.L6, LemmaId.L7, LemmaId.L8):
            if not beta > 0.0:
                errs.append(f"{lemma.value} needs beta > 0, got beta={beta}")
        elif lemma in (LemmaId.L9, LemmaId.L10, LemmaId.L11):
            if beta == 0.0:
                errs.append(f"{lemma.value} needs beta != 0")
        elif beta == 0.0:
            errs.append(f"{lemma.value} needs beta != 0")
    return errs


def validate(lemma: LemmaId, params: LemmaParams, require_beta: bool = True) -> None:
    errs = validation_errors(lemma, params, require_beta)
    if errs:
        raise InvalidParameters(errs)


# --- regions ---

def premise_region(lemma: LemmaId, params: LemmaParams) -> TargetRegion:
    kind = CATALOG[lemma].premise_kind
    if kind == "sqrt":
        return SqrtLemniscate()
    if kind == "janowski_AB":
        return Janowski(params.A, params.B)
    return Janowski(params.D, params.E)


def conclusion_region(lemma: LemmaId, params: LemmaParams) -> TargetRegion:
    if CATALOG[lemma].conclusion_kind == "sqrt":
        return SqrtLemniscate()
    return Janowski(params.A, params.B)


# --- closed-form thresholds ---

def _solve_linear_abs(P: float, c: float, E: float) -> Optional[float]:
    """Minimal x > 0 with x - |c - E*x| >= P, or None when none exists.

    g(x) = x - |c - E*x| is continuous, piecewise linear and nondecreasing
    for |E| <= 1, so the minimal solution is the smallest root of g = P.
    """
    def g(x: float) -> float:
        return x - abs(c - E * x)

    candidates = []
    if 1.0 + E != 0.0:
        candidates.append((P + c) / (1.0 + E))
    if 1.0 - E != 0.0:
        candidates.append((P - c) / (1.0 - E))
    if E != 0.0:
        candidates.append(c / E)          # kink of |c - E*x|
    best = None
    for x in candidates:
        if x > 0.0 and g(x) >= P - 1e-12 * max(1.0, abs(P)):
            if best is None or x < best:
                best = x
    return best


def closed_form_threshold(lemma: LemmaId, params: LemmaParams) -> ThresholdResult:
    """Minimal beta > 0 satisfying the lemma's hypothesis inequality.

    Entries stated through |beta| (L1, L11) are symmetric in the sign of
    beta; thresholds are reported for beta > 0 throughout.
    """
    validate(lemma, params, require_beta=False)
    A, B, D, E, k = params.A, params.B, params.D, params.E, params.k

    if lemma is LemmaId.L1:
        # beta (1 - |B|) >= 2^{(k+3)/2} (A - B); -1 < B < 1 on the valid domain
        rhs = 2.0 ** ((k + 3.0) / 2.0) * (A - B)
        denom = 1.0 - abs(B)
        if denom <= _OPEN_BOUND_TOL:
            return ThresholdResult(ThresholdStatus.INFEASIBLE, None,
                                   "|B| = 1 leaves no room for the |B*beta| term")
        return ThresholdResult(ThresholdStatus.FEASIBLE, rhs / denom,
                               "beta*(1-|B|) = 2^((k+3)/2)*(A-B)")

    if lemma is LemmaId.L2:
        beta = (SQRT2 * (1.0 + abs(B)) ** 2 + (1.0 - B) ** 2) / (A - B)
        return ThresholdResult(ThresholdStatus.FEASIBLE, beta,
                               "(A-B)*beta = sqrt(2)*(1+|B|)^2 + (1-B)^2")

    if lemma is LemmaId.L3:
        beta = (SQRT2 - 1.0) * (1.0 + abs(A)) * (1.0 + abs(B)) / (A - B)
        return ThresholdResult(ThresholdStatus.FEASIBLE, beta,
                               "(A-B)*beta = (sqrt(2)-1)*(1+|A|)*(1+|B|)")

    if lemma is LemmaId.L4:
        beta = ((SQRT2 - 1.0) * (1.0 + abs(A)) ** 2 + (1.0 - A) ** 2) / (A - B)
        return ThresholdResult(ThresholdStatus.FEASIBLE, beta,
                               "(A-B)*beta = (sqrt(2)-1)*(1+|A|)^2 + (1-A)^2")

    if lemma in (LemmaId.L5, LemmaId.L6, LemmaId.L7):
        return ThresholdResult(ThresholdStatus.ALWAYS_FEASIBLE, None, "any beta > 0")

    if lemma is LemmaId.L8:
        c1 = (SQRT2 * (1.0 + abs(A)) * (1.0 + abs(B)) + abs(A) ** 2 - 1.0) / (A - B)
        cap_rate = max(0.0, (A - B) / ((1.0 + abs(A)) * (1.0 + abs(B)))
                       - (1.0 - abs(B)) / (1.0 + abs(B)))
        if cap_rate > 0.0 and c1 > 1.0 / cap_rate:
            return ThresholdResult(
                ThresholdStatus.INFEASIBLE, None,
                f"condition 1 needs beta >= {c1:.6g} but condition 2 caps "
                f"beta <= {1.0 / cap_rate:.6g}")
        return ThresholdResult(ThresholdStatus.FEASIBLE, c1,
                               "(A-B)*beta = sqrt(2)*(1+|A|)*(1+|B|) + |A|^2 - 1")

    # L9-L11: x - |c - E*x| >= P with x = beta*(A-B)
    P, c = _affine_bound_terms(lemma, params)
    x = _solve_linear_abs(P, c, E)
    if x is None:
        return ThresholdResult(ThresholdStatus.INFEASIBLE, None,
                               f"x - |{c:.6g} - E*x| >= {P:.6g} has no solution")
    return ThresholdResult(
        ThresholdStatus.FEASIBLE, x / (A - B),
        f"beta*(A-B) - |{c:.6g} - E*beta*(A-B)| = {P:.6g}")


def _affine_bound_terms(lemma: LemmaId, params: LemmaParams):
    """Constant and kink terms of the L9-L11 hypothesis inequalities."""
    A, B, D, E = params.A, params.B, params.D, params.E
    if lemma is LemmaId.L9:
        return (D - E) * (1.0 + B * B), 2.0 * B * (D - E)
    if lemma is LemmaId.L10:
        return (D - E) * (1.0 + abs(A * B)), (A + B) * (D - E)
    if lemma is LemmaId.L11:
        return (D - E) * (1.0 + A * A), 2.0 * A * (D - E)
    raise ValueError(f"{lemma} has no affine bound terms")


def feasibility_check(lemma: LemmaId, params: LemmaParams) -> bool:
    """Verbatim evaluation of the lemma's hypothesis inequality at the given beta.

    Comparisons carry a small relative slack so that beta exactly at the
    closed-form threshold tests as feasible despite rounding.
    """
    validate(lemma, params)
    A, B, D, E, k, beta = (params.A, params.B, params.D, params.E,
                           params.k, params.beta)
    slack = DEFAULTS.feasibility_slack

    def ge(lhs: float, rhs: float) -> bool:
        return lhs >= rhs - slack * max(1.0, abs(rhs))

    if lemma is LemmaId.L1:
        return ge(abs(beta), 2.0 ** ((k + 3.0) / 2.0) * (A - B) + abs(B * beta))
    if lemma is LemmaId.L2:
        return ge((A - B) * beta, SQRT2 * (1.0 + abs(B)) ** 2 + (1.0 - B) ** 2)
    if lemma is LemmaId.L3:
        return ge((A - B) * beta, (SQRT2 - 1.0) * (1.0 + abs(A)) * (1.0 + abs(B)))
    if lemma is LemmaId.L4:
        return ge((A - B) * beta, (SQRT2 - 1.0) * (1.0 + abs(A)) ** 2 + (1.0 - A) ** 2)
    if lemma in (LemmaId.L5, LemmaId.L6, LemmaId.L7):
        return beta > 0.0
    if lemma is LemmaId.L8:
        cond1 = ge((A - B) * beta,
                   SQRT2 * (1.0 + abs(A)) * (1.0 + abs(B)) + abs(A) ** 2 - 1.0)
        cap = max(0.0, (A - B) / ((1.0 + abs(A)) * (1.0 + abs(B)))
                  - (1.0 - abs(B)) / (1.0 + abs(B)))
        cond2 = ge(1.0 / beta, cap)
        return cond1 and cond2
    P, c = _affine_bound_terms(lemma, params)
    x = (abs(beta) if lemma is LemmaId.L11 else beta) * (A - B)
    return ge(x, P + abs(c - E * beta * (A - B)))


# --- dominant curves: h, Q and friends ---

def _kappa(params: LemmaParams) -> float:
    return (params.k + 1.0) / 2.0


def premise_h_eval(lemma: LemmaId, params: LemmaParams, z: complex) -> complex:
    """The dominant curve h at a point z of the closed disk."""
    validate(lemma, params)
    return complex(1.0 + h_minus_one_at(lemma, params, complex(z)))


def _checked_sqrt_1p(z):
    z = np.asarray(z, dtype=complex)
    v = 1.0 + z
    if np.any(np.abs(v) < _SING_TOL):
        raise SingularPoint("branch point of sqrt(1+z) at z = -1")
    return np.sqrt(v)


def _checked_factor(c: float, z):
    v = 1.0 + c * np.asarray(z, dtype=complex)
    if np.any(np.abs(v) < _SING_TOL):
        raise SingularPoint(f"pole of 1 + {c}*z on the evaluation set")
    return v


def _sqrt_Q(lemma: LemmaId, params: LemmaParams, z, s):
    beta = params.beta
    if lemma is LemmaId.L5:
        return beta * z / (2.0 * s)
    if lemma is LemmaId.L6:
        return beta * z / (2.0 * (1.0 + z))
    return beta * z / (2.0 * (1.0 + z) * s)   # L7


def h_minus_one_at(lemma: LemmaId, params: LemmaParams, z):
    """h(z) - 1, vectorised over arbitrary points of the closed disk."""
    z = np.asarray(z, dtype=complex)
    A, B, beta = params.A, params.B, params.beta
    if lemma is LemmaId.L1:
        v = 1.0 + z
        if np.any(np.abs(v) < _SING_TOL):
            raise SingularPoint("branch point at z = -1")
        return 0.5 * beta * z * np.exp(-_kappa(params) * np.log(v))
    if lemma in (LemmaId.L2, LemmaId.L9):
        return beta * (A - B) * z / _checked_factor(B, z) ** 2
    if lemma in (LemmaId.L3, LemmaId.L10):
        return beta * (A - B) * z / (_checked_factor(A, z) * _checked_factor(B, z))
    if lemma in (LemmaId.L4, LemmaId.L11):
        return beta * (A - B) * z / _checked_factor(A, z) ** 2
    if lemma is LemmaId.L8:
        return (A - B) * z * (1.0 + beta + A * z) / (
            _checked_factor(A, z) * _checked_factor(B, z))
    # L5-L7
    s = _checked_sqrt_1p(z)
    return (s - 1.0) + _sqrt_Q(lemma, params, z, s)


def dominant_Q_at(lemma: LemmaId, params: LemmaParams, z):
    """Q(z) = z q'(z) phi(q(z)), vectorised; Q = h - 1 except for L5-L8."""
    z = np.asarray(z, dtype=complex)
    if lemma in (LemmaId.L5, LemmaId.L6, LemmaId.L7):
        return _sqrt_Q(lemma, params, z, _checked_sqrt_1p(z))
    if lemma is LemmaId.L8:
        A, B = params.A, params.B
        return params.beta * (A - B) * z / (
            _checked_factor(A, z) * _checked_factor(B, z))
    return h_minus_one_at(lemma, params, z)


def dominant_Q_eval(lemma: LemmaId, params: LemmaParams, z: complex) -> complex:
    """Scalar Q(z) with parameter validation."""
    validate(lemma, params)
    return complex(dominant_Q_at(lemma, params, complex(z)))


# --- stable boundary evaluation -------------------------------------------
#
# On |z| = 1 the factors 1 + z and 1 - z are formed through half-angle
# products (never by adding nearly-opposite numbers), so real parts that
# are exactly constant along the circle come out exact to rounding.

def _one_plus_z_circle(t: np.ndarray) -> np.ndarray:
    return 2.0 * np.cos(t / 2.0) * np.exp(0.5j * t)


def _one_minus_z_circle(t: np.ndarray) -> np.ndarray:
    return -2.0j * np.sin(t / 2.0) * np.exp(0.5j * t)


def _factor_circle(c: float, t: np.ndarray, r: float = 1.0) -> np.ndarray:
    """1 + c*z on |z| = r, in the stable form when |c| = r = 1."""
    if r == 1.0 and c == 1.0:
        return _one_plus_z_circle(t)
    if r == 1.0 and c == -1.0:
        return _one_minus_z_circle(t)
    return 1.0 + c * r * np.exp(1j * t)


def _pow_one_plus_z_circle(t: np.ndarray, a: float) -> np.ndarray:
    """(1+z)^a on the unit circle, principal branch, stable at all |t| < pi."""
    return (2.0 * np.cos(t / 2.0)) ** a * np.exp(1j * a * t / 2.0)


def _sqrt_one_plus_z_circle(t: np.ndarray) -> np.ndarray:
    return np.sqrt(2.0 * np.cos(t / 2.0)) * np.exp(0.25j * t)


def h_minus_one_on_circle(lemma: LemmaId, params: LemmaParams,
                          t: np.ndarray) -> np.ndarray:
    """h(e^{it}) - 1, vectorised and numerically stable near singular angles."""
    A, B, beta = params.A, params.B, params.beta
    z = np.exp(1j * t)
    if lemma is LemmaId.L1:
        return 0.5 * beta * z * _pow_one_plus_z_circle(t, -_kappa(params))
    if lemma in (LemmaId.L2, LemmaId.L9):
        return beta * (A - B) * z / _factor_circle(B, t) ** 2
    if lemma in (LemmaId.L3, LemmaId.L10):
        return beta * (A - B) * z / (_factor_circle(A, t) * _factor_circle(B, t))
    if lemma in (LemmaId.L4, LemmaId.L11):
        return beta * (A - B) * z / _factor_circle(A, t) ** 2
    if lemma is LemmaId.L8:
        return (A - B) * z * (1.0 + beta + A * z) / (
            _factor_circle(A, t) * _factor_circle(B, t))
    s = _sqrt_one_plus_z_circle(t)
    if lemma is LemmaId.L5:
        return (s - 1.0) + beta * z / (2.0 * s)
    if lemma is LemmaId.L6:
        return (s - 1.0) + beta * z / (2.0 * _one_plus_z_circle(t))
    return (s - 1.0) + beta * z / (2.0 * _one_plus_z_circle(t) * s)  # L7


def dominant_Q_on_circle(lemma: LemmaId, params: LemmaParams,
                         t: np.ndarray, r: float = 1.0) -> np.ndarray:
    """Q on |z| = r, through the stable circle forms when r = 1."""
    if r != 1.0:
        return dominant_Q_at(lemma, params, r * np.exp(1j * t))
    z = np.exp(1j * t)
    beta = params.beta
    if lemma is LemmaId.L5:
        return beta * z / (2.0 * _sqrt_one_plus_z_circle(t))
    if lemma is LemmaId.L6:
        return beta * z / (2.0 * _one_plus_z_circle(t))
    if lemma is LemmaId.L7:
        return beta * z / (2.0 * _one_plus_z_circle(t) * _sqrt_one_plus_z_circle(t))
    if lemma is LemmaId.L8:
        A, B = params.A, params.B
        return beta * (A - B) * z / (_factor_circle(A, t) * _factor_circle(B, t))
    return h_minus_one_on_circle(lemma, params, t)


def margin_on_circle(lemma: LemmaId, params: LemmaParams,
                     t: np.ndarray) -> np.ndarray:
    """|inverse(h(e^{it}))| through the premise region's inverse map."""
    hm1 = h_minus_one_on_circle(lemma, params, t)
    kind = CATALOG[lemma].premise_kind
    if kind == "sqrt":
        # |h^2 - 1| = |h - 1| * |h + 1|
        return np.abs(hm1) * np.abs(2.0 + hm1)
    if kind == "janowski_AB":
        X, Y = params.A, params.B
    else:
        X, Y = params.D, params.E
    with np.errstate(divide="ignore"):
        return np.abs(hm1) / np.abs((X - Y) - Y * hm1)


def singular_angles(lemma: LemmaId, params: LemmaParams) -> tuple:
    """Angles t where h has a pole or branch point on the unit circle."""
    out = []
    if lemma in (LemmaId.L1, LemmaId.L5, LemmaId.L6, LemmaId.L7):
        out.append(math.pi)     # branch point of (1+z)^a at z = -1
    if lemma in (LemmaId.L3, LemmaId.L4, LemmaId.L8, LemmaId.L10, LemmaId.L11):
        if params.A == 1.0:
            out.append(math.pi)
    if lemma in (LemmaId.L2, LemmaId.L3, LemmaId.L8, LemmaId.L9, LemmaId.L10):
        if params.B == -1.0:
            out.append(0.0)
    return tuple(sorted(set(out)))


# --- admissibility quantities ---------------------------------------------

def _w1_circle(t: np.ndarray, r: float) -> np.ndarray:
    """z/(1+z) on |z| = r; exactly Re = 1/2 on the unit circle."""
    if r == 1.0:
        return 0.5 + 0.5j * np.tan(t / 2.0)
    z = r * np.exp(1j * t)
    return z / (1.0 + z)


def _mobius_ratio_circle(c: float, t: np.ndarray, r: float) -> np.ndarray:
    """(1 - c*z)/(1 + c*z) on |z| = r, stable at c = -1, r = 1."""
    if r == 1.0 and c == -1.0:
        return 1.0j / np.tan(t / 2.0)         # (1+z)/(1-z) = i cot(t/2)
    if r == 1.0 and c == 1.0:
        return -1.0j * np.tan(t / 2.0)        # (1-z)/(1+z) = -i tan(t/2)
    z = r * np.exp(1j * t)
    return (1.0 - c * z) / (1.0 + c * z)


def zqprime_over_q_circle(lemma: LemmaId, params: LemmaParams,
                          t: np.ndarray, r: float) -> np.ndarray:
    """z Q'(z)/Q(z) on |z| = r from the closed forms of the catalog."""
    if lemma is LemmaId.L1:
        return 1.0 - _kappa(params) * _w1_circle(t, r)
    if lemma is LemmaId.L5:
        return 1.0 - 0.5 * _w1_circle(t, r)
    if lemma is LemmaId.L6:
        return 1.0 - _w1_circle(t, r)
    if lemma is LemmaId.L7:
        return 1.0 - 1.5 * _w1_circle(t, r)
    A, B = params.A, params.B
    if lemma in (LemmaId.L2, LemmaId.L9):
        return _mobius_ratio_circle(B, t, r)
    if lemma in (LemmaId.L4, LemmaId.L11):
        return _mobius_ratio_circle(A, t, r)
    # L3, L10, L8: (1 - A*B*z^2)/((1+Az)(1+Bz))
    z = r * np.exp(1j * t)
    return (1.0 - A * B * z * z) / (_factor_circle(A, t, r) * _factor_circle(B, t, r))


def zhprime_over_q_circle(lemma: LemmaId, params: LemmaParams,
                          t: np.ndarray, r: float) -> np.ndarray:
    """z h'(z)/Q(z); equals z Q'/Q plus z q'/Q = 1/phi(q) when h = q + Q."""
    base = zqprime_over_q_circle(lemma, params, t, r)
    beta = params.beta
    if lemma is LemmaId.L5:
        return 1.0 / beta + base
    if lemma is LemmaId.L6:
        return _sqrt_q_circle(t, r) / beta + base
    if lemma is LemmaId.L7:
        return _one_plus_z_r(t, r) / beta + base
    if lemma is LemmaId.L8:
        q = _factor_circle(params.A, t, r) / _factor_circle(params.B, t, r)
        return q / beta + base
    return base   # h = 1 + Q


def phi_of_q_circle(lemma: LemmaId, params: LemmaParams,
                    t: np.ndarray, r: float) -> np.ndarray:
    """phi(q(z)) on |z| = r, where phi is the lemma's multiplier function."""
    beta = params.beta
    if lemma in (LemmaId.L2, LemmaId.L5, LemmaId.L9):
        return np.full_like(t, beta, dtype=complex)
    if lemma is LemmaId.L1:
        return beta * _pow_one_plus_z_circle(t, -params.k / 2.0) if r == 1.0 \
            else beta * np.exp(-params.k / 2.0 * np.log(_one_plus_z_r(t, r)))
    if lemma is LemmaId.L6:
        return beta / _sqrt_q_circle(t, r)
    if lemma is LemmaId.L7:
        return beta / _one_plus_z_r(t, r)
    A, B = params.A, params.B
    ratio = _factor_circle(B, t, r) / _factor_circle(A, t, r)
    if lemma in (LemmaId.L3, LemmaId.L8, LemmaId.L10):
        return beta * ratio
    return beta * ratio * ratio   # L4, L11


def _one_plus_z_r(t: np.ndarray, r: float) -> np.ndarray:
    return _one_plus_z_circle(t) if r == 1.0 else 1.0 + r * np.exp(1j * t)


def _sqrt_q_circle(t: np.ndarray, r: float) -> np.ndarray:
    if r == 1.0:
        return _sqrt_one_plus_z_circle(t)
    return np.sqrt(1.0 + r * np.exp(1j * t))


ADMISSIBILITY_EVALUATORS = {
    AdmissibilityQuantity.RE_ZQP_OVER_Q: zqprime_over_q_circle,
    AdmissibilityQuantity.RE_ZHP_OVER_Q: zhprime_over_q_circle,
    AdmissibilityQuantity.RE_PHI_OF_Q: phi_of_q_circle,
}


def lower_bound_g(lemma: LemmaId, params: LemmaParams, t: np.ndarray) -> np.ndarray:
    """The explicit lower-bound function for the L1 boundary margin.

    g(t) = |beta| / (2 (A-B) (2 cos(t/2))^{(k+1)/2} + |B beta|); its
    minimum over t sits at t = 0 for the whole parameter range.
    """
    if lemma is not LemmaId.L1:
        raise ValueError("the closed-form lower bound is catalogued for L1 only")
    A, B, beta = params.A, params.B, params.beta
    c = (2.0 * np.cos(t / 2.0)) ** _kappa(params)
    return abs(beta) / (2.0 * (A - B) * c + abs(B * beta))
