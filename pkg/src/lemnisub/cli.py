"""Command-line front end.

Subcommands:

* ``verify``    one lemma at one parameter point -> verdict + JSON report
* ``threshold`` closed-form and numeric thresholds, sweepable -> CSV
* ``falsify``   seeded premise-exact trial campaigns -> JSON report
* ``plot``      region boundaries and dominant curves -> SVG

Exit codes: 0 on success (``verify``: verdict Verified), 1 when a
verification verdict is negative, 2 on invalid configuration.  Identical
configuration and seed give byte-identical data sections; the worker
pool size is read from the LEMNISUB_WORKERS environment variable and
never affects output order.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from concurrent.futures import ThreadPoolExecutor
import numpy as np

from . import report as report_mod
from . import svg as svg_mod
from .catalog import (
    CATALOG,
    LemmaId,
    LemmaParams,
    ThresholdStatus,
    closed_form_threshold,
    conclusion_region,
    h_minus_one_on_circle,
    premise_region,
    validation_errors,
)
from .config import DEFAULTS, worker_count
from .errors import LemnisubError, NoThresholdInBracket, NonMonotoneMargin
from .generate import monomial, random_schwarz, solve_premise
from .regions import boundary_curve
from .verify import (
    Verdict,
    check_superordination,
    implication_trial,
    numeric_threshold,
)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lemma", required=True, help="catalog id, L1..L11")
    for name in ("A", "B", "D", "E", "k", "beta"):
        p.add_argument(f"--{name}", default=None,
                       help=f"parameter {name} (threshold: comma list sweeps)")
    p.add_argument("--grid", type=int, default=DEFAULTS.margin_grid,
                   help="angular grid size for margin profiles")
    p.add_argument("--radii", default=",".join(str(r) for r in DEFAULTS.radii),
                   help="subordination radius schedule")
    p.add_argument("--order", type=int, default=None,
                   help="series truncation order (default: adaptive, cap 512)")
    p.add_argument("--tol", type=float, default=DEFAULTS.margin_tol,
                   help="margin criterion tolerance")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--json", dest="json_path", default=None, help="JSON output path")
    p.add_argument("--csv", dest="csv_path", default=None, help="CSV output path")
    p.add_argument("--svg", dest="svg_path", default=None, help="SVG output path")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lemnisub",
        description="numerical verification of disk subordination implications")
    sub = top.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("verify", "verify one lemma at one parameter point"),
        ("threshold", "closed-form vs numeric beta thresholds (sweepable)"),
        ("falsify", "premise-exact trial campaign at a chosen beta"),
        ("plot", "emit an SVG figure of regions and the dominant curve"),
    ):
        p = sub.add_parser(name, help=helptext,
                           formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        _add_common(p)
        if name == "falsify":
            p.add_argument("--trials", type=int, default=50,
                           help="number of Schwarz draws")
    return top


def _parse_lemma(value: str, errors: list) -> LemmaId | None:
    try:
        return LemmaId(value)
    except ValueError:
        errors.append(f"unknown lemma id {value!r}; expected L1..L11")
        return None


def _parse_float(name: str, raw, errors: list):
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        errors.append(f"--{name} must be a number, got {raw!r}")
        return None


def _parse_float_list(name: str, raw, errors: list):
    if raw is None:
        return [None]
    out = []
    for piece in str(raw).split(","):
        try:
            out.append(float(piece))
        except ValueError:
            errors.append(f"--{name} must be numbers, got {piece!r}")
    return out or [None]


def _parse_radii(raw: str, errors: list) -> tuple:
    try:
        radii = tuple(float(x) for x in str(raw).split(","))
    except ValueError:
        errors.append(f"--radii must be comma-separated numbers, got {raw!r}")
        return DEFAULTS.radii
    if any(not (0.0 < r < 1.0) for r in radii):
        errors.append("--radii must lie in (0, 1)")
    return radii


def _reject(errors: list) -> int:
    print("invalid configuration:", file=sys.stderr)
    for msg in errors:
        print(f"  - {msg}", file=sys.stderr)
    return 2


def _params_from_args(args, errors: list) -> LemmaParams:
    return LemmaParams(
        A=_parse_float("A", args.A, errors),
        B=_parse_float("B", args.B, errors),
        D=_parse_float("D", args.D, errors),
        E=_parse_float("E", args.E, errors),
        k=_parse_float("k", args.k, errors),
        beta=_parse_float("beta", args.beta, errors),
    )


def _config_echo(args) -> dict:
    keys = ("command", "lemma", "A", "B", "D", "E", "k", "beta", "grid",
            "radii", "order", "tol", "seed", "trials")
    return {k: getattr(args, k) for k in keys if hasattr(args, k)}


# --- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    errors: list = []
    lemma = _parse_lemma(args.lemma, errors)
    params = _params_from_args(args, errors)
    if lemma is not None:
        errors.extend(validation_errors(lemma, params))
    if errors:
        return _reject(errors)

    rep = check_superordination(lemma, params, grid_size=args.grid,
                                margin_tol=args.tol)
    results = {
        "lemma": lemma.value,
        "statement": CATALOG[lemma].statement,
        "feasible": rep.feasible,
        "admissibility": rep.admissibility,
        "notes": list(rep.notes),
    }
    if rep.margin is not None:
        results["margin"] = {
            "min_margin": rep.margin.min_margin,
            "argmin_t": rep.margin.argmin_t,
            "grid_size": args.grid,
            "punctures": list(rep.margin.punctures),
            "den_winding": rep.margin.den_winding,
            "pole_inside": rep.margin.pole_inside,
            "refined": rep.margin.refined,
        }
    doc = report_mod.build_document("verify", _config_echo(args), results,
                                    seed=args.seed, verdict=rep.verdict.value)
    if args.json_path:
        report_mod.write_json(args.json_path, doc)
    print(f"{lemma.value}: {rep.verdict.value}")
    if rep.margin is not None:
        print(f"  min margin  {rep.margin.min_margin:.9g} at t = "
              f"{rep.margin.argmin_t:.9g}")
    for name, value in rep.admissibility.items():
        print(f"  adm {name}  {value:.9g}")
    for note in rep.notes:
        print(f"  note: {note}")
    return 0 if rep.verdict is Verdict.VERIFIED else 1


# --- threshold ---------------------------------------------------------------

def _threshold_row(lemma: LemmaId, combo: dict, grid: int) -> dict:
    params = LemmaParams(**combo)
    row = {"lemma": lemma.value, **combo,
           "beta_star_closed": None, "beta_numeric": None,
           "gap": None, "status": ""}
    closed = closed_form_threshold(lemma, params)
    row["status"] = closed.status.value
    if closed.status is ThresholdStatus.INFEASIBLE:
        return row
    if closed.status is ThresholdStatus.ALWAYS_FEASIBLE:
        return row
    row["beta_star_closed"] = closed.beta_star
    if CATALOG[lemma].margin_criterion:
        try:
            numeric = numeric_threshold(lemma, params, grid_size=min(grid, 2048))
            row["beta_numeric"] = numeric
            row["gap"] = closed.beta_star - numeric
        except (NonMonotoneMargin, NoThresholdInBracket) as exc:
            row["status"] = type(exc).__name__
    return row


def cmd_threshold(args) -> int:
    errors: list = []
    lemma = _parse_lemma(args.lemma, errors)
    axes = {name: _parse_float_list(name, getattr(args, name), errors)
            for name in ("A", "B", "D", "E", "k")}
    if errors:
        return _reject(errors)

    needed = CATALOG[lemma].uses - {"beta"}
    missing = [n for n in sorted(needed) if axes[n] == [None]]
    if missing:
        return _reject([f"{lemma.value} sweep requires --{n}" for n in missing])

    names = ["A", "B", "D", "E", "k"]
    combos = [dict(zip(names, values))
              for values in itertools.product(*(axes[n] for n in names))]
    bad: list = []
    for combo in combos:
        bad.extend(validation_errors(lemma, LemmaParams(**combo),
                                     require_beta=False))
    if bad:
        return _reject(sorted(set(bad)))

    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(
                lambda c: _threshold_row(lemma, c, args.grid), combos))
    else:
        rows = [_threshold_row(lemma, c, args.grid) for c in combos]

    text = report_mod.sweep_rows_to_csv(rows)
    if args.csv_path:
        with open(args.csv_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# --- falsify -----------------------------------------------------------------

def cmd_falsify(args) -> int:
    errors: list = []
    lemma = _parse_lemma(args.lemma, errors)
    params = _params_from_args(args, errors)
    if args.trials < 1:
        errors.append("--trials must be at least 1")
    if lemma is not None:
        errors.extend(validation_errors(lemma, params))
    if errors:
        return _reject(errors)

    radii_errors: list = []
    radii = _parse_radii(args.radii, radii_errors)
    if radii_errors:
        return _reject(radii_errors)

    rng = np.random.default_rng(args.seed)
    draws = [random_schwarz(rng, args.order or DEFAULTS.series_order)
             for _ in range(args.trials)]

    def run(w):
        trial = implication_trial(lemma, params, w, order=args.order,
                                  radii=radii, require_feasible=False)
        return {
            "schwarz": trial.schwarz,
            "order": trial.order,
            "premise_residual": trial.premise_residual,
            "conclusion_margin": trial.conclusion_margin,
            "tail_certified": trial.tail_certified,
        }

    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            trials = list(pool.map(run, draws))
    else:
        trials = [run(w) for w in draws]

    results = {
        "lemma": lemma.value,
        "beta": params.beta,
        "trials": trials,
        "summary": {
            "min_conclusion_margin": min(t["conclusion_margin"] for t in trials),
            "max_premise_residual": max(t["premise_residual"] for t in trials),
            "negative_margins": sum(t["conclusion_margin"] < 0 for t in trials),
        },
        "note": "sampled evidence only; a negative margin refutes nothing "
                "beyond the sampled exhaustion",
    }
    doc = report_mod.build_document("falsify", _config_echo(args), results,
                                    seed=args.seed)
    if args.json_path:
        report_mod.write_json(args.json_path, doc)
    s = results["summary"]
    print(f"{lemma.value} beta={params.beta}: {args.trials} trials, "
          f"min margin {s['min_conclusion_margin']:.3e}, "
          f"max residual {s['max_premise_residual']:.3e}")
    return 0


# --- plot --------------------------------------------------------------------

def cmd_plot(args) -> int:
    errors: list = []
    lemma = _parse_lemma(args.lemma, errors)
    params = _params_from_args(args, errors)
    if lemma is not None:
        errors.extend(validation_errors(lemma, params))
    if args.svg_path is None:
        errors.append("plot requires --svg <path>")
    if errors:
        return _reject(errors)

    t = np.linspace(-np.pi, np.pi, 1024, endpoint=False)
    fig = svg_mod.Figure(f"{lemma.value}: {CATALOG[lemma].statement}")
    fig.add_curve("conclusion boundary",
                  boundary_curve(conclusion_region(lemma, params)), closed=False)
    fig.add_curve("premise boundary",
                  boundary_curve(premise_region(lemma, params)), closed=False)
    if CATALOG[lemma].margin_criterion:
        from .catalog import singular_angles
        keep = np.ones(t.shape, dtype=bool)
        for s in singular_angles(lemma, params):
            keep &= np.abs(np.abs(t) - abs(s)) > 1e-3
        fig.add_curve("h(e^{it})",
                      1.0 + h_minus_one_on_circle(lemma, params, t[keep]))
    else:
        sol = solve_premise(lemma, params, monomial(1, DEFAULTS.series_order),
                            order=args.order)
        fig.add_curve("p(0.999 e^{it})", sol.p.eval(0.999 * np.exp(1j * t)))
    fig.write(args.svg_path)
    print(f"wrote {args.svg_path}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"verify": cmd_verify, "threshold": cmd_threshold,
                "falsify": cmd_falsify, "plot": cmd_plot}
    try:
        return handlers[args.command](args)
    except LemnisubError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
