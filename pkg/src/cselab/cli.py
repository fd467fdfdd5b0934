"""Batch command line interface.

Subcommands: exponent, lct, polygon, sweep, bound, counterexample, probe.
Exit codes: 0 when verdicts match the theorem expectations, 2 when a
holomorphic input produces a violated (or failed-stability) verdict, 1 on
usage errors.  The environment variable CSE_LAB_PRECISION (double or
extended) selects the quadrature arithmetic.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from fractions import Fraction

from . import newton
from .counterexamples import counterexample_record, verify_violation
from .degeneration import (
    builtin_catalog,
    fiber_zeros,
    lct_from_resolution,
    load_catalog,
    semicontinuity_check,
)
from .expressions import ExpressionError, format_function, parse_expression
from .polynomials import BivariatePoly, IdenticallyZeroError, MixedFunction, as_mixed
from .quadrature import (
    QuadratureConfig,
    convergence_sweep,
    decompose_I,
    exponent_probe_1d,
    fiber_integral_K,
    uniform_bound_check,
    young_combine,
)
from .counterexamples import holder_probe
from .reports import emit_report, render_json, to_jsonable
from . import reports


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _quad_config(ns) -> QuadratureConfig:
    precision = os.environ.get("CSE_LAB_PRECISION", "double")
    if precision not in ("double", "extended"):
        raise UsageError("CSE_LAB_PRECISION must be 'double' or 'extended'")
    return QuadratureConfig(
        radial_cells_per_decade=ns.radial_cells,
        angular_cells=ns.angular_cells,
        max_refinement_depth=ns.max_depth,
        target_rel_tolerance=ns.tolerance,
        precision=precision,
    )


def _parse_exact(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"not an exact rational: {text!r} ({e})")


def _parse_fn(text: str):
    try:
        return parse_expression(text)
    except ExpressionError as e:
        raise UsageError(f"bad expression: {e}")


def _add_quad_opts(p):
    p.add_argument("--radial-cells", type=int, default=8,
                   help="radial cells per decade (default 8)")
    p.add_argument("--angular-cells", type=int, default=32,
                   help="angular cells (default 32)")
    p.add_argument("--max-depth", type=int, default=14,
                   help="max dyadic refinement depth (default 14)")
    p.add_argument("--tolerance", type=float, default=1e-3,
                   help="per-cell relative tolerance (default 1e-3)")


def _add_out_opts(p, formats=("json",)):
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", default=None, help="output path (default stdout)")


def _emit(report, ns) -> None:
    text = emit_report(report, fmt=ns.format, path=ns.out)
    if ns.out is None:
        sys.stdout.write(text)


def build_parser() -> _Parser:
    top = _Parser(prog="cselab", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponent", help="central/fiber exponents and the "
                                        "semicontinuity verdict")
    p.add_argument("--f", required=True, help="function expression")
    p.add_argument("--t", action="append", default=None,
                   help="fiber parameter (exact rational; repeatable)")
    p.add_argument("--delta", type=float, default=0.1,
                   help="polydisc radius for zero selection (default 0.1)")
    _add_out_opts(p)

    p = sub.add_parser("lct", help="resolution-data formula vs polygon estimate")
    p.add_argument("--name", default=None,
                   help="catalog entry (default: every entry)")
    p.add_argument("--catalog", default=None,
                   help="JSON catalog file (default: builtin)")
    _add_out_opts(p)

    p = sub.add_parser("polygon", help="Newton polygon dump")
    p.add_argument("--f", required=True)
    _add_out_opts(p)

    p = sub.add_parser("sweep", help="fiber-integral stability table K_t vs K_0")
    p.add_argument("--f", required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--t", action="append", default=None,
                   help="explicit t values (exact rationals; repeatable)")
    p.add_argument("--t-start", default="1/100")
    p.add_argument("--t-ratio", default="1/4")
    p.add_argument("--t-count", type=int, default=7)
    _add_quad_opts(p)
    _add_out_opts(p, formats=("csv", "json", "plot-data"))

    p = sub.add_parser("bound", help="sampled uniform bound, with optional "
                                     "factor combination")
    p.add_argument("--f", required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--t", action="append", default=None)
    p.add_argument("--factor", action="append", default=None,
                   help="factor expression (repeat; enables the Young-"
                        "inequality combined bound)")
    _add_quad_opts(p)
    _add_out_opts(p)

    p = sub.add_parser("counterexample", help="non-holomorphic family records")
    p.add_argument("--n", type=int, default=None, help="single index n")
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--s", action="append", default=None,
                   help="diagonal sample s (positive rational; repeatable; "
                        "default 1/10, 1/7, 1/3)")
    _add_out_opts(p)

    p = sub.add_parser("probe", help="numeric multiplicity / regularity probes")
    p.add_argument("--kind", choices=("multiplicity", "holder"), required=True)
    p.add_argument("--f", default=None)
    p.add_argument("--t", default=None)
    p.add_argument("--c", type=float, default=0.3)
    p.add_argument("--delta", type=float, default=0.5)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--r0", type=float, default=0.05)
    _add_quad_opts(p)
    _add_out_opts(p)

    return top


# -- subcommand bodies -------------------------------------------------------

def _cmd_exponent(ns) -> int:
    f = _parse_fn(ns.f)
    if not isinstance(f, (BivariatePoly, MixedFunction)):
        raise UsageError("exponent needs a function of x and y")
    ts = [_parse_exact(t) for t in (ns.t or ["1/100", "1/1000", "1/10000",
                                             "1/100000"])]
    try:
        report = semicontinuity_check(f, ts, delta=ns.delta)
    except IdenticallyZeroError as e:
        raise UsageError(str(e))
    _emit(report, ns)
    if report.verdict == "violated" and report.holomorphic:
        return 2
    return 0


def _cmd_lct(ns) -> int:
    entries = load_catalog(ns.catalog) if ns.catalog else builtin_catalog()
    names = [ns.name] if ns.name else sorted(entries)
    rows = []
    for name in names:
        if name not in entries:
            raise UsageError(f"unknown catalog entry {name!r}; known: "
                             f"{', '.join(sorted(entries))}")
        e = entries[name]
        res = lct_from_resolution(e.divisors, e.is_log_resolution)
        row = {"name": name, "resolution_value": res.value.to_json_obj(),
               "label": res.label}
        if e.curve:
            est = newton.lct_polygon_estimate(_parse_fn(e.curve))
            row["curve"] = e.curve
            row["polygon_estimate"] = est.to_json_obj()
            row["agree"] = est == res.value
        rows.append(row)
    text = render_json({"entries": rows})
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_polygon(ns) -> int:
    f = _parse_fn(ns.f)
    f = as_mixed(f).holo if isinstance(f, (BivariatePoly, MixedFunction)) else f
    if not isinstance(f, BivariatePoly):
        raise UsageError("polygon needs a polynomial in x and y")
    polygon = newton.compute_polygon(f)
    out = {
        "function": format_function(f),
        "vertices": [list(v) for v in polygon.vertices],
        "segments": [[list(a), list(b)] for a, b in polygon.segments],
        "single_segment": newton.single_segment(polygon),
    }
    try:
        k, l = newton.endpoints(polygon)
        out["endpoints"] = {"k": k, "l": l}
        pp = newton.principal_part(f, (k, l))
        out["principal_part"] = format_function(pp.poly)
    except IdenticallyZeroError as e:
        out["endpoints"] = None
        out["endpoint_error"] = str(e)
    try:
        out["lct_polygon_estimate"] = newton.lct_polygon_estimate(f).to_json_obj()
        out["estimate_note"] = ("estimate: exact only for Newton-nondegenerate "
                                "germs, which is not tested here")
    except IdenticallyZeroError:
        pass
    text = render_json(out)
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _sweep_sequence(ns):
    if ns.t:
        return [_parse_exact(t) for t in ns.t]
    start = _parse_exact(ns.t_start)
    ratio = _parse_exact(ns.t_ratio)
    if ns.t_count < 1:
        raise UsageError("--t-count must be >= 1")
    return [start * ratio ** j for j in range(ns.t_count)]


def _cmd_sweep(ns) -> int:
    f = _parse_fn(ns.f)
    cfg = _quad_config(ns)
    try:
        report = convergence_sweep(f, ns.c, ns.R, _sweep_sequence(ns), cfg)
    except (ValueError, IdenticallyZeroError) as e:
        raise UsageError(str(e))
    _emit(report, ns)
    return 0 if report.verdict == "converged" else 2


def _cmd_bound(ns) -> int:
    f = _parse_fn(ns.f)
    cfg = _quad_config(ns)
    ts = ([_parse_exact(t) for t in ns.t] if ns.t
          else [Fraction(1, 100) * Fraction(1, 4) ** j for j in range(7)])
    try:
        report = uniform_bound_check(f, ns.c, ns.R, ts, cfg)
        payload = {"bound": to_jsonable(report)}
        if ns.factor:
            factors = [_parse_fn(x) for x in ns.factor]
            from .degeneration import central_exponent
            orders, bounds = [], []
            for g in factors:
                c0 = central_exponent(g, "min")
                if c0.is_infinite or c0.value == 0:
                    raise UsageError(f"factor {format_function(g)} has no "
                                     "usable central order")
                li = int(1 / c0.value)
                orders.append(li)
            total = sum(orders)
            for g, li in zip(factors, orders):
                ci = ns.c * total / li
                rep = uniform_bound_check(g, ci, ns.R, ts, cfg)
                bounds.append((li, rep.bound))
            combined = young_combine(bounds)
            payload["young"] = {
                "factors": [format_function(g) for g in factors],
                "orders": orders,
                "factor_bounds": [reports.fmt_float(m) for _, m in bounds],
                "combined_bound": reports.fmt_float(combined),
                "product_bound_le_combined": report.bound <= combined,
            }
    except (ValueError, IdenticallyZeroError) as e:
        raise UsageError(str(e))
    text = render_json(payload)
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 2 if report.growth_flag else 0


def _cmd_counterexample(ns) -> int:
    if ns.n is not None:
        indices = [ns.n]
    else:
        hi = ns.n_max if ns.n_max is not None else ns.n_min
        indices = list(range(ns.n_min, hi + 1))
    s_samples = [_parse_exact(s) for s in (ns.s or ["1/10", "1/7", "1/3"])]
    records = []
    for n in indices:
        rec = counterexample_record(n)
        rep = verify_violation(rec, s_samples)
        entry = to_jsonable(rec)
        entry["verification"] = to_jsonable(rep)
        records.append(entry)
    text = render_json({"records": records})
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    bad = any(r["verification"]["verdict"] != "violated" for r in records)
    return 2 if bad else 0


def _cmd_probe(ns) -> int:
    cfg = _quad_config(ns)
    if ns.kind == "holder":
        result = holder_probe(ns.n, ns.scale)
        _emit(result, ns)
        return 0
    if not ns.f or ns.t is None:
        raise UsageError("multiplicity probes need --f and --t")
    f = _parse_fn(ns.f)
    t = _parse_exact(ns.t)
    from .polynomials import substitute_fiber
    fib = substitute_fiber(f, t)
    zeros = fiber_zeros(f, t, delta=ns.delta)
    if not zeros:
        raise UsageError("no fiber zeros inside the polydisc to probe")
    locs = [z.location_complex() for z in zeros]
    out = []
    for z, loc in zip(zeros, locs):
        # keep the annuli clear of the other zeros and of the pole at x = 0
        sep = min((abs(loc - o) for o in locs if o != loc), default=math.inf)
        r0 = min(ns.r0, sep / 4.0, abs(loc) / 2.0)
        pr = exponent_probe_1d(fib, loc, ns.c, cfg, r0=r0)
        out.append({"zero": to_jsonable(z), "probe": to_jsonable(pr)})
    text = render_json({"probes": out})
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


_COMMANDS = {
    "exponent": _cmd_exponent,
    "lct": _cmd_lct,
    "polygon": _cmd_polygon,
    "sweep": _cmd_sweep,
    "bound": _cmd_bound,
    "counterexample": _cmd_counterexample,
    "probe": _cmd_probe,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        return _COMMANDS[ns.command](ns)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
