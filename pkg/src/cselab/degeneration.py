"""The family xy = t over the disc: exponents on fibers and verdicts.

Fibers X_t with t != 0 are smooth graphs y = t/x, so the singularity
exponent of a restricted function at a point is the reciprocal of its
vanishing order there.  The central fiber X_0 is the axis pair; exponents
on it are computed per component and combined with min.  This module
localizes fiber zeros (exactly where possible, by clustering otherwise),
evaluates the resolution-data formula min (k_i + 1)/a_i, and runs the
desk-scale semicontinuity check comparing central and fiber exponents.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exponents import Exponent
from .expressions import format_function
from .polynomials import (
    IdenticallyZeroError,
    LaurentForm,
    MixedFunction,
    UnivariatePoly,
    as_mixed,
    is_exact_scalar,
    numeric_fiber,
    squarefree_decomposition,
    substitute_fiber,
    vanishing_order,
)
from .rationals import GaussianRational

DEFAULT_DELTA = 0.1
DEFAULT_CLUSTER_RTOL = 1e-6


# ---------------------------------------------------------------------------
# fiber volume form
# ---------------------------------------------------------------------------

def volume_density(x, y, chart: str = "x") -> float:
    """Density of the fiber volume form dV_t against the chart area form.

    On the graph y = t/x the intrinsic volume form is
    (|x|^2 + |y|^2)/|x|^2 * dV_x; the y-chart density swaps the roles.
    The chart breaks where its coordinate vanishes.
    """
    ax2 = abs(complex(x)) ** 2
    ay2 = abs(complex(y)) ** 2
    if chart == "x":
        if ax2 == 0:
            raise ZeroDivisionError("x-chart density undefined at x = 0; "
                                    "use the y-chart")
        return (ax2 + ay2) / ax2
    if chart == "y":
        if ay2 == 0:
            raise ZeroDivisionError("y-chart density undefined at y = 0; "
                                    "use the x-chart")
        return (ax2 + ay2) / ay2
    raise ValueError("chart must be 'x' or 'y'")


# ---------------------------------------------------------------------------
# fiber zero localization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiberZero:
    """A zero of the fiber function on X_t, with multiplicity.

    location is a GaussianRational when the zero was verified exactly,
    otherwise a complex centroid of a numeric cluster.  Multiplicities from
    the exact path come from squarefree decomposition and are exact even
    when the location is not.
    """

    location: object
    multiplicity: int
    exact_location: bool
    cluster_radius: float = 0.0
    exact_multiplicity: bool = True

    @property
    def exactness(self) -> str:
        return "exact" if self.exact_location else "numeric-clustered"

    def location_complex(self) -> complex:
        if isinstance(self.location, GaussianRational):
            return self.location.to_complex()
        return complex(self.location)


def _snap_gaussian(z: complex, max_den: int = 10 ** 6):
    scale = max(1.0, abs(z))
    re = Fraction(z.real).limit_denominator(max_den)
    im = Fraction(z.imag).limit_denominator(max_den)
    cand = GaussianRational(re, im)
    if abs(cand.to_complex() - z) <= 1e-8 * scale:
        return cand
    return None


def _cluster_roots(roots, rtol):
    """Merge numeric roots within relative distance rtol into clusters."""
    roots = list(roots)
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            scale = max(1e-30, abs(roots[i]), abs(roots[j]))
            if abs(roots[i] - roots[j]) <= rtol * scale:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(roots[i])
    out = []
    for members in groups.values():
        centroid = sum(members) / len(members)
        radius = max((abs(m - centroid) for m in members), default=0.0)
        out.append((centroid, len(members), radius))
    return out


def _roots_of_unipoly(p: UnivariatePoly):
    if p.degree < 1:
        return np.array([], dtype=complex)
    return np.roots(p.complex_coeffs()[::-1])


def _exact_fiber_zero_list(num: UnivariatePoly, cluster_rtol: float):
    zeros = []
    for factor, mult in squarefree_decomposition(num):
        for centroid, count, radius in _cluster_roots(
                _roots_of_unipoly(factor), cluster_rtol):
            # squarefree factors have simple roots; clusters should be singletons
            snapped = _snap_gaussian(centroid)
            if snapped is not None and factor.evaluate(snapped).is_zero():
                zeros.append(FiberZero(snapped, mult * count, True, 0.0, True))
            else:
                zeros.append(FiberZero(complex(centroid), mult * count,
                                       False, radius, True))
    return zeros


def _numeric_fiber_zero_list(coeffs: np.ndarray, cluster_rtol: float):
    roots = np.roots(coeffs[::-1]) if coeffs.size > 1 else np.array([], dtype=complex)
    out = []
    for centroid, count, radius in _cluster_roots(roots, cluster_rtol):
        out.append(FiberZero(complex(centroid), count, False, radius, False))
    return out


def fiber_zeros(f, t, delta: float = DEFAULT_DELTA,
                cluster_rtol: float = DEFAULT_CLUSTER_RTOL):
    """Zeros of the fiber function of F on X_t inside the polydisc.

    The region is the part of X_t with |x| <= delta and |t/x| <= delta
    (the polydisc of radius delta around the origin).  Exact t goes through
    squarefree decomposition, which gives exact multiplicities and, where a
    root snaps to a verified Gaussian rational, exact locations; float t
    falls back to root clustering at relative radius cluster_rtol.

    Raises IdenticallyZeroError when the fiber function vanishes
    identically (its exponent is 0 by convention).
    """
    if _is_zero_scalar(t):
        raise ValueError("t = 0 is the central fiber; use the axis restrictions")
    if is_exact_scalar(t) or isinstance(t, GaussianRational):
        form = substitute_fiber(f, t)
        num = form.combined_numerator()
        if num.is_zero():
            raise IdenticallyZeroError("fiber function is identically zero")
        zeros = _exact_fiber_zero_list(num, cluster_rtol)
        t_abs = math.sqrt(float(GaussianRational.coerce(t).norm2()))
    else:
        fib = numeric_fiber(f, t)
        if fib.is_zero():
            raise IdenticallyZeroError("fiber function is identically zero")
        zeros = _numeric_fiber_zero_list(fib.coeffs, cluster_rtol)
        t_abs = abs(complex(t))

    slack = 1.0 + 1e-12
    kept = []
    for z in zeros:
        ax = abs(z.location_complex())
        if ax == 0.0:
            continue  # x = 0 is not on the fiber graph
        if ax <= delta * slack and t_abs / ax <= delta * slack:
            kept.append(z)
    kept.sort(key=lambda z: (abs(z.location_complex()),
                             cmath.phase(z.location_complex())))
    return kept


def _is_zero_scalar(t) -> bool:
    if isinstance(t, GaussianRational):
        return t.is_zero()
    if isinstance(t, (int, Fraction)):
        return t == 0
    return complex(t) == 0


# ---------------------------------------------------------------------------
# exponents
# ---------------------------------------------------------------------------

def fiber_exponent(f, t, p) -> Exponent:
    """Exponent of the fiber restriction at a point p = (x0, t/x0) of X_t.

    1/ord of the fiber function at x0; +infinity where it does not vanish;
    0 for an identically zero fiber function.
    """
    x0 = p[0] if isinstance(p, (tuple, list)) else p
    if is_exact_scalar(t) and (is_exact_scalar(x0) or isinstance(x0, GaussianRational)):
        x0g = GaussianRational.coerce(x0)
        if x0g.is_zero():
            raise ValueError("fiber points have x != 0")
        if isinstance(p, (tuple, list)) and len(p) > 1 and (
                is_exact_scalar(p[1]) or isinstance(p[1], GaussianRational)):
            if x0g * GaussianRational.coerce(p[1]) != GaussianRational.coerce(t):
                raise ValueError("point does not lie on the fiber xy = t")
        form = substitute_fiber(f, t)
        try:
            order = vanishing_order(form, x0g)
        except IdenticallyZeroError:
            return Exponent.zero()
        return Exponent.infinite() if order == 0 else Exponent.reciprocal_order(order)

    # numeric fallback: match against clustered zeros
    x0c = complex(x0)
    try:
        zeros = fiber_zeros(f, t, delta=math.inf)
    except IdenticallyZeroError:
        return Exponent.zero()
    for z in zeros:
        tol = max(z.cluster_radius * 4, 1e-9 * max(1.0, abs(x0c)))
        if abs(z.location_complex() - x0c) <= tol:
            return Exponent.reciprocal_order(z.multiplicity)
    return Exponent.infinite()


def central_exponent(f, component: str = "min") -> Exponent:
    """Exponent of the restriction of F to the central fiber at the origin.

    Per component this is 1/ord_0 of F(x, 0) resp. F(0, y); a restriction
    that vanishes identically gives 0 and a nonvanishing one +infinity.
    component 'min' is the exponent on the whole axis pair (min over the
    components through the origin); 'max' is the strongest per-component
    claim and is what the semicontinuity check compares against.
    """
    f = as_mixed(f)  # the radial term vanishes on the axes

    def one_axis(r: UnivariatePoly) -> Exponent:
        if r.is_zero():
            return Exponent.zero()
        v = r.valuation()
        return Exponent.infinite() if v == 0 else Exponent.reciprocal_order(v)

    ex = one_axis(f.holo.restrict_x_axis())
    ey = one_axis(f.holo.restrict_y_axis())
    if component == "x-axis":
        return ex
    if component == "y-axis":
        return ey
    if component in ("min", "min-over-components"):
        return min(ex, ey)
    if component == "max":
        return max(ex, ey)
    raise ValueError("component must be 'x-axis', 'y-axis', "
                     "'min-over-components' (or 'min') or 'max'")


# ---------------------------------------------------------------------------
# resolution-data formula
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Divisor:
    """One exceptional or strict-transform divisor: discrepancy k,
    multiplicity a in the pulled-back zero divisor, and whether its image
    passes through the base point."""

    k: int
    a: int
    through: bool = True

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("divisor multiplicity a must be >= 1")
        if self.k < 0:
            raise ValueError("discrepancy k must be >= 0")


@dataclass(frozen=True)
class LctResult:
    value: Exponent
    equality: bool  # equality certified only for genuine log resolutions

    @property
    def label(self) -> str:
        return "equality" if self.equality else "upper bound"


def lct_from_resolution(divisors, is_log_resolution: bool) -> LctResult:
    """min over divisors through the point of (k_i + 1)/a_i.

    The caller asserts via is_log_resolution whether the data comes from a
    genuine log resolution (then the value is the threshold itself) or not
    (then it is only an upper bound, and is labeled so).
    """
    divisors = list(divisors)
    if not divisors:
        raise ValueError("empty divisor list")
    through = [d for d in divisors if d.through]
    if not through:
        raise ValueError("no divisor passes through the point")
    best = min(Fraction(d.k + 1, d.a) for d in through)
    return LctResult(Exponent(best), bool(is_log_resolution))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    divisors: tuple
    is_log_resolution: bool
    curve: str | None = None  # matching germ for the polygon cross-check


def builtin_catalog():
    """Hand-derived resolution data for standard plane-curve germs.

    The x^a + y^b entries list the strict transform and the quasi-
    homogeneous exceptional divisor of the (b/g, a/g)-weighted blowup,
    whose ratio (a+b)/(ab) realizes the threshold.
    """
    entries = {}

    def add(name, divisors, curve, log_res=True):
        entries[name] = CatalogEntry(name, tuple(divisors), log_res, curve)

    add("smooth", [Divisor(0, 1)], "x + y")
    for m in range(2, 6):
        add(f"ord-{m}", [Divisor(0, m)], f"x^{m}")
    add("node", [Divisor(0, 1), Divisor(0, 1), Divisor(1, 2)], "x^2 - y^2")
    add("cusp", [Divisor(0, 1), Divisor(1, 2), Divisor(2, 3), Divisor(4, 6)],
        "y^2 - x^3")
    add("tacnode", [Divisor(0, 1), Divisor(0, 1), Divisor(1, 2), Divisor(2, 4)],
        "y^2 - x^4")
    for a in range(2, 6):
        for b in range(2, 6):
            g = math.gcd(a, b)
            add(f"x^{a}+y^{b}",
                [Divisor(0, 1), Divisor((a + b) // g - 1, a * b // g)],
                f"x^{a} + y^{b}")
    return entries


def load_catalog(path):
    """Read a catalog file: JSON list of {name, divisors: [{k, a, through}]}."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    entries = {}
    for item in raw:
        divisors = tuple(
            Divisor(int(d["k"]), int(d["a"]), bool(d.get("through", True)))
            for d in item["divisors"])
        entries[item["name"]] = CatalogEntry(
            item["name"], divisors,
            bool(item.get("log_resolution", False)),
            item.get("curve"))
    return entries


def catalog_to_jsonable(entries):
    out = []
    for name in sorted(entries):
        e = entries[name]
        out.append({
            "name": e.name,
            "divisors": [{"k": d.k, "a": d.a, "through": d.through}
                         for d in e.divisors],
            "log_resolution": e.is_log_resolution,
            "curve": e.curve,
        })
    return out


# ---------------------------------------------------------------------------
# semicontinuity check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiberRow:
    t: object
    zeros: tuple            # pairs (FiberZero, Exponent)
    holds: bool | None      # None: excluded (fiber function identically zero)
    note: str = ""


@dataclass(frozen=True)
class SemicontinuityReport:
    function: str
    holomorphic: bool
    central_x: Exponent
    central_y: Exponent
    central_max: Exponent
    delta: float
    rows: tuple
    verdict: str                    # "holds" | "violated"
    witness: tuple | None = None    # (t, FiberZero, central_max, fiber_exponent)
    largest_t_holding: object = None


def semicontinuity_check(f, t_samples, delta: float = DEFAULT_DELTA,
                         cluster_rtol: float = DEFAULT_CLUSTER_RTOL) -> SemicontinuityReport:
    """Desk-scale semicontinuity verdict for the family xy = t at the origin.

    For every sampled t != 0 the check compares the strongest central claim
    (max over the axis components of the central exponent) against the
    exponent at every fiber zero inside the polydisc of radius delta.  For
    holomorphic F the verdict must be "holds"; non-holomorphic (mixed)
    inputs may genuinely violate it.  Rows whose fiber function vanishes
    identically are excluded (such a t is outside the eventual range of the
    semicontinuity statement); if every row is excluded, F vanishes on the
    family and an error is raised.
    """
    f = as_mixed(f)
    samples = sorted(t_samples, key=lambda t: -_abs_scalar(t))
    if not samples:
        raise ValueError("need at least one t sample")
    if any(_is_zero_scalar(t) for t in samples):
        raise ValueError("t samples must be nonzero")
    cmax = central_exponent(f, "max")

    rows = []
    witness = None
    largest_holding = None
    excluded = 0
    for t in samples:
        try:
            zs = fiber_zeros(f, t, delta=delta, cluster_rtol=cluster_rtol)
        except IdenticallyZeroError:
            rows.append(FiberRow(t, (), None, "fiber function identically zero"))
            excluded += 1
            continue
        pairs = tuple((z, Exponent.reciprocal_order(z.multiplicity)) for z in zs)
        row_holds = all(cmax <= e for _, e in pairs)
        rows.append(FiberRow(t, pairs, row_holds))
        if row_holds:
            if largest_holding is None or _abs_scalar(t) > _abs_scalar(largest_holding):
                largest_holding = t
        elif witness is None:
            bad = min(pairs, key=lambda pe: pe[1])
            witness = (t, bad[0], cmax, bad[1])

    if excluded == len(samples):
        raise IdenticallyZeroError("F vanishes on the family")
    verdict = "holds" if witness is None else "violated"
    return SemicontinuityReport(
        function=format_function(f),
        holomorphic=f.is_holomorphic(),
        central_x=central_exponent(f, "x-axis"),
        central_y=central_exponent(f, "y-axis"),
        central_max=cmax,
        delta=delta,
        rows=tuple(rows),
        verdict=verdict,
        witness=witness,
        largest_t_holding=largest_holding,
    )


def _abs_scalar(t) -> float:
    if isinstance(t, GaussianRational):
        return math.sqrt(float(t.norm2()))
    return abs(complex(t))
