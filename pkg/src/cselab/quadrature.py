"""Adaptive log-polar quadrature of |f|^(-2c) on fibers of xy = t.

The integrals of interest live on annuli A(a, b) = {a < |z| < b}.  Cells
are tensor products of log-radius and angle intervals, integrated by the
midpoint rule and refined dyadically wherever the two-level estimates
disagree beyond tolerance; cells containing a detected zero of the fiber
function are split ahead of time.  Integrable singularities r^(-2cm) with
2cm < 2 are resolved by refinement depth; configurations with 2cm >= 2 at
an interior zero are reported divergent rather than returning a number.

Cell sums are accumulated in a fixed construction order, so a given
configuration reproduces bit-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import newton
from .degeneration import FiberZero, central_exponent, fiber_zeros
from .exponents import Exponent
from .expressions import format_function
from .polynomials import (
    IdenticallyZeroError,
    LaurentForm,
    NumericFiber,
    UnivariatePoly,
    as_mixed,
    is_exact_scalar,
    numeric_fiber,
    substitute_fiber,
)

STABILITY_HYPOTHESIS = ("the fiber-integral stability theorem requires "
                        "0 < c < c_0(f_0)")


# ---------------------------------------------------------------------------
# configuration and report types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureConfig:
    """Knobs of the adaptive scheme.

    radial_cells_per_decade and angular_cells size the initial grid;
    max_refinement_depth caps dyadic splitting; target_rel_tolerance is the
    per-cell two-level disagreement threshold.  precision 'extended' runs
    the cell arithmetic in long double.
    """

    radial_cells_per_decade: int = 8
    angular_cells: int = 32
    max_refinement_depth: int = 14
    target_rel_tolerance: float = 1e-3
    precision: str = "double"
    ratio_band: float = 0.05
    trend_slack: float = 0.02
    inner_cut_decades: float = 30.0

    def __post_init__(self):
        if self.radial_cells_per_decade < 4 or self.angular_cells < 4:
            raise ValueError("cell counts must be >= 4")
        if self.max_refinement_depth < 4:
            raise ValueError("max_refinement_depth must be >= 4")
        if not (0 < self.target_rel_tolerance < 0.1):
            raise ValueError("target_rel_tolerance must lie in (0, 0.1)")
        if self.precision not in ("double", "extended"):
            raise ValueError("precision must be 'double' or 'extended'")

    @property
    def complex_dtype(self):
        return np.clongdouble if self.precision == "extended" else np.complex128

    @property
    def real_dtype(self):
        return np.longdouble if self.precision == "extended" else np.float64


@dataclass(frozen=True)
class Annulus:
    r_inner: float
    r_outer: float

    def __post_init__(self):
        if not (self.r_outer > 0 and self.r_inner >= 0):
            raise ValueError("annulus radii must satisfy 0 <= r_in, 0 < r_out")
        if self.r_inner >= self.r_outer:
            raise ValueError("annulus needs r_inner < r_outer")

    def __str__(self):
        return f"A({self.r_inner:.6g}, {self.r_outer:.6g})"


@dataclass
class IntegralReport:
    value: float
    error_estimate: float
    cells_used: int
    refinement_flags: tuple
    domain: Annulus
    chart: str
    c: float
    converged: bool
    divergent: bool = False
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.divergent and self.value < 0:
            raise ValueError("integral values are nonnegative")


@dataclass
class KReport:
    """K_t together with the chart components I_t and J_t of one shared pass."""

    t: object
    k_report: IntegralReport
    i_report: IntegralReport
    j_report: IntegralReport

    @property
    def identity_residual(self) -> float:
        """|K - (I + J)| / K, the fiber-volume splitting identity."""
        k = self.k_report.value
        if not math.isfinite(k) or k == 0:
            return math.inf
        return abs(k - (self.i_report.value + self.j_report.value)) / k


@dataclass(frozen=True)
class SweepRow:
    t: object
    k_t: float
    err: float
    i_t: float
    j_t: float
    ratio: float
    flags: tuple = ()


@dataclass
class SweepReport:
    rows: tuple
    k0: float
    k0_err: float
    verdict: str           # "converged" | "inconclusive"
    hypothesis_note: str
    function: str = ""

    def csv_rows(self):
        return [(float(_as_float(r.t)), r.k_t, r.err, r.i_t, r.j_t, r.ratio)
                for r in self.rows]


@dataclass
class BoundReport:
    bound: float
    rows: tuple
    growth_flag: bool
    note: str = ""


@dataclass(frozen=True)
class ProbeResult:
    multiplicity_estimate: float
    slope: float
    fit_residual: float
    radii: tuple
    masses: tuple


def _as_float(t) -> float:
    try:
        return float(t)
    except TypeError:
        return abs(complex(t))


# ---------------------------------------------------------------------------
# fiber evaluation plumbing
# ---------------------------------------------------------------------------

def _coerce_fiber(fiber) -> NumericFiber:
    if isinstance(fiber, NumericFiber):
        return fiber
    if isinstance(fiber, LaurentForm):
        return fiber.to_numeric()
    if isinstance(fiber, UnivariatePoly):
        return NumericFiber(fiber.complex_coeffs(), 0)
    raise TypeError("expected LaurentForm, NumericFiber or UnivariatePoly")


def _base_fn(fib: NumericFiber, c: float, cfg: QuadratureConfig,
             chart: str = "x", t=None):
    """|f|^(-2c) as a vectorized function of the chart coordinate."""
    coeffs = fib.coeffs.astype(cfg.complex_dtype)
    d = fib.pole_order
    tc = None
    if chart == "y":
        if t is None:
            t = fib.t
        if t is None:
            raise ValueError("y-chart integration needs the fiber parameter t")
        tc = cfg.complex_dtype(complex(t))

    def evaluate(z):
        x = tc / z if chart == "y" else z
        acc = np.zeros_like(x)
        for ck in coeffs[::-1]:
            acc = acc * x + ck
        av = np.abs(acc)
        if d:
            av = av / np.abs(x) ** d
        if c == 0:
            return np.ones_like(av)
        with np.errstate(divide="ignore", over="ignore"):
            return av ** (-2.0 * c)

    return evaluate


def _detect_zeros(fiber, cluster_rtol=1e-6):
    """Zero structure of a fiber function, exact when coefficients are exact."""
    from .degeneration import _exact_fiber_zero_list, _numeric_fiber_zero_list

    if isinstance(fiber, LaurentForm):
        num = fiber.combined_numerator()
        if num.is_zero():
            raise IdenticallyZeroError("fiber function is identically zero")
        return _exact_fiber_zero_list(num, cluster_rtol)
    if isinstance(fiber, UnivariatePoly):
        if fiber.is_zero():
            raise IdenticallyZeroError("zero polynomial")
        return _exact_fiber_zero_list(fiber, cluster_rtol)
    fib = _coerce_fiber(fiber)
    if fib.is_zero():
        raise IdenticallyZeroError("fiber function is identically zero")
    return _numeric_fiber_zero_list(fib.coeffs, cluster_rtol)


# ---------------------------------------------------------------------------
# the adaptive engine
# ---------------------------------------------------------------------------

_CHILD_U = np.array([0.25, 0.75, 0.25, 0.75])
_CHILD_T = np.array([0.25, 0.25, 0.75, 0.75])


def _adaptive_polar(base_fn, weight_fns, annulus: Annulus, cfg: QuadratureConfig,
                    zero_points=(), center=0j, primary=-1):
    """Masses of base*w_k over the annulus for every weight w_k.

    Returns (masses, errors, cells_used, flags, converged).  The refinement
    decision is driven by the weight at index `primary`; all weights share
    the grid, so linear identities between them hold to rounding.
    """
    rdt = cfg.real_dtype
    u_lo = math.log(annulus.r_inner)
    u_hi = math.log(annulus.r_outer)
    decades = (u_hi - u_lo) / math.log(10.0)
    n_u = max(4, int(math.ceil(decades * cfg.radial_cells_per_decade)))
    n_th = max(4, cfg.angular_cells)

    ue = np.linspace(u_lo, u_hi, n_u + 1, dtype=rdt)
    te = np.linspace(0.0, 2.0 * math.pi, n_th + 1, dtype=rdt)
    u0 = np.repeat(ue[:-1], n_th)
    u1 = np.repeat(ue[1:], n_th)
    t0 = np.tile(te[:-1], n_u)
    t1 = np.tile(te[1:], n_u)
    depth = np.zeros(u0.size, dtype=np.int32)

    # pre-split cells containing a detected zero, so singular regions are
    # refined around the zero before the tolerance loop sees them
    zs = [complex(z) - complex(center) for z in zero_points]
    zs = [(math.log(abs(z)), math.atan2(z.imag, z.real) % (2.0 * math.pi))
          for z in zs if abs(z) > 0]
    for _ in range(2):
        if not zs:
            break
        hit = np.zeros(u0.size, dtype=bool)
        for (uz, tz) in zs:
            hit |= (u0 <= uz) & (uz <= u1) & (t0 <= tz) & (tz <= t1)
        if not hit.any():
            break
        u0, u1, t0, t1, depth = _split_cells(u0, u1, t0, t1, depth, hit)

    n_w = len(weight_fns)
    totals = [rdt(0.0) for _ in range(n_w)]
    errors = [rdt(0.0) for _ in range(n_w)]
    cells_used = 0
    forced = 0
    dropped = 0
    abs_floor = None
    tol = cfg.target_rel_tolerance
    cplx = cfg.complex_dtype
    ctr = cplx(complex(center))

    while u0.size:
        du = u1 - u0
        dt = t1 - t0
        area = du * dt
        um = 0.5 * (u0 + u1)
        tm = 0.5 * (t0 + t1)
        xm = ctr + np.exp(um.astype(cplx) + 1j * tm.astype(cplx))
        bm = base_fn(xm) * np.exp(2.0 * um)
        uu = u0[:, None] + du[:, None] * _CHILD_U
        tt = t0[:, None] + dt[:, None] * _CHILD_T
        xf = ctr + np.exp(uu.astype(cplx) + 1j * tt.astype(cplx))
        bf = base_fn(xf) * np.exp(2.0 * uu)

        coarse = np.empty((n_w, u0.size), dtype=rdt)
        fine = np.empty((n_w, u0.size), dtype=rdt)
        for k, w in enumerate(weight_fns):
            wm = w(xm)
            wf = w(xf)
            coarse[k] = bm * wm * area
            fine[k] = (bf * wf).sum(axis=1) * (area / 4.0)

        if abs_floor is None:
            finite0 = np.isfinite(coarse[primary])
            scale0 = float(np.abs(coarse[primary][finite0]).sum())
            abs_floor = tol * max(scale0, 1e-300) / (4.0 * max(u0.size, 1))

        dis = np.abs(fine[primary] - coarse[primary])
        all_finite = np.isfinite(fine).all(axis=0) & np.isfinite(coarse).all(axis=0)
        within = all_finite & (dis <= tol * np.abs(fine[primary]) + abs_floor)
        at_cap = depth >= cfg.max_refinement_depth
        accept = within | at_cap

        acc_idx = np.nonzero(accept)[0]
        if acc_idx.size:
            acc_finite = all_finite[acc_idx]
            good = acc_idx[acc_finite]
            bad = acc_idx[~acc_finite]
            for k in range(n_w):
                totals[k] = totals[k] + fine[k][good].sum()
                errors[k] = errors[k] + np.abs(fine[k][good] - coarse[k][good]).sum()
            cells_used += good.size
            forced += int((at_cap & ~within)[acc_idx].sum())
            dropped += bad.size

        split = ~accept
        u0, u1, t0, t1, depth = _split_cells(u0, u1, t0, t1, depth, split,
                                             keep_only_split=True)

    flags = []
    if forced:
        flags.append(f"max-depth-reached:{forced}")
    if dropped:
        flags.append(f"unresolved-singular-cell:{dropped}")
    converged = forced == 0 and dropped == 0
    return ([float(v) for v in totals], [float(e) for e in errors],
            cells_used, tuple(flags), converged)


def _split_cells(u0, u1, t0, t1, depth, mask, keep_only_split=False):
    su0, su1 = u0[mask], u1[mask]
    st0, st1 = t0[mask], t1[mask]
    sd = depth[mask] + 1
    um = 0.5 * (su0 + su1)
    tm = 0.5 * (st0 + st1)
    cu0 = np.concatenate([su0, um, su0, um])
    cu1 = np.concatenate([um, su1, um, su1])
    ct0 = np.concatenate([st0, st0, tm, tm])
    ct1 = np.concatenate([tm, tm, st1, st1])
    cd = np.concatenate([sd, sd, sd, sd])
    if keep_only_split:
        return cu0, cu1, ct0, ct1, cd
    keep = ~mask
    return (np.concatenate([u0[keep], cu0]), np.concatenate([u1[keep], cu1]),
            np.concatenate([t0[keep], ct0]), np.concatenate([t1[keep], ct1]),
            np.concatenate([depth[keep], cd]))


def _truncate_annulus(domain: Annulus, cfg: QuadratureConfig):
    if domain.r_inner > 0:
        return domain, False
    r_in = domain.r_outer * 10.0 ** (-cfg.inner_cut_decades)
    return Annulus(r_in, domain.r_outer), True


def _interior_zeros(zeros, domain: Annulus, center=0j):
    slack = 1e-12
    out = []
    for z in zeros:
        rho = abs(z.location_complex() - complex(center))
        if domain.r_inner * (1 - slack) <= rho <= domain.r_outer * (1 + slack):
            out.append(z)
    return out


def _divergent_zero(zeros, c: float):
    for z in zeros:
        if 2.0 * c * z.multiplicity >= 2.0:
            return z
    return None


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def annulus_integral(fiber, c: float, domain: Annulus, chart: str = "x",
                     config: QuadratureConfig | None = None, t=None,
                     zeros=None) -> IntegralReport:
    """Integral of |f|^(-2c) over an annulus against the chart area form.

    Parameters
    ----------
    fiber : LaurentForm, NumericFiber or UnivariatePoly
        The fiber function x -> F(x, t/x) (or any one-variable function).
    c : float
        Exponent parameter, c >= 0.
    domain : Annulus
        Integration annulus in the chart coordinate; an inner radius of 0
        is truncated to a punctured disc (the cut is recorded in meta).
    chart : 'x' or 'y'
        'y' integrates the same fiber function against dV_y, evaluating it
        at x = t/y; the fiber must know its t.
    zeros : optional list of FiberZero
        Known zeros (in the x coordinate); detected automatically when
        omitted.  Used for pre-refinement and the divergence test.
    """
    cfg = config or QuadratureConfig()
    if c < 0:
        raise ValueError("c must be nonnegative")
    fib = _coerce_fiber(fiber)
    if chart not in ("x", "y"):
        raise ValueError("chart must be 'x' or 'y'")
    if zeros is None and c > 0:
        try:
            zeros = _detect_zeros(fiber)
        except IdenticallyZeroError:
            raise
    zeros = list(zeros or ())

    t_val = t if t is not None else fib.t
    if chart == "y":
        if t_val is None:
            raise ValueError("y-chart integration needs the fiber parameter t")
        pts = []
        for z in zeros:
            loc = z.location_complex()
            if loc != 0:
                pts.append(FiberZero(complex(t_val) / loc, z.multiplicity,
                                     False, z.cluster_radius, z.exact_multiplicity))
        zeros = pts

    work, truncated = _truncate_annulus(domain, cfg)
    interior = _interior_zeros(zeros, work)
    bad = _divergent_zero(interior, c) if c > 0 else None
    if bad is not None:
        return IntegralReport(
            value=math.inf, error_estimate=math.inf, cells_used=0,
            refinement_flags=("divergent",), domain=domain, chart=chart,
            c=c, converged=False, divergent=True,
            meta={"divergent_zero": str(bad.location_complex()),
                  "multiplicity": bad.multiplicity,
                  "local_exponent": 2.0 * c * bad.multiplicity})

    base = _base_fn(fib, c, cfg, chart=chart, t=t_val)
    ones = lambda x: np.ones(x.shape, dtype=cfg.real_dtype)
    masses, errs, cells, flags, converged = _adaptive_polar(
        base, [ones], work, cfg,
        zero_points=[z.location_complex() for z in interior])
    meta = {"inner_truncated": truncated}
    if truncated:
        meta["inner_cut"] = work.r_inner
    return IntegralReport(
        value=masses[0], error_estimate=errs[0], cells_used=cells,
        refinement_flags=flags, domain=domain, chart=chart, c=c,
        converged=converged, meta=meta)


def _axis_disc_integral(restriction: UnivariatePoly, c: float, radius: float,
                        cfg: QuadratureConfig, axis: str) -> IntegralReport:
    """Central-fiber component integral over the punctured disc |z| < R."""
    if restriction.is_zero():
        raise IdenticallyZeroError(
            f"restriction to the {axis}-axis is identically zero")
    return annulus_integral(restriction, c, Annulus(0.0, radius),
                            chart="x", config=cfg)


def fiber_integral_K(f, t, c: float, radius: float,
                     config: QuadratureConfig | None = None) -> KReport:
    """K_t(R) = I_t(R) + J_t(R), the fiber integral with its chart split.

    For t != 0 a single adaptive pass over the x-chart annulus
    A(|t|/R, R) accumulates three weights: 1 (giving I_t), the Jacobian
    |y|^2/|x|^2 of the y-chart (giving J_t) and the intrinsic fiber volume
    density (|x|^2 + |y|^2)/|x|^2 (giving K_t), so the splitting identity
    is checked on a shared grid.  At t = 0, K_0 is the sum of the two
    punctured-disc integrals of the axis restrictions.

    Requires 0 < c < c_0(f_0): otherwise the stability hypothesis fails
    and the request is rejected.
    """
    cfg = config or QuadratureConfig()
    f = as_mixed(f)
    c0 = central_exponent(f, "min")
    if not (0 < c < float(c0)):
        raise ValueError(f"{STABILITY_HYPOTHESIS}; got c={c}, c_0={c0}")

    if _is_zero_param(t):
        i_rep = _axis_disc_integral(f.holo.restrict_x_axis(), c, radius, cfg, "x")
        j_rep = _axis_disc_integral(f.holo.restrict_y_axis(), c, radius, cfg, "y")
        k_rep = IntegralReport(
            value=i_rep.value + j_rep.value,
            error_estimate=i_rep.error_estimate + j_rep.error_estimate,
            cells_used=i_rep.cells_used + j_rep.cells_used,
            refinement_flags=tuple(set(i_rep.refinement_flags)
                                   | set(j_rep.refinement_flags)),
            domain=Annulus(0.0, radius), chart="central", c=c,
            converged=i_rep.converged and j_rep.converged,
            divergent=i_rep.divergent or j_rep.divergent,
            meta={"note": "central fiber: sum over the two axis components"})
        return KReport(t=0, k_report=k_rep, i_report=i_rep, j_report=j_rep)

    t_abs = _abs_param(t)
    domain = Annulus(t_abs / radius, radius)
    zeros = fiber_zeros(f, t, delta=radius)
    bad = _divergent_zero(_interior_zeros(zeros, domain), c)
    if bad is not None:
        rep = IntegralReport(
            value=math.inf, error_estimate=math.inf, cells_used=0,
            refinement_flags=("divergent",), domain=domain, chart="x", c=c,
            converged=False, divergent=True,
            meta={"divergent_zero": str(bad.location_complex()),
                  "multiplicity": bad.multiplicity})
        return KReport(t=t, k_report=rep, i_report=rep, j_report=rep)

    fib = (substitute_fiber(f, t).to_numeric() if is_exact_scalar(t)
           else numeric_fiber(f, t))
    base = _base_fn(fib, c, cfg)
    t2 = t_abs * t_abs

    def w_i(x):
        return np.ones(x.shape, dtype=cfg.real_dtype)

    def w_j(x):
        ax2 = np.abs(x) ** 2
        return (t2 / ax2) / ax2

    def w_k(x):
        # intrinsic density (|x|^2 + |y|^2)/|x|^2 with y = t/x
        ax2 = np.abs(x) ** 2
        return (ax2 + t2 / ax2) / ax2

    masses, errs, cells, flags, converged = _adaptive_polar(
        base, [w_i, w_j, w_k], domain, cfg,
        zero_points=[z.location_complex() for z in zeros], primary=2)

    mk = dict(cells_used=cells, refinement_flags=flags, domain=domain,
              c=c, converged=converged)
    k_rep = IntegralReport(value=masses[2], error_estimate=errs[2],
                           chart="density", **mk)
    i_rep = IntegralReport(value=masses[0], error_estimate=errs[0],
                           chart="x", **mk)
    j_rep = IntegralReport(value=masses[1], error_estimate=errs[1],
                           chart="y-via-x", **mk)
    return KReport(t=t, k_report=k_rep, i_report=i_rep, j_report=j_rep)


def _is_zero_param(t) -> bool:
    if t is None:
        return True
    if is_exact_scalar(t):
        return Fraction(t) == 0 if not isinstance(t, int) else t == 0
    return complex(t) == 0


def _abs_param(t) -> float:
    if is_exact_scalar(t):
        return abs(float(t))
    return abs(complex(t))


def decompose_I(f, t, c: float, radius: float, r1: float,
                config: QuadratureConfig | None = None):
    """Three-annulus split of I_t(R) around the scale |x| ~ |s|^l.

    With (k, l) the axis endpoints of the Newton polygon of F and s the
    positive real root of s^(k+l) = t, the rescaling x = s^l z maps the
    x-annulus A(|t|/R, R) to A(|s|^k/R, R/|s|^l) in z; the parts
    near z ~ 1, z large and z small are returned in that order as
    (I_t1, I_t2, I_t3).  In the x coordinate they are the radial pieces
    split at |s|^l/R1 and |s|^l*R1, so they sum to I_t.
    """
    cfg = config or QuadratureConfig()
    if r1 <= 1:
        raise ValueError("R1 must exceed 1")
    if not is_exact_scalar(t) and complex(t).imag != 0:
        raise ValueError("decomposition uses the positive real branch: t > 0")
    t_f = float(t) if is_exact_scalar(t) else complex(t).real
    if t_f <= 0:
        raise ValueError("decomposition uses the positive real branch: t > 0")

    holo = as_mixed(f).holo
    polygon = newton.compute_polygon(holo)
    k, l = newton.endpoints(polygon)
    s = t_f ** (1.0 / (k + l))
    a0 = t_f / radius
    a1 = s ** l / r1
    a2 = s ** l * r1
    a3 = radius
    if not (a0 < a1 < a2 < a3):
        raise ValueError(
            f"partition radii are not ordered ({a0:.3g}, {a1:.3g}, {a2:.3g}, "
            f"{a3:.3g}); R1 is incompatible with this t and R")

    fib = (substitute_fiber(f, t) if is_exact_scalar(t)
           else numeric_fiber(f, t))
    zeros = fiber_zeros(f, t, delta=radius)
    reports = []
    z_domains = [(1.0 / r1, r1), (r1, radius / s ** l), (s ** k / radius, 1.0 / r1)]
    x_domains = [Annulus(a1, a2), Annulus(a2, a3), Annulus(a0, a1)]
    for (zd, xd) in zip(z_domains, x_domains):
        rep = annulus_integral(fib, c, xd, chart="x", config=cfg, t=t,
                               zeros=zeros)
        rep.meta.update({"s": s, "endpoints": (k, l),
                         "z_annulus": f"A({zd[0]:.6g}, {zd[1]:.6g})"})
        reports.append(rep)
    return tuple(reports)


def default_t_sequence(start=Fraction(1, 100), ratio=Fraction(1, 4), count=7):
    """Geometric decay t_j = start * ratio^j, exact when inputs are exact."""
    start, ratio = Fraction(start), Fraction(ratio)
    return [start * ratio ** j for j in range(count)]


def convergence_sweep(f, c: float, radius: float, t_sequence=None,
                      config: QuadratureConfig | None = None) -> SweepReport:
    """Tabulate K_t(R) against K_0(R) along a decreasing t sequence.

    Hypotheses checked here: the Newton polygon of F must consist of a
    single segment (two or more segments certify reducibility, outside the
    stability theorem's scope; note that a single segment is only a
    necessary condition, which the report records) and 0 < c < c_0(f_0).
    The verdict is "converged" when the final ratio sits inside the
    configured band around 1 and |ratio - 1| decreases monotonically up to
    the trend slack plus quadrature error.
    """
    cfg = config or QuadratureConfig()
    f = as_mixed(f)
    if not f.is_holomorphic():
        raise ValueError("the stability statement concerns holomorphic F")
    polygon = newton.compute_polygon(f.holo)
    if len(polygon.segments) != 1:
        raise ValueError(
            "Newton polygon has several segments, so F is reducible; the "
            "single-segment stability check does not apply (see the uniform "
            "bound operation for reducible inputs)")
    note = ("single-segment Newton polygon holds: necessary for "
            "irreducibility but not sufficient; hypothesis unverified")
    if t_sequence is None:
        t_sequence = default_t_sequence()
    ts = sorted(t_sequence, key=_abs_param, reverse=True)
    if any(_is_zero_param(t) for t in ts):
        raise ValueError("t sequence must be nonzero (K_0 is computed separately)")
    for prev, cur in zip(ts, ts[1:]):
        if not _abs_param(cur) < _abs_param(prev):
            raise ValueError("t sequence must be strictly decreasing in |t|")

    k0 = fiber_integral_K(f, 0, c, radius, cfg)
    rows = []
    any_divergent = False
    for t in ts:
        kr = fiber_integral_K(f, t, c, radius, cfg)
        flags = kr.k_report.refinement_flags
        if kr.k_report.divergent:
            any_divergent = True
        ratio = (kr.k_report.value / k0.k_report.value
                 if k0.k_report.value else math.inf)
        rows.append(SweepRow(t=t, k_t=kr.k_report.value,
                             err=kr.k_report.error_estimate,
                             i_t=kr.i_report.value, j_t=kr.j_report.value,
                             ratio=ratio, flags=flags))

    verdict = "inconclusive"
    if len(rows) >= 2 and not any_divergent and k0.k_report.value > 0:
        final_ok = abs(rows[-1].ratio - 1.0) <= cfg.ratio_band
        errs = [r.err / k0.k_report.value for r in rows]
        devs = [abs(r.ratio - 1.0) for r in rows]
        monotone = all(
            devs[i + 1] <= devs[i] + cfg.trend_slack + errs[i] + errs[i + 1]
            for i in range(len(devs) - 1))
        if final_ok and monotone:
            verdict = "converged"
    return SweepReport(rows=tuple(rows), k0=k0.k_report.value,
                       k0_err=k0.k_report.error_estimate, verdict=verdict,
                       hypothesis_note=note, function=format_function(f))


def uniform_bound_check(f, c: float, radius: float, t_samples,
                        config: QuadratureConfig | None = None) -> BoundReport:
    """Sampled uniform bound sup_t K_t(R) over |t| down the sample list.

    Works for any F, reducible included.  The report flags a monotone
    growth of K_t as t -> 0 beyond the quadrature error, which would
    contradict the uniform-bound theorem and signals a failure.
    """
    cfg = config or QuadratureConfig()
    samples = sorted(t_samples, key=_abs_param, reverse=True)
    if not samples:
        raise ValueError("empty t sample list")
    rows = []
    for t in samples:
        kr = fiber_integral_K(f, t, c, radius, cfg)
        rows.append(SweepRow(t=t, k_t=kr.k_report.value,
                             err=kr.k_report.error_estimate,
                             i_t=kr.i_report.value, j_t=kr.j_report.value,
                             ratio=math.nan, flags=kr.k_report.refinement_flags))
    bound = max(r.k_t + r.err for r in rows)
    growth = growth_trend(rows)
    note = ("K_t grows toward t = 0 with non-decaying slope beyond the "
            "quadrature error; this contradicts the uniform-bound theorem"
            if growth else "")
    return BoundReport(bound=bound, rows=tuple(rows), growth_flag=growth,
                       note=note)


def growth_trend(rows) -> bool:
    """Detect a growth of K_t toward t = 0 that suggests unboundedness.

    A bounded family typically increases toward its t -> 0 limit, so
    monotone growth alone is healthy; divergence shows up as per-log-t
    slopes that persist or grow as t shrinks (log or power blowup), while a
    bounded approach has geometrically decaying slopes.  rows are SweepRow
    records sorted by decreasing |t|.
    """
    tail = list(rows)[-4:]
    if len(tail) < 3:
        return False
    slopes = []
    for a, b in zip(tail, tail[1:]):
        dlog = math.log(_abs_param(a.t)) - math.log(_abs_param(b.t))
        slopes.append((b.k_t - a.k_t) / dlog)
    increasing = all(a.k_t < b.k_t for a, b in zip(tail, tail[1:]))
    persistent = all(s2 >= 0.9 * s1 for s1, s2 in zip(slopes, slopes[1:]))
    rise = tail[-1].k_t - tail[0].k_t
    noise = sum(r.err for r in tail)
    return increasing and persistent and rise > noise


def young_combine(bounds) -> float:
    """Uniform bound for a product from factor bounds via Young's inequality.

    bounds is a list of (l_i, M_i) where l_i is the central vanishing order
    of the i-th factor and M_i its uniform bound computed at the exponent
    c_i = c * l / l_i (caller contract, l = sum of l_i).  Returns
    sum (l_i/l) * M_i.
    """
    bounds = list(bounds)
    if not bounds:
        raise ValueError("empty bound list")
    total = 0
    for (li, mi) in bounds:
        if li < 1 or int(li) != li:
            raise ValueError("orders l_i must be integers >= 1")
        if not math.isfinite(mi):
            raise ValueError("factor bounds must be finite")
        total += li
    return float(sum((li / total) * mi for (li, mi) in bounds))


def exponent_probe_1d(fiber, zero, c: float,
                      config: QuadratureConfig | None = None,
                      r0: float = 0.05, n_annuli: int = 8) -> ProbeResult:
    """Numeric multiplicity estimate from annulus masses around a zero.

    Integrates |f|^(-2c) over the annuli A(r, 2r) centered at the zero for
    r = r0 * 2^-j and fits the slope alpha of log mass against log r; the
    local model mass ~ r^(2 - 2cm) gives m = (2 - alpha)/(2c).  Needs
    c * multiplicity < 1 so the masses stay finite, and at least 4 usable
    annuli.
    """
    cfg = config or QuadratureConfig()
    if c <= 0:
        raise ValueError("the probe needs c > 0")
    if n_annuli < 4:
        raise ValueError("need at least 4 annuli")
    fib = _coerce_fiber(fiber)
    base = _base_fn(fib, c, cfg)
    center = complex(zero) if not hasattr(zero, "to_complex") else zero.to_complex()
    ones = lambda x: np.ones(x.shape, dtype=cfg.real_dtype)

    radii, masses = [], []
    for j in range(n_annuli):
        r = r0 * 2.0 ** (-j)
        ann = Annulus(r, 2.0 * r)
        m, _, _, _, _ = _adaptive_polar(base, [ones], ann, cfg, center=center)
        if math.isfinite(m[0]) and m[0] > 0:
            radii.append(r)
            masses.append(m[0])
    if len(radii) < 4:
        raise ValueError("fewer than 4 usable annuli")
    lr = np.log(np.array(radii))
    lm = np.log(np.array(masses))
    slope, intercept = np.polyfit(lr, lm, 1)
    residual = float(np.max(np.abs(lm - (slope * lr + intercept))))
    m_hat = (2.0 - slope) / (2.0 * c)
    return ProbeResult(multiplicity_estimate=float(m_hat), slope=float(slope),
                       fit_residual=residual, radii=tuple(radii),
                       masses=tuple(masses))
