"""Fiber zeros, exponents, the resolution-data formula, semicontinuity."""

import math
import random
from fractions import Fraction

import pytest

from cselab import (
    BivariatePoly,
    Divisor,
    Exponent,
    GaussianRational,
    IdenticallyZeroError,
    MixedFunction,
    builtin_catalog,
    central_exponent,
    fiber_exponent,
    fiber_zeros,
    lct_from_resolution,
    lct_polygon_estimate,
    load_catalog,
    parse_expression,
    semicontinuity_check,
    volume_density,
)
from cselab.degeneration import catalog_to_jsonable

X = BivariatePoly.variable("x")
Y = BivariatePoly.variable("y")


def diag_mixed():
    """x + y - 2|xy|^(1/2): vanishes to order 2 along the diagonal fibers."""
    return MixedFunction(X + Y, -2, 1)


class TestVolumeDensity:
    def test_formula_instance(self):
        assert volume_density(1, 2) == pytest.approx(5.0)

    def test_symmetry_point(self):
        assert volume_density(3 + 4j, 4 - 3j) == pytest.approx(2.0)

    def test_y_chart(self):
        assert volume_density(2, 1, chart="y") == pytest.approx(5.0)

    def test_chart_breakdown(self):
        with pytest.raises(ZeroDivisionError):
            volume_density(0, 1)
        with pytest.raises(ZeroDivisionError):
            volume_density(1, 0, chart="y")


class TestFiberZeros:
    def test_line_exact_conjugate_pair(self):
        zs = fiber_zeros(X + Y, Fraction(1, 100), delta=0.1)
        assert len(zs) == 2
        assert all(z.multiplicity == 1 and z.exactness == "exact" for z in zs)
        locs = sorted(str(z.location) for z in zs)
        assert locs == ["-1/10*i", "1/10*i"]

    def test_radial_double_zero(self):
        s = Fraction(1, 10)
        zs = fiber_zeros(diag_mixed(), s * s, delta=0.2)
        assert len(zs) == 1
        z = zs[0]
        assert z.multiplicity == 2
        assert z.exactness == "exact"
        assert z.location == GaussianRational(s)

    def test_cusp_five_simple_zeros(self):
        zs = fiber_zeros(Y * Y - X ** 3, Fraction(1, 10000), delta=0.1)
        assert len(zs) == 5
        assert all(z.multiplicity == 1 for z in zs)
        radius = abs(zs[0].location_complex())
        assert radius == pytest.approx(float(Fraction(1, 10000)) ** (2 / 5))

    def test_polydisc_filter_uses_both_coordinates(self):
        # fiber zeros of y^2 - x^5 sit at |x| = t^(2/7) which is outside
        # the polydisc at t = 1/100 (x large), but inside at t = 1e-5
        f = Y * Y - X ** 5
        assert fiber_zeros(f, Fraction(1, 100), delta=0.1) == []
        assert len(fiber_zeros(f, Fraction(1, 10 ** 5), delta=0.1)) == 7

    def test_identically_zero_fiber(self):
        # y^2 + x*y^3 restricted to xy = -1 vanishes identically
        f = Y * Y + X * Y ** 3
        with pytest.raises(IdenticallyZeroError):
            fiber_zeros(f, -1, delta=math.inf)

    def test_numeric_path_matches_exact_multiplicities(self):
        f = (X + Y) ** 2
        exact = fiber_zeros(f, Fraction(1, 1000), delta=0.2)
        numeric = fiber_zeros(f, 1e-3, delta=0.2)
        assert sorted(z.multiplicity for z in exact) == [2, 2]
        assert sorted(z.multiplicity for z in numeric) == [2, 2]
        for ze in exact:
            zn = min(numeric,
                     key=lambda z: abs(z.location_complex() - ze.location_complex()))
            assert abs(ze.location_complex() - zn.location_complex()) < 1e-8
            assert zn.multiplicity == ze.multiplicity


class TestFiberExponent:
    def test_radial_half(self):
        s = Fraction(1, 10)
        assert fiber_exponent(diag_mixed(), s * s, (s, s)) == Exponent(Fraction(1, 2))

    def test_line_simple_zero_exponent_one(self):
        t = Fraction(1, 100)
        zs = fiber_zeros(X + Y, t, delta=0.1)
        for z in zs:
            assert fiber_exponent(X + Y, t, z.location) == Exponent(1)

    def test_float_point_near_simple_zero(self):
        # the zero at x = i*sqrt(t) located numerically still reports 1
        t = Fraction(1, 100)
        x0 = 1j * math.sqrt(float(t))
        assert fiber_exponent(X + Y, t, x0) == Exponent(1)

    def test_nonvanishing_point_infinite(self):
        assert fiber_exponent(X + Y, Fraction(1, 100), Fraction(1, 2)).is_infinite
        assert fiber_exponent(X + Y, Fraction(1, 100), 0.5 + 0.5j).is_infinite

    def test_min_over_components_alias(self):
        f = Y * Y - X ** 3
        assert central_exponent(f, "min-over-components") == \
            central_exponent(f, "min")

    def test_point_off_fiber_rejected(self):
        with pytest.raises(ValueError):
            fiber_exponent(X + Y, Fraction(1, 100), (Fraction(1, 2), Fraction(1, 2)))


class TestCentralExponent:
    def test_cusp(self):
        f = Y * Y - X ** 3
        assert central_exponent(f, "min") == Exponent(Fraction(1, 3))
        assert central_exponent(f, "x-axis") == Exponent(Fraction(1, 3))
        assert central_exponent(f, "y-axis") == Exponent(Fraction(1, 2))
        assert central_exponent(f, "max") == Exponent(Fraction(1, 2))

    def test_radial_term_vanishes_on_axes(self):
        assert central_exponent(diag_mixed(), "min") == Exponent(1)

    def test_axis_restriction_identically_zero(self):
        assert central_exponent(X, "y-axis") == Exponent(0)
        assert central_exponent(X, "min") == Exponent(0)

    def test_matches_polygon_endpoints(self):
        rng = random.Random(20260809)
        for _ in range(40):
            pts = {(rng.randrange(0, 5), rng.randrange(0, 5))
                   for _ in range(rng.randrange(1, 6))}
            f = BivariatePoly({p: rng.choice([1, -1, 2]) for p in pts})
            rx, ry = f.restrict_x_axis(), f.restrict_y_axis()
            if rx.is_zero() or ry.is_zero() or rx.valuation() == 0 \
                    or ry.valuation() == 0:
                continue
            expected = Exponent(min(Fraction(1, rx.valuation()),
                                    Fraction(1, ry.valuation())))
            assert central_exponent(f, "min") == expected


class TestLctFromResolution:
    def test_order_m_point(self):
        for m in range(1, 6):
            res = lct_from_resolution([Divisor(0, m)], True)
            assert res.value == Exponent(Fraction(1, m))
            assert res.label == "equality"

    def test_smooth_divisor(self):
        assert lct_from_resolution([Divisor(0, 1)], True).value == Exponent(1)

    def test_cusp_blowup_chain(self):
        # three point blowups of the cusp: multiplicities (2, 3, 6) with
        # discrepancies (1, 2, 4) plus the strict transform
        data = [Divisor(0, 1), Divisor(1, 2), Divisor(2, 3), Divisor(4, 6)]
        assert lct_from_resolution(data, True).value == Exponent(Fraction(5, 6))

    def test_upper_bound_label(self):
        res = lct_from_resolution([Divisor(0, 2)], False)
        assert res.label == "upper bound"

    def test_divisors_not_through_point_ignored(self):
        data = [Divisor(0, 5, through=False), Divisor(0, 1, through=True)]
        assert lct_from_resolution(data, True).value == Exponent(1)

    def test_empty_and_all_missing_rejected(self):
        with pytest.raises(ValueError):
            lct_from_resolution([], True)
        with pytest.raises(ValueError):
            lct_from_resolution([Divisor(0, 1, through=False)], True)

    def test_monotone_under_extra_divisors(self):
        base = [Divisor(0, 1), Divisor(1, 2)]
        v0 = lct_from_resolution(base, False).value
        v1 = lct_from_resolution(base + [Divisor(1, 3)], False).value
        assert v1 <= v0

    def test_catalog_agrees_with_polygon_estimate(self):
        for name, entry in builtin_catalog().items():
            res = lct_from_resolution(entry.divisors, entry.is_log_resolution)
            est = lct_polygon_estimate(parse_expression(entry.curve))
            assert res.value == est, name

    def test_catalog_roundtrip_through_json(self, tmp_path):
        import json

        path = tmp_path / "catalog.json"
        path.write_text(json.dumps(catalog_to_jsonable(builtin_catalog())))
        loaded = load_catalog(path)
        assert set(loaded) == set(builtin_catalog())
        cusp = loaded["cusp"]
        assert lct_from_resolution(cusp.divisors, cusp.is_log_resolution).value \
            == Exponent(Fraction(5, 6))


class TestSemicontinuity:
    T_SAMPLES = [Fraction(1, 10 ** k) for k in range(2, 6)]

    def test_cusp_holds(self):
        report = semicontinuity_check(Y * Y - X ** 3, self.T_SAMPLES)
        assert report.verdict == "holds"
        assert report.central_max == Exponent(Fraction(1, 2))

    def test_double_line_holds_with_equality(self):
        report = semicontinuity_check((X + Y) ** 2, self.T_SAMPLES)
        assert report.verdict == "holds"
        assert report.central_max == Exponent(Fraction(1, 2))
        exps = {e for row in report.rows for _, e in row.zeros}
        assert exps == {Exponent(Fraction(1, 2))}

    def test_radial_family_violates(self):
        samples = [Fraction(1, 100), Fraction(1, 10 ** 4)]
        report = semicontinuity_check(diag_mixed(), samples)
        assert report.verdict == "violated"
        assert not report.holomorphic
        t, zero, cmax, fexp = report.witness
        assert cmax == Exponent(1)
        assert fexp == Exponent(Fraction(1, 2))

    def test_largest_holding_t_reported(self):
        report = semicontinuity_check(Y * Y - X ** 3, self.T_SAMPLES)
        assert report.largest_t_holding == Fraction(1, 100)

    def test_zero_t_rejected(self):
        with pytest.raises(ValueError):
            semicontinuity_check(X + Y, [0])

    def test_vanishing_family_rejected(self):
        with pytest.raises(IdenticallyZeroError):
            semicontinuity_check(BivariatePoly.zero(), [Fraction(1, 10)])

    def test_holomorphic_random_corpus_holds(self):
        # seeded corpus of small polynomials with F(0,0) = 0 and both axis
        # restrictions nonzero; the semicontinuity verdict must be "holds"
        rng = random.Random(1022)
        samples = [Fraction(1, 10 ** k) for k in range(3, 6)]
        tested = 0
        while tested < 25:
            n_terms = rng.randrange(2, 6)
            support = {}
            for _ in range(n_terms):
                m, n = rng.randrange(0, 4), rng.randrange(0, 4)
                if (m, n) == (0, 0):
                    continue
                support[(m, n)] = GaussianRational(
                    rng.choice([1, -1, 2, -2]), rng.choice([0, 0, 1, -1]))
            f = BivariatePoly(support)
            if f.is_zero() or f.restrict_x_axis().is_zero() \
                    or f.restrict_y_axis().is_zero():
                continue
            report = semicontinuity_check(f, samples)
            assert report.verdict == "holds", str(f)
            tested += 1
