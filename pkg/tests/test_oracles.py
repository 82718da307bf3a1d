import itertools
import math

import mpmath
import numpy as np
import pytest

from extropy_gof.distributions import Exponential, Uniform, Weibull
from extropy_gof.errors import DomainError
from extropy_gof.oracles import (
    RecordSpec,
    coefficient,
    cre_numeric,
    cre_upper_record_exp,
    cre_upper_record_exp_via_extropy,
    delta_true,
    extropy_exponential,
    extropy_lower_record_exp,
    extropy_numeric,
    extropy_upper_record_exp,
    pdf_normalization,
    record_cdf,
    record_pdf,
)

GRID = list(itertools.product((1, 2, 3), repeat=2))


def classical_upper(k, lam):
    # classical k-th upper record
    return -lam * math.gamma(2 * k - 1) / (2 ** (2 * k) * math.gamma(k) ** 2)


def classical_lower(k, lam):
    # classical k-th lower record
    return -lam * math.gamma(2 * k - 1) * (2 ** (2 * k - 1) - 1) / (2 ** (2 * k) * math.gamma(k) ** 2)


class TestClosedForms:
    @pytest.mark.parametrize("lam,expected", [(1, -0.25), (4, -1.0), (0.5, -0.125)])
    def test_extropy_exponential(self, lam, expected):
        assert extropy_exponential(lam) == expected

    @pytest.mark.parametrize("lam", [0, -1, float("inf"), float("nan")])
    def test_bad_rate(self, lam):
        with pytest.raises(DomainError):
            extropy_exponential(lam)

    @pytest.mark.parametrize("n,k,expected", [(2, 2, 1.0), (1, 1, 1.0), (2, 1, 0.5)])
    def test_coefficient(self, n, k, expected):
        assert coefficient(n, k) == pytest.approx(expected, rel=1e-15)

    def test_coefficient_no_overflow(self):
        # Gamma(59) / Gamma(30)**2 = 58! / (29!)**2 = C(58, 29)
        exact = 3 * math.comb(58, 29) / 2**58
        assert coefficient(30, 3) == pytest.approx(exact, rel=1e-12)

    @pytest.mark.parametrize("n,k", [(0, 1), (1, 0), (1.5, 1), (True, 1)])
    def test_coefficient_domain(self, n, k):
        with pytest.raises(DomainError):
            coefficient(n, k)

    def test_upper_record_values(self):
        assert extropy_upper_record_exp(RecordSpec.upper(2, 2), 1) == pytest.approx(-0.25, rel=1e-15)
        assert extropy_upper_record_exp(RecordSpec.upper(1, 1), 1) == pytest.approx(-0.25, rel=1e-15)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
    def test_upper_record_reduces_to_classical(self, k):
        assert extropy_upper_record_exp(RecordSpec.upper(k, 1), 1.7) == pytest.approx(classical_upper(k, 1.7), rel=1e-13)

    @pytest.mark.parametrize("lam", [0.5, 1.0, 2.0, 7.5])
    @pytest.mark.parametrize("n,k", list(itertools.product(range(1, 6), repeat=2)))
    def test_upper_record_is_coefficient_times_parent(self, n, k, lam):
        assert extropy_upper_record_exp(RecordSpec.upper(n, k), lam) == pytest.approx(
            coefficient(n, k) * extropy_exponential(lam), rel=1e-14
        )

    def test_lower_record_values(self):
        assert extropy_lower_record_exp(RecordSpec.lower(1, 1), 1) == pytest.approx(-0.25, rel=1e-15)
        assert extropy_lower_record_exp(RecordSpec.lower(2, 1), 1) == pytest.approx(-0.875, rel=1e-15)

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_lower_record_reduces_to_classical(self, k):
        assert extropy_lower_record_exp(RecordSpec.lower(k, 1), 2.0) == pytest.approx(classical_lower(k, 2.0), abs=1e-12)

    def test_lower_record_against_mpmath(self):
        # n=2, k=1, lam=1: -1/2 * integral of (-log(1-e^-x))^2 e^-2x
        val = -0.5 * mpmath.quad(lambda x: (-mpmath.log(1 - mpmath.exp(-x))) ** 2 * mpmath.exp(-2 * x), [0, 1, mpmath.inf])
        assert float(val) == pytest.approx(-0.875, abs=1e-12)

    @pytest.mark.parametrize("n,k,expected", [(1, 1, -0.25), (1, 2, -0.125)])
    def test_cre_values(self, n, k, expected):
        assert cre_upper_record_exp(RecordSpec.upper(n, k), 1) == pytest.approx(expected, rel=1e-15)

    def test_cre_against_mpmath(self):
        # n=2, k=1: survival of the 2nd record is e^-x (1 + x)
        val = -0.5 * mpmath.quad(lambda x: (mpmath.exp(-x) * (1 + x)) ** 2, [0, mpmath.inf])
        assert cre_upper_record_exp(RecordSpec.upper(2, 1), 1) == pytest.approx(float(val), abs=1e-12)
        assert cre_numeric(Exponential(1), RecordSpec.upper(2, 1)) == pytest.approx(float(val), abs=1e-8)

    @pytest.mark.parametrize("n,k", GRID)
    def test_cre_two_forms_agree(self, n, k):
        spec = RecordSpec.upper(n, k)
        assert cre_upper_record_exp(spec, 1.3) == pytest.approx(cre_upper_record_exp_via_extropy(spec, 1.3), rel=1e-14)

    def test_orientation_is_checked(self):
        with pytest.raises(DomainError):
            extropy_upper_record_exp(RecordSpec.lower(1, 1), 1)
        with pytest.raises(DomainError):
            extropy_lower_record_exp(RecordSpec.upper(1, 1), 1)


class TestRecordLaws:
    def test_first_record_is_parent(self):
        x = np.linspace(0, 10, 50)
        d = Exponential(1)
        np.testing.assert_allclose(record_pdf(d, RecordSpec.upper(1, 1), x), np.exp(-x), rtol=1e-14)
        for dist in (d, Uniform(0, 2), Weibull(2, 1)):
            np.testing.assert_allclose(record_cdf(dist, RecordSpec.upper(1, 1), x), dist.cdf(x), atol=1e-14)

    def test_pdf_value(self):
        # 4 * x * e^-x * e^-x at x = 1
        assert record_pdf(Exponential(1), RecordSpec.upper(2, 2), 1.0) == pytest.approx(4 * math.exp(-2), rel=1e-14)
        assert 4 * math.exp(-2) == pytest.approx(0.541341, abs=1e-6)

    def test_cdf_value(self):
        assert record_cdf(Exponential(1), RecordSpec.upper(2, 2), 1.0) == pytest.approx(1 - 3 * math.exp(-2), rel=1e-14)
        assert 1 - 3 * math.exp(-2) == pytest.approx(0.593994, abs=1e-6)

    @pytest.mark.parametrize(
        "dist,spec",
        [
            (Uniform(0, 1), RecordSpec.lower(2, 3)),
            (Uniform(0, 1), RecordSpec.upper(3, 1)),
            (Exponential(2), RecordSpec.upper(3, 2)),
            (Exponential(2), RecordSpec.lower(2, 2)),
            (Weibull(1.5, 2), RecordSpec.upper(2, 2)),
        ],
    )
    def test_pdf_normalised(self, dist, spec):
        assert pdf_normalization(dist, spec) == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize(
        "dist,spec",
        [
            (Exponential(1), RecordSpec.upper(2, 2)),
            (Exponential(0.5), RecordSpec.lower(3, 2)),
            (Uniform(0, 1), RecordSpec.lower(2, 3)),
            (Weibull(2, 1), RecordSpec.upper(3, 1)),
        ],
    )
    def test_cdf_derivative_is_pdf(self, dist, spec):
        lo, hi = dist.support
        x = np.linspace(lo + 0.05, min(hi, 6.0) - 0.05, 60)
        h = 1e-5
        fd = (record_cdf(dist, spec, x + h) - record_cdf(dist, spec, x - h)) / (2 * h)
        np.testing.assert_allclose(fd, record_pdf(dist, spec, x), atol=1e-5)
        assert np.all(np.diff(record_cdf(dist, spec, x)) >= 0)

    def test_cdf_limits(self):
        spec = RecordSpec.upper(3, 2)
        assert record_cdf(Exponential(1), spec, 0.0) == 0.0
        assert record_cdf(Exponential(1), spec, 200.0) == pytest.approx(1.0, abs=1e-15)
        assert record_cdf(Uniform(0, 1), RecordSpec.lower(2, 2), 1.0) == pytest.approx(1.0)

    def test_boundary_values(self):
        # log of the survival diverges at the right end of a bounded support
        assert record_pdf(Uniform(0, 1), RecordSpec.upper(2, 1), 1.0) == 0.0
        assert record_pdf(Uniform(0, 1), RecordSpec.lower(2, 1), 0.0) == 0.0
        assert record_pdf(Uniform(0, 1), RecordSpec.upper(1, 1), 1.0) == 1.0
        assert record_pdf(Exponential(1), RecordSpec.upper(2, 2), -1.0) == 0.0


class TestQuadrature:
    @pytest.mark.parametrize(
        "dist,spec,expected",
        [
            (Exponential(1), None, -0.25),
            (Exponential(1), RecordSpec.upper(2, 2), -0.25),
            (Uniform(0, 1), None, -0.5),
        ],
    )
    def test_extropy_numeric(self, dist, spec, expected):
        assert extropy_numeric(dist, spec) == pytest.approx(expected, abs=1e-8)

    @pytest.mark.parametrize("lam", [0.5, 1, 2])
    @pytest.mark.parametrize("n,k", GRID)
    def test_against_closed_forms(self, lam, n, k):
        d = Exponential(lam)
        assert extropy_numeric(d, RecordSpec.upper(n, k)) == pytest.approx(
            extropy_upper_record_exp(RecordSpec.upper(n, k), lam), abs=1e-8
        )
        assert extropy_numeric(d, RecordSpec.lower(n, k)) == pytest.approx(
            extropy_lower_record_exp(RecordSpec.lower(n, k), lam), abs=1e-8
        )
        assert cre_numeric(d, RecordSpec.upper(n, k)) == pytest.approx(
            cre_upper_record_exp(RecordSpec.upper(n, k), lam), abs=1e-8
        )

    @pytest.mark.parametrize("a", [0.5, 3.0, 10.0])
    def test_linear_in_rate(self, a):
        assert extropy_numeric(Exponential(a * 1.3)) == pytest.approx(a * extropy_numeric(Exponential(1.3)), abs=1e-8)

    def test_negative_for_continuous_laws(self):
        for d in (Uniform(2, 5), Weibull(2, 1), Weibull(0.9, 2), Exponential(3)):
            assert extropy_numeric(d) < 0

    def test_weibull_closed_form(self):
        # Weibull(2, 1): integral of (2x e^{-x^2})^2 = sqrt(pi/2)/2
        assert extropy_numeric(Weibull(2, 1)) == pytest.approx(-0.5 * math.sqrt(math.pi / 2) / 2, abs=1e-10)


class TestCharacterization:
    @pytest.mark.parametrize("lam", [0.5, 1, 3])
    @pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (3, 2)])
    def test_vanishes_for_exponential(self, lam, n, k):
        assert abs(delta_true(Exponential(lam), n, k)) < 1e-7

    def test_uniform_value(self):
        # J(U_{2,2}) of U(0,1) is -8 * Gamma(3)/3**3 = -16/27; minus J(X) = -1/2
        val = delta_true(Uniform(0, 1), 2, 2)
        assert val == pytest.approx(-16 / 27 + 0.5, abs=1e-9)
        assert abs(val) > 1e-3

    def test_weibull_one_one(self):
        assert abs(delta_true(Weibull(1, 1), 2, 2)) < 1e-7

    def test_nonexponential_weibull(self):
        assert abs(delta_true(Weibull(2, 1), 2, 2)) > 1e-3
