import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats

from extropy_gof.distributions import Exponential, Uniform, Weibull, from_spec
from extropy_gof.errors import DomainError

FAMILIES = [
    (Exponential(0.7), stats.expon(scale=1 / 0.7)),
    (Uniform(-1.0, 3.0), stats.uniform(loc=-1.0, scale=4.0)),
    (Weibull(2.5, 1.7), stats.weibull_min(2.5, scale=1.7)),
    (Weibull(0.8, 3.0), stats.weibull_min(0.8, scale=3.0)),
]


@pytest.mark.parametrize("dist,ref", FAMILIES, ids=lambda d: repr(d)[:30])
def test_matches_scipy(dist, ref):
    x = np.linspace(-2, 8, 201)
    x = x[x != 0]  # weibull shape<1 has an infinite density at 0
    np.testing.assert_allclose(dist.pdf(x), ref.pdf(x), rtol=1e-12, atol=1e-14)
    np.testing.assert_allclose(dist.cdf(x), ref.cdf(x), rtol=1e-12, atol=1e-14)
    u = np.linspace(0.001, 0.999, 99)
    np.testing.assert_allclose(dist.ppf(u), ref.ppf(u), rtol=1e-12)


@pytest.mark.parametrize("dist,_", FAMILIES, ids=lambda d: repr(d)[:30])
def test_survival_complements_cdf(dist, _):
    x = np.linspace(-1, 10, 500)
    np.testing.assert_allclose(dist.sf(x), 1 - dist.cdf(x), atol=1e-12)


@given(u=st.floats(1e-9, 1 - 1e-9), rate=st.floats(0.01, 100), shape=st.floats(0.2, 5))
def test_cdf_inverts_quantile(u, rate, shape):
    for dist in (Exponential(rate), Uniform(0, rate), Weibull(shape, rate)):
        assert abs(float(dist.cdf(dist.ppf(u))) - u) < 1e-10


def test_density_zero_outside_support():
    assert Exponential(2).pdf(-0.1) == 0
    assert Uniform(0, 1).pdf(1.5) == 0 and Uniform(0, 1).pdf(-0.5) == 0
    assert Weibull(2, 1).pdf(-3) == 0


def test_weibull_one_one_is_unit_exponential():
    x = np.linspace(0, 20, 101)
    np.testing.assert_allclose(Weibull(1, 1).pdf(x), Exponential(1).pdf(x), rtol=1e-15)
    u = np.linspace(0, 0.999, 50)
    np.testing.assert_array_equal(Weibull(1, 1).from_uniform(u), Exponential(1).from_uniform(u))


@pytest.mark.parametrize("bad", [lambda: Exponential(0), lambda: Exponential(-1), lambda: Uniform(1, 1),
                                 lambda: Weibull(0, 1), lambda: Weibull(1, -2)])
def test_invalid_parameters(bad):
    with pytest.raises(DomainError):
        bad()


def test_from_spec():
    assert from_spec("Weibull", shape=1.0, scale=2.0) == Weibull(1.0, 2.0)
    with pytest.raises(DomainError):
        from_spec("lindley")
