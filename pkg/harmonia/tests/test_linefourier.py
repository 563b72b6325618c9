import numpy as np
import pytest
from numpy.testing import assert_allclose

from harmonia.errors import DimensionMismatch, PreconditionError
from harmonia.LineFourier import (ClosedFormFn, HalfPlanePoint,
                                  LineAtomicMeasure, LineFunction,
                                  approx_identity_error, cauchy_riemann_residual,
                                  convolve_line, fn_measure_convolve,
                                  ft_closed_form, ft_quadrature, inversion_check,
                                  measure_convolve, measure_ft,
                                  measure_total_variation, modulate,
                                  multiplication_formula_check,
                                  multiplication_tolerance, pa_hat_integral,
                                  poisson_convolve, poisson_mass, poisson_Rn,
                                  riemann_lebesgue_profile, sample_closed_form,
                                  translate)


def tent(L=2.0, M=400):
    shell = LineFunction(1, L, M, np.zeros(M))
    return shell.with_values(np.maximum(0.0, 1 - np.abs(shell.axis())))


def tent_2d(L=2.0, M=200):
    t = tent(L, M).values
    return LineFunction(2, L, M, np.outer(t, t))


def random_compact(rng, L=2.0, M=64, dim=1):
    values = rng.standard_normal((M,) * dim) + 1j * rng.standard_normal((M,) * dim)
    values[(0,) * dim] = 0
    return LineFunction(dim, L, M, values)


def test_line_function_validation():
    with pytest.raises(PreconditionError):
        LineFunction(1, 1.0, 4, np.zeros(4))
    with pytest.raises(PreconditionError):
        LineFunction(1, 1.0, 8, np.zeros(8), decay='slow')
    with pytest.raises(DimensionMismatch):
        LineFunction(2, 1.0, 8, np.zeros(8))
    f = LineFunction(1, 2.0, 16, np.ones(16))
    assert f.h == 0.25
    assert_allclose(f.axis()[[0, -1]], [-2.0, 1.75])
    assert_allclose(f.integral(), 4.0)


def test_closed_form_validation():
    with pytest.raises(PreconditionError):
        ClosedFormFn.qPlus(0)
    with pytest.raises(PreconditionError):
        ClosedFormFn.indicator(1, 0)
    with pytest.raises(PreconditionError):
        ClosedFormFn('gauss', 1.0)
    g = ClosedFormFn.qPlus(1.0)
    assert g(0.0) == 0.5
    assert g(-1.0) == 0.0
    assert_allclose(g(2.0), np.exp(-2.0))
    assert ClosedFormFn.product(g, ClosedFormFn.indicator(0, 1)).dim == 2


def test_ft_quadrature_indicator():
    f = sample_closed_form(ClosedFormFn.indicator(-1, 1), 2.0, 64)
    assert_allclose(ft_quadrature(f, 0.0), 2.0, rtol=1e-14)
    with pytest.raises(PreconditionError):
        ft_quadrature(f, 100.0)
    with pytest.raises(DimensionMismatch):
        ft_quadrature(f, (0.0, 0.0))


@pytest.mark.parametrize('g', [ClosedFormFn.pA(1.0), ClosedFormFn.qPlus(1.0),
                               ClosedFormFn.qMinus(2.0)])
def test_ft_quadrature_matches_closed_form(g):
    f = sample_closed_form(g, 30.0, 40000)
    for xi in (0.0, 0.5, 1.0, 2.0):
        assert_allclose(ft_quadrature(f, xi), ft_closed_form(g, xi), atol=1e-6)
        assert abs(ft_quadrature(f, xi)) <= f.l1_norm() + 1e-6


def test_pa_transform_values():
    f = sample_closed_form(ClosedFormFn.pA(1.0), 30.0, 40000)
    for xi in (0.0, 1.0, 2.0):
        assert_allclose(ft_quadrature(f, xi), 2 / (1 + xi ** 2), atol=1e-6)


def test_ft_quadrature_is_linear(rng):
    f = random_compact(rng)
    g = random_compact(rng)
    a, b = 2 - 1j, 0.5j
    for xi in (0.0, 1.0, -3.0):
        assert_allclose(ft_quadrature(a * f + b * g, xi),
                        a * ft_quadrature(f, xi) + b * ft_quadrature(g, xi),
                        atol=1e-12)


def test_ft_quadrature_two_dimensional():
    g = ClosedFormFn.product(ClosedFormFn.indicator(-1, 1),
                             ClosedFormFn.indicator(0, 1))
    f = sample_closed_form(g, 2.0, 64)
    assert_allclose(ft_quadrature(f, (0.0, 0.0)), 2.0, rtol=1e-13)
    one = sample_closed_form(ClosedFormFn.indicator(-1, 1), 2.0, 64)
    two = sample_closed_form(ClosedFormFn.indicator(0, 1), 2.0, 64)
    assert_allclose(ft_quadrature(f, (0.7, -1.3)),
                    ft_quadrature(one, 0.7) * ft_quadrature(two, -1.3),
                    atol=1e-13)


def test_closed_form_examples():
    q = ClosedFormFn.qPlus(1.0)
    assert ft_closed_form(q, 0) == 1
    assert_allclose(ft_closed_form(q, -1j), 0.5)
    assert_allclose(ft_closed_form(ClosedFormFn.indicator(0, 1), 0), 1.0)
    with pytest.raises(PreconditionError):
        ft_closed_form(q, 1j)
    with pytest.raises(PreconditionError):
        ft_closed_form(ClosedFormFn.qMinus(1.0), -1j)
    with pytest.raises(PreconditionError):
        ft_closed_form(ClosedFormFn.pA(1.0), 0.5j)
    with pytest.raises(PreconditionError):
        ft_closed_form(q, HalfPlanePoint(-1j, 1))
    assert_allclose(ft_closed_form(q, HalfPlanePoint(-1j, -1)), 0.5)


def test_indicator_lower_half_plane():
    g = ClosedFormFn.indicator(0, 1)
    for zeta in (3 - 1j, -5 - 0.1j, -20j):
        assert abs(ft_closed_form(g, zeta)) <= g.l1_norm() + 1e-12
    with pytest.raises(PreconditionError):
        ft_closed_form(ClosedFormFn.indicator(-1, 1), -1j)


def test_half_plane_bound(rng):
    for a in (0.5, 1.0, 3.0):
        q = ClosedFormFn.qPlus(a)
        for _ in range(100):
            zeta = complex(rng.uniform(-50, 50), -rng.exponential(2.0))
            assert abs(ft_closed_form(q, zeta)) <= 1 / a * (1 + 1e-12)


def test_cauchy_riemann():
    q = ClosedFormFn.qPlus(1.0)
    xi, eta = np.meshgrid(np.linspace(-3, 3, 7), np.linspace(-2, -0.5, 4))
    assert cauchy_riemann_residual(q, (xi + 1j * eta).ravel()) <= 1e-6
    product = ClosedFormFn.product(q, ClosedFormFn.qMinus(2.0))
    assert_allclose(ft_closed_form(product, (-1j, 1j)), 0.5 * (1 / 3))


def test_convolve_indicators_gives_tent():
    f = sample_closed_form(ClosedFormFn.indicator(0, 1), 2.0, 128)
    conv = convolve_line(f, f)
    assert conv.L == 4.0 and conv.M == 256
    x = conv.axis()
    peak = int(np.argmax(conv.values.real))
    assert_allclose(x[peak], 1.0)
    assert_allclose(conv.values[peak], 1 - f.h / 2, atol=1e-13)
    expected = np.maximum(0.0, 1 - np.abs(x - 1))
    assert np.max(np.abs(conv.values - expected)) <= f.h


def test_convolve_with_zero():
    f = sample_closed_form(ClosedFormFn.pA(1.0), 4.0, 64)
    zero = f.with_values(np.zeros(64))
    assert not np.any(convolve_line(f, zero).values)
    with pytest.raises(DimensionMismatch):
        convolve_line(f, LineFunction(1, 1.0, 64, np.zeros(64)))


def test_convolution_theorem_on_line(rng):
    for _ in range(20):
        f = random_compact(rng)
        g = random_compact(rng)
        fg = convolve_line(f, g)
        assert_allclose(fg.integral(), f.integral() * g.integral(),
                        rtol=1e-10, atol=1e-12)
        assert_allclose(fg.values, convolve_line(g, f).values, atol=1e-12)
        for xi in (0.0, 0.3, -1.1, 2.5):
            assert_allclose(ft_quadrature(fg, xi),
                            ft_quadrature(f, xi) * ft_quadrature(g, xi),
                            atol=1e-6)


def test_translate_and_modulate():
    f = sample_closed_form(ClosedFormFn.indicator(0, 1), 2.0, 64)
    same = translate(f, 0.0)
    assert np.array_equal(same.values, f.values)

    moved = translate(f, 1.0)
    expected = sample_closed_form(ClosedFormFn.indicator(1, 2), moved.L, moved.M)
    assert np.array_equal(moved.values, expected.values)
    for xi in (0.0, 0.5, 2.0):
        assert_allclose(ft_quadrature(moved, xi),
                        np.exp(-1j * xi) * ft_quadrature(f, xi), atol=1e-13)
    with pytest.raises(PreconditionError):
        translate(f, 0.01)

    for w in (0.5, -2.0):
        m = modulate(f, w)
        assert_allclose(ft_quadrature(m, w), ft_quadrature(f, 0.0), atol=1e-13)
        assert_allclose(ft_quadrature(m, 1.0), ft_quadrature(f, 1.0 - w),
                        atol=1e-13)
    assert_allclose(modulate(f, 0.5j).values,
                    f.values * np.exp(-0.5 * f.axis()), atol=1e-15)
    decaying = sample_closed_form(ClosedFormFn.pA(1.0), 4.0, 64)
    with pytest.raises(PreconditionError):
        modulate(decaying, 0.5j)


def test_poisson_kernel_on_line():
    assert_allclose(poisson_Rn(1.0, 0.0), 1 / np.pi)
    assert_allclose(poisson_Rn((1.0, 2.0), (0.0, 1.0)),
                    1 / np.pi * 2 / (np.pi * 5))
    with pytest.raises(PreconditionError):
        poisson_Rn(0.0, 1.0)
    for a in (0.5, 1.0, 2.0):
        assert_allclose(poisson_mass(a), 1.0, atol=1e-8)


def test_approximate_identity_decreases():
    f = tent()
    errors = [approx_identity_error(f, a) for a in (0.1, 0.01, 0.001)]
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] < 0.02


def test_poisson_convolve_methods_agree():
    f = tent(M=800)
    x = np.array([-0.5, 0.0, 0.25, 1.5])
    linear = poisson_convolve(f, 0.3, x, method='linear')
    quad = poisson_convolve(f, 0.3, x, method='quadrature')
    assert_allclose(linear, quad, atol=1e-4)
    with pytest.raises(PreconditionError):
        poisson_convolve(f, 0.3, x, method='fft')
    with pytest.raises(DimensionMismatch):
        poisson_convolve(tent_2d(), 0.3, [0.0, 0.0, 0.0])


def test_poisson_convolve_factors_across_axes():
    f = tent(M=200)
    f2 = tent_2d(M=200)
    points = np.array([[0.0, 0.0], [0.3, -0.5], [1.2, 0.1]])
    for method in ('linear', 'quadrature'):
        two = (poisson_convolve(f, 0.3, points[:, 0], method=method)
               * poisson_convolve(f, 0.5, points[:, 1], method=method))
        assert_allclose(poisson_convolve(f2, (0.3, 0.5), points, method=method),
                        two, rtol=1e-10, atol=1e-14)
    linear = poisson_convolve(f2, 0.5, points, method='linear')
    quad = poisson_convolve(f2, 0.5, points, method='quadrature')
    assert linear.shape == (3,)
    assert_allclose(linear, quad, atol=2e-3)


def test_approximate_identity_off_grid():
    f = sample_closed_form(ClosedFormFn.pA(1.0), 20.0, 4000)
    with pytest.raises(PreconditionError):
        approx_identity_error(tent(), 0.1, points=[0.123])
    coarse = approx_identity_error(f, 0.1, points=[0.123, -0.77])
    fine = approx_identity_error(f, 0.01, points=[0.123, -0.77])
    assert fine < coarse


def test_multiplication_formula():
    ind = sample_closed_form(ClosedFormFn.indicator(-1, 1), 2.0, 64)
    res = multiplication_formula_check(ind, ind)
    assert abs(res.lhs - res.rhs) <= multiplication_tolerance(ind, ind)

    f = sample_closed_form(ClosedFormFn.indicator(0, 1), 2.0, 64)
    g = tent(M=64)
    res = multiplication_formula_check(f, g)
    assert abs(res.lhs - res.rhs) <= multiplication_tolerance(f, g)

    zero = f.with_values(np.zeros(64))
    res = multiplication_formula_check(f, zero)
    assert res.lhs == 0 and res.rhs == 0

    decaying = sample_closed_form(ClosedFormFn.pA(1.0), 2.0, 64)
    with pytest.raises(PreconditionError):
        multiplication_formula_check(decaying, g)


def test_inversion_identity():
    f = tent(M=400)
    res = inversion_check(f, 0.5, 0.3)
    assert res.tail_bound < 1e-6
    assert abs(res.lhs - res.rhs) <= 1e-5 * (1 + f.l1_norm())


def test_inversion_limit():
    f = tent(M=800)
    res = inversion_check(f, 0.001, 0.0)
    assert abs(res.lhs / (2 * np.pi) - 1.0) <= 0.02

    ind = sample_closed_form(ClosedFormFn.indicator(-1, 1), 2.0, 400)
    far = [abs(inversion_check(ind, a, 3.0).rhs) / (2 * np.pi) for a in (0.1, 0.01)]
    assert far[1] < far[0] < 0.05

    with pytest.raises(DimensionMismatch):
        inversion_check(tent_2d(M=16), 0.1, 0.0)


def test_inversion_identity_in_two_dimensions():
    f = tent_2d(M=200)
    res = inversion_check(f, (0.5, 0.5), (0.0, 0.0))
    assert res.tail_bound < 1e-6
    smoothed = poisson_convolve(f, (0.5, 0.5), [[0.0, 0.0]], method='quadrature')
    assert_allclose(res.rhs, (2 * np.pi) ** 2 * smoothed[0], rtol=1e-12)
    assert abs(res.lhs - res.rhs) <= 1e-5 * (1 + f.l1_norm())

    # separable input: both sides are products of the one-dimensional checks
    one = inversion_check(tent(M=200), 0.5, 0.0)
    assert_allclose(res.rhs, one.rhs ** 2, rtol=1e-10)
    assert_allclose(res.lhs, one.lhs ** 2, rtol=1e-5)

    shifted = inversion_check(f, (0.5, 1.0), (0.3, -0.2))
    assert abs(shifted.lhs - shifted.rhs) <= 1e-5 * (1 + f.l1_norm())


def test_riemann_lebesgue_profiles():
    R = [1.0, 10.0, 100.0]
    ind = riemann_lebesgue_profile(ClosedFormFn.indicator(-1, 2), R)
    assert ind.decaying
    for r, sup in ind.points:
        assert sup <= 2 / r

    pa = riemann_lebesgue_profile(ClosedFormFn.pA(1.0), R)
    assert_allclose([sup for _, sup in pa.points], [2 / (1 + r ** 2) for r in R])

    delta = riemann_lebesgue_profile(LineAtomicMeasure.delta(0.0), R)
    assert not delta.decaying
    assert_allclose([sup for _, sup in delta.points], 1.0)

    sampled = sample_closed_form(ClosedFormFn.pA(1.0), 30.0, 6000)
    profile = riemann_lebesgue_profile(sampled, [1.0, 5.0, 20.0])
    assert profile.decaying
    sups = [sup for _, sup in profile.points]
    assert sups[0] >= sups[1] >= sups[2]
    with pytest.raises(PreconditionError):
        riemann_lebesgue_profile(sampled, [1.0, 1000.0])


def test_riemann_lebesgue_profiles_in_two_dimensions():
    R = [1.0, 10.0, 100.0]
    pa = riemann_lebesgue_profile(
        ClosedFormFn.product(ClosedFormFn.pA(1.0), ClosedFormFn.pA(1.0)), R)
    # the sup over |xi| >= R sits on an axis: 2 / (1 + R^2) times pA^(0) = 2
    assert_allclose([sup for _, sup in pa.points],
                    [4 / (1 + r ** 2) for r in R], rtol=1e-12)
    assert pa.decaying

    box = riemann_lebesgue_profile(
        ClosedFormFn.product(ClosedFormFn.indicator(-1, 1),
                             ClosedFormFn.indicator(0, 2)), R)
    assert box.decaying
    for r, sup in box.points:
        assert sup <= 2 * 2 / r

    sampled = tent_2d(M=64)
    profile = riemann_lebesgue_profile(sampled, [0.0, 2.0, 10.0])
    sups = [sup for _, sup in profile.points]
    assert_allclose(sups[0], sampled.l1_norm(), rtol=1e-12)
    assert sups[0] >= sups[1] >= sups[2]
    assert profile.decaying

    atoms = LineAtomicMeasure([((0.0, 0.0), 1.0), ((1.0, -1.0), -0.5j)])
    flat = riemann_lebesgue_profile(atoms, R)
    assert not flat.decaying
    for _, sup in flat.points:
        assert 0.5 <= sup <= 1.5 + 1e-12


def test_pa_hat_integral():
    res = pa_hat_integral(1.0)
    assert_allclose(res.value, 2 * np.pi, atol=1e-8)
    assert_allclose(res.quadrature + res.tail, res.value)
    assert_allclose(pa_hat_integral(0.5).value, 2 * np.pi, atol=1e-8)


def test_atomic_measure_transforms(rng):
    for u in (0.0, 1.5, -3.0):
        d = LineAtomicMeasure.delta(u)
        for xi in (0.0, 0.7, -2.0):
            assert_allclose(measure_ft(d, xi), np.exp(-1j * xi * u))
            assert_allclose(abs(measure_ft(d, xi)), 1.0)

    mu = LineAtomicMeasure([(0.0, 1.0), (2.0, -0.5j), (0.0, 1.0)])
    assert len(mu) == 2
    assert measure_total_variation(mu) == 2.5

    positive = LineAtomicMeasure([(0.5, 1.0), (2.0, 1j)])
    for zeta in (1 - 1j, -3 - 0.2j):
        assert abs(measure_ft(positive, zeta)) <= measure_total_variation(positive)
    with pytest.raises(PreconditionError):
        measure_ft(LineAtomicMeasure.delta(-1.0), -1j)


def test_atomic_measure_convolution(rng):
    def gaussian_integer():
        return complex(*rng.integers(-4, 5, size=2))

    def random_measure(count):
        return LineAtomicMeasure([(float(u), gaussian_integer())
                                  for u in rng.integers(-10, 11, size=count)], dim=1)

    for _ in range(10):
        mu, nu, rho = random_measure(4), random_measure(3), random_measure(2)
        assert measure_convolve(mu, LineAtomicMeasure.delta(0.0)) == mu
        assert measure_convolve(mu, nu) == measure_convolve(nu, mu)
        assert (measure_convolve(measure_convolve(mu, nu), rho)
                == measure_convolve(mu, measure_convolve(nu, rho)))
        for xi in (0.0, 0.4, -1.3):
            assert_allclose(measure_ft(measure_convolve(mu, nu), xi),
                            measure_ft(mu, xi) * measure_ft(nu, xi),
                            rtol=1e-12, atol=1e-12)
        assert measure_total_variation(measure_convolve(mu, nu)) <= (
            measure_total_variation(mu) * measure_total_variation(nu) * (1 + 1e-12))

    assert (measure_convolve(LineAtomicMeasure.delta(1.5), LineAtomicMeasure.delta(-4.0))
            == LineAtomicMeasure.delta(-2.5))


def test_function_measure_convolution():
    f = sample_closed_form(ClosedFormFn.indicator(0, 1), 2.0, 64)
    shifted = fn_measure_convolve(f, LineAtomicMeasure.delta(0.75))
    moved = translate(f, 0.75)
    assert shifted.L == moved.L
    assert np.array_equal(shifted.values, moved.values)

    g = ClosedFormFn.pA(1.0)
    mu = LineAtomicMeasure([(1.0, 2.0), (-2.0, -1j)])
    conv = fn_measure_convolve(g, mu)
    x = np.array([0.0, 0.5, 3.0])
    assert_allclose(conv(x), 2.0 * g(x - 1.0) - 1j * g(x + 2.0))
