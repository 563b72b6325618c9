import numpy as np
import pytest
from numpy.testing import assert_allclose

from harmonia.errors import DimensionMismatch, PreconditionError
from harmonia.Polynomials import cauchy_product
from harmonia.TorusFourier import (CoeffTable, TorusAtomicMeasure, TorusFunction,
                                   TorusGrid, abel_sum, analytic_type_test,
                                   analyze, boundary_sup, cauchy_coeff,
                                   circle_samples, convolve_torus, fourier_coeff,
                                   laurent_coeff, max_principle_gap,
                                   measure_convolve, measure_fourier_coeff,
                                   measure_total_variation, parseval,
                                   poisson_agreement_bound, poisson_extend,
                                   poisson_kernel, poisson_kernel_n,
                                   poisson_smooth, synthesize, synthesize_many,
                                   z_convolve)


def random_table(rng, dim, K, analytic=False):
    shape = (2 * K + 1,) * dim
    coeffs = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    if analytic:
        mask = np.ones(shape, dtype=bool)
        for axis in range(dim):
            index = [slice(None)] * dim
            index[axis] = slice(0, K)
            mask[tuple(index)] = False
        coeffs = np.where(mask, coeffs, 0)
    return CoeffTable(dim, K, coeffs)


def random_torus_points(rng, count, dim):
    return np.exp(2j * np.pi * rng.uniform(size=(count, dim)))


def test_grid_validation():
    with pytest.raises(PreconditionError):
        TorusGrid(1, 7)
    with pytest.raises(PreconditionError):
        TorusGrid(1, 2)
    with pytest.raises(PreconditionError):
        TorusGrid(0, 8)
    grid = TorusGrid(2, 8)
    assert grid.shape == (8, 8)
    assert grid.max_band == 3
    assert grid.points().shape == (64, 2)
    with pytest.raises(DimensionMismatch):
        TorusFunction(grid, np.ones(10))


def test_fourier_coeff_monomial():
    grid = TorusGrid(1, 16)
    for l in range(-7, 8):
        f = TorusFunction.from_callable(grid, lambda z: z[:, 0] ** l)
        for j in range(-7, 8):
            assert_allclose(fourier_coeff(f, (j,)), 1.0 if j == l else 0.0,
                            atol=1e-13)


def test_fourier_coeff_constant_and_product():
    grid = TorusGrid(2, 8)
    one = TorusFunction.from_callable(grid, lambda z: np.ones(len(z)))
    table = analyze(one)
    assert_allclose(table[(0, 0)], 1.0, atol=1e-14)
    assert_allclose(table.l1_norm(), 1.0, atol=1e-12)

    f = TorusFunction.from_callable(grid, lambda z: z[:, 0] / z[:, 1])
    assert_allclose(fourier_coeff(f, (1, -1)), 1.0, atol=1e-13)
    assert_allclose(fourier_coeff(f, (1, 1)), 0.0, atol=1e-13)


def test_fourier_coeff_band_and_aliasing():
    grid = TorusGrid(1, 8)
    f = TorusFunction.from_callable(grid, lambda z: z[:, 0] ** 8)
    assert_allclose(fourier_coeff(f, (0,)), 1.0, atol=1e-13)
    with pytest.raises(PreconditionError):
        fourier_coeff(f, (4,))
    with pytest.raises(PreconditionError):
        analyze(f, K=4)
    with pytest.raises(DimensionMismatch):
        fourier_coeff(f, (0, 0))


def test_analyze_synthesize_roundtrip(rng):
    for dim, N in ((1, 32), (2, 16), (3, 8)):
        grid = TorusGrid(dim, N)
        c = random_table(rng, dim, grid.max_band)
        f = TorusFunction.from_coefficients(grid, c)
        back = analyze(f)
        assert_allclose(back.coeffs, c.coeffs, atol=1e-12 * c.l1_norm())
        again = synthesize_many(back, grid.points())
        assert_allclose(again, f.values.ravel(), atol=1e-12 * c.l1_norm())


def test_synthesize_examples():
    one = CoeffTable.delta((0, 0))
    assert synthesize(one, (0.3, -0.2j)) == 1
    conj = CoeffTable.delta((-1,))
    assert_allclose(synthesize(conj, (0.3,)), 0.3)
    assert_allclose(synthesize(conj, (0.3j,)), -0.3j)
    with pytest.raises(PreconditionError):
        synthesize(one, (1.5, 0))
    with pytest.raises(DimensionMismatch):
        synthesize(one, (0.5,))


def test_coeff_table():
    c = CoeffTable(1, 2, {(1,): 2.0, (-2,): 1j})
    assert c[(1,)] == 2.0
    assert c[(5,)] == 0
    assert dict(c.items()) == {(-2,): 1j, (1,): 2.0}
    assert c == c.widen(4)
    assert c + CoeffTable.delta((3,)) == CoeffTable(1, 3, {(1,): 2.0, (-2,): 1j,
                                                          (3,): 1.0})
    with pytest.raises(PreconditionError):
        CoeffTable(1, 1, {(2,): 1.0})
    with pytest.raises(PreconditionError):
        c.widen(1)


def test_convolve_torus_examples():
    grid = TorusGrid(1, 16)
    f = TorusFunction.from_callable(grid, lambda z: 2 + z[:, 0] - 3 * z[:, 0] ** -2)
    one = TorusFunction.from_callable(grid, lambda z: np.ones(len(z)))
    assert_allclose(convolve_torus(f, one).values, 2.0, atol=1e-13)

    z = TorusFunction.from_callable(grid, lambda z: z[:, 0])
    assert_allclose(convolve_torus(z, z).values, z.values, atol=1e-13)

    with pytest.raises(DimensionMismatch):
        convolve_torus(f, TorusFunction(TorusGrid(1, 8), np.ones(8)))


def test_convolution_theorem_on_grid(rng):
    grid = TorusGrid(1, 64)
    for _ in range(100):
        f = TorusFunction.from_coefficients(grid, random_table(rng, 1, 31))
        g = TorusFunction.from_coefficients(grid, random_table(rng, 1, 31))
        fg = analyze(convolve_torus(f, g))
        assert_allclose(fg.coeffs, analyze(f).coeffs * analyze(g).coeffs,
                        atol=1e-12 * 64)


def test_convolve_torus_commutes_and_associates(rng):
    grid = TorusGrid(2, 8)
    f, g, h = (TorusFunction.from_coefficients(grid, random_table(rng, 2, 3))
               for _ in range(3))
    assert_allclose(convolve_torus(f, g).values, convolve_torus(g, f).values,
                    atol=1e-12)
    assert_allclose(convolve_torus(convolve_torus(f, g), h).values,
                    convolve_torus(f, convolve_torus(g, h)).values, atol=1e-11)


def test_z_convolve_deltas(rng):
    a = random_table(rng, 2, 3)
    assert z_convolve(CoeffTable.delta((0, 0)), a) == a
    assert z_convolve(a, CoeffTable.delta((0, 0))) == a
    assert (z_convolve(CoeffTable.delta((2,)), CoeffTable.delta((-1,)))
            == CoeffTable.delta((1,)))
    with pytest.raises(DimensionMismatch):
        z_convolve(a, CoeffTable.delta((0,)))


def test_z_convolve_homomorphism(rng):
    for dim in (1, 2):
        a = random_table(rng, dim, 4)
        b = random_table(rng, dim, 3)
        ab = z_convolve(a, b)
        assert ab.K == 7
        assert ab.l1_norm() <= a.l1_norm() * b.l1_norm() * (1 + 1e-12)
        for z in random_torus_points(rng, 20, dim):
            assert_allclose(synthesize(ab, z), synthesize(a, z) * synthesize(b, z),
                            rtol=1e-12, atol=1e-12 * a.l1_norm() * b.l1_norm())


def test_poisson_kernel():
    w = np.exp(2j * np.pi * np.arange(7) / 7)
    assert_allclose(poisson_kernel(0, w), 1 / (2 * np.pi))
    assert_allclose(poisson_kernel(0.5, 1.0), 3 / (2 * np.pi))
    with pytest.raises(PreconditionError):
        poisson_kernel(1.0, 1.0)
    with pytest.raises(PreconditionError):
        poisson_kernel(0.5, 0.9)
    z = (0.5, -0.2j)
    w = (1.0, 1j)
    assert_allclose(poisson_kernel_n(z, w),
                    poisson_kernel(z[0], w[0]) * poisson_kernel(z[1], w[1]))


@pytest.mark.parametrize('z', [0, 0.3, -0.5j, 0.9, 0.9 * np.exp(2.2j)])
def test_poisson_kernel_unit_mass(z):
    w = TorusGrid(1, 512).circle()
    values = poisson_kernel(z, w)
    assert np.all(values > 0)
    assert_allclose(np.mean(2 * np.pi * values), 1.0, atol=1e-10)


def test_poisson_extend_examples():
    grid = TorusGrid(1, 64)
    one = TorusFunction.from_callable(grid, lambda z: np.ones(len(z)))
    assert_allclose(poisson_extend(one, 0.7j), 1.0, atol=1e-12)
    ident = TorusFunction.from_callable(grid, lambda z: z[:, 0])
    assert_allclose(poisson_extend(ident, 0.5), 0.5, atol=1e-12)
    real = TorusFunction.from_callable(grid, lambda z: z[:, 0].real)
    assert_allclose(poisson_extend(real, 0.3), 0.3, atol=1e-12)
    with pytest.raises(PreconditionError):
        poisson_extend(one, 1.0)


def test_poisson_extend_agrees_with_series(rng):
    for dim, N in ((1, 256), (2, 256)):
        grid = TorusGrid(dim, N)
        for _ in range(5):
            c = random_table(rng, dim, 8)
            f = TorusFunction.from_coefficients(grid, c)
            rho = rng.uniform(0, 0.9, dim)
            z = rho * np.exp(2j * np.pi * rng.uniform(size=dim))
            diff = abs(poisson_extend(f, z) - synthesize(c, z))
            assert diff <= poisson_agreement_bound(c, z, N)
            assert diff <= 1e-8


def test_poisson_boundary_convergence():
    grid = TorusGrid(1, 2048)
    f = TorusFunction.from_callable(grid, lambda z: np.abs(z[:, 0].imag))
    w0 = np.exp(0.7j)
    errors = [abs(poisson_extend(f, r * w0) - abs(w0.imag))
              for r in (0.5, 0.9, 0.99)]
    assert errors[0] > errors[1] > errors[2]


def test_abel_sum():
    assert abel_sum([1, 0, 0, 0], 0.7).value == 1
    res = abel_sum((-1.0) ** np.arange(100001), 0.999)
    assert abs(res.value - 0.5) <= 1e-3
    assert res.tail_bound < 1e-30
    a = 1j
    res = abel_sum(a ** np.arange(20001), 0.99)
    assert_allclose(res.value, 1 / (1 - a * 0.99), atol=1e-10)
    with pytest.raises(PreconditionError):
        abel_sum([1.0], 1.0)


def test_abel_consistent_with_convergent_sum():
    a = 1.0 / (np.arange(1, 5001) ** 2)
    limit = np.pi ** 2 / 6
    errors = [abs(abel_sum(a, r).value - limit) for r in (0.9, 0.99, 0.999)]
    assert errors[0] > errors[1] > errors[2]


def test_abel_cauchy_product(rng):
    a = rng.uniform(-1, 1, 2000)
    b = rng.uniform(-1, 1, 2000)
    c = cauchy_product(a, b)
    for r in (0.3, 0.5, 0.8):
        assert_allclose(abel_sum(c, r).value,
                        abel_sum(a, r).value * abel_sum(b, r).value, atol=1e-10)


def test_parseval_examples():
    grid = TorusGrid(1, 16)
    f = TorusFunction.from_callable(grid, lambda z: z[:, 0] + z[:, 0] ** 2)
    pair = parseval(f)
    assert_allclose(pair.sum_of_squares, 2.0, rtol=1e-13)
    assert_allclose(pair.energy_integral, 2.0, rtol=1e-13)
    const = TorusFunction(grid, np.full(16, 3 - 4j))
    assert_allclose(parseval(const), (25.0, 25.0), rtol=1e-13)


def test_parseval_random(rng):
    grid = TorusGrid(1, 64)
    for _ in range(100):
        f = TorusFunction.from_coefficients(grid, random_table(rng, 1, 31))
        pair = parseval(f)
        assert_allclose(pair.sum_of_squares, pair.energy_integral, rtol=1e-12)


def test_laurent_coeff():
    samples = circle_samples(lambda w: 1 / w, 2.0, 16)
    assert_allclose(laurent_coeff(samples, 2.0, -1), 1.0, atol=1e-13)

    def geometric(w):
        return 1 / (1 - w)

    assert_allclose(laurent_coeff(circle_samples(geometric, 0.5, 64), 0.5, 3),
                    1.0, atol=1e-10)
    small = laurent_coeff(circle_samples(geometric, 0.3, 64), 0.3, 5)
    large = laurent_coeff(circle_samples(geometric, 0.6, 64), 0.6, 5)
    assert_allclose(small, large, atol=1e-9)
    with pytest.raises(PreconditionError):
        laurent_coeff(np.ones(8), 1.0, 4)
    with pytest.raises(PreconditionError):
        laurent_coeff(np.ones(8), 0.0, 1)


def test_laurent_coefficient_bound(rng):
    c = rng.standard_normal(6)

    def func(w):
        return sum(ck * w ** k for k, ck in enumerate(c))

    for r in (0.5, 1.0, 2.0):
        samples = circle_samples(func, r, 64)
        sup = np.max(np.abs(samples))
        for j in range(6):
            assert_allclose(laurent_coeff(samples, r, j), c[j], atol=1e-12 * sup)
            assert abs(laurent_coeff(samples, r, j)) <= r ** -j * sup * (1 + 1e-12)


def test_cauchy_coeff():
    def func(z):
        return 1 / ((1 - z[:, 0]) * (1 - z[:, 1] / 2))

    assert_allclose(cauchy_coeff(func, (0.5, 0.5), (2, 3)), 0.125, atol=1e-12)
    assert_allclose(cauchy_coeff(func, (0.3, 0.9), (2, 3)), 0.125, atol=1e-9)
    with pytest.raises(PreconditionError):
        cauchy_coeff(func, (0.0, 0.5), (0, 0))


def test_analytic_type_examples(rng):
    grid = TorusGrid(2, 8)
    f = TorusFunction.from_callable(grid, lambda z: z[:, 0] ** 2 * z[:, 1])
    assert analytic_type_test(analyze(f), tol=1e-12).is_analytic
    g = TorusFunction.from_callable(grid, lambda z: np.conj(z[:, 0]))
    res = analytic_type_test(analyze(g), tol=1e-12)
    assert not res.is_analytic
    assert res.offending == [(-1, 0)]

    for _ in range(20):
        a = random_table(rng, 2, 3, analytic=True)
        b = random_table(rng, 2, 2, analytic=True)
        assert analytic_type_test(a).is_analytic
        assert analytic_type_test(z_convolve(a, b), tol=0.0).is_analytic


def test_max_principle_examples():
    zk = CoeffTable.delta((3, 0))
    r = np.linspace(0, 0.99, 50)
    interior = np.stack([r * np.exp(0.3j), r * np.exp(-1.1j)], axis=1)
    assert max_principle_gap(zk, interior) <= 0

    half = CoeffTable(1, 1, {(0,): 0.5, (1,): 0.5})
    radial = np.linspace(0, 0.999, 200)[:, None]
    assert_allclose(boundary_sup(half), 1.0, atol=1e-12)
    assert max_principle_gap(half, radial) < 0

    mixed = CoeffTable(1, 1, {(-1,): 0.5, (1,): 0.5})
    with pytest.raises(PreconditionError):
        max_principle_gap(mixed, radial)
    noisy = CoeffTable(1, 1, {(-1,): 1e-14, (1,): 1.0})
    away = np.linspace(0.1, 0.999, 50)[:, None]
    assert max_principle_gap(noisy, away, tol=1e-12) < 0


def test_max_principle_random(rng):
    for _ in range(200):
        dim = int(rng.integers(1, 3))
        c = random_table(rng, dim, int(rng.integers(1, 4)), analytic=True)
        radius = rng.uniform(size=(1000, dim)) ** (1 / 2)
        interior = radius * np.exp(2j * np.pi * rng.uniform(size=(1000, dim)))
        interior *= 1 - 1e-9
        assert max_principle_gap(c, interior) <= 1e-10


def test_atomic_measure_basics():
    mu = TorusAtomicMeasure.point_mass((1.0,))
    for alpha in range(-5, 6):
        assert measure_fourier_coeff(mu, (alpha,)) == 1
    mu = TorusAtomicMeasure([((2.0,), 1.0), ((1.0,), 2.0)])
    assert len(mu) == 1
    assert measure_total_variation(mu) == 3.0
    with pytest.raises(PreconditionError):
        TorusAtomicMeasure([((0.0,), 1.0)])
    with pytest.raises(DimensionMismatch):
        TorusAtomicMeasure([((1.0,), 1.0), ((1.0, 1.0), 1.0)])


def test_atomic_measure_convolution(rng):
    for dim in (1, 2):
        atoms = [(random_torus_points(rng, 1, dim)[0], complex(*rng.standard_normal(2)))
                 for _ in range(4)]
        mu = TorusAtomicMeasure(atoms)
        nu = TorusAtomicMeasure([(random_torus_points(rng, 1, dim)[0], 1.5),
                                 (random_torus_points(rng, 1, dim)[0], -0.5j)])
        conv = measure_convolve(mu, nu)
        assert measure_total_variation(conv) <= (measure_total_variation(mu)
                                                 * measure_total_variation(nu)
                                                 * (1 + 1e-12))
        for alpha in ((0,) * dim, (1,) * dim, (-2,) + (3,) * (dim - 1)):
            lhs = measure_fourier_coeff(conv, alpha)
            assert_allclose(lhs, measure_fourier_coeff(mu, alpha)
                            * measure_fourier_coeff(nu, alpha), rtol=1e-12)
            assert abs(measure_fourier_coeff(mu, alpha)) <= (
                measure_total_variation(mu) * (1 + 1e-12))


def test_poisson_smooth_weak_limit():
    mu = TorusAtomicMeasure.point_mass((1j,))
    grid = TorusGrid(1, 2048)
    z = grid.circle()
    previous = None
    for r in (0.5, 0.9, 0.99):
        smooth = poisson_smooth(mu, r, grid)
        value = np.mean(z * smooth.values.ravel())
        assert_allclose(value, r * 1j, atol=1e-8)
        if previous is not None:
            assert abs(value - 1j) < abs(previous - 1j)
        previous = value
    with pytest.raises(PreconditionError):
        poisson_smooth(mu, 1.0, grid)
