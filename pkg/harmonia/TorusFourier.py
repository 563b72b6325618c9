"""Fourier analysis on the n-torus T^n.

Functions on T^n are sampled on the uniform grid
z_k = (exp(2 pi i k_1/N), ..., exp(2 pi i k_n/N)) and coefficient tables
are dense arrays over the signed band |alpha_j| <= K.  Coefficients are
Riemann sums on the grid, which are exact for trigonometric polynomials
whose band is below N/2.  All sums are direct; no FFT is used so that the
summation order is fixed and results reproduce bit for bit.
"""
import operator
from collections import namedtuple

import numpy as np
from scipy import optimize, signal

from .errors import DimensionMismatch, PreconditionError
from .WorkbenchLogging import get_log

__all__ = ['TorusGrid', 'TorusFunction', 'CoeffTable', 'TorusAtomicMeasure',
           'AbelSum', 'ParsevalPair', 'AnalyticType',
           'fourier_coeff', 'analyze', 'synthesize', 'synthesize_many',
           'convolve_torus',
           'z_convolve', 'poisson_kernel', 'poisson_kernel_n',
           'poisson_extend', 'poisson_agreement_bound', 'abel_sum',
           'parseval', 'circle_samples', 'laurent_coeff', 'cauchy_coeff',
           'analytic_type_test', 'boundary_sup', 'max_principle_gap',
           'measure_fourier_coeff', 'measure_convolve', 'poisson_smooth',
           'measure_total_variation']

AbelSum = namedtuple('AbelSum', 'value tail_bound')
ParsevalPair = namedtuple('ParsevalPair', 'sum_of_squares energy_integral')
AnalyticType = namedtuple('AnalyticType', 'is_analytic offending')

_UNIT_TOL = 1e-12


class TorusGrid(namedtuple('TorusGrid', 'dim N')):
    """Uniform grid with N points per circle on T^dim."""

    __slots__ = ()

    def __new__(cls, dim, N):
        dim = operator.index(dim)
        N = operator.index(N)
        if dim < 1:
            raise PreconditionError('torus dimension must be positive')
        if N < 4 or N % 2:
            raise PreconditionError('samples per dimension must be even and '
                                    '>= 4, got {0}'.format(N))
        return super().__new__(cls, dim, N)

    @property
    def shape(self):
        return (self.N,) * self.dim

    @property
    def max_band(self):
        """Largest |alpha_j| the grid resolves; the Nyquist bin is excluded."""
        return self.N // 2 - 1

    def circle(self):
        return np.exp(2j * np.pi * np.arange(self.N) / self.N)

    def points(self):
        """Grid points as an (N**dim, dim) array in row-major order."""
        idx = np.indices(self.shape).reshape(self.dim, -1).T
        return self.circle()[idx]


class TorusFunction:
    """Complex samples of a function on a `TorusGrid`."""

    def __init__(self, grid, values):
        if not isinstance(grid, TorusGrid):
            grid = TorusGrid(*grid)
        values = np.array(values, dtype=complex)
        if values.size != grid.N ** grid.dim:
            raise DimensionMismatch('expected {0} samples, got {1}'.format(
                grid.N ** grid.dim, values.size))
        values = values.reshape(grid.shape)
        if not np.all(np.isfinite(values)):
            raise PreconditionError('torus samples must be finite')
        values.setflags(write=False)
        self.grid = grid
        self.values = values

    @classmethod
    def from_callable(cls, grid, func):
        """Sample ``func``, which maps an (M, dim) array of points to M values."""
        pts = grid.points()
        return cls(grid, np.asarray(func(pts), dtype=complex).reshape(grid.shape))

    @classmethod
    def from_coefficients(cls, grid, table):
        return cls(grid, synthesize_many(table, grid.points()).reshape(grid.shape))

    def _check(self, other):
        if self.grid != other.grid:
            raise DimensionMismatch('torus grids differ: {0} vs {1}'.format(
                self.grid, other.grid))

    def __add__(self, other):
        self._check(other)
        return TorusFunction(self.grid, self.values + other.values)

    def __mul__(self, other):
        if isinstance(other, TorusFunction):
            self._check(other)
            return TorusFunction(self.grid, self.values * other.values)
        return TorusFunction(self.grid, self.values * other)

    __rmul__ = __mul__

    def integral(self):
        """Normalized integral (2 pi)^-n times the integral over T^n."""
        return complex(np.mean(self.values))


class CoeffTable:
    """Coefficients a(alpha) for alpha in Z^dim with max_j |alpha_j| <= K.

    The table is stored dense with offset K, so ``coeffs[alpha + K]`` is
    a(alpha).
    """

    def __init__(self, dim, K, coeffs=None):
        dim = operator.index(dim)
        K = operator.index(K)
        if dim < 1 or K < 0:
            raise PreconditionError('coefficient table needs dim >= 1 and K >= 0')
        shape = (2 * K + 1,) * dim
        if coeffs is None:
            arr = np.zeros(shape, dtype=complex)
        elif isinstance(coeffs, dict):
            arr = np.zeros(shape, dtype=complex)
            for alpha, value in coeffs.items():
                alpha = _signed_index(alpha, dim)
                if max(abs(a) for a in alpha) > K:
                    raise PreconditionError('index {0} lies outside the band '
                                            '{1}'.format(alpha, K))
                arr[tuple(a + K for a in alpha)] += value
        else:
            arr = np.array(coeffs, dtype=complex)
            if arr.shape != shape:
                raise DimensionMismatch('coefficient array has shape {0}, '
                                        'expected {1}'.format(arr.shape, shape))
        arr.setflags(write=False)
        self.dim = dim
        self.K = K
        self.coeffs = arr

    @classmethod
    def delta(cls, alpha):
        alpha = tuple(alpha)
        K = max(max(abs(a) for a in alpha), 0)
        return cls(len(alpha), K, {alpha: 1.0})

    def __getitem__(self, alpha):
        alpha = _signed_index(alpha, self.dim)
        if max(abs(a) for a in alpha) > self.K:
            return 0j
        return complex(self.coeffs[tuple(a + self.K for a in alpha)])

    def items(self):
        """Nonzero (alpha, value) pairs in lexicographic order of alpha."""
        for idx in zip(*np.nonzero(self.coeffs)):
            yield tuple(int(i) - self.K for i in idx), complex(self.coeffs[idx])

    def l1_norm(self):
        return float(np.sum(np.abs(self.coeffs)))

    def __add__(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch('coefficient tables differ in dimension')
        K = max(self.K, other.K)
        return CoeffTable(self.dim, K, self.widen(K).coeffs + other.widen(K).coeffs)

    def widen(self, K):
        """The same table on the larger band K."""
        if K < self.K:
            raise PreconditionError('cannot narrow a coefficient table')
        pad = K - self.K
        return CoeffTable(self.dim, K, np.pad(self.coeffs, pad))

    def __eq__(self, other):
        if not isinstance(other, CoeffTable) or self.dim != other.dim:
            return NotImplemented
        K = max(self.K, other.K)
        return bool(np.array_equal(self.widen(K).coeffs, other.widen(K).coeffs))

    __hash__ = None


def _signed_index(alpha, dim):
    alpha = tuple(operator.index(a) for a in np.atleast_1d(alpha))
    if len(alpha) != dim:
        raise DimensionMismatch('index {0} does not have dimension {1}'.format(
            alpha, dim))
    return alpha


def _axis_matrix(grid, K):
    """Rows exp(-i a theta_k) / N for a = -K..K."""
    a = np.arange(-K, K + 1)[:, None]
    k = np.arange(grid.N)[None, :]
    return np.exp(-2j * np.pi * ((a * k) % grid.N) / grid.N) / grid.N


def _contract_axes(values, vectors):
    """Contract axis j of ``values`` with the 1-D ``vectors[j]``."""
    out = values
    for vec in vectors:
        out = np.tensordot(vec, out, axes=([0], [0]))
    return out


def fourier_coeff(f, alpha):
    """Riemann sum N^-n sum_k f(z_k) z_k^-alpha.

    >>> grid = TorusGrid(1, 8)
    >>> f = TorusFunction.from_callable(grid, lambda z: z[:, 0] ** 2)
    >>> abs(fourier_coeff(f, (2,)) - 1) < 1e-14
    True
    """
    alpha = _signed_index(alpha, f.grid.dim)
    band = f.grid.max_band
    if max(abs(a) for a in alpha) > band:
        raise PreconditionError('index {0} lies outside the Nyquist band '
                                '|alpha_j| <= {1}'.format(alpha, band))
    k = np.arange(f.grid.N)
    vecs = [np.exp(-2j * np.pi * ((a * k) % f.grid.N) / f.grid.N) / f.grid.N
            for a in alpha]
    return complex(_contract_axes(f.values, vecs))


def analyze(f, K=None):
    """All coefficients of ``f`` in the band K (default: the Nyquist band)."""
    band = f.grid.max_band
    if K is None:
        K = band
    if K > band:
        raise PreconditionError('band {0} exceeds the grid band {1}'.format(K, band))
    mat = _axis_matrix(f.grid, K)
    out = f.values
    for _ in range(f.grid.dim):
        out = np.moveaxis(np.tensordot(mat, out, axes=([1], [0])), 0, -1)
    return CoeffTable(f.grid.dim, K, out)


def _modified_powers(z, K):
    """Columns z~^a for a = -K..K: z^a for a >= 0 and conj(z)^-a for a < 0."""
    z = np.asarray(z, dtype=complex)
    out = np.ones(z.shape + (2 * K + 1,), dtype=complex)
    for a in range(1, K + 1):
        out[..., K + a] = out[..., K + a - 1] * z
        out[..., K - a] = out[..., K - a + 1] * np.conj(z)
    return out


def synthesize_many(c, points):
    """Evaluate sum_alpha c(alpha) z~^alpha at each row of ``points``."""
    points = np.atleast_2d(np.asarray(points, dtype=complex))
    if points.shape[1] != c.dim:
        raise DimensionMismatch('points have dimension {0}, table has '
                                '{1}'.format(points.shape[1], c.dim))
    if np.any(np.abs(points) > 1 + _UNIT_TOL):
        raise PreconditionError('points must lie in the closed unit polydisk')
    powers = _modified_powers(points, c.K)
    out = np.tensordot(powers[:, 0, :], c.coeffs, axes=([1], [0]))
    for j in range(1, c.dim):
        out = np.einsum('ma...,ma->m...', out, powers[:, j, :])
    return out


def synthesize(c, z):
    """Finite Fourier series with modified monomials at a point of the closed polydisk."""
    return complex(synthesize_many(c, np.reshape(z, (1, -1)))[0])


def convolve_torus(f, g):
    """Grid convolution N^-n sum_w f(z w^-1) g(w).

    Shifts are visited in lexicographic order of the grid index.
    """
    f._check(g)
    out = np.zeros(f.grid.shape, dtype=complex)
    axes = tuple(range(f.grid.dim))
    for m in np.ndindex(*f.grid.shape):
        out += g.values[m] * np.roll(f.values, shift=m, axis=axes)
    return TorusFunction(f.grid, out / f.grid.N ** f.grid.dim)


def z_convolve(a, b):
    """(a * b)(alpha) = sum_beta a(alpha - beta) b(beta); output band Ka + Kb."""
    if a.dim != b.dim:
        raise DimensionMismatch('coefficient tables differ in dimension')
    out = signal.convolve(a.coeffs, b.coeffs, mode='full', method='direct')
    return CoeffTable(a.dim, a.K + b.K, out)


def _check_disk(z, what='z'):
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1):
        raise PreconditionError('{0} must lie in the open unit disk'.format(what))
    return z


def _check_circle(w):
    w = np.asarray(w, dtype=complex)
    if np.any(np.abs(np.abs(w) - 1) > _UNIT_TOL):
        raise PreconditionError('w must lie on the unit circle')
    return w


def poisson_kernel(z, w):
    """(1 - |z|^2) / (2 pi |w - z|^2) for |z| < 1, |w| = 1.

    >>> import numpy as np
    >>> bool(np.isclose(poisson_kernel(0.5, 1.0), 3 / (2 * np.pi)))
    True
    """
    z = _check_disk(z)
    w = _check_circle(w)
    value = (1 - np.abs(z) ** 2) / (2 * np.pi * np.abs(w - z) ** 2)
    return float(value) if np.ndim(value) == 0 else value


def poisson_kernel_n(z, w):
    """Product kernel prod_j P(z_j, w_j) on the polydisk."""
    z = np.atleast_1d(_check_disk(z))
    w = np.atleast_1d(_check_circle(w))
    if z.shape != w.shape:
        raise DimensionMismatch('z and w differ in dimension')
    return float(np.prod((1 - np.abs(z) ** 2) / (2 * np.pi * np.abs(w - z) ** 2)))


def poisson_extend(f, z):
    """Quadrature of the Poisson integral of ``f`` at an interior point.

    Uses the weights (2 pi / N)^n on the grid, which are exact up to
    aliasing of order rho^(N - K) for band-K data.
    """
    z = np.atleast_1d(_check_disk(z))
    if z.size != f.grid.dim:
        raise DimensionMismatch('point has dimension {0}, grid has '
                                '{1}'.format(z.size, f.grid.dim))
    circle = f.grid.circle()
    vecs = [(1 - abs(zj) ** 2) / np.abs(circle - zj) ** 2 / f.grid.N for zj in z]
    return complex(_contract_axes(f.values, vecs))


def poisson_agreement_bound(c, z, N):
    """Tolerance between `poisson_extend` on an N-grid and `synthesize`.

    For a band-K table the grid quadrature aliases each monomial onto
    indices shifted by multiples of N, giving the bound
    sum|c| * (prod_j (1 + 2 rho_j^(N-K) / (1 - rho_j^N)) - 1), plus roundoff.
    """
    rho = np.abs(np.atleast_1d(_check_disk(z)))
    if N - c.K <= 0:
        raise PreconditionError('grid too coarse for the band')
    alias = np.prod(1 + 2 * rho ** (N - c.K) / (1 - rho ** N)) - 1
    total = c.l1_norm()
    return float(total * alias + 1e-13 * (1 + total))


def abel_sum(a, r):
    """Partial Abel sum sum_{j <= J} a_j r^j and the tail bound sup|a| r^(J+1)/(1-r)."""
    a = np.asarray(a, dtype=complex)
    if not 0 <= r < 1:
        raise PreconditionError('Abel parameter must lie in [0, 1)')
    J = len(a) - 1
    value = complex(np.sum(a * r ** np.arange(J + 1)))
    tail = float(np.max(np.abs(a)) * r ** (J + 1) / (1 - r))
    return AbelSum(value, tail)


def parseval(f):
    """Sum of |f^(alpha)|^2 over the grid band, and the normalized energy of f."""
    table = analyze(f)
    return ParsevalPair(float(np.sum(np.abs(table.coeffs) ** 2)),
                        float(np.mean(np.abs(f.values) ** 2)))


def circle_samples(func, r, N):
    """Samples func(r exp(2 pi i k / N)), k = 0..N-1."""
    w = r * np.exp(2j * np.pi * np.arange(N) / N)
    return np.asarray(func(w), dtype=complex)


def laurent_coeff(samples, r, j):
    """Trapezoid value of a_j = (2 pi i)^-1 integral f(w) w^(-j-1) dw on |w| = r.

    ``samples`` are f(r exp(2 pi i k/N)), k = 0..N-1, with N > 2|j|.
    """
    samples = np.asarray(samples, dtype=complex).ravel()
    N = samples.size
    j = operator.index(j)
    if r <= 0:
        raise PreconditionError('radius must be positive')
    if N <= 2 * abs(j):
        raise PreconditionError('{0} samples cannot resolve index {1}'.format(N, j))
    k = np.arange(N)
    phase = np.exp(-2j * np.pi * ((j * k) % N) / N)
    return complex(np.mean(samples * phase) * float(r) ** (-j))


def cauchy_coeff(func, radii, alpha, N=64):
    """Coefficient a_alpha of a power series from samples on a torus of radii r.

    The average of f(r.w) (r.w)^-alpha over the grid on T^n.
    """
    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    alpha = _signed_index(alpha, radii.size)
    if np.any(radii <= 0):
        raise PreconditionError('radii must be positive')
    grid = TorusGrid(radii.size, N)
    if max(abs(a) for a in alpha) > grid.max_band:
        raise PreconditionError('index {0} lies outside the band of an '
                                '{1}-point grid'.format(alpha, N))
    pts = grid.points() * radii[None, :]
    vals = np.asarray(func(pts), dtype=complex).reshape(grid.shape)
    f = TorusFunction(grid, vals)
    return fourier_coeff(f, alpha) * float(np.prod(radii ** (-np.array(alpha, dtype=float))))


def analytic_type_test(c, tol=0.0):
    """Check that no index with a negative component carries mass above ``tol``."""
    offending = [alpha for alpha, value in c.items()
                 if min(alpha) < 0 and abs(value) > tol]
    return AnalyticType(not offending, offending)


def boundary_sup(c, N=None, refine=8, log=None):
    """sup over T^n of |sum c(alpha) z^alpha|.

    The maximum over an N-point grid is polished by local optimization in
    the angles, started from the ``refine`` best grid points.
    """
    if log is None:
        log = get_log()
    if N is None:
        N = max(64, 8 * c.K + 8)
        N += N % 2
    grid = TorusGrid(c.dim, N)
    pts = grid.points()
    vals = np.abs(synthesize_many(c, pts))
    best = float(vals.max())
    order = np.argsort(vals)[::-1][:refine]

    def negmod(theta):
        return -abs(synthesize(c, np.exp(1j * theta)))

    for idx in order:
        start = np.angle(pts[idx])
        res = optimize.minimize(negmod, start, method='Nelder-Mead',
                                options={'xatol': 1e-12, 'fatol': 1e-15})
        best = max(best, -float(res.fun))
    log.doMessage('DBG', 'boundary sup on', N, 'points per circle:', best)
    return best


def max_principle_gap(c, interior, boundary_N=None, tol=0.0):
    """max over ``interior`` points of |phi| minus the sup of |phi| on T^n.

    ``c`` must be of analytic type up to ``tol``.
    """
    check = analytic_type_test(c, tol)
    if not check.is_analytic:
        raise PreconditionError('coefficients at {0} are not of analytic '
                                'type'.format(check.offending))
    interior = np.atleast_2d(interior)
    inner = float(np.max(np.abs(synthesize_many(c, interior))))
    return inner - boundary_sup(c, boundary_N)


class TorusAtomicMeasure:
    """Finite sum of point masses c_k delta_{z_k} on T^n.

    Atom locations are divided by their moduli on construction, and atoms
    at identical locations are merged.
    """

    def __init__(self, atoms, dim=None):
        merged = {}
        for point, weight in atoms:
            point = np.atleast_1d(np.asarray(point, dtype=complex))
            if np.any(point == 0):
                raise PreconditionError('atoms must lie on the torus')
            point = point / np.abs(point)
            key = tuple(point.tolist())
            merged[key] = merged.get(key, 0j) + complex(weight)
        keys = list(merged)
        if dim is None:
            if not keys:
                raise PreconditionError('cannot infer the dimension of an '
                                        'empty measure')
            dim = len(keys[0])
        if any(len(k) != dim for k in keys):
            raise DimensionMismatch('atoms differ in dimension')
        self.dim = dim
        self.points = np.array(keys, dtype=complex).reshape(len(keys), dim)
        self.weights = np.array([merged[k] for k in keys], dtype=complex)

    @classmethod
    def point_mass(cls, point, weight=1.0):
        return cls([(point, weight)])

    def __len__(self):
        return len(self.weights)


def measure_total_variation(mu):
    """|mu|(T^n) = sum |c_k|."""
    return float(np.sum(np.abs(mu.weights)))


def measure_fourier_coeff(mu, alpha):
    """mu^(alpha) = sum_k c_k z_k^-alpha."""
    alpha = np.array(_signed_index(alpha, mu.dim))
    if len(mu) == 0:
        return 0j
    return complex(np.sum(mu.weights * np.prod(mu.points ** (-alpha), axis=1)))


def measure_convolve(mu, nu):
    """Atoms at coordinatewise products z_k w_l with weights c_k d_l."""
    if mu.dim != nu.dim:
        raise DimensionMismatch('measures differ in dimension')
    atoms = [(zk * wl, ck * dl)
             for zk, ck in zip(mu.points, mu.weights)
             for wl, dl in zip(nu.points, nu.weights)]
    return TorusAtomicMeasure(atoms, dim=mu.dim)


def poisson_smooth(mu, r, grid):
    """Samples of sum_k c_k (2 pi)^n P_n(r z, z_k) on ``grid``."""
    if not 0 <= r < 1:
        raise PreconditionError('smoothing radius must lie in [0, 1)')
    if grid.dim != mu.dim:
        raise DimensionMismatch('grid and measure differ in dimension')
    circle = grid.circle()
    out = np.zeros(grid.shape, dtype=complex)
    for zk, ck in zip(mu.points, mu.weights):
        term = np.ones(grid.shape)
        for j in range(grid.dim):
            kern = (1 - r ** 2) / np.abs(zk[j] - r * circle) ** 2
            shape = [1] * grid.dim
            shape[j] = grid.N
            term = term * kern.reshape(shape)
        out += ck * term
    return TorusFunction(grid, out)
