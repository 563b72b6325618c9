"""Fourier transform on R^n at desk scale.

Sampled functions live on the box [-L, L)^n with grid points
x_k = -L + k h, h = 2L/M.  Riemann sums on that grid are the trapezoid
rule for functions that vanish at the box edges.  Closed-form examples
(one-sided exponentials, two-sided exponentials, interval indicators and
their products across axes) carry their exact transforms, which are used
both as oracles and to add the analytic tail outside the box.

Jumps are sampled at the midpoint value 1/2, which keeps the trapezoid
rule second order across them.
"""
import operator
from collections import namedtuple

import numpy as np
from scipy import integrate, signal
from scipy.stats import qmc

from .errors import DimensionMismatch, PreconditionError
from .WorkbenchLogging import get_log

__all__ = ['LineFunction', 'ClosedFormFn', 'LineAtomicMeasure',
           'HalfPlanePoint', 'PaHatIntegral', 'InversionCheck',
           'MultiplicationCheck', 'RLProfile',
           'ft_quadrature', 'ft_closed_form', 'sample_closed_form',
           'convolve_line', 'translate', 'modulate', 'poisson_Rn',
           'poisson_mass', 'poisson_convolve', 'approx_identity_error',
           'multiplication_formula_check', 'multiplication_tolerance',
           'inversion_check', 'riemann_lebesgue_profile', 'pa_hat_integral',
           'measure_ft', 'measure_convolve', 'fn_measure_convolve',
           'measure_total_variation', 'cauchy_riemann_residual']

PaHatIntegral = namedtuple('PaHatIntegral', 'value quadrature tail')
InversionCheck = namedtuple('InversionCheck', 'lhs rhs tail_bound')
MultiplicationCheck = namedtuple('MultiplicationCheck', 'lhs rhs')
RLProfile = namedtuple('RLProfile', 'points decaying')

# sampling adequacy: |xi| h <= pi / 4
ADEQUACY = np.pi / 4

_EXPONENTIAL_KINDS = ('qPlus', 'qMinus', 'pA')


class ClosedFormFn:
    """One of the worked examples, with its exact Fourier transform.

    ``qPlus(a)`` is exp(-a x) on x >= 0, ``qMinus(a)`` is exp(a x) on
    x <= 0, ``pA(a)`` is exp(-a |x|) and ``indicator(a, b)`` is the
    indicator of [a, b].  ``product`` multiplies one-dimensional kinds
    across axes.
    """

    def __init__(self, kind, *params, factors=None):
        self.kind = kind
        self.params = tuple(float(p) for p in params)
        self.factors = tuple(factors) if factors else ()
        if kind in _EXPONENTIAL_KINDS:
            if len(self.params) != 1 or not self.params[0] > 0:
                raise PreconditionError('{0} needs one positive rate'.format(kind))
        elif kind == 'indicator':
            if len(self.params) != 2 or not self.params[0] < self.params[1]:
                raise PreconditionError('indicator needs a < b')
        elif kind == 'product':
            if not self.factors or any(f.kind == 'product' for f in self.factors):
                raise PreconditionError('product needs one-dimensional factors')
        else:
            raise PreconditionError('unknown closed form {0!r}'.format(kind))

    @classmethod
    def qPlus(cls, a):
        return cls('qPlus', a)

    @classmethod
    def qMinus(cls, a):
        return cls('qMinus', a)

    @classmethod
    def pA(cls, a):
        return cls('pA', a)

    @classmethod
    def indicator(cls, a, b):
        return cls('indicator', a, b)

    @classmethod
    def product(cls, *factors):
        return cls('product', factors=factors)

    def __repr__(self):
        if self.kind == 'product':
            return 'ClosedFormFn.product({0})'.format(
                ', '.join(repr(f) for f in self.factors))
        return 'ClosedFormFn.{0}({1})'.format(
            self.kind, ', '.join(repr(p) for p in self.params))

    @property
    def dim(self):
        return len(self.factors) if self.kind == 'product' else 1

    @property
    def decay(self):
        kinds = [f.kind for f in self.factors] if self.kind == 'product' else [self.kind]
        return 'exponential' if any(k in _EXPONENTIAL_KINDS for k in kinds) else 'compact'

    def _axes(self):
        return self.factors if self.kind == 'product' else (self,)

    def __call__(self, x):
        """Values at points ``x`` of shape (..., dim); jumps take the value 1/2."""
        x = np.asarray(x, dtype=float)
        if self.dim == 1 and (x.ndim == 0 or x.shape[-1] != 1):
            x = x[..., None]
        if x.shape[-1] != self.dim:
            raise DimensionMismatch('points have dimension {0}, function has '
                                    '{1}'.format(x.shape[-1], self.dim))
        out = np.ones(x.shape[:-1])
        for j, factor in enumerate(self._axes()):
            out = out * factor._value_1d(x[..., j])
        return out

    def _value_1d(self, t):
        if self.kind == 'qPlus':
            a, = self.params
            return np.where(t > 0, np.exp(-a * np.abs(t)), np.where(t == 0, 0.5, 0.0))
        if self.kind == 'qMinus':
            a, = self.params
            return np.where(t < 0, np.exp(-a * np.abs(t)), np.where(t == 0, 0.5, 0.0))
        if self.kind == 'pA':
            a, = self.params
            return np.exp(-a * np.abs(t))
        a, b = self.params
        inside = (t > a) & (t < b)
        edge = (t == a) | (t == b)
        return np.where(inside, 1.0, np.where(edge, 0.5, 0.0))

    def l1_norm(self):
        total = 1.0
        for f in self._axes():
            if f.kind in ('qPlus', 'qMinus'):
                total *= 1.0 / f.params[0]
            elif f.kind == 'pA':
                total *= 2.0 / f.params[0]
            else:
                total *= f.params[1] - f.params[0]
        return total

    def _check_zeta_1d(self, zeta):
        eta = zeta.imag
        if self.kind == 'qPlus' and eta > 0:
            raise PreconditionError('qPlus extends to Im zeta <= 0 only')
        if self.kind == 'qMinus' and eta < 0:
            raise PreconditionError('qMinus extends to Im zeta >= 0 only')
        if self.kind == 'pA' and eta != 0:
            raise PreconditionError('pA has a transform on the real line only')
        if self.kind == 'indicator' and eta != 0:
            if self.params[0] < 0 or eta > 0:
                raise PreconditionError('indicator extends to Im zeta <= 0 '
                                        'only when a, b >= 0')

    def _ft_1d(self, zeta):
        self._check_zeta_1d(zeta)
        if self.kind == 'qPlus':
            return 1.0 / (self.params[0] + 1j * zeta)
        if self.kind == 'qMinus':
            return 1.0 / (self.params[0] - 1j * zeta)
        if self.kind == 'pA':
            a, = self.params
            return 2 * a / (a ** 2 + zeta.real ** 2) + 0j
        a, b = self.params
        if zeta == 0:
            return complex(b - a)
        return np.exp(-1j * zeta * a) * -np.expm1(-1j * zeta * (b - a)) / (1j * zeta)

    def ft(self, zeta):
        zeta = _zeta_vector(zeta, self.dim)
        out = 1.0 + 0j
        for factor, z in zip(self._axes(), zeta):
            out *= factor._ft_1d(z)
        return complex(out)

    def _tail_1d(self, xi, L):
        """Transform of the part of the factor outside [-L, L)."""
        if self.kind == 'qPlus':
            s = self.params[0] + 1j * xi
            return np.exp(-s * L) / s
        if self.kind == 'qMinus':
            s = self.params[0] - 1j * xi
            return np.exp(-s * L) / s
        if self.kind == 'pA':
            a, = self.params
            return (np.exp(-(a + 1j * xi) * L) / (a + 1j * xi)
                    + np.exp(-(a - 1j * xi) * L) / (a - 1j * xi))
        a, b = self.params
        if a < -L or b > L:
            raise PreconditionError('indicator support leaves the box')
        return 0j

    def tail(self, xi, L):
        """Transform of the function restricted to the complement of the box."""
        xi = np.atleast_1d(np.asarray(xi, dtype=float))
        full = 1.0 + 0j
        inside = 1.0 + 0j
        for factor, x in zip(self._axes(), xi):
            F = factor._ft_1d(complex(x))
            full *= F
            inside *= F - factor._tail_1d(x, L)
        return complex(full - inside)


class HalfPlanePoint:
    """zeta = xi + i eta in C^n with a signature eps in {-1, +1}^n."""

    def __init__(self, zeta, eps):
        self.zeta = np.atleast_1d(np.asarray(zeta, dtype=complex))
        self.eps = np.atleast_1d(np.asarray(eps, dtype=int))
        if self.zeta.shape != self.eps.shape:
            raise DimensionMismatch('zeta and eps differ in dimension')
        if not np.all(np.abs(self.eps) == 1):
            raise PreconditionError('signature entries must be -1 or +1')

    def in_closure(self):
        """True when eps_j Im zeta_j >= 0 for every j."""
        return bool(np.all(self.eps * self.zeta.imag >= 0))


def _zeta_vector(zeta, dim):
    if isinstance(zeta, HalfPlanePoint):
        if not zeta.in_closure():
            raise PreconditionError('point lies outside the closed half-plane '
                                    'of its signature')
        zeta = zeta.zeta
    zeta = np.atleast_1d(np.asarray(zeta, dtype=complex))
    if zeta.size != dim:
        raise DimensionMismatch('zeta has dimension {0}, expected {1}'.format(
            zeta.size, dim))
    return zeta


class LineFunction:
    """Samples of a function on the box [-L, L)^n, M points per axis."""

    def __init__(self, dim, L, M, values, decay='compact', source=None):
        dim = operator.index(dim)
        M = operator.index(M)
        if dim < 1 or M < 8 or not L > 0:
            raise PreconditionError('line grid needs dim >= 1, M >= 8, L > 0')
        if decay not in ('compact', 'exponential'):
            raise PreconditionError('decay class must be compact or exponential')
        values = np.array(values, dtype=complex)
        if values.size != M ** dim:
            raise DimensionMismatch('expected {0} samples, got {1}'.format(
                M ** dim, values.size))
        values = values.reshape((M,) * dim)
        if not np.all(np.isfinite(values)):
            raise PreconditionError('line samples must be finite')
        values.setflags(write=False)
        self.dim = dim
        self.L = float(L)
        self.M = M
        self.values = values
        self.decay = decay
        self.source = source

    @property
    def h(self):
        return 2 * self.L / self.M

    def axis(self):
        return -self.L + self.h * np.arange(self.M)

    def points(self):
        grids = np.meshgrid(*([self.axis()] * self.dim), indexing='ij')
        return np.stack(grids, axis=-1)

    def l1_norm(self):
        return float(self.h ** self.dim * np.sum(np.abs(self.values)))

    def integral(self):
        return complex(self.h ** self.dim * np.sum(self.values))

    def same_geometry(self, other):
        return (self.dim == other.dim
                and np.isclose(self.h, other.h, rtol=1e-12, atol=0))

    def with_values(self, values, L=None, M=None, decay=None):
        return LineFunction(self.dim, self.L if L is None else L,
                            self.M if M is None else M, values,
                            decay=decay or self.decay)

    def __add__(self, other):
        if not (self.same_geometry(other) and self.M == other.M):
            raise DimensionMismatch('line grids differ')
        return self.with_values(self.values + other.values)

    def __mul__(self, scalar):
        return self.with_values(self.values * scalar)

    __rmul__ = __mul__


def sample_closed_form(g, L, M):
    """Sample a `ClosedFormFn` on [-L, L)^n, keeping it as the source."""
    shell = LineFunction(g.dim, L, M, np.zeros((M,) * g.dim))
    values = g(shell.points())
    return LineFunction(g.dim, L, M, values, decay=g.decay, source=g)


def _check_adequacy(f, xi):
    if np.any(np.abs(xi) * f.h > ADEQUACY + 1e-12):
        raise PreconditionError('frequency {0} is not resolved by spacing {1} '
                                '(|xi| h must be <= pi/4)'.format(
                                    np.asarray(xi).tolist(), f.h))


def _phase_vectors(f, xi):
    x = f.axis()
    return [np.exp(-1j * xj * x) for xj in xi]


def ft_quadrature(f, xi, tail=True):
    """Trapezoid transform h^n sum_k f(x_k) exp(-i xi . x_k).

    When ``f`` was sampled from an exponential closed form, the exact
    transform of the part outside the box is added unless ``tail`` is off.
    """
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    if xi.size != f.dim:
        raise DimensionMismatch('xi has dimension {0}, function has '
                                '{1}'.format(xi.size, f.dim))
    _check_adequacy(f, xi)
    out = f.values
    for vec in _phase_vectors(f, xi):
        out = np.tensordot(vec, out, axes=([0], [0]))
    value = complex(out) * f.h ** f.dim
    if tail and f.source is not None and f.decay == 'exponential':
        value += f.source.tail(xi, f.L)
    return value


def ft_closed_form(g, zeta):
    """Exact transform of a `ClosedFormFn` on its admissible closed region."""
    return g.ft(zeta)


def convolve_line(f, g):
    """Trapezoid convolution h^n sum_y f(x - y) g(y).

    The output covers the sum of the supports: L = L_f + L_g and
    M = M_f + M_g on the common spacing.
    """
    if not f.same_geometry(g):
        raise DimensionMismatch('line grids differ in dimension or spacing')
    out = signal.convolve(f.values, g.values, mode='full', method='direct')
    out = np.pad(out, [(0, 1)] * f.dim) * f.h ** f.dim
    return LineFunction(f.dim, f.L + g.L, f.M + g.M, out,
                        decay='exponential' if 'exponential' in (f.decay, g.decay)
                        else 'compact')


def _grid_shift(f, t):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if t.size != f.dim:
        raise DimensionMismatch('shift has dimension {0}, function has '
                                '{1}'.format(t.size, f.dim))
    steps = t / f.h
    shift = np.rint(steps).astype(int)
    if np.any(np.abs(steps - shift) > 1e-9 * (1 + np.abs(steps))):
        raise PreconditionError('shift {0} is not a multiple of the spacing '
                                '{1}'.format(t.tolist(), f.h))
    return shift


def _embed(f, pad):
    """Zero-pad ``pad`` samples on both sides of every axis."""
    if pad == 0:
        return f
    return LineFunction(f.dim, f.L + pad * f.h, f.M + 2 * pad,
                        np.pad(f.values, pad), decay=f.decay)


def translate(f, t):
    """T_t(f)(x) = f(x - t) for on-grid t; the box grows symmetrically."""
    shift = _grid_shift(f, t)
    pad = int(np.max(np.abs(shift)))
    if pad == 0:
        return f.with_values(f.values)
    out = np.roll(np.pad(f.values, pad), tuple(shift), axis=tuple(range(f.dim)))
    return LineFunction(f.dim, f.L + pad * f.h, f.M + 2 * pad, out, decay=f.decay)


def modulate(f, w):
    """M_w(f)(x) = exp(i w . x) f(x).

    Complex w is accepted for compactly supported samples only.
    """
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    if w.size != f.dim:
        raise DimensionMismatch('w has dimension {0}, function has '
                                '{1}'.format(w.size, f.dim))
    if np.any(w.imag != 0) and f.decay != 'compact':
        raise PreconditionError('complex modulation of a function without '
                                'compact support is not integrable')
    out = f.values
    x = f.axis()
    for j, wj in enumerate(w):
        shape = [1] * f.dim
        shape[j] = f.M
        out = out * np.exp(1j * wj * x).reshape(shape)
    return f.with_values(out)


def _check_rates(a, dim=None):
    a = np.atleast_1d(np.asarray(a, dtype=float))
    if np.any(a <= 0):
        raise PreconditionError('Poisson parameters must be positive')
    if dim is not None and a.size == 1 and dim > 1:
        a = np.repeat(a, dim)
    if dim is not None and a.size != dim:
        raise DimensionMismatch('a has dimension {0}, expected {1}'.format(a.size, dim))
    return a


def poisson_Rn(a, x):
    """P_{n,a}(x) = pi^-n prod_j a_j / (a_j^2 + x_j^2).

    >>> import numpy as np
    >>> bool(np.isclose(poisson_Rn(1.0, 0.0), 1 / np.pi))
    True
    """
    x = np.asarray(x, dtype=float)
    a = _check_rates(a)
    if x.ndim == 0 or x.shape[-1] != a.size:
        x = x[..., None]
    a = _check_rates(a, x.shape[-1])
    return np.prod(a / (np.pi * (a ** 2 + x ** 2)), axis=-1)


def poisson_mass(a, R=1e4, h=0.05):
    """Trapezoid mass of P_a on [-R, R] plus the tail 1 - (2/pi) arctan(R/a)."""
    a = float(_check_rates(a)[0])
    n = int(np.ceil(2 * R / h))
    x = np.linspace(-R, R, n + 1)
    quad = integrate.trapezoid(poisson_Rn(a, x), x)
    return float(quad + 1 - 2 / np.pi * np.arctan(R / a))


def _linear_weights(nodes, a, x):
    """Integrals of P_a(x - y) against each hat function on ``nodes``.

    Row i holds the weights for the point x[i]; contracting a row with the
    samples integrates the kernel exactly against the piecewise-linear
    interpolant.
    """
    h = nodes[1] - nodes[0]
    u0 = nodes[None, :-1] - x[:, None]
    u1 = nodes[None, 1:] - x[:, None]
    mass = (np.arctan(u1 / a) - np.arctan(u0 / a)) / np.pi
    first = a / (2 * np.pi) * (np.log(a ** 2 + u1 ** 2) - np.log(a ** 2 + u0 ** 2))
    # slope part of each interval, split between its two end nodes
    slope = (first - u0 * mass) / h
    weights = np.zeros((len(x), len(nodes)))
    weights[:, :-1] += mass - slope
    weights[:, 1:] += slope
    return weights


def poisson_convolve(f, a, points, method='linear'):
    """(P_{n,a} * f) at ``points``.

    ``method='linear'`` integrates the kernel exactly against the
    multilinear interpolant of the samples; ``method='quadrature'`` is the
    trapezoid sum h^n sum_k P(x - x_k) f_k.  Both factor across axes, so
    each axis contributes one weight row per point.
    """
    a = _check_rates(a, f.dim)
    points = np.asarray(points, dtype=float)
    if f.dim == 1 and (points.ndim == 0 or points.shape[-1] != 1):
        points = points[..., None]
    if points.shape[-1] != f.dim:
        raise DimensionMismatch('points have dimension {0}, function has '
                                '{1}'.format(points.shape[-1], f.dim))
    flat = points.reshape(-1, f.dim)
    x = f.axis()
    if method == 'linear':
        weights = [_linear_weights(x, a[j], flat[:, j]) for j in range(f.dim)]
    elif method == 'quadrature':
        weights = [f.h * a[j] / (np.pi * (a[j] ** 2 + (flat[:, j, None] - x) ** 2))
                   for j in range(f.dim)]
    else:
        raise PreconditionError('unknown method {0!r}'.format(method))
    out = np.empty(len(flat), dtype=complex)
    for i in range(len(flat)):
        acc = f.values
        for rows in weights:
            acc = np.tensordot(rows[i], acc, axes=([0], [0]))
        out[i] = complex(acc)
    return out.reshape(points.shape[:-1])


def approx_identity_error(f, a, points=None, method='linear'):
    """sup over ``points`` (default: the grid) of |(P_a * f)(x) - f(x)|."""
    if points is None:
        points = f.points()
        target = f.values
    else:
        points = np.asarray(points, dtype=float)
        if f.source is None:
            raise PreconditionError('off-grid points need a closed-form source')
        target = f.source(points)
    smoothed = poisson_convolve(f, a, points, method=method)
    return float(np.max(np.abs(smoothed - np.asarray(target).reshape(smoothed.shape))))


def _transform_matrix(x, xi):
    return np.exp(-1j * np.outer(xi, x))


def _dtft(x, values, xi, chunk=1024):
    """sum_k values[k, ...] exp(-i xi x_k) for each xi, in blocks of rows.

    Transforms the leading axis of ``values``; the frequency axis replaces it.
    """
    out = np.empty((len(xi),) + values.shape[1:], dtype=complex)
    for start in range(0, len(xi), chunk):
        block = xi[start:start + chunk]
        out[start:start + chunk] = np.tensordot(_transform_matrix(x, block),
                                                values, axes=([1], [0]))
    return out


def multiplication_formula_check(f, g):
    """Both sides of int f^(xi) g(xi) d xi = int f(x) g^(x) dx by nested quadrature."""
    if f.dim != g.dim:
        raise DimensionMismatch('functions differ in dimension')
    if f.decay != 'compact' or g.decay != 'compact':
        raise PreconditionError('multiplication check needs compactly '
                                'supported samples')
    _check_adequacy(f, np.array([g.L]))
    _check_adequacy(g, np.array([f.L]))
    E = _transform_matrix(f.axis(), g.axis())
    fhat = f.values
    for _ in range(f.dim):
        fhat = np.moveaxis(np.tensordot(E, fhat, axes=([1], [0])), 0, -1)
    lhs = complex(np.sum(fhat * g.values)) * (f.h * g.h) ** f.dim
    ghat = g.values
    for _ in range(g.dim):
        ghat = np.moveaxis(np.tensordot(E.T, ghat, axes=([1], [0])), 0, -1)
    rhs = complex(np.sum(f.values * ghat)) * (f.h * g.h) ** f.dim
    return MultiplicationCheck(lhs, rhs)


def multiplication_tolerance(f, g):
    return 1e-6 * (f.l1_norm() * g.l1_norm() + 1)


def inversion_check(f, a, w, dxi=0.02, tol=1e-7, log=None):
    """Both sides of the Abel-Poisson inversion identity at ``w``.

    lhs is int f^(xi) exp(i xi . w) exp(-sum_j a_j |xi_j|) d xi over the
    box |xi_j| <= Xi_j, a tensor-product Simpson rule on each half line;
    rhs is (2 pi)^n (P_{n,a} * f)(w) by the same grid quadrature.  The
    integrand factors across axes, so each axis is transformed and
    integrated out in turn.  Xi_j is chosen so that the neglected tail is
    below ``tol (1 + ||f||_1)`` and clamped to the adequacy limit; the
    remaining tail bound is reported.
    """
    if log is None:
        log = get_log()
    a = _check_rates(a, f.dim)
    w = np.atleast_1d(np.asarray(w, dtype=float))
    if w.size != f.dim:
        raise DimensionMismatch('w has dimension {0}, function has '
                                '{1}'.format(w.size, f.dim))
    norm1 = f.l1_norm()
    if norm1 == 0:
        return InversionCheck(0j, 0j, 0.0)
    # mass of the damping on the remaining axes
    others = np.array([np.prod(np.delete(2 / a, j)) for j in range(f.dim)])
    xi_max = np.log(2 * norm1 * others * f.dim / (a * tol * (1 + norm1))) / a
    xi_max = np.minimum(np.maximum(xi_max, 1.0), ADEQUACY / f.h)
    x = f.axis()
    out = f.values
    nodes = []
    for j in range(f.dim):
        n = 2 * int(np.ceil(xi_max[j] / (2 * dxi))) + 1
        half = np.linspace(0.0, xi_max[j], n)
        shape = (n,) + (1,) * (out.ndim - 1)
        integral = 0j
        for sign in (1.0, -1.0):
            xi = sign * half
            weight = np.exp(1j * xi * w[j]) * np.exp(-a[j] * half)
            integrand = _dtft(x, out, xi) * weight.reshape(shape)
            integral = integral + integrate.simpson(integrand, x=half, axis=0)
        out = integral * f.h
        nodes.append(2 * n)
    tail = norm1 * np.sum(2 * np.exp(-a * xi_max) / a * others)
    rhs = (2 * np.pi) ** f.dim * complex(
        poisson_convolve(f, a, w[None, :], method='quadrature')[0])
    log.doMessage('DBG', 'inversion check: Xi =', xi_max.tolist(), 'nodes',
                  nodes, 'tail bound', tail)
    return InversionCheck(complex(out), rhs, float(tail))


def _directions(dim, count, orthant=False, seed=0):
    """Unit vectors in R^dim: the coordinate axes and a scrambled Sobol cloud.

    With ``orthant`` every vector has nonnegative entries.
    """
    axes = np.eye(dim)
    if not orthant:
        axes = np.concatenate([axes, -axes])
    if dim == 1:
        return axes
    m = int(np.ceil(np.log2(max(count, 2))))
    cloud = qmc.Sobol(dim, scramble=True, seed=seed).random_base2(m)
    if not orthant:
        cloud = 2 * cloud - 1
    norms = np.linalg.norm(cloud, axis=1)
    keep = norms > 1e-12
    return np.concatenate([axes, cloud[keep] / norms[keep, None]])


def _envelope_1d(factor, t, samples):
    """sup_{|xi| >= t} |factor^(xi)| for an array of t >= 0."""
    t = np.asarray(t, dtype=float)
    if factor.kind == 'pA':
        a, = factor.params
        return 2 * a / (a ** 2 + t ** 2)
    if factor.kind in ('qPlus', 'qMinus'):
        return 1 / np.hypot(factor.params[0], t)
    width = factor.params[1] - factor.params[0]
    window = 4 * np.pi / width
    xi = t[..., None] + np.linspace(0, window, samples)
    # |indicator^(xi)| = width |sinc(xi width / 2 pi)|, below 2 / |xi|
    mags = width * np.abs(np.sinc(xi * width / (2 * np.pi)))
    return np.maximum(mags.max(axis=-1), 2 / (t + window))


def riemann_lebesgue_profile(g, R_values, samples=4000, directions=256, seed=0):
    """Profile of sup_{|xi| >= R} |g^(xi)| for increasing R.

    ``g`` is a `ClosedFormFn`, `LineFunction` or `LineAtomicMeasure` on
    R^n.  Closed forms factor, and each factor has a nonincreasing
    envelope, so the sup is taken over the positive orthant of the sphere
    |xi| = R.  Sampled functions are restricted to the adequacy box;
    measures are scanned along ``directions`` unit vectors.  The profile
    is flagged as decaying when its last value is at most half of its
    first.
    """
    R_values = np.sort(np.asarray(R_values, dtype=float))
    profile = []
    if isinstance(g, ClosedFormFn):
        dirs = _directions(g.dim, directions, orthant=True, seed=seed)
        for R in R_values:
            sup = np.ones(len(dirs))
            for j, factor in enumerate(g._axes()):
                sup = sup * _envelope_1d(factor, R * dirs[:, j], samples)
            profile.append((float(R), float(np.max(sup))))
    elif isinstance(g, LineFunction):
        xi_top = ADEQUACY / g.h
        if R_values[-1] > xi_top:
            raise PreconditionError('R exceeds the adequacy band {0}'.format(xi_top))
        x = g.axis()
        if g.dim == 1:
            xi = np.linspace(R_values[0], xi_top, samples)
            mags = np.maximum(np.abs(_dtft(x, g.values, xi)),
                              np.abs(_dtft(x, g.values, -xi))) * g.h
            radius = xi
        else:
            side = max(16, int(round(samples ** (1.0 / g.dim))))
            grid = np.linspace(-xi_top, xi_top, side)
            fhat = g.values
            for _ in range(g.dim):
                fhat = np.moveaxis(_dtft(x, fhat, grid), 0, -1)
            mags = np.abs(fhat).ravel() * g.h ** g.dim
            coords = np.meshgrid(*([grid] * g.dim), indexing='ij')
            radius = np.sqrt(sum(c ** 2 for c in coords)).ravel()
        for R in R_values:
            profile.append((float(R), float(np.max(mags[radius >= R - 1e-12]))))
    elif isinstance(g, LineAtomicMeasure):
        span = float(np.max(np.ptp(g.points, axis=0))) if len(g) > 1 else 0.0
        window = 4 * np.pi / span if span > 0 else 1.0
        dirs = _directions(g.dim, directions, seed=seed)
        radial = samples if g.dim == 1 else max(64, samples // 16)
        for R in R_values:
            r = R + np.linspace(0, window, radial)
            xi = (r[:, None, None] * dirs[None, :, :]).reshape(-1, g.dim)
            mags = np.abs(np.exp(-1j * (xi @ g.points.T)) @ g.weights)
            profile.append((float(R), float(np.max(mags))))
    else:
        raise PreconditionError('cannot profile {0!r}'.format(type(g).__name__))
    decaying = len(profile) > 1 and profile[-1][1] <= 0.5 * profile[0][1]
    return RLProfile(profile, decaying)


def pa_hat_integral(a, R=1e3, h=0.01):
    """int p_a^ d xi: trapezoid on [-R, R] plus the tail 2 pi - 4 arctan(R/a)."""
    a = float(_check_rates(a)[0])
    n = int(np.ceil(2 * R / h))
    xi = np.linspace(-R, R, n + 1)
    quad = float(integrate.trapezoid(2 * a / (a ** 2 + xi ** 2), xi))
    tail = float(2 * np.pi - 4 * np.arctan(R / a))
    return PaHatIntegral(quad + tail, quad, tail)


def cauchy_riemann_residual(g, zetas, step=1e-3):
    """max |dF/d eta - i dF/d xi| over ``zetas`` by centred differences.

    Vanishes up to O(step^2) where F = g^ is holomorphic.
    """
    worst = 0.0
    for z in np.atleast_1d(np.asarray(zetas, dtype=complex)):
        d_xi = (g.ft(z + step) - g.ft(z - step)) / (2 * step)
        d_eta = (g.ft(z + 1j * step) - g.ft(z - 1j * step)) / (2 * step)
        worst = max(worst, abs(d_eta - 1j * d_xi))
    return float(worst)


class LineAtomicMeasure:
    """Finite sum of point masses c_k delta_{u_k} on R^n.

    Atoms at identical locations are merged by summing their weights.
    """

    def __init__(self, atoms, dim=None):
        merged = {}
        for u, c in atoms:
            key = tuple(float(v) for v in np.atleast_1d(u))
            merged[key] = merged.get(key, 0j) + complex(c)
        keys = list(merged)
        if dim is None:
            if not keys:
                raise PreconditionError('cannot infer the dimension of an '
                                        'empty measure')
            dim = len(keys[0])
        if any(len(k) != dim for k in keys):
            raise DimensionMismatch('atoms differ in dimension')
        self.dim = dim
        self.points = np.array(keys, dtype=float).reshape(len(keys), dim)
        self.weights = np.array([merged[k] for k in keys], dtype=complex)

    @classmethod
    def delta(cls, u, weight=1.0):
        return cls([(u, weight)])

    def __len__(self):
        return len(self.weights)

    def as_dict(self):
        return {tuple(u): c for u, c in zip(self.points.tolist(), self.weights)}

    def __eq__(self, other):
        if not isinstance(other, LineAtomicMeasure):
            return NotImplemented
        return self.dim == other.dim and self.as_dict() == other.as_dict()

    __hash__ = None


def measure_total_variation(mu):
    """||mu|| = sum |c_k| for distinct atoms."""
    return float(np.sum(np.abs(mu.weights)))


def measure_ft(mu, zeta):
    """mu^(zeta) = sum_k c_k exp(-i zeta . u_k).

    A complex zeta is admitted only when every atom keeps
    |exp(-i zeta . u)| <= 1, that is Im(zeta_j) u_j <= 0 for all j.
    """
    zeta = _zeta_vector(zeta, mu.dim)
    if len(mu) == 0:
        return 0j
    if np.any(zeta.imag != 0):
        if np.any(mu.points * zeta.imag[None, :] > 0):
            raise PreconditionError('atoms are not in the quadrant dual to '
                                    'the half-plane of zeta')
    return complex(np.sum(mu.weights * np.exp(-1j * (mu.points @ zeta))))


def measure_convolve(mu, nu):
    """delta_u * delta_v = delta_{u+v}, extended bilinearly."""
    if mu.dim != nu.dim:
        raise DimensionMismatch('measures differ in dimension')
    atoms = [(u + v, c * d)
             for u, c in zip(mu.points, mu.weights)
             for v, d in zip(nu.points, nu.weights)]
    return LineAtomicMeasure(atoms, dim=mu.dim)


def fn_measure_convolve(g, mu):
    """x -> sum_k c_k g(x - u_k).

    For a `ClosedFormFn` this returns a callable; for a `LineFunction` the
    atoms must sit on the grid and the result is sampled on a box large
    enough to hold every translate.
    """
    if isinstance(g, ClosedFormFn):
        points, weights = mu.points, mu.weights

        def convolved(x):
            x = np.asarray(x, dtype=float)
            if g.dim == 1 and (x.ndim == 0 or x.shape[-1] != 1):
                x = x[..., None]
            return sum(c * g(x - u) for u, c in zip(points, weights))

        return convolved
    if mu.dim != g.dim:
        raise DimensionMismatch('function and measure differ in dimension')
    shifted = [(translate(g, u), c) for u, c in zip(mu.points, mu.weights)]
    pad = max(int(round((f.L - g.L) / g.h)) for f, _ in shifted)
    total = np.zeros((g.M + 2 * pad,) * g.dim, dtype=complex)
    for f, c in shifted:
        own = int(round((f.L - g.L) / g.h))
        total += c * _embed(f, pad - own).values
    return LineFunction(g.dim, g.L + pad * g.h, g.M + 2 * pad, total, decay=g.decay)
