"""Finite-index sequence spaces.

Norms and quasi-norms ||f||_p for 0 < p <= inf, the bilinear pairing and
the inner product, dual norms with explicit extremizers and brute-force
oracles, the inequality suites and the metric built from a finite family
of seminorms.
"""
import itertools
from collections import namedtuple

import numpy as np
from scipy import optimize
from scipy.special import logsumexp
from scipy.stats import qmc

from .errors import DimensionMismatch, PreconditionError
from .WorkbenchLogging import get_log

__all__ = ['SeqVector', 'Exponent', 'DualNorm', 'InequalityGap',
           'Projection', 'lp_norm', 'conjugate_exponent', 'pairing',
           'inner_product', 'dual_norm', 'dual_norm_bruteforce',
           'seminorm_family_metric', 'weighted_sup_seminorm',
           'holder_gap', 'minkowski_gap', 'quasi_triangle_gap',
           'interpolation_gap', 'orthogonal_projection']

DualNorm = namedtuple('DualNorm', 'value extremizer')
Projection = namedtuple('Projection', 'projection bessel_sum residual_sq')


class InequalityGap(namedtuple('InequalityGap', 'slack scale')):
    """Signed slack ``rhs - lhs`` of an inequality and the size it is relative to."""

    __slots__ = ()

    def holds(self, rtol=1e-12):
        return self.slack >= -rtol * max(self.scale, 1e-300)


class SeqVector:
    """A finite complex sequence f(x), x in a finite index set E."""

    def __init__(self, entries):
        values = np.array(entries, dtype=complex).ravel()
        if values.size < 1:
            raise PreconditionError('a sequence needs at least one entry')
        if not np.all(np.isfinite(values)):
            raise PreconditionError('sequence entries must be finite')
        values.setflags(write=False)
        self.entries = values

    def __len__(self):
        return len(self.entries)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def __add__(self, other):
        return SeqVector(self.entries + _entries(other))

    def __sub__(self, other):
        return SeqVector(self.entries - _entries(other))

    def __mul__(self, other):
        if np.isscalar(other):
            return SeqVector(self.entries * other)
        return SeqVector(self.entries * _entries(other))

    __rmul__ = __mul__

    def __repr__(self):
        return 'SeqVector({0!r})'.format(self.entries.tolist())

    @property
    def is_real(self):
        return not np.any(self.entries.imag)


class Exponent:
    """A positive real exponent p, or infinity.

    >>> Exponent('inf').is_infinite
    True
    >>> Exponent(3).conjugate().value
    1.5
    """

    def __init__(self, value):
        if isinstance(value, Exponent):
            value = value.value
        value = float(value)
        if not (value > 0):
            raise PreconditionError('exponent must be positive or inf, got '
                                    '{0}'.format(value))
        self.value = value

    @property
    def is_infinite(self):
        return np.isinf(self.value)

    def conjugate(self):
        return conjugate_exponent(self)

    def __eq__(self, other):
        if isinstance(other, Exponent):
            other = other.value
        try:
            return self.value == float(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __float__(self):
        return self.value

    def __repr__(self):
        return 'Exponent({0})'.format('inf' if self.is_infinite else self.value)


def _entries(f):
    if isinstance(f, SeqVector):
        return f.entries
    return SeqVector(f).entries


def _same_length(f, g):
    f = _entries(f)
    g = _entries(g)
    if len(f) != len(g):
        raise DimensionMismatch('sequence lengths differ: {0} vs {1}'.format(
            len(f), len(g)))
    return f, g


def lp_norm(f, p):
    """||f||_p, with p = inf the max modulus.

    The sum of p-th powers is accumulated in the log domain when p > 8 or
    the nonzero moduli span more than six decades.

    >>> lp_norm([3, 4], 2)
    5.0
    """
    a = np.abs(_entries(f))
    p = Exponent(p)
    if p.is_infinite:
        return float(a.max())
    nz = a[a > 0]
    if nz.size == 0:
        return 0.0
    pv = p.value
    if pv > 8 or nz.max() > 1e6 * nz.min():
        return float(np.exp(logsumexp(pv * np.log(nz)) / pv))
    return float(np.sum(nz ** pv) ** (1.0 / pv))


def conjugate_exponent(p):
    """Return q with 1/p + 1/q = 1; 1 and inf are paired."""
    p = Exponent(p)
    if p.value < 1:
        raise PreconditionError('conjugate exponent needs p >= 1, got '
                                '{0}'.format(p.value))
    if p.value == 1:
        return Exponent(np.inf)
    if p.is_infinite:
        return Exponent(1)
    return Exponent(p.value / (p.value - 1))


def pairing(f, g):
    """sum_x f(x) g(x), without conjugation."""
    f, g = _same_length(f, g)
    return complex(np.sum(f * g))


def inner_product(f, g):
    """<f, g> = sum_x f(x) conj(g(x))."""
    f, g = _same_length(f, g)
    return complex(np.vdot(g, f))


def _phase(g):
    """exp(-i arg g) with 0 where g vanishes."""
    mod = np.abs(g)
    out = np.zeros_like(g)
    nz = mod > 0
    out[nz] = np.conj(g[nz]) / mod[nz]
    return out


def dual_norm(g, p):
    """Dual norm of f -> pairing(f, g) on l^p, and a vector attaining it.

    The value is ||g||_q for the conjugate exponent q.  The extremizer f
    satisfies f(x) g(x) = |f(x)|^p = |g(x)|^q up to normalization.

    Returns
    -------
    DualNorm
        ``(value, extremizer)`` with ``lp_norm(extremizer, p) == 1``
        unless g vanishes.
    """
    g = _entries(g)
    p = Exponent(p)
    q = conjugate_exponent(p)
    value = lp_norm(g, q)
    mod = np.abs(g)
    if value == 0:
        f = np.zeros_like(g)
        f[0] = 1.0
        return DualNorm(0.0, f)
    if p.value == 1:
        j = int(np.argmax(mod))
        f = np.zeros_like(g)
        f[j] = _phase(g[j:j + 1])[0]
    elif p.is_infinite:
        f = _phase(g)
    else:
        f = _phase(g) * (mod / mod.max()) ** (q.value - 1)
        f = f / lp_norm(f, p)
    return DualNorm(value, f)


def _sign_patterns(g, support):
    signs = np.array(list(itertools.product((1.0, -1.0), repeat=len(support))))
    return float(np.max(np.abs(signs @ g[support].real)))


def dual_norm_bruteforce(g, p, seed=0, log=None):
    """Maximize |pairing(f, g)| over the unit ball of l^p directly.

    p = 1 runs over phased basis vectors.  Real g with p = inf runs over all
    sign patterns on the support (at most 12 entries).  Otherwise a
    scrambled Sobol set of directions seeds a quasi-Newton refinement of
    ``|pairing(f, g)| / ||f||_p``.
    """
    if log is None:
        log = get_log()
    g = _entries(g)
    p = Exponent(p)
    if p.value < 1:
        raise PreconditionError('dual norm needs p >= 1')
    support = np.flatnonzero(np.abs(g) > 0)
    if support.size == 0:
        return 0.0
    if p.value == 1:
        return float(max(abs(pairing(np.eye(len(g))[j], g)) for j in range(len(g))))
    gs = g[support]
    real = not np.any(gs.imag)
    if real and p.is_infinite:
        if support.size > 12:
            raise PreconditionError('sign-pattern oracle is limited to '
                                    'supports of 12 entries')
        return float(_sign_patterns(g, support))

    k = support.size
    if real:
        def unpack(x):
            return np.asarray(x, dtype=complex)
        ndim = k
    elif p.is_infinite:
        def unpack(x):
            return np.exp(1j * np.asarray(x))
        ndim = k
    else:
        def unpack(x):
            return x[:k] * np.exp(1j * x[k:])
        ndim = 2 * k

    def ratio(x):
        f = unpack(x)
        norm = lp_norm(f, p) if np.any(f) else 0.0
        if norm == 0:
            return 0.0
        return abs(np.sum(f * gs)) / norm

    sampler = qmc.Sobol(ndim, scramble=True, seed=seed)
    u = sampler.random_base2(12)
    if real:
        starts = 2 * u - 1
    elif p.is_infinite:
        starts = 2 * np.pi * u
    else:
        starts = np.hstack([u[:, :k], 2 * np.pi * u[:, k:]])
    scores = np.array([ratio(x) for x in starts])
    best = starts[int(np.argmax(scores))]
    res = optimize.minimize(lambda x: -ratio(x), best, method='BFGS',
                            options={'gtol': 1e-12})
    refined = optimize.minimize(lambda x: -ratio(x), res.x,
                                method='Nelder-Mead',
                                options={'xatol': 1e-12, 'fatol': 1e-15,
                                         'maxiter': 20000})
    value = max(scores.max(), -res.fun, -refined.fun)
    log.doMessage('DBG', 'dual norm oracle: p =', p.value, 'support', k,
                  'value', value)
    return float(value)


def weighted_sup_seminorm(k):
    """The seminorm N_k(f) = sup_j j^k |f(j)|, with j counted from 1."""

    def evaluate(f):
        a = np.abs(_entries(f))
        j = np.arange(1, len(a) + 1, dtype=float)
        return float(np.max(j ** k * a))

    evaluate.__name__ = 'N_{0}'.format(k)
    return evaluate


def _spot_check_seminorm(N, length, rng, npairs=10):
    for _ in range(npairs):
        x = rng.normal(size=length) + 1j * rng.normal(size=length)
        y = rng.normal(size=length) + 1j * rng.normal(size=length)
        t = complex(rng.normal(), rng.normal())
        nx, ny = N(x), N(y)
        scale = 1e-9 * (1 + nx + ny)
        if nx < 0 or ny < 0:
            raise PreconditionError('seminorm {0} returned a negative '
                                    'value'.format(getattr(N, '__name__', N)))
        if abs(N(t * x) - abs(t) * nx) > scale * (1 + abs(t)):
            raise PreconditionError('seminorm {0} is not absolutely '
                                    'homogeneous'.format(getattr(N, '__name__', N)))
        if N(x + y) > nx + ny + scale:
            raise PreconditionError('seminorm {0} is not '
                                    'subadditive'.format(getattr(N, '__name__', N)))


def seminorm_family_metric(v, w, seminorms, check=True, seed=0):
    """d(v, w) = max_l min(N_l(v - w), 1/l) over a finite family, l from 1.

    With ``check`` set, each seminorm is spot-checked for absolute
    homogeneity and subadditivity at 10 random pairs before use.
    """
    v, w = _same_length(v, w)
    seminorms = list(seminorms)
    if not seminorms:
        raise PreconditionError('the seminorm family is empty')
    if check:
        rng = np.random.default_rng(seed)
        for N in seminorms:
            _spot_check_seminorm(N, len(v), rng)
    diff = v - w
    return float(max(min(N(diff), 1.0 / l)
                     for l, N in enumerate(seminorms, start=1)))


def holder_gap(f, g, p):
    """Slack of ||f g||_1 <= ||f||_p ||g||_q."""
    f, g = _same_length(f, g)
    q = conjugate_exponent(p)
    rhs = lp_norm(f, p) * lp_norm(g, q)
    return InequalityGap(rhs - lp_norm(f * g, 1), rhs)


def minkowski_gap(f, g, p):
    """Slack of ||f + g||_p <= ||f||_p + ||g||_p, for p >= 1."""
    f, g = _same_length(f, g)
    if Exponent(p).value < 1:
        raise PreconditionError('Minkowski needs p >= 1')
    rhs = lp_norm(f, p) + lp_norm(g, p)
    return InequalityGap(rhs - lp_norm(f + g, p), rhs)


def quasi_triangle_gap(f, g, p):
    """Slack of ||f + g||_p^p <= ||f||_p^p + ||g||_p^p, for 0 < p <= 1."""
    f, g = _same_length(f, g)
    pv = Exponent(p).value
    if pv > 1:
        raise PreconditionError('quasi-triangle inequality needs p <= 1')
    rhs = lp_norm(f, p) ** pv + lp_norm(g, p) ** pv
    return InequalityGap(rhs - lp_norm(f + g, p) ** pv, rhs)


def interpolation_gap(h, f, g, t, p):
    """Slack of ||h||_p <= ||f||_p^t ||g||_p^(1-t).

    Requires |h| <= |f|^t |g|^(1-t) pointwise.
    """
    f, g = _same_length(f, g)
    h, _ = _same_length(h, f)
    if not 0 <= t <= 1:
        raise PreconditionError('interpolation parameter must be in [0, 1]')
    envelope = np.abs(f) ** t * np.abs(g) ** (1 - t)
    if np.any(np.abs(h) > envelope * (1 + 1e-12)):
        raise PreconditionError('|h| is not dominated by |f|^t |g|^(1-t)')
    rhs = lp_norm(f, p) ** t * lp_norm(g, p) ** (1 - t)
    return InequalityGap(rhs - lp_norm(h, p), rhs)


def orthogonal_projection(v, family):
    """Project v on the span of an orthonormal family.

    Returns the projection, the Bessel sum sum_j |<v, v_j>|^2 and
    ||v - P(v)||^2, so that ||v||^2 = residual_sq + bessel_sum.
    """
    v = _entries(v)
    basis = np.array([_same_length(u, v)[0] for u in family])
    if basis.size == 0:
        return Projection(np.zeros_like(v), 0.0, float(np.vdot(v, v).real))
    gram = basis.conj() @ basis.T
    if np.max(np.abs(gram - np.eye(len(basis)))) > 1e-10:
        raise PreconditionError('family is not orthonormal')
    coeffs = basis.conj() @ v
    proj = coeffs @ basis
    resid = v - proj
    return Projection(proj, float(np.sum(np.abs(coeffs) ** 2)),
                      float(np.vdot(resid, resid).real))
