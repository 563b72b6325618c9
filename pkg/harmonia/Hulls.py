"""Convex hulls and polynomial hulls of finite samples.

Real point clouds are tested for membership in their convex hull by
projecting onto the hull over the simplex of weights (away-step
conditional gradient).  A point outside gets the separating functional
built from the nearest hull point; a point inside gets a convex
combination with at most d + 1 sample points.

Complex samples of completely circular sets are handled through their
log-modulus images: a point z is in the polynomial hull iff
(log|z_j|)_{j in I} lies below the convex hull of the sample images on the
support pattern I of z.  Points outside carry a monomial witness z^alpha
with |z^alpha| larger than its sup over the sample.

Every certificate is checked by `verify_certificate` before it is
returned; all guarantees are relative to the finite sample.
"""
import math
import operator
from collections import namedtuple
from fractions import Fraction

import numpy as np
from scipy import linalg, optimize

from .errors import (CertificateError, ConvergenceError, DimensionMismatch,
                     PreconditionError)
from .Polynomials import MultiIndex
from .settings import conf
from .WorkbenchLogging import get_log

__all__ = ['PointCloud', 'CircularSample', 'LogRegion', 'DownwardHull',
           'InsideConvexCombination', 'SeparatingFunctional',
           'MonomialWitness', 'ExponentialWitness', 'EbWitness', 'EbReport',
           'convex_membership', 'downward_closure_hull',
           'poly_hull_membership', 'monomial_sup', 'exp_certificate',
           'eb_dichotomy', 'torus_invariance_check', 'three_lines_check',
           'verify_certificate', 'torus_sample', 'polydisk_sample',
           'bidisk_union_sample', 'axes_disks_sample', 'eb_ray_sample',
           'multiplicative_interpolate', 'exponential_sum',
           'exponential_sum_bounds']

_REPRODUCE_TOL = 1e-9
_EB_THRESHOLD = 1e6


class InsideConvexCombination(namedtuple('InsideConvexCombination',
                                         'weights support_points residual')):
    """Weights in the simplex over sample points reaching the query point.

    For polynomial hulls the support points are log-modulus vectors and
    the combination dominates the query instead of reproducing it.
    """

    __slots__ = ()
    inside = True


class SeparatingFunctional(namedtuple('SeparatingFunctional',
                                      'functional margin')):
    """lambda with lambda(x) - max over the sample of lambda = margin > 0."""

    __slots__ = ()
    inside = False


class MonomialWitness(namedtuple('MonomialWitness',
                                 'alpha log_sup_on_e log_value_at_z')):
    """Exponents alpha with log|z^alpha| above the log-sup of |w^alpha|.

    Values are kept as logarithms; integer exponents from rationalized
    functionals can be large.
    """

    __slots__ = ()
    inside = False

    @property
    def sup_on_e(self):
        return float(np.exp(self.log_sup_on_e))

    @property
    def value_at_z(self):
        return float(np.exp(self.log_value_at_z))


class ExponentialWitness(namedtuple('ExponentialWitness',
                                    'mu t boundary_sup value_at_z')):
    """The polynomial 1 + t mu(w) is larger in modulus at z than on the sample."""

    __slots__ = ()
    inside = False


EbWitness = namedtuple('EbWitness', 'alpha log_moduli log_value')
EbReport = namedtuple('EbReport',
                      'b rational bounded_monomial sup_on_sample witnesses '
                      'exterior')


class PointCloud:
    """A nonempty finite set of points in R^d, one per row."""

    def __init__(self, points):
        points = np.array(points, dtype=float)
        if points.ndim == 1:
            points = points[:, np.newaxis]
        if points.ndim != 2 or points.shape[0] == 0:
            raise PreconditionError('a point cloud needs at least one point')
        if not np.all(np.isfinite(points)):
            raise PreconditionError('point coordinates must be finite')
        points.setflags(write=False)
        self.points = points

    @property
    def dim(self):
        return self.points.shape[1]

    def __len__(self):
        return self.points.shape[0]


class CircularSample:
    """Finite sample of a set in C^n.

    ``completely_circular`` is declared by the caller: the sampled set is
    closed under (z_1, ..., z_n) -> (u_1 z_1, ..., u_n z_n), |u_j| <= 1.
    """

    def __init__(self, points, completely_circular=False):
        points = np.array(points, dtype=complex)
        if points.ndim == 1:
            points = points[:, np.newaxis]
        if points.ndim != 2 or points.shape[0] == 0:
            raise PreconditionError('a circular sample needs at least one point')
        if not np.all(np.isfinite(points)):
            raise PreconditionError('sample points must be finite')
        points.setflags(write=False)
        self.points = points
        self.completely_circular = bool(completely_circular)

    @property
    def n(self):
        return self.points.shape[1]

    def __len__(self):
        return self.points.shape[0]

    def log_region(self, support):
        """Log-moduli on `support` of the samples that do not vanish there."""
        support = tuple(operator.index(j) for j in support)
        if any(j < 0 or j >= self.n for j in support):
            raise PreconditionError('support pattern out of range')
        moduli = np.abs(self.points[:, list(support)])
        keep = np.all(moduli > 0, axis=1)
        return LogRegion(support, np.log(moduli[keep]))

    def realified(self):
        """The sample in R^{2n}: (Re w_1, Im w_1, ..., Re w_n, Im w_n)."""
        return PointCloud(_realify(self.points))


class LogRegion(namedtuple('LogRegion', 'support points')):
    """Log-modulus image A_I of a circular sample on a support pattern."""

    __slots__ = ()


def _realify(w):
    w = np.asarray(w, dtype=complex)
    out = np.empty(w.shape[:-1] + (2 * w.shape[-1],))
    out[..., 0::2] = w.real
    out[..., 1::2] = w.imag
    return out


def _as_cloud(S):
    return S if isinstance(S, PointCloud) else PointCloud(S)


def _complex_points(E):
    if isinstance(E, CircularSample):
        return E.points
    cloud = _as_cloud(E)
    if cloud.dim % 2:
        raise DimensionMismatch('a real cloud stands for C^n only in even '
                                'dimension')
    return cloud.points[:, 0::2] + 1j * cloud.points[:, 1::2]


def _simplex_projection(Y, x, tol, maxiter):
    """Minimize ||t Y - x||^2 over the simplex by away-step Frank-Wolfe.

    Starts at the sample nearest to x and stops when the duality gap is
    below tol^2 on the scale of the data.  Returns (t, u = t Y, iterations).
    """
    m = Y.shape[0]
    i0 = int(np.argmin(np.sum((Y - x) ** 2, axis=1)))
    t = np.zeros(m)
    t[i0] = 1.0
    u = Y[i0].copy()
    stop = tol ** 2 * (1.0 + max(x @ x, np.max(np.sum(Y ** 2, axis=1))))
    for it in range(maxiter):
        r = u - x
        grad = 2.0 * (Y @ r)
        tg = grad @ t
        s = int(np.argmin(grad))
        fw_gap = tg - grad[s]
        if fw_gap <= stop:
            return t, u, it
        active = np.flatnonzero(t > 0)
        a = int(active[np.argmax(grad[active])])
        away_gap = grad[a] - tg
        if fw_gap >= away_gap:
            direction = Y[s] - u
            gmax = 1.0
            toward = True
        else:
            direction = u - Y[a]
            gmax = t[a] / (1.0 - t[a])
            toward = False
        dd = direction @ direction
        if dd == 0:
            return t, u, it
        gamma = min(gmax, max(0.0, -(r @ direction) / dd))
        if toward:
            t *= 1.0 - gamma
            t[s] += gamma
        else:
            t *= 1.0 + gamma
            t[a] -= gamma
            if gamma == gmax:
                t[a] = 0.0
        t[t < 0] = 0.0
        u = t @ Y
    raise ConvergenceError('simplex projection did not reach its duality gap '
                           'in {0} iterations'.format(maxiter))


def _caratheodory(Y, t):
    """Reduce the support of the weights t to at most d + 1 points."""
    t = t.copy()
    d = Y.shape[1]
    while True:
        J = np.flatnonzero(t > 0)
        if len(J) <= d + 1:
            return t
        A = np.vstack([Y[J].T, np.ones(len(J))])
        v = linalg.null_space(A)[:, 0]
        if not np.any(v > 0):
            v = -v
        pos = np.flatnonzero(v > 0)
        ratios = t[J[pos]] / v[pos]
        k = int(np.argmin(ratios))
        t[J] -= ratios[k] * v
        t[J[pos[k]]] = 0.0
        t[t < 0] = 0.0


def _polish(Y, t, x):
    """Barycentric least squares on the support, kept only if it helps."""
    J = np.flatnonzero(t > 0)
    A = np.vstack([Y[J].T, np.ones(len(J))])
    rhs = np.append(x, 1.0)
    w = linalg.lstsq(A, rhs)[0]
    if np.all(w >= 0):
        old = np.linalg.norm(t[J] @ Y[J] - x)
        if np.linalg.norm(w @ Y[J] - x) <= old:
            t = np.zeros_like(t)
            t[J] = w
    return t / t.sum()


def convex_membership(x, S, tol=None, log=None):
    """Decide whether x lies in the convex hull of the cloud S.

    Parameters
    ----------
    x : array_like of float
        Query point in R^d.
    S : PointCloud or array_like
        Sample points, one per row.
    tol : float, optional
        Margin below which x counts as inside; ``conf.hull_tol`` by default.

    Returns
    -------
    InsideConvexCombination or SeparatingFunctional
        Inside: weights on at most d + 1 sample points.  Outside: the unit
        functional (x - u)/|x - u| for the nearest hull point u, with margin
        lambda(x) - max_S lambda > tol (1 + |x|).
    """
    if log is None:
        log = get_log()
    if tol is None:
        tol = conf.hull_tol
    cloud = _as_cloud(S)
    x = np.asarray(x, dtype=float).ravel()
    if x.size != cloud.dim:
        raise DimensionMismatch('point has dimension {0}, cloud {1}'.format(
            x.size, cloud.dim))
    Y = cloud.points
    t, u, iterations = _simplex_projection(Y, x, tol, conf.fw_maxiter)
    log.doMessage('DBG', 'simplex projection converged in', iterations,
                  'iterations')
    diff = x - u
    dist = np.linalg.norm(diff)
    if dist > 0:
        lam = diff / dist
        margin = float(lam @ x - np.max(Y @ lam))
        if margin > tol * (1.0 + np.linalg.norm(x)):
            cert = SeparatingFunctional(lam, margin)
            if not _verify_separating(cert, Y, x):
                raise CertificateError('separating functional failed to verify')
            return cert
    t = _polish(Y, _caratheodory(Y, t), x)
    J = np.flatnonzero(t > 0)
    cert = InsideConvexCombination(t[J], Y[J],
                                   float(np.linalg.norm(t[J] @ Y[J] - x)))
    if not _verify_inside_real(cert, Y, x, tol):
        raise CertificateError('convex combination failed to verify')
    return cert


class DownwardHull:
    """Membership in {r : r <= c for some c in Con(A)} for a log region A.

    Decided by the linear program max delta s.t. sum t_i a_i >= r + delta,
    t in the simplex.  Its dual solution is a functional lambda >= 0 with
    sum 1 separating r when delta < 0.
    """

    def __init__(self, region, tol=None):
        if tol is None:
            tol = conf.hull_tol
        points = np.asarray(region.points, dtype=float)
        if points.ndim != 2:
            raise PreconditionError('log region points must be a 2-d array')
        self.support = tuple(region.support)
        self.points = np.unique(points, axis=0) if len(points) else points
        self.tol = tol

    def __call__(self, r):
        return self.certify(r).inside

    def certify(self, r):
        r = np.asarray(r, dtype=float).ravel()
        P = self.points
        k = len(self.support)
        if r.size != k:
            raise DimensionMismatch('point has {0} coordinates, region '
                                    '{1}'.format(r.size, k))
        if len(P) == 0:
            raise PreconditionError('downward hull of an empty region')
        if k == 0:
            return InsideConvexCombination(np.ones(1), P[:1], 0.0)
        m = len(P)
        c = np.zeros(m + 1)
        c[-1] = -1.0
        A_ub = np.hstack([-P.T, np.ones((k, 1))])
        A_eq = np.append(np.ones(m), 0.0)[np.newaxis, :]
        bounds = [(0, None)] * m + [(None, None)]
        res = optimize.linprog(c, A_ub=A_ub, b_ub=-r, A_eq=A_eq, b_eq=[1.0],
                               bounds=bounds, method='highs')
        if res.status != 0:
            raise ConvergenceError('downward hull program failed: '
                                   '{0}'.format(res.message))
        delta = res.x[-1]
        if delta >= -self.tol * (1.0 + np.linalg.norm(r)):
            t = np.clip(res.x[:m], 0, None)
            t /= t.sum()
            J = np.flatnonzero(t > 0)
            shortfall = float(max(0.0, np.max(r - t[J] @ P[J])))
            return InsideConvexCombination(t[J], P[J], shortfall)
        lam = np.clip(-np.asarray(res.ineqlin.marginals), 0, None)
        if lam.sum() == 0:
            raise CertificateError('downward hull program returned no '
                                   'separating functional')
        lam /= lam.sum()
        margin = float(lam @ r - np.max(P @ lam))
        if margin <= 0:
            raise CertificateError('dual functional does not separate: margin '
                                   '{0:.3g}'.format(margin))
        return SeparatingFunctional(lam, margin)


def downward_closure_hull(region, tol=None):
    """Membership predicate for the downward-closed convex hull of a log region.

    >>> inside = downward_closure_hull(LogRegion((0, 1), [[0.0, -1.0], [-1.0, 0.0]]))
    >>> inside([-0.5, -0.5]), inside([-0.2, -0.2])
    (True, False)
    """
    return DownwardHull(region, tol)


def _log_abs_monomial(W, alpha):
    W = np.atleast_2d(np.asarray(W, dtype=complex))
    alpha = np.asarray(alpha, dtype=float)
    used = alpha > 0
    with np.errstate(divide='ignore'):
        logs = np.log(np.abs(W[:, used]))
    return logs @ alpha[used]


def _log_monomial_sup(E, alpha):
    return float(np.max(_log_abs_monomial(_complex_points(E), alpha)))


def monomial_sup(E, alpha):
    """max over the samples of |w^alpha|."""
    alpha = MultiIndex(alpha)
    points = _complex_points(E)
    if len(alpha) != points.shape[1]:
        raise DimensionMismatch('multi-index and sample dimensions differ')
    return float(np.exp(_log_monomial_sup(E, alpha)))


def _integer_exponents(lam, cap):
    """Integer vector proportional to lam >= 0 up to denominators <= cap."""
    ratios = lam / lam.max()
    fracs = [Fraction(float(r)).limit_denominator(cap) for r in ratios]
    common = 1
    for f in fracs:
        common = common * f.denominator // math.gcd(common, f.denominator)
    return MultiIndex(int(f.numerator * (common // f.denominator))
                      for f in fracs)


def _monomial_from_functional(lam, z, E, log):
    cap = conf.rational_cap
    while cap <= conf.rational_cap_max:
        alpha = _integer_exponents(lam, cap)
        cert = MonomialWitness(alpha, _log_monomial_sup(E, alpha),
                               float(_log_abs_monomial(z, alpha)[0]))
        if _verify_monomial(cert, E, z):
            log.doMessage('DBG', 'monomial witness', tuple(alpha),
                          'with denominator cap', cap)
            return cert
        cap *= 2
    raise CertificateError('no monomial witness verified with denominators up '
                           'to {0}'.format(conf.rational_cap_max))


def poly_hull_membership(z, E, tol=None, log=None):
    """Decide z in Pol(E) for a completely circular sample E.

    Returns an `InsideConvexCombination` over log-modulus points that
    dominates (log|z_j|) on the support of z, or a verified
    `MonomialWitness`.  Points on the boundary within ``tol`` are inside.
    """
    if log is None:
        log = get_log()
    if not isinstance(E, CircularSample):
        E = CircularSample(E)
    if not E.completely_circular:
        log.doMessage('WARN', 'polynomial hull asked of a sample not marked '
                      'completely circular')
        raise PreconditionError('sample is not marked completely circular')
    z = np.asarray(z, dtype=complex).ravel()
    if z.size != E.n:
        raise DimensionMismatch('point has {0} coordinates, sample '
                                '{1}'.format(z.size, E.n))
    if not np.all(np.isfinite(z)):
        raise PreconditionError('query point must be finite')
    support = tuple(int(j) for j in np.flatnonzero(z != 0))
    if not support:
        return InsideConvexCombination(np.ones(1), np.zeros((1, 0)), 0.0)
    region = E.log_region(support)
    if len(region.points) == 0:
        alpha = MultiIndex(1 if j in support else 0 for j in range(E.n))
        cert = MonomialWitness(alpha, _log_monomial_sup(E, alpha),
                               float(_log_abs_monomial(z, alpha)[0]))
        log.doMessage('DBG', 'every sample vanishes on the pattern monomial',
                      tuple(alpha))
        return cert
    zeta = np.log(np.abs(z[list(support)]))
    cert = DownwardHull(region, tol).certify(zeta)
    if cert.inside:
        return cert
    lam = np.zeros(E.n)
    lam[list(support)] = cert.functional
    return _monomial_from_functional(lam, z, E, log)


def exp_certificate(z, E, functional=None, tol=None, log=None):
    """Witness |1 + t mu(z)| > sup_E |1 + t mu(w)| for z outside Con(E).

    mu(w) = sum_j (lambda_{2j} - i lambda_{2j+1}) w_j comes from a real
    separating functional on R^{2n}, computed with `convex_membership`
    unless given.  Returns None, with a logged reason, when z is not
    separated from the sample.
    """
    if log is None:
        log = get_log()
    W = _complex_points(E)
    z = np.asarray(z, dtype=complex).ravel()
    if z.size != W.shape[1]:
        raise DimensionMismatch('point and sample dimensions differ')
    if functional is None:
        cert = convex_membership(_realify(z), PointCloud(_realify(W)), tol=tol,
                                 log=log)
        if cert.inside:
            log.doMessage('INFO', 'exponential witness not applicable: the '
                          'point is in the closed convex hull')
            return None
        functional = cert.functional
    functional = np.asarray(functional, dtype=float).ravel()
    if functional.size != 2 * W.shape[1]:
        raise DimensionMismatch('functional must live on R^{0}'.format(
            2 * W.shape[1]))
    mu = functional[0::2] - 1j * functional[1::2]
    mu_w = W @ mu
    mu_z = complex(z @ mu)
    gap = mu_z.real - np.max(mu_w.real)
    if gap <= 0:
        log.doMessage('INFO', 'exponential witness not applicable: no '
                      'separation, gap {0:.3g}'.format(gap))
        return None
    C = float(np.max(np.abs(mu_w) ** 2))
    t = min(1.0, gap / (2 * C + 2 * abs(mu_z) ** 2 + 1))
    cert = ExponentialWitness(mu, t, float(np.max(np.abs(1 + t * mu_w))),
                              abs(1 + t * mu_z))
    if not cert.value_at_z > cert.boundary_sup:
        raise CertificateError('exponential witness failed to verify')
    return cert


def _rational_exponent(b, D):
    if isinstance(b, Fraction):
        if 2 * b.denominator > D:
            raise PreconditionError('degree cap {0} below twice the '
                                    'denominator of {1}'.format(D, b))
        return b
    eps = np.finfo(float).eps
    for q in range(1, D // 2 + 1):
        p = round(b * q)
        if p >= 1 and abs(p / q - b) <= 4 * eps * abs(b):
            return Fraction(p, q)
    return None


def eb_dichotomy(b, D=20, S=40.0, m=401, exterior=(), log=None):
    """Bounded and unbounded monomials on E(b) = {|z_1|^b |z_2| <= 1}.

    For rational b = p/q the monomial (p, q) has sup 1 on the ray sample
    and certifies the given exterior points.  Every nonzero alpha with
    |alpha| <= D and alpha_1 - alpha_2 b != 0 gets a point of E(b), given
    by its log-moduli (s, -b s), where |w^alpha| exceeds 1e6; for
    irrational b that is every nonzero alpha.
    """
    if log is None:
        log = get_log()
    D = operator.index(D)
    if not isinstance(b, Fraction):
        b = float(b)
    if not b > 0:
        raise PreconditionError('E(b) needs b > 0')
    rational = _rational_exponent(b, D)
    bf = float(b)
    sample = eb_ray_sample(bf, S, m)
    target = math.log(_EB_THRESHOLD) + 1.0
    witnesses = []
    for degree in range(1, D + 1):
        for a1 in range(degree, -1, -1):
            a2 = degree - a1
            if rational is not None:
                slope = float(a1 - a2 * rational)
            else:
                slope = a1 - a2 * bf
            if slope == 0:
                continue
            s = target / slope
            witnesses.append(EbWitness(MultiIndex((a1, a2)), (s, -bf * s),
                                       s * slope))
    bounded = sup = None
    certs = []
    if rational is not None:
        bounded = MultiIndex((rational.numerator, rational.denominator))
        sup = monomial_sup(sample, bounded)
        for z in exterior:
            z = np.asarray(z, dtype=complex).ravel()
            cert = MonomialWitness(bounded, _log_monomial_sup(sample, bounded),
                                   float(_log_abs_monomial(z, bounded)[0]))
            certs.append(cert if _verify_monomial(cert, sample, z) else None)
    log.doMessage('DBG', 'E({0}):'.format(b),
                  'rational' if rational is not None else 'irrational',
                  len(witnesses), 'unbounded monomials')
    return EbReport(b, rational is not None, bounded, sup, witnesses, certs)


def torus_invariance_check(E, z, phases=None, count=8, tol=None):
    """True when the rotations T_t(z) get the same hull decision as z."""
    z = np.asarray(z, dtype=complex).ravel()
    if phases is None:
        rng = np.random.default_rng(conf.seed)
        phases = np.exp(2j * np.pi * rng.random((count, z.size)))
    phases = np.atleast_2d(np.asarray(phases, dtype=complex))
    if not np.allclose(np.abs(phases), 1.0, atol=1e-12):
        raise PreconditionError('torus elements must have unit modulus')
    decision = poly_hull_membership(z, E, tol).inside
    return all(poly_hull_membership(z * t, E, tol).inside == decision
               for t in phases)


def exponential_sum(coeffs, rates):
    """f(tau) = sum_k c_k exp(rate_k tau) with real rates."""
    coeffs = np.asarray(coeffs, dtype=complex).ravel()
    rates = np.asarray(rates, dtype=float).ravel()
    if coeffs.shape != rates.shape:
        raise DimensionMismatch('one rate per coefficient')

    def f(tau):
        tau = np.asarray(tau, dtype=complex)
        return np.exp(np.multiply.outer(tau, rates)) @ coeffs

    return f


def exponential_sum_bounds(coeffs, rates):
    """Sups of |f| on the lines Re tau = 0 and Re tau = 1."""
    coeffs = np.abs(np.asarray(coeffs, dtype=complex).ravel())
    rates = np.asarray(rates, dtype=float).ravel()
    return float(coeffs.sum()), float(coeffs @ np.exp(rates))


def three_lines_check(A0, A1, f, x_points=41, y_max=20.0, y_points=81):
    """max of |f(x + iy)| - A0^(1-x) A1^x over a grid on the closed strip."""
    if A0 < 0 or A1 < 0:
        raise PreconditionError('boundary sups must be nonnegative')
    x = np.linspace(0.0, 1.0, x_points)
    y = np.linspace(-y_max, y_max, y_points)
    tau = x[:, np.newaxis] + 1j * y[np.newaxis, :]
    values = np.abs(np.asarray(f(tau)).reshape(tau.shape))
    bound = (A0 ** (1 - x) * A1 ** x)[:, np.newaxis]
    return float(np.max(values - bound))


def multiplicative_interpolate(v, w, a):
    """Point u with |u_j| = |v_j|^a |w_j|^(1-a), on the positive axes."""
    if not 0 <= a <= 1:
        raise PreconditionError('interpolation weight must lie in [0, 1]')
    v = np.abs(np.asarray(v, dtype=complex).ravel())
    w = np.abs(np.asarray(w, dtype=complex).ravel())
    if v.shape != w.shape:
        raise DimensionMismatch('points have different dimensions')
    return (v ** a * w ** (1 - a)).astype(complex)


# Sample generators.  All of them are completely circular except where
# noted; phases are roots of unity so the samples are deterministic.

def _roots(m):
    return np.exp(2j * np.pi * np.arange(m) / m)


def torus_sample(n, m):
    """The grid of m-th roots of unity on T^n.

    Marked completely circular: it stands in for the closed polydisk,
    which has the same polynomial hull.
    """
    grids = np.meshgrid(*([_roots(m)] * n), indexing='ij')
    return CircularSample(np.stack([g.ravel() for g in grids], axis=1),
                          completely_circular=True)


def polydisk_sample(radii, m):
    """Origin and m boundary phases in every coordinate of a closed polydisk."""
    radii = np.asarray(radii, dtype=float).ravel()
    axes = [np.append(0.0, r * _roots(m)) for r in radii]
    grids = np.meshgrid(*axes, indexing='ij')
    return CircularSample(np.stack([g.ravel() for g in grids], axis=1),
                          completely_circular=True)


def bidisk_union_sample(r, t, m):
    """Union of the polydisks with radii r and t."""
    a = polydisk_sample(r, m).points
    b = polydisk_sample(t, m).points
    return CircularSample(np.vstack([a, b]), completely_circular=True)


def axes_disks_sample(r1, r2, m):
    """{(z_1, 0): |z_1| <= r1} and {(0, z_2): |z_2| <= r2}."""
    levels = np.linspace(0.0, 1.0, m)[:, np.newaxis] * _roots(m)
    disk = levels.ravel()
    zeros = np.zeros_like(disk)
    points = np.vstack([np.stack([r1 * disk, zeros], axis=1),
                        np.stack([zeros, r2 * disk], axis=1)])
    return CircularSample(points, completely_circular=True)


def eb_ray_sample(b, S=40.0, m=401):
    """Boundary rays (e^s, e^(-b s)), |s| <= S, of E(b) and the origin."""
    s = np.linspace(-S, S, m)
    phase = _roots(m)
    ray = np.stack([np.exp(s) * phase, np.exp(-b * s) * phase.conj()], axis=1)
    return CircularSample(np.vstack([ray, np.zeros((1, 2))]),
                          completely_circular=True)


# Certificate verification.

def _inside_allowance(Y, x, tol):
    """Distance to the hull a point may have and still be declared inside."""
    scale = 1.0 + max(x @ x, np.max(np.sum(Y ** 2, axis=1)))
    return tol * (1.0 + np.linalg.norm(x) + np.sqrt(scale))


def _verify_inside_real(cert, Y, x, tol):
    w = np.asarray(cert.weights, dtype=float)
    P = np.asarray(cert.support_points, dtype=float)
    if np.any(w < 0) or abs(w.sum() - 1) > _REPRODUCE_TOL:
        return False
    if len(w) > Y.shape[1] + 1:
        return False
    if not all(np.any(np.all(np.abs(Y - p) <= 1e-12 * (1 + np.abs(p)), axis=1))
               for p in P):
        return False
    residual = np.linalg.norm(w @ P - x)
    return residual <= max(_REPRODUCE_TOL, _inside_allowance(Y, x, tol))


def _verify_separating(cert, Y, x):
    lam = np.asarray(cert.functional, dtype=float)
    margin = lam @ x - np.max(Y @ lam)
    return margin > 0 and abs(margin - cert.margin) <= 1e-9 * (1 + abs(margin))


def _verify_inside_log(cert, E, z, tol):
    z = np.asarray(z, dtype=complex).ravel()
    support = tuple(int(j) for j in np.flatnonzero(z != 0))
    if not support:
        return True
    w = np.asarray(cert.weights, dtype=float)
    P = np.asarray(cert.support_points, dtype=float)
    if np.any(w < 0) or abs(w.sum() - 1) > _REPRODUCE_TOL:
        return False
    region = E.log_region(support).points
    if P.ndim != 2 or P.shape[1] != len(support):
        return False
    if not all(np.any(np.all(np.abs(region - p) <= 1e-12 * (1 + np.abs(p)),
                             axis=1)) for p in P):
        return False
    zeta = np.log(np.abs(z[list(support)]))
    shortfall = np.max(zeta - w @ P)
    return shortfall <= tol * (1 + np.linalg.norm(zeta)) + 1e-12


def _verify_monomial(cert, E, z):
    alpha = np.asarray(cert.alpha)
    if not np.any(alpha > 0):
        return False
    value = _log_abs_monomial(z, alpha)[0]
    return bool(value > _log_monomial_sup(E, alpha))


def _verify_exponential(cert, E, z):
    W = _complex_points(E)
    z = np.asarray(z, dtype=complex).ravel()
    mu = np.asarray(cert.mu, dtype=complex)
    boundary = np.max(np.abs(1 + cert.t * (W @ mu)))
    return bool(abs(1 + cert.t * (z @ mu)) > boundary)


def verify_certificate(cert, sample, z, tol=None):
    """Re-check a certificate against the sample from scratch.

    A `PointCloud` sample means convex-hull semantics in R^d; a
    `CircularSample` means polynomial-hull semantics in C^n, with inside
    certificates given in log-modulus coordinates.
    """
    if tol is None:
        tol = conf.hull_tol
    if isinstance(cert, MonomialWitness):
        return _verify_monomial(cert, sample, z)
    if isinstance(cert, ExponentialWitness):
        return _verify_exponential(cert, sample, z)
    if isinstance(sample, CircularSample):
        if isinstance(cert, InsideConvexCombination):
            return _verify_inside_log(cert, sample, z, tol)
        raise PreconditionError('separating functionals certify real clouds')
    cloud = _as_cloud(sample)
    x = np.asarray(z, dtype=float).ravel()
    if x.size != cloud.dim:
        raise DimensionMismatch('point and cloud dimensions differ')
    if isinstance(cert, InsideConvexCombination):
        return _verify_inside_real(cert, cloud.points, x, tol)
    if isinstance(cert, SeparatingFunctional):
        return _verify_separating(cert, cloud.points, x)
    raise PreconditionError('unknown certificate type {0}'.format(
        type(cert).__name__))
