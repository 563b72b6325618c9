"""Numerics for three concrete Banach algebras.

* `MatrixElement`: square complex matrices with the operator norm.
* `GridFunction`: continuous functions on [0, 1], sampled on M points,
  with the sup norm.
* `C1Function`: continuously differentiable functions sampled with their
  derivatives, with ||f||_C1 = ||f||_sup + ||f'||_sup.

On top of these sit Neumann inversion, the perturbation lemma for
invertible elements, the Gelfand spectral-radius sequence, the Volterra
operator and the C* identities for matrices.
"""
import operator
from collections import namedtuple

import numpy as np
from scipy import integrate, linalg

from .errors import ConvergenceError, DimensionMismatch, PreconditionError
from .settings import conf
from .WorkbenchLogging import get_log

__all__ = ['AlgebraElement', 'MatrixElement', 'GridFunction', 'C1Function',
           'NormReport', 'NeumannInverse', 'SpectralRadius', 'CStarReport',
           'alg_norm', 'neumann_inverse', 'perturb_invertible',
           'perturbation_inverse', 'spectral_radius', 'spectral_radius_eig',
           'gelfand_powers', 'volterra_matrix', 'volterra_apply',
           'volterra_power_norm', 'volterra_gelfand_sequence',
           'cstar_checks', 'c1_product']

NormReport = namedtuple('NormReport', 'value method iterations tolerance')
NeumannInverse = namedtuple('NeumannInverse', 'inverse bound terms')
SpectralRadius = namedtuple('SpectralRadius', 'estimate sequence')
CStarReport = namedtuple('CStarReport',
                         'norm adjoint_norm star_norm is_normal power_norms '
                         'adjoint_ok cstar_ok power_ok')


class AlgebraElement:
    """Common arithmetic for the carriers; subclasses supply the product."""

    def identity(self):
        raise NotImplementedError

    def zero(self):
        return self * 0.0

    def __sub__(self, other):
        return self + other * -1.0

    def __rmul__(self, scalar):
        return self * scalar

    def __truediv__(self, scalar):
        return self * (1.0 / scalar)

    def power(self, n):
        """x^n by repeated squaring; x^0 is the identity."""
        n = operator.index(n)
        if n < 0:
            raise PreconditionError('negative powers are not defined')
        result = self.identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def norm(self):
        return alg_norm(self).value


class MatrixElement(AlgebraElement):
    """A d x d complex matrix acting on C^d with the Euclidean norm."""

    def __init__(self, entries):
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise PreconditionError('matrix elements must be square')
        if not np.all(np.isfinite(entries)):
            raise PreconditionError('matrix entries must be finite')
        entries.setflags(write=False)
        self.entries = entries

    @property
    def d(self):
        return self.entries.shape[0]

    def identity(self):
        return MatrixElement(np.eye(self.d))

    def adjoint(self):
        return MatrixElement(self.entries.conj().T)

    def _check(self, other):
        if not isinstance(other, MatrixElement) or other.d != self.d:
            raise DimensionMismatch('matrix sizes differ')

    def __add__(self, other):
        self._check(other)
        return MatrixElement(self.entries + other.entries)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return MatrixElement(self.entries @ other.entries)
        return MatrixElement(self.entries * other)

    def __repr__(self):
        return 'MatrixElement({0!r})'.format(self.entries.tolist())


class GridFunction(AlgebraElement):
    """Samples of a continuous function on the uniform M-point grid over [0, 1]."""

    def __init__(self, values):
        values = np.array(values, dtype=complex).ravel()
        if values.size < 2:
            raise PreconditionError('grid functions need at least two samples')
        if not np.all(np.isfinite(values)):
            raise PreconditionError('grid samples must be finite')
        values.setflags(write=False)
        self.values = values

    @classmethod
    def from_callable(cls, func, M):
        return cls(func(np.linspace(0.0, 1.0, M)))

    @property
    def M(self):
        return self.values.size

    def identity(self):
        return GridFunction(np.ones(self.M))

    def _check(self, other):
        if not isinstance(other, GridFunction) or other.M != self.M:
            raise DimensionMismatch('grid functions live on different grids')

    def __add__(self, other):
        self._check(other)
        return GridFunction(self.values + other.values)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return GridFunction(self.values * other.values)
        return GridFunction(self.values * other)


class C1Function(AlgebraElement):
    """Samples of f and f' on the uniform M-point grid over [0, 1].

    With ``check`` set, the derivative samples must agree with centred
    differences of the values within 10 h^2 (1 + |f'''|).
    """

    def __init__(self, values, derivative, check=False):
        values = np.array(values, dtype=complex).ravel()
        derivative = np.array(derivative, dtype=complex).ravel()
        if values.shape != derivative.shape or values.size < 5:
            raise PreconditionError('C1 samples need matching value and '
                                    'derivative arrays of length >= 5')
        if not (np.all(np.isfinite(values)) and np.all(np.isfinite(derivative))):
            raise PreconditionError('C1 samples must be finite')
        values.setflags(write=False)
        derivative.setflags(write=False)
        self.values = values
        self.derivative = derivative
        if check:
            self._check_consistency()

    @classmethod
    def from_callable(cls, func, dfunc, M):
        x = np.linspace(0.0, 1.0, M)
        return cls(func(x), dfunc(x), check=True)

    @classmethod
    def constant(cls, c, M):
        return cls(np.full(M, c, dtype=complex), np.zeros(M))

    @property
    def M(self):
        return self.values.size

    @property
    def h(self):
        return 1.0 / (self.M - 1)

    def _check_consistency(self):
        h = self.h
        central = (self.values[2:] - self.values[:-2]) / (2 * h)
        third = np.diff(self.values, 3) / h ** 3
        bound = 10 * h ** 2 * (1 + np.max(np.abs(third)))
        err = np.max(np.abs(central - self.derivative[1:-1]))
        if err > bound:
            raise PreconditionError('derivative samples disagree with the '
                                    'values: {0:.3g} > {1:.3g}'.format(err, bound))

    def identity(self):
        return C1Function(np.ones(self.M), np.zeros(self.M))

    def _check(self, other):
        if not isinstance(other, C1Function) or other.M != self.M:
            raise DimensionMismatch('C1 functions live on different grids')

    def __add__(self, other):
        self._check(other)
        return C1Function(self.values + other.values,
                          self.derivative + other.derivative)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return c1_product(self, other)
        return C1Function(self.values * other, self.derivative * other)


def _power_iteration(A, tol, maxiter, start):
    """Largest eigenvalue of the Hermitian B = A^H A by Rayleigh quotients."""
    v = start / np.linalg.norm(start)
    lam = 0.0
    for it in range(1, maxiter + 1):
        w = A.conj().T @ (A @ v)
        lam_new = float(np.vdot(v, w).real)
        nw = np.linalg.norm(w)
        if nw == 0:
            return 0.0, it
        v = w / nw
        if abs(lam_new - lam) <= tol * max(lam_new, 1e-300):
            return lam_new, it
        lam = lam_new
    raise ConvergenceError('power iteration did not converge in {0} '
                           'iterations'.format(maxiter))


def alg_norm(x, tol=None, maxiter=None):
    """Norm of an algebra element.

    Matrices use power iteration on x^H x from the all-ones vector,
    repeated from a seeded Gaussian vector so that a start orthogonal to
    the top singular vector cannot hide it.
    """
    if isinstance(x, GridFunction):
        return NormReport(float(np.max(np.abs(x.values))), 'exact', 0, 0.0)
    if isinstance(x, C1Function):
        value = float(np.max(np.abs(x.values)) + np.max(np.abs(x.derivative)))
        return NormReport(value, 'exact', 0, 0.0)
    if not isinstance(x, MatrixElement):
        raise PreconditionError('no norm for {0!r}'.format(type(x).__name__))
    tol = conf.power_tol if tol is None else tol
    maxiter = conf.power_maxiter if maxiter is None else maxiter
    A = x.entries
    if not np.any(A):
        return NormReport(0.0, 'power-iteration', 0, tol)
    lam1, it1 = _power_iteration(A, tol, maxiter, np.ones(x.d, dtype=complex))
    rng = np.random.default_rng(conf.seed)
    start = rng.normal(size=x.d) + 1j * rng.normal(size=x.d)
    lam2, it2 = _power_iteration(A, tol, maxiter, start)
    return NormReport(float(np.sqrt(max(lam1, lam2, 0.0))), 'power-iteration',
                      it1 + it2, tol)


def _first_contracting_power(a, kmax=64):
    """Norms ||a^j|| for j = 0.. until one drops below 1; None if none by kmax."""
    norms = [alg_norm(a.identity()).value]
    p = a.identity()
    for k in range(1, kmax + 1):
        p = p * a
        norms.append(alg_norm(p).value)
        if norms[-1] < 1:
            return k, norms
    return None, norms


def neumann_inverse(a, tol=None, maxterms=None, log=None):
    """Invert e - a by the partial sums S_J = sum_{j<J} a^j.

    Requires ||a^k|| < 1 for some k <= 64.  The sum stops when the
    residual ||(e - a) S - e|| = ||a^J|| is at most ``tol``.

    Returns
    -------
    NeumannInverse
        ``(inverse, bound, terms)`` where ``bound`` dominates
        ||(e - a)^-1||: 1/(1 - ||a||) when ||a|| < 1, otherwise
        sum_{j<k} ||a^j|| / (1 - ||a^k||).
    """
    if log is None:
        log = get_log()
    tol = conf.neumann_tol if tol is None else tol
    maxterms = conf.neumann_maxterms if maxterms is None else maxterms
    k, norms = _first_contracting_power(a)
    if k is None:
        log.doMessage('WARN', 'Neumann series rejected: no power a^k with '
                      'k <= 64 has norm < 1')
        raise PreconditionError('no power a^k, k <= 64, has norm below 1')
    if norms[1] < 1:
        bound = 1.0 / (1.0 - norms[1])
    else:
        bound = sum(norms[:k]) / (1.0 - norms[k])

    e = a.identity()
    total = e
    p = e
    terms = 1
    while True:
        p = p * a
        residual = alg_norm(p).value
        if residual <= tol:
            break
        total = total + p
        terms += 1
        if terms > maxterms:
            raise ConvergenceError('Neumann series needs more than {0} '
                                   'terms'.format(maxterms))
    check = alg_norm((e - a) * total - e).value
    log.doMessage('DBG', 'Neumann series: {0} terms, residual {1:.3g}, '
                  'bound {2:.6g}'.format(terms, check, bound))
    if check > tol:
        raise ConvergenceError('Neumann residual {0:.3g} exceeds tolerance '
                               '{1:.3g}'.format(check, tol))
    return NeumannInverse(total, bound, terms)


def perturb_invertible(b_inv_norm, a_norm):
    """True iff ||a|| ||b^-1|| < 1, so that b - a is invertible."""
    if b_inv_norm < 0 or a_norm < 0:
        raise PreconditionError('norms must be nonnegative')
    return a_norm * b_inv_norm < 1


def perturbation_inverse(b, b_inv, a, tol=None):
    """(b - a)^-1 = b^-1 (e - a b^-1)^-1, guarded by `perturb_invertible`."""
    if not perturb_invertible(alg_norm(b_inv).value, alg_norm(a).value):
        raise PreconditionError('||a|| ||b^-1|| >= 1; the perturbation '
                                'lemma does not apply')
    inner = neumann_inverse(a * b_inv, tol=tol)
    return b_inv * inner.inverse


def gelfand_powers(max_power):
    """n in {1..8} U {2^k <= max_power} U {max_power - 7 .. max_power}."""
    ns = set(range(1, 9))
    k = 1
    while k <= max_power:
        ns.add(k)
        k *= 2
    ns.update(range(max(1, max_power - 7), max_power + 1))
    return sorted(n for n in ns if n <= max_power)


class _ScaledPower:
    """An element kept as exp(logscale) * unit with ||unit|| = 1 (or unit = 0)."""

    def __init__(self, element, logscale=0.0):
        nrm = alg_norm(element).value
        if nrm == 0:
            self.unit = element
            self.logscale = -np.inf
        else:
            self.unit = element / nrm
            self.logscale = logscale + np.log(nrm)

    def __mul__(self, other):
        if np.isinf(self.logscale) or np.isinf(other.logscale):
            out = _ScaledPower(self.unit.zero())
            return out
        return _ScaledPower(self.unit * other.unit, self.logscale + other.logscale)


def spectral_radius(x, max_power=256, log=None):
    """Gelfand estimate min_n ||x^n||^(1/n) over `gelfand_powers`.

    The element is rescaled by 1/||x|| and powers are renormalized after
    every product, so nothing overflows; r(tx) = |t| r(x) restores the
    scale.  Returns the estimate, an upper bound for r(x), and the
    sequence of (n, ||x^n||^(1/n)).
    """
    if log is None:
        log = get_log()
    max_power = operator.index(max_power)
    if max_power < 8:
        raise PreconditionError('spectral radius needs max_power >= 8')
    t = alg_norm(x).value
    ns = gelfand_powers(max_power)
    if t == 0:
        return SpectralRadius(0.0, [(n, 0.0) for n in ns])
    base = _ScaledPower(x / t)
    powers = {1: base}

    def power(n):
        if n not in powers:
            if n % 2:
                powers[n] = power(n - 1) * base
            else:
                half = power(n // 2)
                powers[n] = half * half
        return powers[n]

    sequence = []
    for n in ns:
        ls = power(n).logscale
        sequence.append((n, 0.0 if np.isinf(ls) else float(t * np.exp(ls / n))))
    estimate = min(v for _, v in sequence)
    log.doMessage('DBG', 'Gelfand sequence over', len(ns), 'powers, estimate',
                  estimate)
    return SpectralRadius(estimate, sequence)


def spectral_radius_eig(x):
    """max |eigenvalue| of a matrix element (d <= 8) via LAPACK."""
    if not isinstance(x, MatrixElement):
        raise PreconditionError('eigenvalue oracle needs a matrix element')
    if x.d > 8:
        raise PreconditionError('eigenvalue oracle is limited to d <= 8')
    try:
        eig = linalg.eigvals(x.entries)
    except linalg.LinAlgError as err:
        raise ConvergenceError('eigenvalue computation failed: {0}'.format(err))
    return float(np.max(np.abs(eig)))


def volterra_matrix(M):
    """Cumulative trapezoid matrix of T(f)(x) = int_0^x f on M grid points."""
    M = operator.index(M)
    if M < 2:
        raise PreconditionError('Volterra grid needs at least two points')
    h = 1.0 / (M - 1)
    W = np.tril(np.ones((M, M)), -1) * h
    W[:, 0] *= 0.5
    W[np.arange(1, M), np.arange(1, M)] = 0.5 * h
    W[0, 0] = 0.0
    return W


def volterra_apply(f, M=None):
    """T(f) on the grid by cumulative trapezoid integration."""
    f = np.asarray(f, dtype=complex)
    if M is None:
        M = f.size
    return integrate.cumulative_trapezoid(f, dx=1.0 / (M - 1), initial=0)


def volterra_power_norm(n, M=2000):
    """Sup-norm operator norm of the discretized T^n.

    The matrix of T^n has nonnegative entries, so its maximum absolute row
    sum is max_i (T^n 1)(x_i); it tends to 1/n! as M grows.
    """
    n = operator.index(n)
    M = operator.index(M)
    if not 1 <= n <= 12:
        raise PreconditionError('Volterra power must satisfy 1 <= n <= 12')
    if M < 500:
        raise PreconditionError('Volterra grid needs M >= 500')
    f = np.ones(M)
    for _ in range(n):
        f = volterra_apply(f, M).real
    return float(np.max(f))


def volterra_gelfand_sequence(nmax=12, M=2000):
    """||T^n||^(1/n) for n = 1..nmax; tends to 0 since r(T) = 0."""
    return [volterra_power_norm(n, M) ** (1.0 / n) for n in range(1, nmax + 1)]


def cstar_checks(T, normal_tol=1e-12, max_power=8):
    """C* identities for a matrix element (d <= 16).

    ||T*|| = ||T|| and ||T* T|| = ||T||^2 always; ||T^l|| = ||T||^l for
    l <= ``max_power`` when T is normal.
    """
    if not isinstance(T, MatrixElement):
        raise PreconditionError('C* checks need a matrix element')
    if T.d > 16:
        raise PreconditionError('C* checks are limited to d <= 16')
    norm = alg_norm(T).value
    adj = T.adjoint()
    adjoint_norm = alg_norm(adj).value
    star_norm = alg_norm(adj * T).value
    # Frobenius norm dominates the operator norm
    commutator = float(np.linalg.norm((adj * T - T * adj).entries))
    is_normal = commutator <= normal_tol
    power_norms = None
    power_ok = None
    if is_normal:
        power_norms = []
        p = T
        for l in range(1, max_power + 1):
            if l > 1:
                p = p * T
            power_norms.append((l, alg_norm(p).value, norm ** l))
        power_ok = all(abs(pn - ref) <= 1e-8 * max(ref, 1e-300)
                       for _, pn, ref in power_norms)
    adjoint_ok = abs(adjoint_norm - norm) <= 1e-10 * max(1.0, norm)
    cstar_ok = abs(star_norm - norm ** 2) <= 1e-9 * max(norm ** 2, 1e-300)
    return CStarReport(norm, adjoint_norm, star_norm, is_normal, power_norms,
                       adjoint_ok, cstar_ok, power_ok)


def c1_product(f, g):
    """Pointwise product with derivative f' g + f g'."""
    if not isinstance(f, C1Function):
        raise PreconditionError('c1_product needs C1 functions')
    f._check(g)
    return C1Function(f.values * g.values,
                      f.derivative * g.values + f.values * g.derivative)
