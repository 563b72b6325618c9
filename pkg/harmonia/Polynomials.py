"""Multi-indices, sparse polynomials and truncated power series over C^n.

A multi-index is a tuple of nonnegative integers.  It is used both as the
exponent of a monomial x^alpha and as the order of a partial derivative
d^alpha.  Polynomials are finite tables from multi-indices to complex
coefficients; a stored coefficient is never exactly zero.

"""
import itertools
import math
import operator
from collections import namedtuple

import numpy as np
from scipy.special import gammaln

from .errors import DimensionMismatch, FactorialOverflow, PreconditionError
from .settings import conf

__all__ = ['MultiIndex', 'Polynomial', 'PowerSeriesTrunc', 'ExpSeries',
           'mi_degree', 'mi_factorial', 'mi_add', 'multinomial',
           'monomial_eval', 'poly_eval', 'poly_mul', 'poly_derivative',
           'leibniz_expand', 'exp_series', 'exp_addition_check',
           'homogeneous_parts', 'root_test_estimate', 'cauchy_product',
           'graded_lex_key']

# largest n whose factorial stays below 2**127
_MAX_FACTORIAL_ENTRY = 33

ExpSeries = namedtuple('ExpSeries', 'value remainder')


class MultiIndex(tuple):
    """An ordered tuple of nonnegative integer exponents.

    >>> a = MultiIndex((2, 1, 0))
    >>> a.degree
    3
    >>> a + MultiIndex((0, 1, 1))
    MultiIndex((2, 2, 1))

    Note that ``+`` is the componentwise sum, not tuple concatenation.
    """

    def __new__(cls, exponents):
        try:
            exps = tuple(operator.index(a) for a in exponents)
        except TypeError:
            raise PreconditionError('multi-index entries must be integers, '
                                    'got {0!r}'.format(exponents))
        if not exps:
            raise PreconditionError('multi-index must have at least one entry')
        if any(a < 0 for a in exps):
            raise PreconditionError('multi-index entries must be nonnegative, '
                                    'got {0!r}'.format(exps))
        return super().__new__(cls, exps)

    def __repr__(self):
        return 'MultiIndex({0})'.format(tuple.__repr__(self))

    def __add__(self, other):
        return mi_add(self, other)

    def __sub__(self, other):
        other = MultiIndex(other)
        _check_length(self, other)
        return MultiIndex(a - b for a, b in zip(self, other))

    def dominated_by(self, other):
        """Componentwise order: every entry of self is <= that of ``other``.

        Comparison operators keep the plain tuple (lexicographic) order.
        """
        _check_length(self, other)
        return all(a <= b for a, b in zip(self, other))

    @property
    def dimension(self):
        return len(self)

    @property
    def degree(self):
        return mi_degree(self)

    @classmethod
    def zero(cls, dimension):
        return cls((0,) * dimension)

    @classmethod
    def unit(cls, dimension, j):
        exps = [0] * dimension
        exps[j] = 1
        return cls(exps)


def _check_length(a, b, what='multi-index'):
    if len(a) != len(b):
        raise DimensionMismatch('{0} lengths differ: {1} vs {2}'.format(
            what, len(a), len(b)))


def graded_lex_key(alpha):
    """Sort key putting lower degrees first, then larger leading exponents."""
    return (sum(alpha), tuple(-a for a in alpha))


def mi_degree(alpha):
    """Return |alpha| = alpha_1 + ... + alpha_n."""
    return sum(MultiIndex(alpha))


def mi_add(alpha, beta):
    """Componentwise sum of two multi-indices of equal length."""
    alpha = MultiIndex(alpha)
    beta = MultiIndex(beta)
    _check_length(alpha, beta)
    return MultiIndex(a + b for a, b in zip(alpha, beta))


def mi_factorial(alpha):
    """Return alpha! = alpha_1! ... alpha_n! as an exact integer.

    Raises `FactorialOverflow` when an entry exceeds 33 or the product
    leaves the signed range of ``conf.factorial_bits`` bits.

    >>> mi_factorial((3, 3))
    36
    """
    alpha = MultiIndex(alpha)
    limit = 2 ** (conf.factorial_bits - 1)
    result = 1
    for a in alpha:
        if a > _MAX_FACTORIAL_ENTRY:
            raise FactorialOverflow('factorial of {0} exceeds the {1}-bit '
                                    'range'.format(a, conf.factorial_bits))
        result *= math.factorial(a)
        if result >= limit:
            raise FactorialOverflow('{0}! exceeds the {1}-bit range'.format(
                tuple(alpha), conf.factorial_bits))
    return result


def multinomial(alpha, beta, gamma):
    """Return alpha! / (beta! gamma!) for beta + gamma = alpha.

    >>> multinomial((4,), (2,), (2,))
    6
    """
    alpha = MultiIndex(alpha)
    if mi_add(beta, gamma) != alpha:
        raise PreconditionError('{0} + {1} does not equal {2}'.format(
            tuple(beta), tuple(gamma), tuple(alpha)))
    return mi_factorial(alpha) // (mi_factorial(beta) * mi_factorial(gamma))


def monomial_eval(x, alpha):
    """Evaluate x^alpha with the convention x_j^0 = 1, including 0^0.

    Parameters
    ----------
    x : array_like of complex
        Point in C^n.
    alpha : sequence of int
        Exponents, same length as ``x``.

    Returns
    -------
    complex
    """
    alpha = MultiIndex(alpha)
    x = np.asarray(x, dtype=complex).ravel()
    _check_length(x, alpha, 'point and multi-index')
    exps = np.array(alpha)
    used = exps > 0
    return complex(np.prod(x[used] ** exps[used]))


class Polynomial:
    """Sparse polynomial in ``dimension`` complex variables.

    ``terms`` maps `MultiIndex` keys to complex coefficients.  Exact zeros
    are dropped on construction, so two polynomials are equal exactly when
    their coefficient tables are.
    """

    def __init__(self, dimension, terms=None):
        dimension = operator.index(dimension)
        if dimension < 1:
            raise PreconditionError('polynomial dimension must be positive')
        self.dimension = dimension
        table = {}
        for alpha, coeff in dict(terms or {}).items():
            alpha = MultiIndex(alpha)
            if len(alpha) != dimension:
                raise DimensionMismatch('term {0} does not have dimension '
                                        '{1}'.format(tuple(alpha), dimension))
            coeff = complex(coeff)
            if not np.isfinite(coeff):
                raise PreconditionError('coefficient of {0} is not '
                                        'finite'.format(tuple(alpha)))
            table[alpha] = table.get(alpha, 0j) + coeff
        self.terms = {a: c for a, c in table.items() if c != 0}

    @classmethod
    def constant(cls, dimension, value=1.0):
        return cls(dimension, {MultiIndex.zero(dimension): value})

    @classmethod
    def monomial(cls, alpha, coeff=1.0):
        alpha = MultiIndex(alpha)
        return cls(len(alpha), {alpha: coeff})

    @classmethod
    def variable(cls, dimension, j):
        """The coordinate function z_j (0-based ``j``)."""
        return cls.monomial(MultiIndex.unit(dimension, j))

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(a.degree for a in self.terms)

    def coefficient(self, alpha):
        return self.terms.get(MultiIndex(alpha), 0j)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: graded_lex_key(kv[0]))

    def _check(self, other):
        if self.dimension != other.dimension:
            raise DimensionMismatch('polynomial dimensions differ: {0} vs '
                                    '{1}'.format(self.dimension,
                                                 other.dimension))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dimension, other)
        self._check(other)
        table = dict(self.terms)
        for alpha, coeff in other.terms.items():
            table[alpha] = table.get(alpha, 0j) + coeff
        return Polynomial(self.dimension, table)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.dimension,
                          {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dimension, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        other = complex(other)
        return Polynomial(self.dimension,
                          {a: c * other for a, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __hash__(self):
        return hash((self.dimension, frozenset(self.terms.items())))

    def __call__(self, z):
        return poly_eval(self, z)

    def __repr__(self):
        if not self.terms:
            return 'Polynomial({0}, 0)'.format(self.dimension)
        parts = ['{0}*z^{1}'.format(c, tuple(a)) for a, c in self.sorted_terms()]
        return 'Polynomial({0}, {1})'.format(self.dimension, ' + '.join(parts))


class PowerSeriesTrunc(Polynomial):
    """A formal power series truncated at total degree ``max_degree``."""

    def __init__(self, dimension, max_degree, terms=None):
        max_degree = operator.index(max_degree)
        if max_degree < 0:
            raise PreconditionError('max_degree must be nonnegative')
        super().__init__(dimension, terms)
        for alpha in self.terms:
            if alpha.degree > max_degree:
                raise PreconditionError('term {0} exceeds max degree '
                                        '{1}'.format(tuple(alpha), max_degree))
        self.max_degree = max_degree

    @classmethod
    def geometric(cls, max_degree):
        """sum_l z^l in one variable."""
        return cls(1, max_degree, {(l,): 1.0 for l in range(max_degree + 1)})

    @classmethod
    def exponential(cls, max_degree):
        """sum_l z^l / l! in one variable."""
        return cls(1, max_degree,
                   {(l,): np.exp(-gammaln(l + 1)) for l in range(max_degree + 1)})

    @classmethod
    def from_polynomial(cls, p, max_degree=None):
        if max_degree is None:
            max_degree = max(p.degree, 0)
        return cls(p.dimension, max_degree, p.terms)


def poly_eval(p, z):
    """Evaluate sum_alpha a_alpha z^alpha at a point of C^n."""
    z = np.asarray(z, dtype=complex).ravel()
    if len(z) != p.dimension:
        raise DimensionMismatch('point has dimension {0}, polynomial has '
                                '{1}'.format(len(z), p.dimension))
    return complex(sum((c * monomial_eval(z, a) for a, c in p.sorted_terms()),
                       0j))


def poly_mul(p, q):
    """Cauchy product c_gamma = sum_{alpha+beta=gamma} a_alpha b_beta.

    >>> one_plus = Polynomial(1, {(0,): 1, (1,): 1})
    >>> one_minus = Polynomial(1, {(0,): 1, (1,): -1})
    >>> poly_mul(one_plus, one_minus) == Polynomial(1, {(0,): 1, (2,): -1})
    True
    """
    p._check(q)
    table = {}
    for alpha, a in p.terms.items():
        for beta, b in q.terms.items():
            gamma = alpha + beta
            table[gamma] = table.get(gamma, 0j) + a * b
    return Polynomial(p.dimension, table)


def poly_derivative(p, alpha):
    """Apply d^alpha term by term.

    The falling-factorial multiplier of each term is formed as an exact
    integer before it touches the coefficient.
    """
    alpha = MultiIndex(alpha)
    if len(alpha) != p.dimension:
        raise DimensionMismatch('derivative order {0} does not match '
                                'dimension {1}'.format(tuple(alpha),
                                                       p.dimension))
    table = {}
    for beta, coeff in p.terms.items():
        if not alpha.dominated_by(beta):
            continue
        factor = 1
        for b, a in zip(beta, alpha):
            factor *= math.perm(b, a)
        table[beta - alpha] = coeff * factor
    return Polynomial(p.dimension, table)


def leibniz_expand(p, q, alpha):
    """sum over beta + gamma = alpha of alpha!/(beta! gamma!) d^beta p d^gamma q"""
    alpha = MultiIndex(alpha)
    p._check(q)
    if len(alpha) != p.dimension:
        raise DimensionMismatch('derivative order {0} does not match '
                                'dimension {1}'.format(tuple(alpha),
                                                       p.dimension))
    total = Polynomial(p.dimension)
    for beta in itertools.product(*(range(a + 1) for a in alpha)):
        beta = MultiIndex(beta)
        gamma = alpha - beta
        term = poly_mul(poly_derivative(p, beta), poly_derivative(q, gamma))
        total = total + term * multinomial(alpha, beta, gamma)
    return total


def exp_series(z, N):
    """Partial sum of E(z) = sum z^j / j! through j = N.

    Returns
    -------
    ExpSeries
        ``value`` is the partial sum and ``remainder`` the bound
        |z|^(N+1) / (N+1)! * E(|z|) on the neglected tail.
    """
    N = operator.index(N)
    if N < 0:
        raise PreconditionError('truncation order must be nonnegative')
    z = complex(z)
    term = 1.0 + 0j
    total = term
    for j in range(1, N + 1):
        term = term * z / j
        total += term
    r = abs(z)
    if r == 0:
        remainder = 0.0
    else:
        remainder = float(np.exp((N + 1) * np.log(r) - gammaln(N + 2) + r))
    return ExpSeries(total, remainder)


def exp_addition_check(z, w, N):
    """Compare E_N(z) E_N(w) with E_N(z + w).

    Returns ``(lhs, rhs, bound)``; the exact identity E(z)E(w) = E(z+w)
    guarantees ``|lhs - rhs| <= bound``.
    """
    ez = exp_series(z, N)
    ew = exp_series(w, N)
    ezw = exp_series(complex(z) + complex(w), N)
    lhs = ez.value * ew.value
    bound = ((abs(ez.value) + ez.remainder) * ew.remainder
             + abs(ew.value) * ez.remainder + ezw.remainder)
    return lhs, ezw.value, bound


def homogeneous_parts(s):
    """Split a truncated series into p_0, ..., p_maxDegree."""
    max_degree = getattr(s, 'max_degree', max(s.degree, 0))
    tables = [{} for _ in range(max_degree + 1)]
    for alpha, coeff in s.terms.items():
        tables[alpha.degree][alpha] = coeff
    return [Polynomial(s.dimension, t) for t in tables]


def root_test_estimate(s, z):
    """Finite-order surrogate for limsup_l |p_l(z)|^(1/l).

    The estimate is the maximum of |p_l(z)|^(1/l) over the top half of the
    available degrees, ``ceil(D/2) <= l <= D``.  It is an estimate, not a
    bound.
    """
    if s.max_degree < 4:
        raise PreconditionError('root test needs max_degree >= 4, got '
                                '{0}'.format(s.max_degree))
    parts = homogeneous_parts(s)
    D = s.max_degree
    return max(abs(poly_eval(parts[l], z)) ** (1.0 / l)
               for l in range(math.ceil(D / 2), D + 1))


def cauchy_product(a, b):
    """One-variable Cauchy product c_n = sum_{j<=n} a_j b_(n-j).

    Only the entries whose sums are complete are returned, so the result
    has length ``min(len(a), len(b))``.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    n = min(len(a), len(b))
    return np.convolve(a, b)[:n]
