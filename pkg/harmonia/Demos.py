"""Demo tables regenerated from module calls.

Every function returns an `astropy.table.Table`; the command line front end
writes them as CSV.  Nothing here is a stored constant: the reference
columns (2 pi, 1/n!, eigenvalue moduli, the unit polydisk test) are
computed next to the values they check.
"""
import math

import numpy as np
from astropy.table import Table

from . import BanachAlgebra, Hulls, LineFourier, TorusFourier
from .settings import WORKBENCH_VERSION, conf
from .WorkbenchLogging import get_log

__all__ = ['demo_integral', 'demo_volterra', 'demo_pol_torus', 'demo_eb',
           'demo_poisson', 'demo_gelfand']


def _table(rows, names, **meta):
    table = Table(rows=rows, names=names) if rows else Table(names=names)
    table.meta['workbench_version'] = WORKBENCH_VERSION
    table.meta.update(meta)
    return table


def demo_integral(rates=(1.0,), R=1e3, h=0.01):
    """int p_a^ over R for each rate a, against 2 pi."""
    rows = []
    for a in rates:
        res = LineFourier.pa_hat_integral(a, R, h)
        rows.append((a, res.quadrature, res.tail, res.value, 2 * np.pi,
                     abs(res.value - 2 * np.pi)))
    return _table(rows, ('a', 'quadrature', 'tail', 'value', 'two_pi',
                         'abs_error'))


def demo_volterra(n=6, grid=2000):
    """sigma(k) = ||T^k|| on the grid against 1/k! for k = 1..n."""
    rows = []
    for k in range(1, n + 1):
        sigma = BanachAlgebra.volterra_power_norm(k, grid)
        inv = 1.0 / math.factorial(k)
        rows.append((k, sigma, inv, abs(sigma / inv - 1)))
    return _table(rows, ('n', 'sigma', 'inv_factorial', 'rel_error'),
                  grid=grid)


def demo_pol_torus(m=21, rmax=2.0, phases=16, log=None):
    """Classify a modulus grid against the hull of a sample of T^2.

    Each row carries the decision, the expected answer max|z_j| <= 1 and,
    for outside points, the monomial witness and its verification.
    """
    if log is None:
        log = get_log()
    sample = Hulls.torus_sample(2, phases)
    radii = np.linspace(0.0, rmax, m)
    rows = []
    for r1 in radii:
        for r2 in radii:
            z = np.array([r1, r2], dtype=complex)
            cert = Hulls.poly_hull_membership(z, sample, log=log)
            alpha = '' if cert.inside else ' '.join(str(a) for a in cert.alpha)
            rows.append((r1, r2, cert.inside, bool(max(r1, r2) <= 1.0), alpha,
                         Hulls.verify_certificate(cert, sample, z)))
    return _table(rows, ('r1', 'r2', 'inside', 'expected', 'alpha',
                         'verified'), phases=phases)


def demo_eb(b=0.5, D=20):
    """Bounded and unbounded monomials of E(b) up to degree D."""
    report = Hulls.eb_dichotomy(b, D)
    rows = []
    if report.bounded_monomial is not None:
        a1, a2 = report.bounded_monomial
        rows.append((a1, a2, True, np.nan, np.nan, report.sup_on_sample))
    for w in report.witnesses:
        rows.append((w.alpha[0], w.alpha[1], False, w.log_moduli[0],
                     w.log_value, np.nan))
    return _table(rows, ('alpha1', 'alpha2', 'bounded', 's', 'log_value',
                         'sup_on_sample'), b=float(b), rational=report.rational)


def demo_poisson(radii=(0.5, 0.75, 0.9, 0.95, 0.99), N=2048, angles=64):
    """sup over boundary angles of |P[f](r w) - f(w)| for f(w) = |Im w|."""
    grid = TorusFourier.TorusGrid(1, N)
    f = TorusFourier.TorusFunction.from_callable(
        grid, lambda pts: np.abs(pts[:, 0].imag))
    w = np.exp(2j * np.pi * np.arange(angles) / angles)
    exact = np.abs(w.imag)
    rows = []
    for r in radii:
        values = np.array([TorusFourier.poisson_extend(f, r * wk) for wk in w])
        rows.append((r, float(np.max(np.abs(values - exact)))))
    return _table(rows, ('r', 'sup_error'), N=N)


def demo_gelfand(matrix=None, max_power=256):
    """||x^n||^(1/n) for the Gelfand powers next to max |eigenvalue|."""
    if matrix is None:
        rng = np.random.default_rng(conf.seed)
        matrix = BanachAlgebra.MatrixElement(rng.standard_normal((4, 4))
                                             + 1j * rng.standard_normal((4, 4)))
    result = BanachAlgebra.spectral_radius(matrix, max_power)
    radius = BanachAlgebra.spectral_radius_eig(matrix)
    rows = [(n, v, radius) for n, v in result.sequence]
    return _table(rows, ('n', 'norm_root', 'eig_radius'),
                  estimate=result.estimate)

