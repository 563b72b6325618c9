"""Entry point of the ``harmonia`` command.

`main` parses the command line, runs one operation and writes its
artifact (JSON or CSV) to standard output or to ``--output``.  Log
messages go to standard error.  Exit statuses: 0 success, 2 malformed
input, 3 precondition violated, 4 certificate not verified, 5 no
convergence.
"""
import os
import sys

import numpy as np
from astropy.table import Table

from . import (BanachAlgebra, Benchutils, Demos, Hulls, LineFourier,
               Polynomials, SequenceSpaces, TorusFourier)
from .commandline import CommandLine
from .errors import CertificateError, HarmoniaError, InputFormatError
from .settings import conf
from .WorkbenchLogging import set_log

__all__ = ['main', 'run']

_cj = Benchutils.complex_to_json


def command_summary(opt, log):
    """Log the parsed options of this run."""
    log.doMessage('DBG', '{t.underline}Command summary{t.normal}'.format(
        t=log.t))
    for name, value in sorted(vars(opt).items()):
        log.doMessage('DBG', '   {0}: {1}'.format(name, value))


def _load(path, decoder):
    return decoder(Benchutils.load_json(path))


def _vector(path):
    if os.path.splitext(path)[1].lower() == '.csv':
        return Benchutils.read_vector_csv(path)
    return _load(path, Benchutils.vector_from_json)


def _line_input(path):
    """A sampled LineFunction or, for objects with a ``kind``, a closed form."""
    obj = Benchutils.load_json(path)
    if isinstance(obj, dict) and 'kind' in obj:
        return Benchutils.closed_form_from_json(obj)
    return Benchutils.line_function_from_json(obj)


def _hull_sample(path):
    obj = Benchutils.load_json(path)
    if isinstance(obj, dict) and 'n' in obj:
        return Benchutils.sample_from_json(obj)
    return Benchutils.cloud_from_json(obj)


# poly

def _poly(opt, log):
    p = _load(opt.p, Benchutils.poly_from_json)
    if opt.op == 'mul':
        q = _load(opt.q, Benchutils.poly_from_json)
        return Benchutils.poly_to_json(Polynomials.poly_mul(p, q))
    if opt.op == 'deriv':
        return Benchutils.poly_to_json(Polynomials.poly_derivative(p, opt.alpha))
    if opt.op == 'leibniz':
        q = _load(opt.q, Benchutils.poly_from_json)
        lhs = Polynomials.poly_derivative(Polynomials.poly_mul(p, q), opt.alpha)
        rhs = Polynomials.leibniz_expand(p, q, opt.alpha)
        return {'lhs': Benchutils.poly_to_json(lhs),
                'rhs': Benchutils.poly_to_json(rhs), 'equal': lhs == rhs}
    return {'value': _cj(Polynomials.poly_eval(p, opt.point))}


# seq

def _seq(opt, log):
    if opt.op == 'norm':
        return {'p': opt.p,
                'value': SequenceSpaces.lp_norm(_vector(opt.v), opt.p)}
    if opt.op in ('pair', 'inner'):
        func = (SequenceSpaces.pairing if opt.op == 'pair'
                else SequenceSpaces.inner_product)
        return {'value': _cj(func(_vector(opt.v), _vector(opt.w)))}
    if opt.op == 'dual':
        g = _vector(opt.g)
        res = SequenceSpaces.dual_norm(g, opt.p)
        out = {'p': opt.p, 'value': res.value,
               'extremizer': Benchutils.vector_to_json(res.extremizer)}
        if opt.oracle:
            out['oracle'] = SequenceSpaces.dual_norm_bruteforce(
                g, opt.p, seed=opt.seed, log=log)
        return out
    seminorms = [SequenceSpaces.weighted_sup_seminorm(k) for k in opt.weights]
    value = SequenceSpaces.seminorm_family_metric(
        _vector(opt.v), _vector(opt.w), seminorms, seed=opt.seed)
    return {'weights': opt.weights, 'value': value}


# torus

def _torus(opt, log):
    if opt.op == 'analyze':
        f = _load(opt.f, Benchutils.torus_function_from_json)
        return Benchutils.coeff_table_to_json(TorusFourier.analyze(f, opt.band))
    if opt.op == 'synth':
        c = _load(opt.c, Benchutils.coeff_table_from_json)
        if opt.N is not None:
            grid = TorusFourier.TorusGrid(c.dim, opt.N)
            return Benchutils.torus_function_to_json(
                TorusFourier.TorusFunction.from_coefficients(grid, c))
        if opt.point is None:
            raise InputFormatError('torus synth needs --point or --N')
        return {'value': _cj(TorusFourier.synthesize(c, opt.point))}
    if opt.op == 'conv':
        f = _load(opt.f, Benchutils.torus_function_from_json)
        g = _load(opt.g, Benchutils.torus_function_from_json)
        return Benchutils.torus_function_to_json(TorusFourier.convolve_torus(f, g))
    if opt.op == 'poisson':
        f = _load(opt.f, Benchutils.torus_function_from_json)
        return {'value': _cj(TorusFourier.poisson_extend(f, opt.point))}
    if opt.op == 'parseval':
        f = _load(opt.f, Benchutils.torus_function_from_json)
        res = TorusFourier.parseval(f)
        return {'sum_of_squares': res.sum_of_squares,
                'energy_integral': res.energy_integral}
    samples = np.asarray(_vector(opt.samples))
    return {'radius': opt.radius, 'index': opt.index,
            'value': _cj(TorusFourier.laurent_coeff(samples, opt.radius,
                                                    opt.index))}


# line

def _line(opt, log):
    if opt.op == 'measure':
        mu = _load(opt.mu, Benchutils.line_measure_from_json)
        out = {'total_variation': LineFourier.measure_total_variation(mu)}
        if opt.zeta is not None:
            out['ft'] = _cj(LineFourier.measure_ft(mu, opt.zeta))
        if opt.nu is not None:
            nu = _load(opt.nu, Benchutils.line_measure_from_json)
            out['convolution'] = Benchutils.line_measure_to_json(
                LineFourier.measure_convolve(mu, nu))
        return out
    f = _line_input(opt.f)
    if opt.op == 'ft':
        if isinstance(f, LineFourier.ClosedFormFn):
            return {'value': _cj(LineFourier.ft_closed_form(f, opt.xi))}
        xi = np.real(opt.xi)
        if np.any(np.imag(opt.xi) != 0):
            raise InputFormatError('sampled transforms take real frequencies')
        return {'value': _cj(LineFourier.ft_quadrature(f, xi))}
    if opt.op == 'rl-profile':
        res = LineFourier.riemann_lebesgue_profile(f, opt.radii)
        return Table(rows=res.points, names=('R', 'sup'),
                     meta={'decaying': res.decaying})
    if isinstance(f, LineFourier.ClosedFormFn):
        raise InputFormatError('line {0} needs sampled input'.format(opt.op))
    if opt.op == 'conv':
        g = _load(opt.g, Benchutils.line_function_from_json)
        return Benchutils.line_function_to_json(LineFourier.convolve_line(f, g))
    if opt.op == 'poisson':
        if opt.points is None:
            points = f.points().reshape(-1, f.dim)
        elif len(opt.points) % f.dim:
            raise InputFormatError('--points needs {0} coordinates per '
                                   'point'.format(f.dim))
        else:
            points = np.asarray(opt.points).reshape(-1, f.dim)
        values = LineFourier.poisson_convolve(f, opt.a, points, opt.method)
        names = ['x'] if f.dim == 1 else ['x{0}'.format(j + 1)
                                          for j in range(f.dim)]
        return Table(list(points.T) + [values.real, values.imag],
                     names=names + ['re', 'im'])
    w = opt.w * f.dim if len(opt.w) == 1 else opt.w
    res = LineFourier.inversion_check(f, opt.a, w, log=log)
    return {'lhs': _cj(res.lhs), 'rhs': _cj(res.rhs),
            'tail_bound': res.tail_bound}


# alg

def _alg(opt, log):
    if opt.op == 'volterra':
        return Demos.demo_volterra(opt.n, opt.grid)
    if opt.op == 'invert':
        a = _load(opt.a, Benchutils.matrix_from_json)
        res = BanachAlgebra.neumann_inverse(a, tol=opt.tol, log=log)
        return {'inverse': Benchutils.matrix_to_json(res.inverse),
                'bound': res.bound, 'terms': res.terms}
    x = _load(opt.x, Benchutils.matrix_from_json)
    if opt.op == 'norm':
        res = BanachAlgebra.alg_norm(x)
        return dict(res._asdict())
    if opt.op == 'specrad':
        res = BanachAlgebra.spectral_radius(x, opt.max_power, log=log)
        out = {'estimate': res.estimate,
               'sequence': [list(item) for item in res.sequence]}
        if x.d <= 8:
            out['eigenvalue_radius'] = BanachAlgebra.spectral_radius_eig(x)
        return out
    res = BanachAlgebra.cstar_checks(x, max_power=opt.max_power)
    out = dict(res._asdict())
    if res.power_norms is not None:
        out['power_norms'] = [list(item) for item in res.power_norms]
    return out


# hull

def _hull(opt, log):
    if opt.op == 'eb':
        res = Hulls.eb_dichotomy(opt.b, opt.degree, exterior=opt.exterior,
                                 log=log)
        return {'b': str(opt.b), 'rational': res.rational,
                'bounded_monomial': (None if res.bounded_monomial is None
                                     else list(res.bounded_monomial)),
                'sup_on_sample': res.sup_on_sample,
                'witnesses': [{'alpha': list(w.alpha),
                               'log_moduli': list(w.log_moduli),
                               'log_value': w.log_value}
                              for w in res.witnesses],
                'exterior': [None if c is None
                             else Benchutils.certificate_to_json(c)
                             for c in res.exterior]}
    if opt.op == 'convex':
        cloud = _load(opt.cloud, Benchutils.cloud_from_json)
        cert = Hulls.convex_membership(opt.point, cloud, tol=opt.tol, log=log)
        return Benchutils.certificate_to_json(cert)
    if opt.op == 'pol':
        sample = _load(opt.sample, Benchutils.sample_from_json)
        cert = Hulls.poly_hull_membership(opt.point, sample, tol=opt.tol,
                                          log=log)
        return Benchutils.certificate_to_json(cert)
    cert = _load(opt.cert, Benchutils.certificate_from_json)
    sample = _hull_sample(opt.sample)
    point = opt.point
    if isinstance(sample, Hulls.PointCloud):
        if np.any(np.imag(point) != 0):
            raise InputFormatError('real clouds take real points')
        point = np.real(point)
    if not Hulls.verify_certificate(cert, sample, point, tol=opt.tol):
        raise CertificateError('{0} does not verify'.format(
            type(cert).__name__))
    log.doMessage('INFO', type(cert).__name__, 'verified')
    return {'variant': type(cert).__name__, 'verified': True}


# demo

def _demo(opt, log):
    if opt.op == 'integral':
        return Demos.demo_integral(opt.rates)
    if opt.op == 'volterra':
        return Demos.demo_volterra(opt.n, opt.grid)
    if opt.op == 'pol-torus':
        return Demos.demo_pol_torus(opt.m, opt.rmax, log=log)
    if opt.op == 'eb':
        return Demos.demo_eb(opt.b, opt.degree)
    if opt.op == 'poisson':
        return Demos.demo_poisson(opt.radii, opt.N)
    return Demos.demo_gelfand(max_power=opt.max_power)


_HANDLERS = {'poly': _poly, 'seq': _seq, 'torus': _torus, 'line': _line,
             'alg': _alg, 'hull': _hull, 'demo': _demo}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj) if np.isfinite(obj) else str(float(obj))
    return obj


def run(opt, log):
    """Run one parsed command and return the artifact text."""
    result = _HANDLERS[opt.module](opt, log)
    if isinstance(result, Table):
        return Benchutils.write_table(result, opt.output)
    return Benchutils.dump_json(_jsonable(result), opt.output)


def main(argv=None):
    """Command line entry point; returns the exit status."""
    if argv is None:
        argv = sys.argv[1:]
    try:
        opt = CommandLine().read(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    log = set_log(opt.verbose, opt.logdir)
    command_summary(opt, log)

    try:
        with conf.set_temp('seed', opt.seed):
            text = run(opt, log)
    except HarmoniaError as err:
        log.doMessage('ERR', '{0}: {1}'.format(type(err).__name__, err))
        return err.exit_status

    if opt.output is None:
        sys.stdout.write(text)
    else:
        log.doMessage('INFO', 'wrote', opt.output)
    return 0


if __name__ == '__main__':
    sys.exit(main())
