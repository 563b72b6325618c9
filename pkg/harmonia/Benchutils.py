"""JSON and CSV codecs for the workbench artifacts.

Complex numbers are written as ``{"re": ..., "im": ...}``.  JSON output
always uses sorted keys and a fixed indentation, and tables go through
`astropy.table.Table` in ``ascii.csv`` format, so that identical inputs
give byte-identical artifacts.
"""
import functools
import io
import json

import numpy as np
from astropy.table import Table

from .BanachAlgebra import MatrixElement
from .errors import HarmoniaError, InputFormatError
from .Hulls import (CircularSample, ExponentialWitness,
                    InsideConvexCombination, MonomialWitness, PointCloud,
                    SeparatingFunctional)
from .LineFourier import ClosedFormFn, LineAtomicMeasure, LineFunction
from .Polynomials import MultiIndex, Polynomial, PowerSeriesTrunc
from .SequenceSpaces import SeqVector
from .TorusFourier import CoeffTable, TorusAtomicMeasure, TorusFunction, TorusGrid

__all__ = ['complex_to_json', 'complex_from_json', 'dumps', 'dump_json',
           'load_json', 'write_table', 'read_table',
           'vector_to_json', 'vector_from_json', 'read_vector_csv',
           'write_vector_csv', 'poly_to_json', 'poly_from_json',
           'torus_function_to_json', 'torus_function_from_json',
           'coeff_table_to_json', 'coeff_table_from_json',
           'torus_measure_to_json', 'torus_measure_from_json',
           'line_function_to_json', 'line_function_from_json',
           'closed_form_to_json', 'closed_form_from_json',
           'line_measure_to_json', 'line_measure_from_json',
           'matrix_to_json', 'matrix_from_json',
           'sample_to_json', 'sample_from_json',
           'cloud_to_json', 'cloud_from_json',
           'certificate_to_json', 'certificate_from_json']


def _field(obj, key, kind=None):
    """obj[key], raising `InputFormatError` when it is missing or mistyped."""
    if not isinstance(obj, dict) or key not in obj:
        raise InputFormatError('missing field {0!r}'.format(key))
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise InputFormatError('field {0!r} has the wrong type'.format(key))
    return value


def _decoding(what):
    """Decorator turning malformed input inside a decoder into InputFormatError."""
    def wrap(func):
        @functools.wraps(func)
        def decoder(obj, *args, **kwargs):
            try:
                return func(obj, *args, **kwargs)
            except InputFormatError:
                raise
            except HarmoniaError as err:
                raise InputFormatError('invalid {0}: {1}'.format(what, err))
            except (TypeError, ValueError, KeyError, IndexError) as err:
                raise InputFormatError('malformed {0}: {1}'.format(what, err))
        return decoder
    return wrap


def complex_to_json(c):
    c = complex(c)
    return {'re': c.real, 'im': c.imag}


@_decoding('complex number')
def complex_from_json(obj):
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return complex(obj)
    return complex(float(_field(obj, 're')), float(obj.get('im', 0.0)))


def _complex_list(values):
    return [complex_to_json(v) for v in np.ravel(values)]


def _complex_array(items):
    if not isinstance(items, list):
        raise InputFormatError('expected a list of complex numbers')
    return np.array([complex_from_json(v) for v in items], dtype=complex)


def dumps(obj):
    """Canonical JSON text of ``obj``."""
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def dump_json(obj, path=None):
    """Write canonical JSON to ``path`` and return the text."""
    text = dumps(obj)
    if path is not None:
        with open(path, 'w') as fh:
            fh.write(text)
    return text


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as err:
        raise InputFormatError('cannot read {0}: {1}'.format(path, err))
    except json.JSONDecodeError as err:
        raise InputFormatError('{0} is not valid JSON: {1}'.format(path, err))


def write_table(table, path=None):
    """CSV text of an astropy table, also written to ``path`` if given."""
    buf = io.StringIO()
    table.write(buf, format='ascii.csv')
    text = buf.getvalue()
    if path is not None:
        with open(path, 'w') as fh:
            fh.write(text)
    return text


def read_table(path):
    try:
        return Table.read(path, format='ascii.csv')
    except (OSError, ValueError) as err:
        raise InputFormatError('cannot read table {0}: {1}'.format(path, err))


# sequence spaces

def vector_to_json(v):
    return {'entries': _complex_list(np.asarray(v))}


@_decoding('vector')
def vector_from_json(obj):
    return SeqVector(_complex_array(_field(obj, 'entries', list)))


def write_vector_csv(v, path=None):
    values = np.asarray(v, dtype=complex)
    return write_table(Table([values.real, values.imag], names=('re', 'im')),
                       path)


def read_vector_csv(path):
    table = read_table(path)
    if 're' not in table.colnames:
        raise InputFormatError('vector table needs a column re')
    re = np.asarray(table['re'], dtype=float)
    im = (np.asarray(table['im'], dtype=float) if 'im' in table.colnames
          else np.zeros_like(re))
    try:
        return SeqVector(re + 1j * im)
    except HarmoniaError as err:
        raise InputFormatError('invalid vector in {0}: {1}'.format(path, err))


# polynomials

def poly_to_json(p):
    """``{dim, terms: [{alpha, re, im}]}`` with terms in graded-lex order."""
    out = {'dim': p.dimension,
           'terms': [dict(alpha=list(alpha), **complex_to_json(c))
                     for alpha, c in p.sorted_terms()]}
    if isinstance(p, PowerSeriesTrunc):
        out['max_degree'] = p.max_degree
    return out


@_decoding('polynomial')
def poly_from_json(obj):
    dim = _field(obj, 'dim', int)
    terms = {}
    for term in _field(obj, 'terms', list):
        alpha = MultiIndex(_field(term, 'alpha', list))
        terms[alpha] = terms.get(alpha, 0j) + complex_from_json(term)
    if 'max_degree' in obj:
        return PowerSeriesTrunc(dim, obj['max_degree'], terms)
    return Polynomial(dim, terms)


# torus

def torus_function_to_json(f):
    return {'dim': f.grid.dim, 'N': f.grid.N, 'values': _complex_list(f.values)}


@_decoding('torus function')
def torus_function_from_json(obj):
    grid = TorusGrid(_field(obj, 'dim', int), _field(obj, 'N', int))
    return TorusFunction(grid, _complex_array(_field(obj, 'values', list)))


def coeff_table_to_json(c):
    return {'dim': c.dim, 'K': c.K,
            'coeffs': [dict(alpha=list(alpha), **complex_to_json(v))
                       for alpha, v in c.items()]}


@_decoding('coefficient table')
def coeff_table_from_json(obj):
    coeffs = {}
    for entry in _field(obj, 'coeffs', list):
        alpha = tuple(_field(entry, 'alpha', list))
        coeffs[alpha] = coeffs.get(alpha, 0j) + complex_from_json(entry)
    return CoeffTable(_field(obj, 'dim', int), _field(obj, 'K', int), coeffs)


def torus_measure_to_json(mu):
    return {'dim': mu.dim,
            'atoms': [dict(z=_complex_list(z), **complex_to_json(c))
                      for z, c in zip(mu.points, mu.weights)]}


@_decoding('torus measure')
def torus_measure_from_json(obj):
    atoms = [(_complex_array(_field(a, 'z', list)), complex_from_json(a))
             for a in _field(obj, 'atoms', list)]
    return TorusAtomicMeasure(atoms, dim=obj.get('dim'))


# line

def closed_form_to_json(g):
    if g.kind == 'product':
        return {'kind': 'product',
                'factors': [closed_form_to_json(f) for f in g.factors]}
    return {'kind': g.kind, 'params': list(g.params)}


@_decoding('closed form')
def closed_form_from_json(obj):
    kind = _field(obj, 'kind', str)
    if kind == 'product':
        return ClosedFormFn.product(*[closed_form_from_json(f)
                                      for f in _field(obj, 'factors', list)])
    return ClosedFormFn(kind, *_field(obj, 'params', list))


def line_function_to_json(f):
    out = {'dim': f.dim, 'L': f.L, 'M': f.M, 'decay': f.decay,
           'values': _complex_list(f.values)}
    if f.source is not None:
        out['source'] = closed_form_to_json(f.source)
    return out


@_decoding('line function')
def line_function_from_json(obj):
    source = obj.get('source')
    return LineFunction(_field(obj, 'dim', int), float(_field(obj, 'L')),
                        _field(obj, 'M', int),
                        _complex_array(_field(obj, 'values', list)),
                        decay=obj.get('decay', 'compact'),
                        source=(closed_form_from_json(source)
                                if source is not None else None))


def line_measure_to_json(mu):
    return {'dim': mu.dim,
            'atoms': [dict(u=list(u), **complex_to_json(c))
                      for u, c in zip(mu.points.tolist(), mu.weights)]}


@_decoding('line measure')
def line_measure_from_json(obj):
    atoms = [([float(v) for v in _field(a, 'u', list)], complex_from_json(a))
             for a in _field(obj, 'atoms', list)]
    return LineAtomicMeasure(atoms, dim=obj.get('dim'))


# Banach algebra

def matrix_to_json(x):
    return {'d': x.d, 'entries': _complex_list(x.entries)}


@_decoding('matrix')
def matrix_from_json(obj):
    d = _field(obj, 'd', int)
    entries = _complex_array(_field(obj, 'entries', list))
    if entries.size != d * d:
        raise InputFormatError('matrix of size {0} needs {1} entries, got '
                               '{2}'.format(d, d * d, entries.size))
    return MatrixElement(entries.reshape(d, d))


# hulls

def sample_to_json(E):
    return {'n': E.n,
            'points': [_complex_list(w) for w in E.points],
            'flags': {'completely_circular': E.completely_circular}}


@_decoding('circular sample')
def sample_from_json(obj):
    n = _field(obj, 'n', int)
    points = [_complex_array(w) for w in _field(obj, 'points', list)]
    if any(w.size != n for w in points):
        raise InputFormatError('every sample point needs {0} coordinates'.format(n))
    flags = obj.get('flags', {})
    return CircularSample(np.array(points).reshape(len(points), n),
                          completely_circular=flags.get('completely_circular',
                                                        False))


def cloud_to_json(S):
    return {'d': S.dim, 'points': S.points.tolist()}


@_decoding('point cloud')
def cloud_from_json(obj):
    d = _field(obj, 'd', int)
    points = np.array(_field(obj, 'points', list), dtype=float)
    if points.ndim != 2 or points.shape[1] != d:
        raise InputFormatError('every cloud point needs {0} coordinates'.format(d))
    return PointCloud(points)


def certificate_to_json(cert):
    """The certificate fields under its variant name."""
    if isinstance(cert, InsideConvexCombination):
        body = {'weights': np.asarray(cert.weights).tolist(),
                'support_points': np.asarray(cert.support_points).tolist(),
                'residual': cert.residual}
    elif isinstance(cert, SeparatingFunctional):
        body = {'functional': np.asarray(cert.functional).tolist(),
                'margin': cert.margin}
    elif isinstance(cert, MonomialWitness):
        body = {'alpha': list(cert.alpha),
                'log_sup_on_e': _finite_or_none(cert.log_sup_on_e),
                'log_value_at_z': cert.log_value_at_z}
    elif isinstance(cert, ExponentialWitness):
        body = {'mu': _complex_list(cert.mu), 't': cert.t,
                'boundary_sup': cert.boundary_sup,
                'value_at_z': cert.value_at_z}
    else:
        raise InputFormatError('not a hull certificate: {0!r}'.format(cert))
    return {'variant': type(cert).__name__, 'inside': cert.inside, **body}


def _finite_or_none(value):
    return float(value) if np.isfinite(value) else None


@_decoding('certificate')
def certificate_from_json(obj):
    variant = _field(obj, 'variant', str)
    if variant == 'InsideConvexCombination':
        points = np.array(_field(obj, 'support_points', list), dtype=float)
        weights = np.array(_field(obj, 'weights', list), dtype=float)
        if points.size == 0:
            points = np.zeros((len(weights), 0))
        return InsideConvexCombination(weights, points,
                                       float(obj.get('residual', 0.0)))
    if variant == 'SeparatingFunctional':
        return SeparatingFunctional(
            np.array(_field(obj, 'functional', list), dtype=float),
            float(_field(obj, 'margin')))
    if variant == 'MonomialWitness':
        log_sup = obj.get('log_sup_on_e')
        return MonomialWitness(MultiIndex(_field(obj, 'alpha', list)),
                               -np.inf if log_sup is None else float(log_sup),
                               float(_field(obj, 'log_value_at_z')))
    if variant == 'ExponentialWitness':
        return ExponentialWitness(_complex_array(_field(obj, 'mu', list)),
                                  float(_field(obj, 't')),
                                  float(_field(obj, 'boundary_sup')),
                                  float(_field(obj, 'value_at_z')))
    raise InputFormatError('unknown certificate variant {0!r}'.format(variant))
