import json

import numpy as np
import pytest
from astropy.table import Table
from numpy.testing import assert_allclose

from harmonia import Benchutils
from harmonia.BanachAlgebra import MatrixElement
from harmonia.errors import InputFormatError
from harmonia.Hulls import (CircularSample, PointCloud, convex_membership,
                            exp_certificate, poly_hull_membership,
                            torus_sample, verify_certificate)
from harmonia.LineFourier import ClosedFormFn, LineAtomicMeasure
from harmonia.Polynomials import Polynomial, PowerSeriesTrunc
from harmonia.TorusFourier import CoeffTable


def test_complex_json():
    assert Benchutils.complex_to_json(1 - 2j) == {'re': 1.0, 'im': -2.0}
    assert Benchutils.complex_from_json({'re': 0.5}) == 0.5
    assert Benchutils.complex_from_json(3) == 3
    with pytest.raises(InputFormatError):
        Benchutils.complex_from_json({'im': 1.0})
    with pytest.raises(InputFormatError):
        Benchutils.complex_from_json({'re': 'x'})


def test_dumps_is_canonical():
    a = Benchutils.dumps({'b': 1, 'a': [1, 2]})
    b = Benchutils.dumps({'a': [1, 2], 'b': 1})
    assert a == b
    assert a.endswith('\n')
    assert list(json.loads(a)) == ['a', 'b']


def test_polynomial_codec():
    p = Polynomial(2, {(2, 1): 3 - 1j, (0, 0): 2, (0, 1): 0.5j})
    obj = Benchutils.poly_to_json(p)
    assert [t['alpha'] for t in obj['terms']] == [[0, 0], [0, 1], [2, 1]]
    assert Benchutils.poly_from_json(json.loads(Benchutils.dumps(obj))) == p

    s = PowerSeriesTrunc.exponential(4)
    obj = Benchutils.poly_to_json(s)
    assert obj['max_degree'] == 4
    assert isinstance(Benchutils.poly_from_json(obj), PowerSeriesTrunc)


def test_polynomial_codec_rejects_bad_input():
    with pytest.raises(InputFormatError):
        Benchutils.poly_from_json({'terms': []})
    with pytest.raises(InputFormatError):
        Benchutils.poly_from_json({'dim': 2, 'terms': [{'alpha': [1, -1],
                                                        're': 1.0}]})
    with pytest.raises(InputFormatError):
        Benchutils.poly_from_json({'dim': 2, 'terms': [{'alpha': [1],
                                                        're': 1.0}]})
    with pytest.raises(InputFormatError):
        Benchutils.poly_from_json([1, 2, 3])


def test_coeff_table_codec():
    c = CoeffTable(2, 2, {(1, -2): 1 + 1j, (0, 0): -3})
    assert Benchutils.coeff_table_from_json(Benchutils.coeff_table_to_json(c)) == c
    with pytest.raises(InputFormatError):
        Benchutils.coeff_table_from_json({'dim': 2, 'K': 1,
                                          'coeffs': [{'alpha': [3, 0],
                                                      're': 1.0}]})


def test_closed_form_and_measure_codecs():
    g = ClosedFormFn.product(ClosedFormFn.pA(1.0), ClosedFormFn.indicator(-1, 1))
    back = Benchutils.closed_form_from_json(Benchutils.closed_form_to_json(g))
    assert back.kind == 'product'
    assert [f.kind for f in back.factors] == ['pA', 'indicator']
    assert back.factors[1].params == (-1.0, 1.0)
    with pytest.raises(InputFormatError):
        Benchutils.closed_form_from_json({'kind': 'sinc', 'params': [1]})

    mu = LineAtomicMeasure([(0.0, 1.0), (1.5, -2j)])
    assert Benchutils.line_measure_from_json(
        Benchutils.line_measure_to_json(mu)) == mu


def test_matrix_codec():
    x = MatrixElement([[1, 2j], [0, -1]])
    back = Benchutils.matrix_from_json(Benchutils.matrix_to_json(x))
    assert np.array_equal(back.entries, x.entries)
    obj = Benchutils.matrix_to_json(x)
    obj['entries'] = obj['entries'][:3]
    with pytest.raises(InputFormatError):
        Benchutils.matrix_from_json(obj)


def test_sample_and_cloud_codecs():
    E = torus_sample(2, 4)
    back = Benchutils.sample_from_json(Benchutils.sample_to_json(E))
    assert back.completely_circular
    assert np.array_equal(back.points, E.points)
    with pytest.raises(InputFormatError):
        Benchutils.sample_from_json({'n': 2, 'points': [[{'re': 1.0}]]})
    assert not Benchutils.sample_from_json(
        {'n': 1, 'points': [[{'re': 1.0}]]}).completely_circular

    S = PointCloud([[0, 0], [1, 0]])
    back = Benchutils.cloud_from_json(Benchutils.cloud_to_json(S))
    assert np.array_equal(back.points, S.points)
    with pytest.raises(InputFormatError):
        Benchutils.cloud_from_json({'d': 3, 'points': [[0, 0]]})


def test_certificates_survive_json(quiet_log):
    S = PointCloud([[0, 0], [1, 0], [0, 1]])
    E = torus_sample(2, 8)
    W = CircularSample(np.exp(2j * np.pi * np.arange(16) / 16)[:, np.newaxis])
    cases = [
        (convex_membership([0.2, 0.2], S, log=quiet_log), S, [0.2, 0.2]),
        (convex_membership([1, 1], S, log=quiet_log), S, [1, 1]),
        (poly_hull_membership([0.5, 0.5j], E, log=quiet_log), E, [0.5, 0.5j]),
        (poly_hull_membership([0, 0], E, log=quiet_log), E, [0, 0]),
        (poly_hull_membership([1.5, 0.5], E, log=quiet_log), E, [1.5, 0.5]),
        (exp_certificate(2.0, W, log=quiet_log), W, [2.0]),
    ]
    for cert, sample, z in cases:
        text = Benchutils.dumps(Benchutils.certificate_to_json(cert))
        back = Benchutils.certificate_from_json(json.loads(text))
        assert type(back) is type(cert)
        assert verify_certificate(back, sample, z)


def test_vanishing_monomial_certificate_json():
    cert = poly_hull_membership([0.5, 0.5], CircularSample([[1, 0], [0, 1]], True))
    obj = Benchutils.certificate_to_json(cert)
    assert obj['log_sup_on_e'] is None
    assert Benchutils.certificate_from_json(obj).log_sup_on_e == -np.inf


def test_certificate_codec_errors():
    with pytest.raises(InputFormatError):
        Benchutils.certificate_from_json({'variant': 'Guess'})
    with pytest.raises(InputFormatError):
        Benchutils.certificate_from_json({'variant': 'SeparatingFunctional',
                                          'functional': [1.0]})
    with pytest.raises(InputFormatError):
        Benchutils.certificate_to_json(object())


def test_json_files(tmp_path):
    path = tmp_path / 'p.json'
    text = Benchutils.dump_json({'x': 1}, str(path))
    assert path.read_text() == text
    assert Benchutils.load_json(str(path)) == {'x': 1}

    bad = tmp_path / 'bad.json'
    bad.write_text('{not json')
    with pytest.raises(InputFormatError):
        Benchutils.load_json(str(bad))
    with pytest.raises(InputFormatError):
        Benchutils.load_json(str(tmp_path / 'missing.json'))


def test_vector_csv(tmp_path):
    path = tmp_path / 'v.csv'
    Benchutils.write_vector_csv([1 + 2j, -0.5, 3j], str(path))
    v = Benchutils.read_vector_csv(str(path))
    assert_allclose(np.asarray(v), [1 + 2j, -0.5, 3j])

    path.write_text('x,y\n1,2\n')
    with pytest.raises(InputFormatError):
        Benchutils.read_vector_csv(str(path))


def test_tables_are_deterministic():
    t = Table(rows=[(1, 0.5), (2, 0.25)], names=('n', 'value'))
    assert Benchutils.write_table(t) == Benchutils.write_table(t.copy())
    assert Benchutils.write_table(t).splitlines()[0] == 'n,value'
