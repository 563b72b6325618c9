"""Command line reading methods for the harmonia workbench.

Options are grouped per subcommand, ``harmonia <module> <op> [options]``.
Any option may also come from a parameter file given as ``@file.par``.

"""
import argparse
from fractions import Fraction

from .settings import WORKBENCH_VERSION, conf


class _MyParser(argparse.ArgumentParser):
    def convert_arg_line_to_args(self, arg_line):
        arg_line = arg_line.lstrip()
        arg_line = arg_line.split('#')[0]

        for arg in arg_line.split():
            if not arg.strip():
                continue
            yield arg


def complex_list(text):
    """Comma separated complex literals, e.g. "1+2j,0.5"."""
    try:
        return [complex(item.replace(' ', '')) for item in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('{0!r} is not a list of complex '
                                         'numbers'.format(text))


def float_list(text):
    try:
        return [float(item) for item in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('{0!r} is not a list of numbers'.format(
            text))


def int_list(text):
    try:
        return [int(item) for item in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('{0!r} is not a list of integers'.format(
            text))


def exponent(text):
    """A real exponent; "inf" is accepted."""
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError('{0!r} is not an exponent'.format(text))


def ratio(text):
    """"p/q" gives an exact fraction, anything else a float."""
    try:
        if '/' in text:
            return Fraction(text)
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('{0!r} is not a ratio'.format(text))


class CommandLine:
    """Interpret command line options.

    """
    def __init__(self):

        parser_args = {'fromfile_prefix_chars': '@',
                       'description': 'Numerical workbench for Fourier '
                       'analysis, normed algebras and polynomial hulls.',
                       'epilog': 'Use @filename.par as a command line '
                       'parameter to use options from a file.  Any options '
                       'set on the command line will override whatever is '
                       'stored in the file.\n'
                       'Workbench version:  ' + WORKBENCH_VERSION,
                       'prog': 'harmonia',
                       'usage': '%(prog)s <module> <op> [options]'}
        self.parser = _MyParser(**parser_args)

        self.parser.add_argument("-V", "--version", action='version',
                                 version='%(prog)s ' + WORKBENCH_VERSION,
                                 help="Prints the workbench version.")

        # options shared by every operation
        self.common = _MyParser(add_help=False)
        output = self.common.add_argument_group('Output')
        output.add_argument("-o", "--output", dest="output", default=None,
                            help="write the artifact to this file instead of "
                            "standard output")
        output.add_argument("-v", "--verbose", dest="verbose",
                            default=conf.verbose,
                            help="set the verbosity level-- 0-1:none, "
                            "2:errors only, 3:+warnings, "
                            "4(default):+user info, 5:+debug", type=int)
        output.add_argument("--logdir", dest="logdir", default=None,
                            help="also write a timestamped log file here")
        output.add_argument("--seed", dest="seed", default=conf.seed,
                            type=int, help="seed of every random draw. "
                            "Default: %(default)s")

        modules = self.parser.add_subparsers(dest='module', metavar='module')
        modules.required = True
        self._poly(modules)
        self._seq(modules)
        self._torus(modules)
        self._line(modules)
        self._alg(modules)
        self._hull(modules)
        self._demo(modules)

    def _ops(self, modules, name, helptext):
        module = modules.add_parser(name, help=helptext)
        ops = module.add_subparsers(dest='op', metavar='op')
        ops.required = True
        return ops

    def _op(self, ops, name, helptext):
        return ops.add_parser(name, help=helptext, parents=[self.common])

    def _poly(self, modules):
        ops = self._ops(modules, 'poly', 'multivariate polynomials; '
                        'JSON {dim, terms: [{alpha, re, im}]}')
        op = self._op(ops, 'mul', 'product of two polynomials')
        op.add_argument('p')
        op.add_argument('q')
        op = self._op(ops, 'deriv', 'partial derivative d^alpha p')
        op.add_argument('p')
        op.add_argument('--alpha', type=int_list, required=True,
                        help='derivative order, e.g. "1,0"')
        op = self._op(ops, 'leibniz', 'd^alpha(pq) and its Leibniz expansion')
        op.add_argument('p')
        op.add_argument('q')
        op.add_argument('--alpha', type=int_list, required=True,
                        help='derivative order, e.g. "2,1"')
        op = self._op(ops, 'eval', 'value of p at a point')
        op.add_argument('p')
        op.add_argument('--point', type=complex_list, required=True,
                        help='point in C^n, e.g. "1+1j,0.5"')

    def _seq(self, modules):
        ops = self._ops(modules, 'seq', 'finite sequence spaces; vectors as '
                        'JSON {entries: [{re, im}]} or CSV with columns re, im')
        op = self._op(ops, 'norm', 'l^p norm or quasi-norm')
        op.add_argument('v')
        op.add_argument('--p', type=exponent, default=2.0,
                        help='exponent, 0 < p <= inf.  Default: %(default)s')
        for name, helptext in (('pair', 'bilinear pairing sum f g'),
                               ('inner', 'inner product sum f conj(g)')):
            op = self._op(ops, name, helptext)
            op.add_argument('v')
            op.add_argument('w')
        op = self._op(ops, 'dual', 'dual norm of the pairing with g on l^p')
        op.add_argument('g')
        op.add_argument('--p', type=exponent, default=2.0,
                        help='exponent, p >= 1.  Default: %(default)s')
        op.add_argument('--oracle', action='store_true', default=False,
                        help='also run the brute-force maximization')
        op = self._op(ops, 'metric', 'metric of the weighted sup seminorms '
                      'N_k(f) = sup_j j^k |f(j)|')
        op.add_argument('v')
        op.add_argument('w')
        op.add_argument('--k', dest='weights', default='0:3',
                        help='weights k as a range string, e.g. "0:3,5".  '
                        'Default: %(default)s')

    def _torus(self, modules):
        ops = self._ops(modules, 'torus', 'Fourier analysis on T^n; samples as '
                        'JSON {dim, N, values}, coefficients as '
                        '{dim, K, coeffs: [{alpha, re, im}]}')
        op = self._op(ops, 'analyze', 'Fourier coefficients of samples')
        op.add_argument('f')
        op.add_argument('--band', type=int, default=None,
                        help='largest |alpha_j|.  Default: N/2 - 1')
        op = self._op(ops, 'synth', 'evaluate a coefficient table')
        op.add_argument('c')
        op.add_argument('--point', type=complex_list, default=None,
                        help='point of the closed polydisk')
        op.add_argument('--N', type=int, default=None,
                        help='sample on the N-grid of T^n instead')
        op = self._op(ops, 'conv', 'convolution of two sampled functions')
        op.add_argument('f')
        op.add_argument('g')
        op = self._op(ops, 'poisson', 'Poisson integral at an interior point')
        op.add_argument('f')
        op.add_argument('--point', type=complex_list, required=True)
        op = self._op(ops, 'parseval', 'sum |c|^2 against the energy integral')
        op.add_argument('f')
        op = self._op(ops, 'laurent', 'Laurent coefficient from circle samples')
        op.add_argument('samples', help='vector of values f(r w_k)')
        op.add_argument('--radius', type=float, default=1.0,
                        help='circle radius r.  Default: %(default)s')
        op.add_argument('--index', type=int, default=0,
                        help='coefficient index j.  Default: %(default)s')

    def _line(self, modules):
        ops = self._ops(modules, 'line', 'Fourier analysis on R^n; samples as '
                        'JSON {dim, L, M, decay, values} or a closed form '
                        '{kind, params}; measures as {atoms: [{u, re, im}]}')
        op = self._op(ops, 'ft', 'Fourier transform at a frequency')
        op.add_argument('f')
        op.add_argument('--xi', type=complex_list, required=True,
                        help='frequency, complex for closed forms')
        op = self._op(ops, 'conv', 'convolution of two sampled functions')
        op.add_argument('f')
        op.add_argument('g')
        op = self._op(ops, 'poisson', 'Poisson smoothing P_a * f at points')
        op.add_argument('f')
        op.add_argument('--a', type=float_list, default=[0.1],
                        help='kernel widths, one or one per axis.  '
                        'Default: %(default)s')
        op.add_argument('--points', type=float_list, default=None,
                        help='evaluation points, coordinates of each point in '
                        'turn.  Default: the grid')
        op.add_argument('--method', choices=['linear', 'quadrature'],
                        default='linear')
        op = self._op(ops, 'invert', 'Fourier inversion with Poisson damping')
        op.add_argument('f')
        op.add_argument('--a', type=float_list, default=[0.05],
                        help='damping, one or one per axis.  '
                        'Default: %(default)s')
        op.add_argument('--w', type=float_list, default=[0.0],
                        help='evaluation point; one value is used on every '
                        'axis.  Default: %(default)s')
        op = self._op(ops, 'rl-profile', 'sup |f^| beyond radii R')
        op.add_argument('f')
        op.add_argument('--R', dest='radii', type=float_list,
                        default=[1.0, 10.0, 100.0],
                        help='radii.  Default: 1,10,100')
        op = self._op(ops, 'measure', 'total variation, transform and '
                      'convolution of atomic measures')
        op.add_argument('mu')
        op.add_argument('--convolve', dest='nu', default=None,
                        help='second measure')
        op.add_argument('--zeta', type=complex_list, default=None,
                        help='transform at this point')

    def _alg(self, modules):
        ops = self._ops(modules, 'alg', 'matrix Banach algebra; JSON '
                        '{d, entries: [{re, im}] row-major}')
        op = self._op(ops, 'norm', 'operator norm')
        op.add_argument('x')
        op = self._op(ops, 'invert', 'Neumann inverse of e - a')
        op.add_argument('a')
        op.add_argument('--tol', type=float, default=conf.neumann_tol,
                        help='residual target.  Default: %(default)s')
        op = self._op(ops, 'specrad', 'Gelfand sequence and eigenvalue radius')
        op.add_argument('x')
        op.add_argument('--max-power', dest='max_power', type=int, default=256,
                        help='largest power.  Default: %(default)s')
        op = self._op(ops, 'volterra', 'norms of powers of the Volterra operator')
        op.add_argument('--n', type=int, default=6,
                        help='largest power.  Default: %(default)s')
        op.add_argument('--grid', type=int, default=2000,
                        help='grid points on [0, 1].  Default: %(default)s')
        op = self._op(ops, 'cstar', 'C* identities of a matrix')
        op.add_argument('x')
        op.add_argument('--max-power', dest='max_power', type=int, default=8,
                        help='powers checked for normal matrices.  '
                        'Default: %(default)s')

    def _hull(self, modules):
        ops = self._ops(modules, 'hull', 'convex and polynomial hulls; samples '
                        'as JSON {n, points, flags} or clouds {d, points}')
        op = self._op(ops, 'convex', 'convex hull membership of a real point')
        op.add_argument('cloud')
        op.add_argument('--point', type=float_list, required=True)
        op.add_argument('--tol', type=float, default=conf.hull_tol,
                        help='boundary tolerance.  Default: %(default)s')
        op = self._op(ops, 'pol', 'polynomial hull membership')
        op.add_argument('sample')
        op.add_argument('--point', type=complex_list, required=True)
        op.add_argument('--tol', type=float, default=conf.hull_tol,
                        help='boundary tolerance.  Default: %(default)s')
        op = self._op(ops, 'eb', 'bounded and unbounded monomials on E(b)')
        op.add_argument('--b', type=ratio, default=Fraction(1, 2),
                        help='"p/q" or a float.  Default: 1/2')
        op.add_argument('--degree', type=int, default=20,
                        help='degree cap D.  Default: %(default)s')
        op.add_argument('--exterior', type=complex_list, action='append',
                        default=[], help='exterior point to certify; repeatable')
        op = self._op(ops, 'check-cert', 'verify a certificate against a sample')
        op.add_argument('cert')
        op.add_argument('sample')
        op.add_argument('--point', type=complex_list, required=True)
        op.add_argument('--tol', type=float, default=conf.hull_tol,
                        help='boundary tolerance.  Default: %(default)s')

    def _demo(self, modules):
        ops = self._ops(modules, 'demo', 'regenerate the reference tables as CSV')
        op = self._op(ops, 'integral', 'int p_a^ against 2 pi')
        op.add_argument('--rates', type=float_list, default=[1.0],
                        help='rates a.  Default: 1')
        op = self._op(ops, 'volterra', 'sigma(n) against 1/n!')
        op.add_argument('--n', type=int, default=6,
                        help='largest power.  Default: %(default)s')
        op.add_argument('--grid', type=int, default=2000,
                        help='grid points.  Default: %(default)s')
        op = self._op(ops, 'pol-torus', 'hull of T^2 on a modulus grid')
        op.add_argument('--m', type=int, default=21,
                        help='grid points per axis.  Default: %(default)s')
        op.add_argument('--rmax', type=float, default=2.0,
                        help='largest modulus.  Default: %(default)s')
        op = self._op(ops, 'eb', 'the E(b) dichotomy')
        op.add_argument('--b', type=ratio, default=Fraction(1, 2),
                        help='"p/q" or a float.  Default: 1/2')
        op.add_argument('--degree', type=int, default=20,
                        help='degree cap D.  Default: %(default)s')
        op = self._op(ops, 'poisson', 'radial convergence of Poisson integrals')
        op.add_argument('--radii', type=float_list,
                        default=[0.5, 0.75, 0.9, 0.95, 0.99],
                        help='radii.  Default: 0.5,0.75,0.9,0.95,0.99')
        op.add_argument('--N', type=int, default=2048,
                        help='grid points.  Default: %(default)s')
        op = self._op(ops, 'gelfand', 'Gelfand sequence of a random matrix')
        op.add_argument('--max-power', dest='max_power', type=int, default=256,
                        help='largest power.  Default: %(default)s')

    @staticmethod
    def parse_range(rangelist):
        r"""Given a range string, produce a list of integers.

        Inclusive and exclusive integers are both possible.

        The range string 1:4,6:8,10 becomes 1,2,3,4,6,7,8,10.
        The range string 1:4,-2 becomes 1,3,4.

        >>> CommandLine.parse_range('1:4,6:8,10')
        [1, 2, 3, 4, 6, 7, 8, 10]
        >>> CommandLine.parse_range('1:4,-2')
        [1, 3, 4]

        Raises ValueError on a malformed string.
        """
        oklist = set()
        excludelist = set()

        for item in rangelist.replace(' ', '').split(','):
            int_item = [int(ii) for ii in item.split(':')]

            if len(int_item) == 1:
                # single inclusive or exclusive item
                if int_item[0] < 0:
                    excludelist.add(abs(int_item[0]))
                else:
                    oklist.add(int_item[0])
            elif len(int_item) == 2:
                if int_item[0] < 0 or int_item[0] > int_item[1]:
                    raise ValueError('range {0} must be nonnegative and '
                                     'increasing'.format(item))
                oklist.update(range(int_item[0], int_item[1] + 1))
            else:
                raise ValueError('{0} has more than 2 values'.format(item))

        missing = excludelist - oklist
        if missing:
            raise ValueError('excluded items {0} are not in the inclusive '
                             'range'.format(sorted(missing)))
        return sorted(oklist - excludelist)

    def read(self, argv):
        """Read and parse the command line arguments

        """
        argv = list(argv)

        # if no options are set, print help
        if not argv:
            argv.append('-h')

        opt = self.parser.parse_args(argv)

        # transform some parameters to proper types
        if getattr(opt, 'weights', None) is not None:
            try:
                opt.weights = self.parse_range(opt.weights)
            except ValueError as err:
                self.parser.error('malformed --k option: {0}'.format(err))

        return opt
