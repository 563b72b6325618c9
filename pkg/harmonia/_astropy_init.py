# Licensed under a 3-clause BSD style license - see LICENSE.rst

__all__ = ['__version__', 'test']

# this indicates whether or not we are in the package's setup.py
try:
    _ASTROPY_SETUP_
except NameError:
    import builtins
    builtins._ASTROPY_SETUP_ = False

try:
    from .version import version as __version__
except ImportError:
    __version__ = ''


# set up the test command
def _get_test_runner():
    import os
    from astropy.tests.runner import TestRunner
    return TestRunner(os.path.dirname(__file__))


def test(package=None, test_path=None, args=None, plugins=None,
         verbose=False, pdb=False, coverage=False, **kwargs):
    """
    Run the harmonia tests with pytest through astropy's test runner.

    Parameters
    ----------
    package : str, optional
        Name of a subpackage to test.  All tests run when omitted.

    test_path : str, optional
        A single test file or directory.

    args : str, optional
        Additional arguments passed to ``pytest.main``.

    plugins : list, optional
        Plugins passed to ``pytest.main``.

    verbose : bool, optional
        Same as passing ``-v`` in ``args``.

    pdb : bool, optional
        Turn on post-mortem debugging of failures.

    coverage : bool, optional
        Generate a test coverage report in htmlcov.

    kwargs
        Passed on to the astropy test runner.

    """
    test_runner = _get_test_runner()
    return test_runner.run_tests(
        package=package, test_path=test_path, args=args,
        plugins=plugins, verbose=verbose, pdb=pdb,
        coverage=coverage, **kwargs)
