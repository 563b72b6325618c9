# Licensed under a 3-clause BSD style license - see LICENSE.rst

"""
Numerical workbench for Fourier analysis on tori and on R^n, sequence
spaces, normed algebras and polynomial hulls.
"""

# Affiliated packages may add whatever they like to this file, but
# should keep this content at the top.
# ----------------------------------------------------------------------------
from ._astropy_init import *
# ----------------------------------------------------------------------------

# For egg_info test builds to pass, put package imports here.
if not _ASTROPY_SETUP_:
    from .errors import *
    from .settings import conf
    from .WorkbenchLogging import *
    from .Polynomials import *
    from .SequenceSpaces import *
    from .TorusFourier import *
    from .LineFourier import (ADEQUACY, ClosedFormFn, HalfPlanePoint,
                              LineFunction, LineAtomicMeasure,
                              sample_closed_form, ft_quadrature,
                              ft_closed_form, convolve_line, translate,
                              modulate, poisson_Rn, poisson_mass,
                              poisson_convolve, approx_identity_error,
                              multiplication_formula_check,
                              inversion_check, riemann_lebesgue_profile,
                              pa_hat_integral, cauchy_riemann_residual,
                              measure_ft, fn_measure_convolve)
    from .BanachAlgebra import *
    from .Hulls import *
    from .commandline import CommandLine
    from .workbench import main
