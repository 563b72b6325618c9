from astropy import config as _config

WORKBENCH_VERSION = '0.3'  # recorded in demo table metadata


class Conf(_config.ConfigNamespace):
    """
    Default tolerances and iteration caps for harmonia.

    Override in ``~/.astropy/config/harmonia.cfg`` or temporarily with
    ``conf.set_temp('name', value)``.
    """
    verbose = _config.ConfigItem(
        4, 'Console verbosity, 0 (silent) to 5 (debug).')
    seed = _config.ConfigItem(
        0, 'Seed for every random draw made by the workbench.')
    factorial_bits = _config.ConfigItem(
        128, 'Width of the signed integer range exact factorials must fit.')
    power_tol = _config.ConfigItem(
        1e-12, 'Relative tolerance of the operator-norm power iteration.')
    power_maxiter = _config.ConfigItem(
        10000, 'Iteration cap of the operator-norm power iteration.')
    neumann_tol = _config.ConfigItem(
        1e-12, 'Residual target of Neumann series inversion.')
    neumann_maxterms = _config.ConfigItem(
        1000000, 'Largest number of Neumann series terms summed.')
    hull_tol = _config.ConfigItem(
        1e-6, 'Separation margin below which a point counts as inside.')
    fw_maxiter = _config.ConfigItem(
        100000, 'Iteration cap of the simplex projection.')
    rational_cap = _config.ConfigItem(
        10000, 'First denominator cap when rationalizing exponents.')
    rational_cap_max = _config.ConfigItem(
        1000000, 'Largest denominator cap tried before giving up.')


conf = Conf()
