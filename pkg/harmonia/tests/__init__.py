# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Tests of the harmonia workbench, one module per library module.
"""
