"""Run the usage examples embedded in the library docstrings."""

import doctest

import pytest

from permcodes import codes, lequiv, permutations, polynomials, ribbons, trees, verify

MODULES = [permutations, codes, polynomials, ribbons, trees, lequiv, verify]


@pytest.mark.parametrize('module', MODULES, ids=lambda m: m.__name__.split('.')[-1])
def test_module_doctests_pass(module):
    result = doctest.testmod(module, verbose=False)
    assert result.failed == 0
    assert result.attempted > 0
