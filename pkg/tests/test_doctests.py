"""Run the docstring examples in the library modules."""

import doctest

import pytest

import commclass.core
import commclass.engine
import commclass.reduced
import commclass.representations


@pytest.mark.parametrize("module", [
    commclass.core,
    commclass.reduced,
    commclass.engine,
    commclass.representations,
], ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.attempted > 0
    assert result.failed == 0
