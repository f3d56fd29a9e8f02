"""Keep the usage examples in the docstrings truthful."""

import doctest

import permball.core
import permball.genset
import permball.models


def test_module_doctests():
    for module in (permball.core, permball.models, permball.genset):
        failed, attempted = doctest.testmod(module)
        assert attempted > 0, module.__name__
        assert failed == 0, module.__name__
