import importlib.util
import os
import random
import sys

import pytest


def _load_from_checkout():
    src = os.path.join(
        os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'src'
    )
    spec = importlib.util.spec_from_file_location(
        'dyadwalsh', os.path.join(src, '__init__.py'),
        submodule_search_locations=[src],
    )
    module = importlib.util.module_from_spec(spec)
    sys.modules['dyadwalsh'] = module
    spec.loader.exec_module(module)


try:
    import dyadwalsh  # noqa: F401
except ImportError:
    _load_from_checkout()


@pytest.fixture
def rng():
    return random.Random(20170427)
