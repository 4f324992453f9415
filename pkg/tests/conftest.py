import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chow_strata import Polynomial, named_tree  # noqa: E402


@pytest.fixture
def v():
    """Shorthand: v("t1") is the variable t1."""
    return Polynomial.var


@pytest.fixture(params=["edge", "chain2", "chain3", "star3"])
def singular(request):
    return named_tree(request.param)
