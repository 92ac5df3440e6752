import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lcmkit.linalg import FieldSpec


@pytest.fixture(params=[0, 2], ids=["Q", "GF2"])
def fieldspec(request):
    return FieldSpec(request.param)


@pytest.fixture
def qq():
    return FieldSpec.rationals()


@pytest.fixture
def gf2():
    return FieldSpec.prime(2)
