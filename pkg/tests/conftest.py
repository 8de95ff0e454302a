import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from grpdeg import dicyclic, dihedral, subgroup_generated, symmetric  # noqa: E402
from grpdeg.spec import resolve  # noqa: E402

SMALL_SPECS = [
    "cyclic:1",
    "cyclic:6",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "dicyclic:2",
    "dicyclic:3",
    "alt:4",
    "sym:4",
    "heisenberg:2",
    "sym:3 x cyclic:2",
    "dihedral:2 x cyclic:2",
]


@pytest.fixture
def s3():
    return symmetric(3)


@pytest.fixture
def d4():
    return dihedral(4)


@pytest.fixture
def q8():
    return dicyclic(2)


@pytest.fixture
def rot_d4(d4):
    return subgroup_generated(d4, [1])


@pytest.fixture(params=SMALL_SPECS)
def small_group(request):
    return resolve(request.param)
