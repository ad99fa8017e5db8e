import pytest

from nilinv.parabolic import ParabolicShape, all_shapes
from nilinv.roots import GroupType

D8 = GroupType("D", 8)
C8 = GroupType("C", 8)
B8 = GroupType("B", 8)

O16_BLOCKS = (3, 1, 2, 4, 2, 1, 3)
O17_BLOCKS = (1, 2, 5, 1, 5, 2, 1)


@pytest.fixture(scope="session")
def o16_shape():
    return ParabolicShape(D8, O16_BLOCKS)


@pytest.fixture(scope="session")
def sp16_shape():
    return ParabolicShape(C8, O16_BLOCKS)


@pytest.fixture(scope="session")
def o17_shape():
    return ParabolicShape(B8, O17_BLOCKS)


@pytest.fixture(scope="session")
def small_family():
    return all_shapes(4)
