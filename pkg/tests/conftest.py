import pytest

from shape_lib import SkewShape


@pytest.fixture
def big_shape() -> SkewShape:
    """55332/22, the shape most tests are checked against."""
    return SkewShape.of((5, 5, 3, 3, 2), (2, 2))


@pytest.fixture
def square_minus_corner() -> SkewShape:
    return SkewShape.of((2, 2), (1,))
