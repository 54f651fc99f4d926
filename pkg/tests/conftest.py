import pytest

from omframe.fields import QQ
from omframe.parser import parse_vector
from omframe.poly import PolyMatrix

RUNNING_INPUT = "2+s+s^4, 3+s^2+s^4, 6+2*s^3+s^4"

# the frame at the running input: columns are the minimal Bezout vector and
# the two mu-basis elements, entries as ascending coefficient lists
RUNNING_FRAME_ROWS = [
    [[2, -1], [3, -3, -1], [9, -12, -1]],
    [[1, 2], [2, 5, 1], [8, 15]],
    [[-1, -1], [-2, -2], [-7, -5, 1]],
]

RUNNING_PIVOTS = (1, 2, 3, 4, 5, 6, 7, 10, 13)
RUNNING_BASIC = (8, 9)
RUNNING_PERIODIC = (11, 12, 14, 15)
RUNNING_COORDS_8 = (-3, -2, 2, 3, -5, 2, 1)
RUNNING_COORDS_9 = (-9, -8, 7, 12, -15, 5, 1)
RUNNING_TARGET = (2, 1, -1, -1, 2, -1, 0, 0, 0)

# the 9 x 15 coefficient system of the running input
RUNNING_SYSTEM = [
    [2, 3, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 2, 3, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 2, 3, 6, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, 1, 0, 1, 0, 0, 2, 3, 6, 0, 0, 0],
    [1, 1, 1, 0, 0, 2, 0, 1, 0, 1, 0, 0, 2, 3, 6],
    [0, 0, 0, 1, 1, 1, 0, 0, 2, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 2, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
]


@pytest.fixture
def running_vec():
    return parse_vector(RUNNING_INPUT)


@pytest.fixture
def running_frame_matrix():
    return PolyMatrix.from_int_lists(QQ, RUNNING_FRAME_ROWS)


def ints(field, values):
    return [field.from_int(v) for v in values]
