"""Named operators with hand-checked or oracle-pinned smoothness orders."""

from fractions import Fraction

from ksmooth.geometry import space_l1, space_linf
from ksmooth.io import parse_vector
from ksmooth.operators import Operator

F = Fraction
LINF3, L13, L12, LINF2 = space_linf(3), space_l1(3), space_l1(2), space_linf(2)


def op(rows, x=LINF3, y=L13):
    return Operator(x, y, [parse_vector(r) for r in rows])


THIRD_IDENTITY = op([[F(1, 3), 0, 0], [0, F(1, 3), 0], [0, 0, F(1, 3)]])
RANK_ONE = op([[F(1, 3), 0, 0]] * 3)
EDGE_PROJECTION = op([[F(1, 2), 0, 0], [0, F(1, 2), 0], [0, 0, 0]])
CORNER = op([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
HALF_PROJECTION_L12 = op([[F(1, 2), 0, 0], [0, F(1, 2), 0]], y=L12)
PROJECTION_LINF2 = op([[1, 0, 0], [0, 1, 0]], y=LINF2)
RANK_ONE_L12 = op([[F(1, 2), 0, 0], [F(1, 2), 0, 0]], y=L12)

# operators whose images all lie in open edges of the octahedron, one per branch of that row
ROW_080 = {
    "cap-all=4": op([["0", "0", "0"], ["79/220", "-91/180", "-7/198"], ["79/220", "89/180", "-7/198"]]),
    "cap-all=2": op([["1/6", "-1/12", "-1/4"], ["-1/6", "-1/4", "-5/12"], ["0", "1/3", "-1/3"]]),
    "pairwise": op([["0", "0", "0"], ["1/12", "0", "5/12"], ["-7/12", "0", "1/12"]]),
    "otherwise": op([["0", "0", "-1/2"], ["1/4", "1/4", "0"], ["1/4", "-1/4", "0"]]),
}
