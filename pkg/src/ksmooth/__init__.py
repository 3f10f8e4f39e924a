"""Exact order of smoothness for polyhedral normed spaces and operators between them."""

__version__ = "0.1.0"

from .geometry import (  # noqa: E402
    PolyhedralSpace,
    norm,
    smoothness_order_point,
    space_hexagon,
    space_l1,
    space_linf,
    space_polygon,
    support_set,
    unit_vector,
)
from .kernels import BACKEND  # noqa: E402
from .operators import Operator, op_norm, oracle_order, smoothness_order_operator  # noqa: E402

__all__ = [
    "BACKEND",
    "Operator",
    "PolyhedralSpace",
    "norm",
    "op_norm",
    "oracle_order",
    "smoothness_order_operator",
    "smoothness_order_point",
    "space_hexagon",
    "space_l1",
    "space_linf",
    "space_polygon",
    "support_set",
    "unit_vector",
]
