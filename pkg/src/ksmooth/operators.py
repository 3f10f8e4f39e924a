"""Linear operators between polyhedral spaces and their order of smoothness.

Two independent routes compute the order of an operator ``T`` with
``||T|| = 1``:

* the tensor route: extreme supporting functionals of ``T`` are the
  elementary tensors ``g (x) v`` with ``v`` a norming vertex of the domain
  ball and ``g`` an extreme supporting functional of ``Tv``; the order is
  the dimension of their span;
* the operator-space route: the unit ball of ``L(X, Y)`` is itself a
  polytope in dimension ``n * m``; its vertices are enumerated and the order
  is ``n * m`` minus the dimension of the minimal face containing ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg as la
from .errors import DimensionGuard, InputError, NotNormalized, ZeroOperator
from .geometry import PolyhedralSpace, UnitVector, norm, support_set
from .linalg import Matrix, Vector
from .polytope import (
    HPolytope,
    Polytope,
    Segment,
    extreme_points_general,
    minimal_face,
    segment_relint_contains,
    vertex_enumeration,
)

ORACLE_MAX_DIM = 9
POLAR_ORACLE_MAX_DIM = 6


@dataclass(frozen=True)
class Operator:
    domain: PolyhedralSpace = field(repr=False)
    codomain: PolyhedralSpace = field(repr=False)
    matrix: Matrix

    def __post_init__(self):
        m = la.matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.codomain.dim or any(len(r) != self.domain.dim for r in m):
            raise InputError(
                f"matrix shape must be {self.codomain.dim}x{self.domain.dim} (codomain x domain)"
            )

    @property
    def shape(self) -> tuple:
        return (self.codomain.dim, self.domain.dim)

    def apply(self, v: Sequence) -> Vector:
        return la.matvec(self.matrix, la.vector(v))

    def scaled(self, c) -> "Operator":
        c = Fraction(c)
        return Operator(self.domain, self.codomain, tuple(la.scale(c, r) for r in self.matrix))

    @property
    def vectorized(self) -> Vector:
        return la.flatten(self.matrix)

    def is_zero(self) -> bool:
        return all(la.is_zero(r) for r in self.matrix)


@dataclass(frozen=True)
class RankOneFunctional:
    """The functional ``S -> ystar . (S x)`` on operators."""

    ystar: Vector
    x: Vector

    @property
    def vectorized(self) -> Vector:
        return la.flatten(la.outer(self.ystar, self.x))

    def __call__(self, s: Matrix) -> Fraction:
        return la.dot(self.ystar, la.matvec(s, self.x))


@dataclass
class OperatorSmoothnessReport:
    operator: Operator = field(repr=False)
    op_norm: Fraction
    norming_extremes: tuple
    per_vertex: dict = field(repr=False)
    ext_j: tuple = field(repr=False)
    order: int

    def as_dict(self) -> dict:
        fmt = la.format_rational
        return {
            "domain": str(self.operator.domain),
            "codomain": str(self.operator.codomain),
            "matrix": [[fmt(c) for c in r] for r in self.operator.matrix],
            "opNorm": fmt(self.op_norm),
            "normingExtremes": [[fmt(c) for c in v] for v in self.norming_extremes],
            "perVertex": [
                {
                    "vertex": [fmt(c) for c in v],
                    "image": [fmt(c) for c in s.point.coords],
                    "order": s.order,
                    "extJ": [[fmt(c) for c in g] for g in s.ext_functionals],
                }
                for v, s in sorted(self.per_vertex.items())
            ],
            "extJCount": len(self.ext_j),
            "order": self.order,
        }


def op_norm(t: Operator) -> Fraction:
    """Maximum of ``||Tv||`` over the vertices of the domain ball."""
    return max(norm(t.codomain, t.apply(v)) for v in t.domain.ball.vertices)


def normalize(t: Operator) -> Operator:
    if t.is_zero():
        raise ZeroOperator("zero operator has no supporting functionals")
    return t.scaled(1 / op_norm(t))


def norming_extremes(t: Operator) -> tuple:
    """Vertices ``v`` of the domain ball with ``||Tv|| = ||T||``."""
    if t.is_zero():
        raise ZeroOperator("zero operator attains its norm everywhere")
    values = [(v, norm(t.codomain, t.apply(v))) for v in t.domain.ball.vertices]
    top = max(val for _, val in values)
    return tuple(v for v, val in values if val == top)


def image_polytope(t: Operator) -> list:
    return extreme_points_general([t.apply(v) for v in t.domain.ball.vertices])


def operator_rank(t: Operator) -> int:
    return la.rank(t.matrix)


def ext_J_operator(t: Operator) -> tuple:
    """Elementary tensors ``g (x) v`` over norming vertices ``v`` and ``g`` in Ext J(Tv).

    Both ``v`` and ``-v`` contribute; the duplicates do not change the span.
    """
    if op_norm(t) != 1:
        raise NotNormalized("operator must have norm 1")
    out = []
    for v in norming_extremes(t):
        sup = support_set(UnitVector(t.codomain, t.apply(v)))
        out.extend(RankOneFunctional(g, v) for g in sup.ext_functionals)
    return tuple(sorted(out, key=lambda r: (r.x, r.ystar)))


def smoothness_order_operator(t: Operator) -> OperatorSmoothnessReport:
    tn = normalize(t)
    per_vertex = {}
    ext = []
    for v in norming_extremes(tn):
        sup = support_set(UnitVector(tn.codomain, tn.apply(v)))
        per_vertex[v] = sup
        ext.extend(RankOneFunctional(g, v) for g in sup.ext_functionals)
    ext.sort(key=lambda r: (r.x, r.ystar))
    order = la.span_dim([r.vectorized for r in ext])
    return OperatorSmoothnessReport(tn, op_norm(t), tuple(sorted(per_vertex)), per_vertex, tuple(ext), order)


# -- operator-space oracle --------------------------------------------------


def operator_ball(x: PolyhedralSpace, y: PolyhedralSpace) -> HPolytope:
    """Unit ball of ``L(X, Y)`` as ``{T : g . (T v) <= 1}`` over ball vertices ``v`` and
    dual-ball vertices ``g``; functionals are row-major ``outer(g, v)``."""
    nm = x.dim * y.dim
    if nm > ORACLE_MAX_DIM:
        raise DimensionGuard(f"operator-space dimension {nm} exceeds {ORACLE_MAX_DIM}")
    fs = {la.flatten(la.outer(g, v)) for v in x.ball.vertices for g in y.dual_ball.vertices}
    return HPolytope(nm, tuple(sorted(fs)))


@lru_cache(maxsize=32)
def _operator_ball_polytope(xball: Polytope, yball: Polytope) -> Polytope:
    from .geometry import space_from_ball

    h = operator_ball(space_from_ball(xball), space_from_ball(yball))
    return Polytope.from_functionals(h.functionals)


def operator_ball_polytope(x: PolyhedralSpace, y: PolyhedralSpace) -> Polytope:
    """Operator ball with both representations (cached per pair of balls)."""
    return _operator_ball_polytope(x.ball, y.ball)


@lru_cache(maxsize=32)
def _operator_dual_vertices(ball: Polytope) -> tuple:
    return vertex_enumeration(HPolytope(ball.dim, ball.vertices)).vertices


def oracle_order(t: Operator, method: str = "face") -> int:
    """Order of smoothness computed in operator space, without elementary tensors.

    ``method="face"``: ``nm`` minus the affine dimension of the minimal face of
    the operator ball containing ``T``.  ``method="polar"`` (``nm <= 6``):
    span dimension of the enumerated dual-ball vertices tight at ``T``.
    """
    nm = t.domain.dim * t.codomain.dim
    if nm > ORACLE_MAX_DIM:
        raise DimensionGuard(f"operator-space dimension {nm} exceeds {ORACLE_MAX_DIM}")
    tn = normalize(t)
    vec = tn.vectorized
    ball = operator_ball_polytope(t.domain, t.codomain)
    if method == "face":
        return nm - minimal_face(ball, vec).dim
    if method == "polar":
        if nm > POLAR_ORACLE_MAX_DIM:
            raise DimensionGuard(f"polar oracle limited to dimension {POLAR_ORACLE_MAX_DIM}")
        tight = [g for g in _operator_dual_vertices(ball) if la.dot(g, vec) == 1]
        return la.span_dim(tight)
    raise ValueError(f"unknown oracle method {method!r}")


# -- image structure ----------------------------------------------------------


def segment_pair_structure(t: Operator) -> tuple:
    """For rank-2 ``T`` into a plane: image extreme points and whether all vertex
    images lie in ``+-L[z1, z2]`` or all lie in ``+-L[z1, -z2]``."""
    ext = image_polytope(t)
    if len(ext) != 4:
        return ext, False
    z1 = ext[0]
    z2 = next(z for z in ext[1:] if z != la.neg(z1))
    images = [t.apply(v) for v in t.domain.ball.vertices]

    def covered(a, b):
        segs = (Segment(a, b), Segment(la.neg(a), la.neg(b)))
        return all(any(segment_relint_contains(s, y) for s in segs) for y in images)

    return ext, covered(z1, z2) or covered(z1, la.neg(z2))


def interior_segment_flag(t: Operator) -> bool:
    """Some vertex image lies in the open relative interior of an edge of ``T(B_X)``."""
    ext = image_polytope(t)
    if len(ext) < 2 or t.codomain.dim != 2:
        return False
    edges = _polygon_edges(ext)
    images = [t.apply(v) for v in t.domain.ball.vertices]
    return any(segment_relint_contains(Segment(a, b, closed=False), y) for a, b in edges for y in images)


def _polygon_edges(ext: list) -> list:
    if len(ext) == 2:
        return [(ext[0], ext[1])]
    # edges of a convex polygon: pairs with every other extreme point strictly on one side
    edges = []
    for i, a in enumerate(ext):
        for b in ext[i + 1:]:
            sides = set()
            for c in ext:
                if c in (a, b):
                    continue
                cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
                sides.add((cross > 0) - (cross < 0))
            if len(sides) == 1 and 0 not in sides:
                edges.append((a, b))
    return edges
