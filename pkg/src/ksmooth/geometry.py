"""Polyhedral normed spaces, supporting functionals and smoothness of unit vectors."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from . import linalg as la
from .errors import InputError, NotUnitNorm, TheoremCheckFailed
from .linalg import Vector
from .polytope import Face, Polytope, all_faces, minimal_face, polar, random_polytope, relint_contains

HEXAGON_VERTICES = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))


@dataclass(frozen=True)
class PolyhedralSpace:
    """Finite-dimensional space whose unit ball is a symmetric polytope.

    ``dual_ball`` is computed eagerly; its vertices are the extreme points of
    the dual unit ball and coincide with the ball's facet functionals.
    """

    ball: Polytope
    dual_ball: Polytope = field(compare=False, repr=False)
    name: Optional[str] = field(default=None, compare=False)

    @property
    def dim(self) -> int:
        return self.ball.dim

    @property
    def extreme_points(self) -> tuple:
        return self.ball.vertices

    @property
    def dual_extreme_points(self) -> tuple:
        return self.dual_ball.vertices

    def __str__(self) -> str:
        return self.name or f"polyhedral space (dim {self.dim}, {len(self.ball.vertices)} vertices)"


def space_from_ball(ball: Polytope, name: Optional[str] = None) -> PolyhedralSpace:
    dual = polar(ball)
    if set(dual.vertices) != set(ball.functionals):
        raise InputError("dual ball vertices disagree with facet functionals")
    return PolyhedralSpace(ball, dual, name)


def space_linf(n: int) -> PolyhedralSpace:
    if n < 1:
        raise InputError("dimension must be positive")
    return space_from_ball(Polytope.from_vertices(product((-1, 1), repeat=n)), f"linf{n}")


def space_l1(n: int) -> PolyhedralSpace:
    if n < 1:
        raise InputError("dimension must be positive")
    verts = []
    for i in range(n):
        for s in (-1, 1):
            v = [0] * n
            v[i] = s
            verts.append(v)
    return space_from_ball(Polytope.from_vertices(verts), f"l1:{n}")


def space_polygon(vertices: Sequence[Sequence], name: Optional[str] = None) -> PolyhedralSpace:
    pts = [la.vector(v) for v in vertices]
    if any(len(p) != 2 for p in pts):
        raise InputError("polygon vertices must be planar")
    if len(set(pts)) < 4:
        raise InputError("a symmetric polygon needs at least 4 vertices")
    return space_from_ball(Polytope.from_vertices(pts), name or f"polygon{len(set(pts))}")


def space_hexagon() -> PolyhedralSpace:
    return space_polygon(HEXAGON_VERTICES, "hexagon")


def random_space(dim: int, pairs: int, seed: int, bound: int = 6) -> PolyhedralSpace:
    """Hull of ``pairs`` seeded integer directions and their negatives."""
    return space_from_ball(random_polytope(dim, pairs, seed, bound), f"random(dim={dim},pairs={pairs},seed={seed})")


def norm(space: PolyhedralSpace, v: Sequence) -> Fraction:
    v = la.vector(v)
    if len(v) != space.dim:
        raise InputError(f"expected a vector of dimension {space.dim}")
    return max(la.dot(f, v) for f in space.ball.functionals)


@dataclass(frozen=True)
class UnitVector:
    space: PolyhedralSpace = field(repr=False)
    coords: Vector

    def __post_init__(self):
        n = norm(self.space, self.coords)
        if n != 1:
            raise NotUnitNorm(f"not unit norm (norm={la.format_rational(n)})")


def unit_vector(space: PolyhedralSpace, coords: Sequence) -> UnitVector:
    return UnitVector(space, la.vector(coords))


@dataclass(frozen=True)
class SupportSet:
    point: UnitVector
    ext_functionals: tuple
    face: Face = field(repr=False)
    order: int


@dataclass(frozen=True)
class PointSmoothnessReport:
    point: UnitVector
    order: int
    minimal_face: Face = field(repr=False)
    face_dim: int
    theorem_check: bool
    support: SupportSet = field(repr=False)

    def as_dict(self) -> dict:
        return {
            "point": [la.format_rational(c) for c in self.point.coords],
            "space": str(self.point.space),
            "order": self.order,
            "faceDim": self.face_dim,
            "faceVertexCount": len(self.minimal_face.vertices),
            "extJ": [[la.format_rational(c) for c in g] for g in self.support.ext_functionals],
            "theoremCheck": self.theorem_check,
        }


def _as_unit(x) -> UnitVector:
    if not isinstance(x, UnitVector):
        raise TypeError("expected a UnitVector")
    return x


def support_set(x: UnitVector) -> SupportSet:
    """Extreme supporting functionals of ``x``: dual-ball vertices ``g`` with ``g . x = 1``."""
    x = _as_unit(x)
    dual = x.space.dual_ball
    ext = tuple(g for g in dual.vertices if la.dot(g, x.coords) == 1)
    face = minimal_face(dual, la.centroid(ext))
    if face.vertices != ext:
        raise AssertionError("supporting set is not the exposed face of the dual ball")
    return SupportSet(x, ext, face, la.span_dim(ext))


def _point_report(x: UnitVector) -> PointSmoothnessReport:
    sup = support_set(x)
    face = minimal_face(x.space.ball, x.coords)
    return PointSmoothnessReport(x, sup.order, face, face.dim, sup.order == x.space.dim - face.dim, sup)


def smoothness_order_point(x: UnitVector) -> PointSmoothnessReport:
    """Order of smoothness with the face-dimension cross-check ``k = n - i``.

    A failed cross-check raises :class:`TheoremCheckFailed`.
    """
    rep = _point_report(_as_unit(x))
    if not rep.theorem_check:
        raise TheoremCheckFailed(
            f"order {rep.order} != {x.space.dim} - {rep.face_dim} at {la.vector(x.coords)}"
        )
    return rep


def sample_relint(face: Face, seed: Optional[int] = None) -> Vector:
    """Strictly positive rational combination of the face vertices.

    ``seed=None`` gives the centroid; otherwise integer weights are drawn so
    the normalised weights have denominator at most 64 when the face has at
    most 64 vertices.
    """
    verts = face.vertices
    if not verts:
        raise InputError("empty face")
    if seed is None or len(verts) == 1:
        return la.centroid(list(verts))
    rng = random.Random(seed)
    cap = max(1, 64 // len(verts))
    w = [rng.randint(1, cap) for _ in verts]
    total = sum(w)
    return la.combination([Fraction(a, total) for a in w], list(verts))


@dataclass
class FaceRecord:
    face_dim: int
    vertex_count: int
    samples: int
    orders: list
    passed: bool
    key: tuple = field(repr=False, default=())

    def as_dict(self) -> dict:
        return {
            "faceDim": self.face_dim,
            "vertexCount": self.vertex_count,
            "samples": self.samples,
            "k": sorted(set(self.orders)),
            "pass": self.passed,
        }


@dataclass
class FaceTheoremReport:
    space: str
    dim: int
    records: list

    @property
    def total_samples(self) -> int:
        return sum(r.samples for r in self.records)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r.passed]

    def as_dict(self) -> dict:
        return {
            "space": self.space,
            "dim": self.dim,
            "faces": len(self.records),
            "samples": self.total_samples,
            "failures": len(self.failures),
            "records": [r.as_dict() for r in self.records],
        }


def verify_face_theorem(space: PolyhedralSpace, samples_per_face: int = 3, seed: int = 0) -> FaceTheoremReport:
    """Sample relative-interior points of every proper face and check ``k = n - dim F``.

    The first sample of each face is its centroid, later ones use seeded weights.
    """
    n = space.dim
    records = []
    for idx, face in enumerate(all_faces(space.ball)):
        orders = []
        ok = True
        for s in range(samples_per_face):
            x = sample_relint(face, None if s == 0 else seed * 1_000_003 + idx * 101 + s)
            if not relint_contains(face, x):
                ok = False
                orders.append(-1)
                continue
            rep = _point_report(UnitVector(space, x))
            orders.append(rep.order)
            ok = ok and rep.order == n - face.dim and rep.face_dim == face.dim
        records.append(FaceRecord(face.dim, len(face.vertices), samples_per_face, orders, ok, face.vertices))
    return FaceTheoremReport(str(space), n, records)
