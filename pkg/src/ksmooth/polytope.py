"""Centrally symmetric polytopes in paired vertex/facet form.

Facets are stored as functionals ``f`` with the polytope on the side
``f . x <= 1``; for symmetric bodies with the origin inside this fixes the
scaling, so the functional set is literally the vertex set of the polar.
Every conversion between the two representations goes through
:func:`vertex_enumeration`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import kernels
from . import linalg as la
from .errors import DimensionGuard, ExteriorPoint, InputError, InteriorPoint, NotFullDimensional, UnboundedInput
from .linalg import Vector

BRUTE_FORCE_MAX_DIM = 6
FACE_ENUM_MAX_DIM = 6


@dataclass(frozen=True)
class VPolytope:
    dim: int
    vertices: tuple


@dataclass(frozen=True)
class HPolytope:
    dim: int
    functionals: tuple


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple
    functionals: tuple

    @property
    def vrep(self) -> VPolytope:
        return VPolytope(self.dim, self.vertices)

    @property
    def hrep(self) -> HPolytope:
        return HPolytope(self.dim, self.functionals)

    @classmethod
    def from_vertices(cls, points: Iterable[Sequence]) -> "Polytope":
        """Build from an exact vertex list; non-extreme or asymmetric input is rejected."""
        pts = _canonical(points)
        dim = _common_dim(pts)
        _require_symmetric(pts, "vertex set")
        if la.span_dim(pts) < dim:
            raise NotFullDimensional("vertices do not span the ambient space")
        facets = _double_description(pts, dim)
        ranks = _tight_ranks(pts, facets)
        bad = [p for p, r in zip(pts, ranks) if r < dim]
        if bad:
            raise InputError(f"not an extreme point: {_fmt(bad[0])}")
        return cls(dim, tuple(pts), tuple(facets))

    @classmethod
    def from_functionals(cls, functionals: Iterable[Sequence]) -> "Polytope":
        """Build from facet functionals (``f . x <= 1``); redundant ones are rejected."""
        fs = _canonical(functionals)
        dim = _common_dim(fs)
        _require_symmetric(fs, "functional set")
        verts = _double_description(fs, dim)
        ranks = _tight_ranks(fs, verts)
        bad = [f for f, r in zip(fs, ranks) if r < dim]
        if bad:
            raise InputError(f"redundant functional: {_fmt(bad[0])}")
        return cls(dim, tuple(verts), tuple(fs))

    def consistent(self) -> bool:
        """Every vertex lies on facets spanning the space and vice versa."""
        return all(r == self.dim for r in _tight_ranks(self.vertices, self.functionals)) and all(
            r == self.dim for r in _tight_ranks(self.functionals, self.vertices)
        )


@dataclass(frozen=True)
class Face:
    parent: Polytope = field(repr=False, compare=False)
    active: tuple
    vertices: tuple
    dim: int

    @property
    def is_facet(self) -> bool:
        return self.dim == self.parent.dim - 1

    @property
    def is_edge(self) -> bool:
        return self.dim == 1


@dataclass(frozen=True)
class Segment:
    a: Vector
    b: Vector
    closed: bool = True

    def __post_init__(self):
        if self.a == self.b:
            raise InputError("degenerate segment")


def _fmt(v) -> str:
    return "(" + ", ".join(la.format_rational(x) for x in v) + ")"


def _canonical(points: Iterable[Sequence]) -> list:
    pts = sorted({la.vector(p) for p in points})
    if not pts:
        raise InputError("empty point set")
    return pts


def _common_dim(pts: Sequence[Vector]) -> int:
    dim = len(pts[0])
    if dim == 0 or any(len(p) != dim for p in pts):
        raise InputError("points of inconsistent dimension")
    return dim


def _require_symmetric(pts: Sequence[Vector], what: str) -> None:
    s = set(pts)
    missing = [p for p in pts if la.neg(p) not in s]
    if missing:
        raise InputError(f"{what} is not centrally symmetric: missing {_fmt(la.neg(missing[0]))}")


def _point_rows(points: Sequence[Vector]) -> list:
    # (den, num_1, ..., num_d) with point = num / den, den > 0
    out = []
    for p in points:
        row = la.integer_row((Fraction(1),) + tuple(p))
        out.append(row)
    return out


def _functional_rows(functionals: Sequence[Vector]) -> list:
    # (c, g_1, ..., g_d) encoding g . x == c as a positive multiple of f . x == 1
    return [la.integer_row((Fraction(1),) + tuple(f)) for f in functionals]


def tight_masks(points: Sequence[Vector], functionals: Sequence[Vector]) -> list:
    """Bitmask per point of the functionals ``f`` with ``f . p == 1``."""
    return kernels.tight_masks(_point_rows(points), _functional_rows(functionals))


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _tight_ranks(points: Sequence[Vector], functionals: Sequence[Vector]) -> list:
    masks = tight_masks(points, functionals)
    return [la.span_dim([functionals[i] for i in _bits(m)]) for m in masks]


# -- vertex enumeration ------------------------------------------------------


def _double_description(functionals: Sequence[Vector], dim: int) -> list:
    """Vertices of ``{x : f . x <= 1 for all f}`` by incremental double description.

    Works on the homogenised cone ``{(t, x) : t - f . x >= 0}``; bounded
    polytopes with the origin inside give only rays with ``t > 0``.
    """
    D = dim + 1
    rows = [la.integer_row((Fraction(1),) + tuple(la.neg(f))) for f in functionals]
    basis: list = []
    for i, r in enumerate(rows):
        if kernels.int_rank([rows[j] for j in basis] + [r]) > len(basis):
            basis.append(i)
            if len(basis) == D:
                break
    if len(basis) < D:
        raise UnboundedInput("constraints leave a recession direction")
    a0 = [rows[i] for i in basis]
    rays = []
    zsets = []
    full = 0
    for i in basis:
        full |= 1 << i
    for k in range(D):
        e = [0] * D
        e[k] = 1
        nums, _det = kernels.int_solve(a0, e)
        rays.append(_primitive(nums))
        zsets.append(full & ~(1 << basis[k]))
    chosen = set(basis)
    for i, r in enumerate(rows):
        if i in chosen:
            continue
        rays, zsets = kernels.dd_insert(rays, zsets, r, 1 << i, D)
        if not rays:
            raise InputError("constraints are infeasible")
    out = set()
    for ray in rays:
        t = ray[0]
        if t <= 0:
            raise UnboundedInput("unbounded direction in constraint system")
        out.add(tuple(Fraction(x, t) for x in ray[1:]))
    return sorted(out)


def _primitive(v: list) -> list:
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, x)
    return [x // g for x in v] if g > 1 else list(v)


def _brute_force(functionals: Sequence[Vector], dim: int) -> list:
    if dim > BRUTE_FORCE_MAX_DIM:
        raise DimensionGuard(f"brute-force enumeration limited to dim <= {BRUTE_FORCE_MAX_DIM}")
    if la.span_dim(functionals) < dim:
        raise UnboundedInput("constraints leave a recession direction")
    ones_rows = _functional_rows(functionals)
    out = set()
    for sub in combinations(range(len(functionals)), dim):
        a = [ones_rows[i][1:] for i in sub]
        b = [ones_rows[i][0] for i in sub]
        res = kernels.int_solve(a, b)
        if res is None:
            continue
        nums, det = res
        if all(sum(c * x for c, x in zip(fr[1:], nums)) <= fr[0] * det for fr in ones_rows):
            out.add(tuple(Fraction(x, det) for x in nums))
    return sorted(out)


def vertex_enumeration(h: HPolytope, method: str = "dd") -> VPolytope:
    """Exact vertex set of ``{x : f . x <= 1}``.

    ``method="dd"`` runs double description; ``"brute"`` solves every
    ``dim``-subset of tight constraints and keeps the feasible solutions.
    """
    fs = _canonical(h.functionals)
    if _common_dim(fs) != h.dim:
        raise InputError("functional dimension does not match polytope dimension")
    if method == "dd":
        verts = _double_description(fs, h.dim)
    elif method == "brute":
        verts = _brute_force(fs, h.dim)
    else:
        raise ValueError(f"unknown method {method!r}")
    return VPolytope(h.dim, tuple(verts))


def hull_from_points(points: Iterable[Sequence]) -> VPolytope:
    """Extreme points of a symmetric, full-dimensional point set."""
    pts = _canonical(points)
    dim = _common_dim(pts)
    _require_symmetric(pts, "point set")
    if la.span_dim(pts) < dim:
        raise NotFullDimensional("points do not span the ambient space")
    facets = _double_description(pts, dim)
    ranks = _tight_ranks(pts, facets)
    return VPolytope(dim, tuple(p for p, r in zip(pts, ranks) if r == dim))


def extreme_points_general(points: Iterable[Sequence]) -> list:
    """Extreme points of ``conv(points)`` with no symmetry or dimension assumptions."""
    pts = _canonical(points)
    _common_dim(pts)
    if len(pts) == 1:
        return pts
    c = la.centroid(pts)
    diffs = [la.sub(p, c) for p in pts]
    r = la.span_dim(diffs)
    if r == 0:
        return [pts[0]]
    # coordinates on which the projection is injective on the affine hull
    cols = la.independent_subset(la.transpose(tuple(diffs)))
    proj = [tuple(d[j] for j in cols) for d in diffs]
    facets = _double_description(sorted(set(proj)), r)
    ranks = _tight_ranks(proj, facets)
    return [p for p, q in zip(pts, ranks) if q == r]


def polar(p: Polytope) -> Polytope:
    """Polar body: vertices enumerated from the constraints ``v . f <= 1``."""
    verts = vertex_enumeration(HPolytope(p.dim, p.vertices)).vertices
    return Polytope(p.dim, verts, p.vertices)


# -- faces -------------------------------------------------------------------


def face_from_vertex_mask(p: Polytope, mask: int, fmasks: Optional[list] = None) -> Face:
    verts = tuple(p.vertices[i] for i in _bits(mask))
    if fmasks is None:
        fmasks = tight_masks(p.functionals, p.vertices)
    active = tuple(p.functionals[i] for i, fm in enumerate(fmasks) if fm & mask == mask)
    return Face(p, active, verts, la.affine_dim(list(verts)))


def minimal_face(p: Polytope, x: Sequence) -> Face:
    """Face cut out by the functionals active at boundary point ``x``."""
    x = la.vector(x)
    vals = [la.dot(f, x) for f in p.functionals]
    top = max(vals)
    if top < 1:
        raise InteriorPoint(f"{_fmt(x)} is interior (max functional value {la.format_rational(top)})")
    if top > 1:
        raise ExteriorPoint(f"{_fmt(x)} is outside (max functional value {la.format_rational(top)})")
    active = tuple(f for f, v in zip(p.functionals, vals) if v == 1)
    masks = tight_masks(p.vertices, active)
    full = (1 << len(active)) - 1
    verts = tuple(v for v, m in zip(p.vertices, masks) if m == full)
    return Face(p, active, verts, la.affine_dim(list(verts)))


def relint_contains(face: Face, x: Sequence) -> bool:
    x = la.vector(x)
    if len(x) != face.parent.dim:
        raise InputError("dimension mismatch")
    active = set(face.active)
    for f in face.parent.functionals:
        v = la.dot(f, x)
        if f in active:
            if v != 1:
                return False
        elif v >= 1:
            return False
    return la.affine_dim(list(face.vertices) + [x]) == face.dim


def all_faces(p: Polytope, max_dim: int = FACE_ENUM_MAX_DIM) -> list:
    """Every nonempty proper face, once each, as closures of facet intersections."""
    if p.dim > max_dim:
        raise DimensionGuard(f"face enumeration limited to dim <= {max_dim}")
    fmasks = tight_masks(p.functionals, p.vertices)
    seen = set(fmasks)
    frontier = list(seen)
    while frontier:
        nxt = []
        for m in frontier:
            for fm in fmasks:
                c = m & fm
                if c and c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    faces = [face_from_vertex_mask(p, m, fmasks) for m in seen]
    faces.sort(key=lambda f: (f.dim, f.vertices))
    return faces


def segment_relint_contains(s: Segment, x: Sequence) -> bool:
    """Membership in ``{(1 - t) a + t b}`` with ``t`` in ``[0, 1]`` (closed) or ``(0, 1)``."""
    x = la.vector(x)
    d = la.sub(s.b, s.a)
    j = next(i for i, v in enumerate(d) if v != 0)
    t = (x[j] - s.a[j]) / d[j]
    if la.add(s.a, la.scale(t, d)) != x:
        return False
    if s.closed:
        return 0 <= t <= 1
    return 0 < t < 1


# -- generators --------------------------------------------------------------


def random_symmetric_points(dim: int, pairs: int, rng: random.Random, bound: int = 6) -> list:
    """``pairs`` seeded integer directions plus their negatives."""
    pts = set()
    while len(pts) < 2 * pairs:
        v = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))
        if la.is_zero(v):
            continue
        pts.add(v)
        pts.add(la.neg(v))
    return sorted(pts)


def random_polytope(dim: int, pairs: int, seed: int, bound: int = 6, max_tries: int = 1000) -> Polytope:
    """Hull of seeded symmetric directions; resampled until full-dimensional."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        pts = random_symmetric_points(dim, pairs, rng, bound)
        if la.span_dim(pts) < dim:
            continue
        return Polytope.from_vertices(hull_from_points(pts).vertices)
    raise InputError("could not draw a full-dimensional polytope")
