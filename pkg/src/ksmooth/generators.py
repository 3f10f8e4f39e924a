"""Seeded generators of operators ``linf^n -> Y`` that attain their norm at every vertex.

``basis`` strategy: pick rational unit vectors of ``Y`` as images of ``n``
independent cube vertices, extend linearly and keep the operator only if every
other vertex image also has norm exactly one.  Unit vectors are drawn from a
random face of ``B_Y`` (each face dimension equally likely) with positive
integer weights, so images land in open faces of every dimension.

``structural`` strategy (two-dimensional ``Y``): images are placed on a pair
of segments ``+-[z1, z2]`` directly, which reaches rank-one and rank-two
configurations that rejection sampling rarely hits.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import linalg as la
from .errors import GeneratorExhausted, InputError
from .geometry import PolyhedralSpace, norm, space_linf
from .operators import Operator
from .polytope import Face, Polytope, all_faces

DEFAULT_DENOMINATOR_BOUND = 12
DEFAULT_MAX_ATTEMPTS = 20_000
SUPPORTED_N = (3, 4)
STRATEGIES = ("basis", "structural")


@lru_cache(maxsize=16)
def _faces_by_dim(ball: Polytope) -> tuple:
    faces = [f for f in all_faces(ball) if f.dim < ball.dim]
    dims = sorted({f.dim for f in faces})
    return tuple(tuple(f for f in faces if f.dim == d) for d in dims)


def _composition(rng: random.Random, parts: int, bound: int) -> list:
    """Positive integers ``w_1..w_parts`` with sum at most ``max(bound, parts)``."""
    total = rng.randint(parts, max(parts, bound))
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
    edges = [0] + cuts + [total]
    return [b - a for a, b in zip(edges, edges[1:])]


def _point_in_face(rng: random.Random, face: Face, bound: int) -> la.Vector:
    verts = face.vertices
    if len(verts) == 1:
        return verts[0]
    # strictly positive weights on all vertices give a relative-interior point
    w = _composition(rng, len(verts), bound)
    total = sum(w)
    return la.combination([Fraction(a, total) for a in w], list(verts))


def random_unit_vector(space: PolyhedralSpace, rng: random.Random, bound: int = DEFAULT_DENOMINATOR_BOUND) -> la.Vector:
    groups = _faces_by_dim(space.ball)
    face = rng.choice(rng.choice(groups))
    return _point_in_face(rng, face, bound)


def _vertex_basis(n: int) -> list:
    """``n`` independent cube vertices: all-ones, then one extra sign flipped per step."""
    return [la.vector([1] * (n - k) + [-1] * k) for k in range(n)]


def _operator_from_images(x: PolyhedralSpace, y: PolyhedralSpace, basis: list, images: list) -> Operator:
    # row i of T satisfies  b_k . row_i = images[k][i]  for every basis vertex b_k
    b = la.matrix(basis)
    rows = [la.solve_square(b, la.vector([img[i] for img in images])) for i in range(y.dim)]
    return Operator(x, y, rows)


def _all_norming(t: Operator) -> bool:
    return all(norm(t.codomain, t.apply(v)) == 1 for v in t.domain.ball.vertices)


def _check_n(n: int):
    if n not in SUPPORTED_N:
        raise InputError(f"generator supports n in {SUPPORTED_N}, got {n}")


def generate_basis(n: int, y: PolyhedralSpace, seed: int, bound: int = DEFAULT_DENOMINATOR_BOUND,
                   max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> Operator:
    _check_n(n)
    x = space_linf(n)
    rng = random.Random(seed)
    basis = _vertex_basis(n)
    for _ in range(max_attempts):
        images = [random_unit_vector(y, rng, bound) for _ in basis]
        t = _operator_from_images(x, y, basis, images)
        if _all_norming(t):
            return t
    raise GeneratorExhausted(f"no operator found after {max_attempts} attempts (seed={seed})")


def _signed_permutation(rng: random.Random, n: int):
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((-1, 1)) for _ in range(n)]
    return perm, signs


def _edges(space: PolyhedralSpace) -> tuple:
    return tuple(f for f in _faces_by_dim(space.ball)[-1])


def generate_structural(n: int, y: PolyhedralSpace, seed: int, bound: int = DEFAULT_DENOMINATOR_BOUND,
                        max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> Operator:
    """Columns ``(z1 + z2)/2`` and ``t_j (z1 - z2)/2`` followed by a signed permutation.

    With ``sum |t_j| = 1`` and ``z1, z2`` on a common edge every vertex image
    lies on ``+-[z1, z2]``; with a single ``t_j = +-1`` the images are
    ``+-z1, +-z2`` for arbitrary unit ``z1, z2``.
    """
    _check_n(n)
    if y.dim != 2:
        raise InputError("structural generator needs a two-dimensional codomain")
    x = space_linf(n)
    rng = random.Random(seed)
    for _ in range(max_attempts):
        mode = rng.choice(("edge", "edge", "corners", "rank-one"))
        if mode == "rank-one":
            z1 = z2 = random_unit_vector(y, rng, bound)
            t = [Fraction(0)] * (n - 1)
        elif mode == "edge":
            face = rng.choice(_edges(y))
            z1 = _point_in_face(rng, _pick_subface(rng, face), bound)
            z2 = _point_in_face(rng, _pick_subface(rng, face), bound)
            w = _composition(rng, n - 1, bound)
            live = [rng.random() < 0.7 for _ in w]
            if not any(live):
                live[0] = True
            w = [a if keep else 0 for a, keep in zip(w, live)]
            total = sum(w)
            t = [Fraction(rng.choice((-1, 1)) * a, total) for a in w]
        else:
            z1 = random_unit_vector(y, rng, bound)
            z2 = random_unit_vector(y, rng, bound)
            t = [Fraction(0)] * (n - 1)
            t[rng.randrange(n - 1)] = Fraction(rng.choice((-1, 1)))
        half_sum = la.scale(Fraction(1, 2), la.add(z1, z2))
        half_diff = la.scale(Fraction(1, 2), la.sub(z1, z2))
        cols = [half_sum] + [la.scale(tj, half_diff) for tj in t]
        if all(la.is_zero(c) for c in cols):
            continue
        perm, signs = _signed_permutation(rng, n)
        placed = [None] * n
        for j, c in enumerate(cols):
            placed[perm[j]] = la.scale(signs[j], c)
        op = Operator(x, y, la.transpose(tuple(placed)))
        if _all_norming(op):
            return op
    raise GeneratorExhausted(f"no structural operator found after {max_attempts} attempts (seed={seed})")


def _pick_subface(rng: random.Random, edge: Face) -> Face:
    # an endpoint (a polygon vertex) or the open edge itself
    if rng.random() < 0.35:
        v = rng.choice(edge.vertices)
        return Face(edge.parent, (), (v,), 0)
    return edge


def generate_all_vertices_norming(n: int, y: PolyhedralSpace, seed: int, bound: int = DEFAULT_DENOMINATOR_BOUND,
                                  strategy: str = "basis", max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> Operator:
    if strategy == "basis":
        return generate_basis(n, y, seed, bound, max_attempts)
    if strategy == "structural":
        return generate_structural(n, y, seed, bound, max_attempts)
    raise InputError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def random_operator(x: PolyhedralSpace, y: PolyhedralSpace, seed: int, bound: int = 3) -> Operator:
    """Nonzero operator with small random rational entries (no norming constraint)."""
    rng = random.Random(seed)
    while True:
        m = [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(x.dim)] for _ in range(y.dim)]
        if any(any(r) for r in m):
            return Operator(x, y, m)


def sign_vertices(n: int) -> list:
    return [la.vector(s) for s in product((-1, 1), repeat=n)]
