from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ksmooth import linalg as la
from ksmooth.errors import NotUnitNorm
from ksmooth.geometry import (
    norm,
    random_space,
    sample_relint,
    smoothness_order_point,
    space_hexagon,
    space_l1,
    space_linf,
    support_set,
    unit_vector,
    verify_face_theorem,
)
from ksmooth.polytope import all_faces, minimal_face, relint_contains

from oracles import polygon_facets_bruteforce, sign_vectors

F = Fraction
LINF3 = space_linf(3)
L13 = space_l1(3)
HEX = space_hexagon()


def e(i, n=3):
    return tuple(F(int(j == i)) for j in range(n))


def test_space_constructors():
    assert LINF3.ball.vertices == tuple(sign_vectors(3))
    assert set(L13.ball.functionals) == set(sign_vectors(3))
    assert len(HEX.ball.vertices) == 6 and len(HEX.ball.functionals) == 6
    assert list(HEX.ball.functionals) == polygon_facets_bruteforce(list(HEX.ball.vertices))
    assert HEX.dual_extreme_points == HEX.ball.functionals


def test_norm_examples():
    assert norm(LINF3, (1, -2, F(1, 2))) == 2
    assert norm(L13, (F(1, 2), F(1, 2), F(1, 2))) == F(3, 2)
    assert max(la.dot(f, la.vec(1, 1)) for f in HEX.ball.functionals) == 1
    assert norm(HEX, (1, 1)) == 1
    assert la.vec(1, 1) in HEX.ball.vertices


vec3 = st.tuples(*[st.fractions(-5, 5, max_denominator=7)] * 3)


@given(vec3, vec3, st.fractions(-4, 4, max_denominator=5))
def test_norm_axioms(u, v, c):
    for X in (LINF3, L13, random_space(3, 4, 7)):
        assert norm(X, la.scale(c, u)) == abs(c) * norm(X, u)
        assert norm(X, la.add(u, v)) <= norm(X, u) + norm(X, v)
        assert norm(X, la.neg(u)) == norm(X, u)
        assert (norm(X, u) == 0) == la.is_zero(u)


def test_support_set_examples():
    s = support_set(unit_vector(LINF3, (1, 1, 1)))
    assert set(s.ext_functionals) == {e(0), e(1), e(2)} and s.order == 3
    s = support_set(unit_vector(LINF3, (1, 1, 0)))
    assert set(s.ext_functionals) == {e(0), e(1)} and s.order == 2
    s = support_set(unit_vector(LINF3, (1, F(1, 2), 0)))
    assert s.ext_functionals == (e(0),) and s.order == 1


def test_unit_vector_rejects_non_unit():
    with pytest.raises(NotUnitNorm, match="norm=2"):
        unit_vector(LINF3, (1, 1, 2))


def test_point_order_examples():
    r = smoothness_order_point(unit_vector(L13, (F(1, 3), F(1, 3), F(1, 3))))
    assert (r.order, r.face_dim) == (1, 2)
    r = smoothness_order_point(unit_vector(HEX, HEX.ball.vertices[0]))
    assert (r.order, r.face_dim) == (2, 0)
    r = smoothness_order_point(unit_vector(L13, (F(1, 2), F(1, 2), 0)))
    assert set(r.support.ext_functionals) == {la.vec(1, 1, 1), la.vec(1, 1, -1)}
    assert (r.order, r.face_dim) == (2, 1)


def test_sample_relint_examples():
    edge = minimal_face(LINF3.ball, (1, 1, 0))
    assert sample_relint(edge) == la.vec(1, 1, 0)
    vertex = minimal_face(LINF3.ball, (1, 1, 1))
    assert sample_relint(vertex, seed=5) == la.vec(1, 1, 1)
    facet = minimal_face(LINF3.ball, (1, 0, 0))
    for seed in range(20):
        x = sample_relint(facet, seed)
        assert x[0] == 1 and abs(x[1]) < 1 and abs(x[2]) < 1
        assert relint_contains(facet, x)
        assert max(w.denominator for w in x) <= 64


@pytest.mark.parametrize("space", [LINF3, L13, space_l1(4), HEX], ids=str)
def test_face_identity_campaign(space):
    rep = verify_face_theorem(space, 3, seed=1)
    assert rep.failures == []
    assert len(rep.records) == len(all_faces(space.ball))


def test_face_identity_random_polygon():
    X = random_space(2, 6, seed=11)
    assert len(X.ball.vertices) <= 12
    assert verify_face_theorem(X, 3, seed=2).failures == []


@pytest.mark.parametrize("space", [LINF3, L13, HEX, random_space(3, 5, 3)], ids=str)
def test_point_properties_on_all_faces(space):
    n = space.dim
    for face in all_faces(space.ball):
        x = sample_relint(face, 17)
        r = smoothness_order_point(unit_vector(space, x))
        assert 1 <= r.order <= n
        assert (r.order == n) == (face.dim == 0)
        rn = smoothness_order_point(unit_vector(space, la.neg(x)))
        assert rn.order == r.order
        assert set(rn.support.ext_functionals) == {la.neg(g) for g in r.support.ext_functionals}
        ext = list(r.support.ext_functionals)
        # points of J(x) are convex combinations of its extreme points; they cannot enlarge the span
        mixes = [la.centroid(ext)] + [la.combination([F(1, 3), F(2, 3)], [a, b]) for a, b in zip(ext, ext[1:])]
        assert la.span_dim(ext + mixes) == r.order
        assert all(la.dot(g, x) == 1 for g in mixes)
