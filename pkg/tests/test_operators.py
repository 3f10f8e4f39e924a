from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from ksmooth import linalg as la
from ksmooth.errors import DimensionGuard, InputError, NotNormalized, ZeroOperator
from ksmooth.geometry import norm, random_space, space_hexagon, space_l1, space_linf
from ksmooth.operators import (
    Operator,
    RankOneFunctional,
    ext_J_operator,
    image_polytope,
    norming_extremes,
    op_norm,
    operator_ball,
    operator_rank,
    oracle_order,
    segment_pair_structure,
    smoothness_order_operator,
)

from oracles import extreme_points_bruteforce, gauss_rank, sign_vectors

F = Fraction
LINF2, LINF3, LINF4 = space_linf(2), space_linf(3), space_linf(4)
L12, L13 = space_l1(2), space_l1(3)


def test_scaled_identity_into_l1():
    t = Operator(LINF3, L13, [[F(1, 3), 0, 0], [0, F(1, 3), 0], [0, 0, F(1, 3)]])
    assert op_norm(t) == 1
    assert set(norming_extremes(t)) == set(sign_vectors(3))
    rep = smoothness_order_operator(t)
    assert rep.order == 4
    assert oracle_order(t) == 4


def test_rank_one_into_l1():
    t = Operator(LINF3, L13, [[F(1, 3), 0, 0]] * 3)
    assert set(norming_extremes(t)) == set(sign_vectors(3))
    assert smoothness_order_operator(t).order == 3
    assert oracle_order(t) == 3
    # the row form only attains its norm at +-(1, 1, 1)
    t = Operator(LINF3, L13, [[F(1, 3)] * 3, [0] * 3, [0] * 3])
    assert set(norming_extremes(t)) == {la.vec(1, 1, 1), la.vec(-1, -1, -1)}


def test_projection_into_l1_plane():
    h = F(1, 2)
    t = Operator(LINF3, L12, [[h, 0, 0], [0, h, 0]])
    assert image_polytope(t) == extreme_points_bruteforce([t.apply(v) for v in sign_vectors(3)])
    assert set(image_polytope(t)) == {la.vec(a, b) for a in (-h, h) for b in (-h, h)}
    assert smoothness_order_operator(t).order == 4
    assert oracle_order(t) == 4 == oracle_order(t, "polar")


def test_projection_into_linf_plane():
    t = Operator(LINF3, LINF2, [[1, 0, 0], [0, 1, 0]])
    rep = smoothness_order_operator(t)
    assert len(rep.ext_j) == 16
    assert rep.order == 6 == oracle_order(t) == oracle_order(t, "polar")


def test_single_row_functional():
    t = Operator(LINF3, LINF2, [[F(2, 3), F(1, 3), 0], [0, 0, 0]])
    assert op_norm(t) == 1
    assert set(norming_extremes(t)) == {v for v in sign_vectors(3) if v[0] == v[1]}


def test_operator_ball_functional_counts():
    assert len(operator_ball(LINF2, LINF2).functionals) == 8
    assert len(operator_ball(LINF3, L12).functionals) == 16
    assert len(operator_ball(LINF3, L13).functionals) == 32
    assert len(operator_ball(LINF4, L12).functionals) == 32
    with pytest.raises(DimensionGuard):
        operator_ball(LINF4, L13)


def test_errors():
    z = Operator(LINF3, L12, [[0] * 3] * 2)
    with pytest.raises(ZeroOperator):
        norming_extremes(z)
    with pytest.raises(ZeroOperator):
        smoothness_order_operator(z)
    with pytest.raises(NotNormalized):
        ext_J_operator(Operator(LINF3, L12, [[1, 0, 0], [0, 1, 0]]))
    with pytest.raises(InputError):
        Operator(LINF3, L12, [[1, 0], [0, 1]])
    with pytest.raises(DimensionGuard):
        oracle_order(Operator(LINF3, L13, [[1, 0, 0]] * 3), "polar")


def test_rank_one_functional_evaluation_identity():
    ys, x = la.vec(1, -1), la.vec(1, 1, -1)
    r = RankOneFunctional(ys, x)
    for m in ([[1, 2, 3], [4, 5, 6]], [[F(1, 2), 0, -1], [0, F(1, 7), 2]]):
        s = la.matrix(m)
        assert r(s) == la.dot(r.vectorized, la.flatten(s)) == la.dot(ys, la.matvec(s, x))


small = st.fractions(-3, 3, max_denominator=4)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=2, max_size=2), st.tuples(small, small), st.tuples(small, small, small))
def test_evaluation_identity_random(m, ys, x):
    s = la.matrix(m)
    r = RankOneFunctional(la.vector(ys), la.vector(x))
    assert r(s) == la.dot(r.vectorized, la.flatten(s))


int_vec = lambda n: st.tuples(*[st.integers(-3, 3)] * n)


@given(st.lists(int_vec(3), min_size=1, max_size=3), st.lists(int_vec(2), min_size=1, max_size=2))
def test_tensor_span_of_independent_families(xs, ys):
    xs = [la.vector(v) for v in xs]
    ys = [la.vector(v) for v in ys]
    xs = [xs[i] for i in la.independent_subset(xs)]
    ys = [ys[i] for i in la.independent_subset(ys)]
    tensors = [la.flatten(la.outer(y, x)) for x in xs for y in ys]
    assert la.span_dim(tensors) == len(xs) * len(ys)
    assert gauss_rank(tensors) == len(xs) * len(ys)


def _random_operator(x, y, seed, bound=3):
    import random

    rng = random.Random(seed)
    while True:
        m = [[F(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(x.dim)] for _ in range(y.dim)]
        if any(any(r) for r in m):
            return Operator(x, y, m)


PAIRS = [(LINF3, L12), (LINF3, LINF2), (LINF2, LINF2), (LINF3, L13), (space_hexagon(), L12), (LINF4, L12)]


@settings(max_examples=30)
@given(st.integers(0, len(PAIRS) - 1), st.integers(0, 10**6))
def test_tensor_order_matches_operator_space_oracle(pair, seed):
    x, y = PAIRS[pair]
    t = _random_operator(x, y, seed)
    rep = smoothness_order_operator(t)
    assert rep.order == oracle_order(t)
    assert 1 <= rep.order <= x.dim * y.dim
    if x.dim * y.dim <= 6:
        assert rep.order == oracle_order(t, "polar")


@settings(max_examples=20)
@given(st.integers(0, 10**6), st.fractions(-5, 5, max_denominator=6).filter(lambda c: c != 0))
def test_order_invariant_under_scaling_and_negation(seed, c):
    t = _random_operator(LINF3, L12, seed)
    k = smoothness_order_operator(t).order
    assert smoothness_order_operator(t.scaled(c)).order == k
    assert smoothness_order_operator(t.scaled(-1)).order == k


def _dense_sphere(space, steps):
    # boundary points of the unit ball on a rational grid, found by radial scaling
    n = space.dim
    grid = [F(i, steps) for i in range(-steps, steps + 1)]
    for p in product(grid, repeat=n):
        if any(p):
            yield la.scale(1 / norm(space, p), la.vector(p))


@pytest.mark.parametrize(
    "x, y",
    [(LINF2, L12), (L12, LINF2), (space_hexagon(), L13), (random_space(2, 4, 5), space_hexagon()), (LINF3, L12)],
    ids=str,
)
def test_op_norm_matches_dense_sampling(x, y):
    for seed in range(4):
        t = _random_operator(x, y, seed)
        steps = max(abs(c) for v in x.ball.vertices for c in v)
        sampled = max(norm(y, t.apply(p)) for p in _dense_sphere(x, max(int(steps), 4 if x.dim == 2 else 1)))
        assert sampled <= op_norm(t)
        # the grid contains every integer vertex direction, so the maximum is attained
        assert sampled == op_norm(t)


def test_operator_rank_and_segment_pairs():
    t = Operator(LINF3, L12, [[F(1, 2), 0, 0], [0, F(1, 2), 0]])
    assert operator_rank(t) == 2
    ext, ok = segment_pair_structure(t)
    assert len(ext) == 4 and ok
    t = Operator(LINF3, L12, [[F(1, 3), F(1, 3), F(1, 3)], [0, 0, 0]])
    assert operator_rank(t) == 1
