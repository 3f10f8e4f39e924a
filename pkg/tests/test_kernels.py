import pytest
from hypothesis import given, strategies as st

from ksmooth import kernels

from oracles import gauss_rank, gauss_solve

BACKENDS = kernels.available_backends()

int_matrices = st.integers(1, 8).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=1, max_size=9)
)


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return BACKENDS[request.param]


def test_cython_backend_is_built():
    # the extension is part of the build; the fallback only covers broken toolchains
    assert "cython" in BACKENDS


@given(m=int_matrices)
def test_int_rank_backends_agree_with_oracle(m):
    ref = gauss_rank(m)
    for mod in BACKENDS.values():
        assert mod.int_rank(m) == ref


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(st.integers(-5, 5), min_size=n, max_size=n),
    )
))
def test_int_solve_backends_agree_with_oracle(ab):
    a, b = ab
    ref = gauss_solve(a, b)
    for mod in BACKENDS.values():
        res = mod.int_solve(a, b)
        if ref is None:
            assert res is None
        else:
            nums, det = res
            assert det > 0
            assert tuple(__import__("fractions").Fraction(v, det) for v in nums) == ref


def test_dd_insert_square_from_triangle(backend):
    # cone over a triangle in homogeneous coords, cut by one more halfspace
    rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    zsets = [0b110, 0b101, 0b011]
    new_rays, new_z = backend.dd_insert(rays, zsets, [1, -1, 0], 0b1000, 3)
    assert sorted(map(tuple, new_rays)) == [(0, 0, 1), (1, 0, 0), (1, 1, 0)]
    assert len(new_z) == 3


def test_tight_masks(backend):
    pts = [[2, 2, 0], [1, 1, 1]]  # (1, 0) and (1, 1)
    funcs = [[1, 1, 0], [1, 0, 1], [1, 1, 1]]
    assert backend.tight_masks(pts, funcs) == [0b101, 0b011]


def test_tight_masks_wide(backend):
    # more than 64 functionals exercises arbitrary-width masks
    funcs = [[1] + [0] * k + [1] + [0] * (69 - k) for k in range(70)]
    pts = [[1] + [1] * 70]
    assert backend.tight_masks(pts, funcs) == [(1 << 70) - 1]
