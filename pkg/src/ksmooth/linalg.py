"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`.  Vectors are tuples of fractions,
matrices are tuples of row vectors.  Tuples give immutability, hashing and
a lexicographic total order for free, which is what every canonical sort
in the package relies on.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from . import kernels
from .errors import InputError

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction.  Floats are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise InputError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise InputError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(parse_rational(v) if isinstance(v, str) else Fraction(v) for v in values)


def vec(*values) -> Vector:
    return vector(values)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise InputError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def _check_same_dim(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")


def dot(f: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    _check_same_dim(f, x)
    return sum((a * b for a, b in zip(f, x)), Fraction(0))


def add(a: Vector, b: Vector) -> Vector:
    _check_same_dim(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vector, b: Vector) -> Vector:
    _check_same_dim(a, b)
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def scale(c, a: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def is_zero(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def combination(weights: Sequence[Fraction], vectors: Sequence[Vector]) -> Vector:
    """Sum of ``weights[i] * vectors[i]``."""
    if not vectors:
        raise InputError("empty combination")
    d = len(vectors[0])
    acc = [Fraction(0)] * d
    for w, v in zip(weights, vectors):
        _check_same_dim(v, acc)
        for j in range(d):
            acc[j] += w * v[j]
    return tuple(acc)


def centroid(vectors: Sequence[Vector]) -> Vector:
    n = len(vectors)
    return combination([Fraction(1, n)] * n, vectors)


def transpose(m: Matrix) -> Matrix:
    if not m:
        return ()
    return tuple(zip(*m))


def matvec(m: Matrix, x: Vector) -> Vector:
    return tuple(dot(row, x) for row in m)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def outer(f: Vector, x: Vector) -> Matrix:
    """Matrix with entry ``(i, j) = f[i] * x[j]``; row-major flattening is the
    coordinate form of the functional ``S -> f . (S x)``."""
    return tuple(tuple(a * b for b in x) for a in f)


def flatten(m: Matrix) -> Vector:
    return tuple(v for row in m for v in row)


def unflatten(v: Sequence[Fraction], rows: int, cols: int) -> Matrix:
    if len(v) != rows * cols:
        raise InputError("length does not match shape")
    return tuple(tuple(v[i * cols:(i + 1) * cols]) for i in range(rows))


def integer_row(v: Sequence[Fraction]) -> list:
    """Positive multiple of ``v`` with integer entries (scaled by the lcm of denominators)."""
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return [int(x * den) for x in v]


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    """Row rank by fraction-free elimination on row-scaled integer copies."""
    rows = [integer_row(r) for r in m]
    if not rows or not rows[0]:
        return 0
    return kernels.int_rank(rows)


def span_dim(vs: Iterable[Sequence[Fraction]]) -> int:
    vs = list(vs)
    if not vs:
        return 0
    d = len(vs[0])
    if any(len(v) != d for v in vs):
        raise InputError("vectors of different dimension")
    return rank(vs)


def affine_dim(points: Sequence[Vector]) -> int:
    """Dimension of the affine hull; -1 for the empty set."""
    if not points:
        return -1
    base = points[0]
    return span_dim([sub(p, base) for p in points[1:]]) if len(points) > 1 else 0


def solve_square(a: Matrix, b: Vector) -> Optional[Vector]:
    """Unique solution of ``a x = b``, or ``None`` when ``a`` is singular."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise InputError("matrix is not square")
    _check_same_dim(a, b)
    if n == 0:
        return ()
    rows = [integer_row(tuple(a[i]) + (b[i],)) for i in range(n)]
    res = kernels.int_solve([r[:n] for r in rows], [r[n] for r in rows])
    if res is None:
        return None
    nums, det = res
    return tuple(Fraction(v, det) for v in nums)


def independent_subset(vs: Sequence[Vector]) -> list:
    """Indices of the lexicographically-first maximal independent subset (greedy scan)."""
    chosen: list = []
    rows: list = []
    for i, v in enumerate(vs):
        if span_dim(rows + [v]) > len(rows):
            rows.append(v)
            chosen.append(i)
    return chosen


def in_span(x: Vector, vs: Sequence[Vector]) -> bool:
    if not vs:
        return is_zero(x)
    return span_dim(list(vs) + [x]) == span_dim(vs)
