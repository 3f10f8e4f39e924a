"""Pure-Python integer kernels.

Same signatures as the compiled ``_kernels`` module; used when the extension
is not built or when ``KSMOOTH_PURE_PYTHON`` is set.
"""

from __future__ import annotations


def int_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        p = r
        while p < nrows and m[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        pr = m[r]
        piv = pr[c]
        for i in range(r + 1, nrows):
            row = m[i]
            lead = row[c]
            if lead == 0:
                if piv != prev:
                    for j in range(c + 1, ncols):
                        row[j] = piv * row[j] // prev
                continue
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - lead * pr[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def int_solve(a, b):
    """Solve ``a x = b`` for square integer ``a``.

    Returns ``(numerators, det)`` with ``x[i] = numerators[i] / det`` and
    ``det > 0``, or ``None`` when ``a`` is singular.  Fraction-free
    Gauss-Jordan: every division is exact.
    """
    n = len(a)
    m = [list(a[i]) + [b[i]] for i in range(n)]
    prev = 1
    for k in range(n):
        p = k
        while p < n and m[p][k] == 0:
            p += 1
        if p == n:
            return None
        if p != k:
            m[p], m[k] = m[k], m[p]
        pk = m[k]
        piv = pk[k]
        for i in range(n):
            if i == k:
                continue
            row = m[i]
            lead = row[k]
            for j in range(n + 1):
                if j != k:
                    row[j] = (piv * row[j] - lead * pk[j]) // prev
            row[k] = 0
        prev = piv
    det = m[n - 1][n - 1]
    nums = [m[i][n] for i in range(n)]
    if det < 0:
        det = -det
        nums = [-v for v in nums]
    return nums, det


def _gcd_normalize(v):
    g = 0
    for x in v:
        if x:
            g = _gcd(g, x)
    if g > 1:
        return [x // g for x in v]
    return v


def _gcd(a, b):
    a = -a if a < 0 else a
    b = -b if b < 0 else b
    while b:
        a, b = b, a % b
    return a


def dd_insert(rays, zsets, row, bit, dim):
    """One double-description step: intersect the cone with ``row . y >= 0``.

    ``rays`` are integer extreme rays of the current cone, ``zsets`` the
    bitmask of inserted constraints each ray is tight on.  Returns the
    updated ``(rays, zsets)``.  Adjacency is decided combinatorially.
    """
    n = len(rays)
    vals = [0] * n
    plus = []
    minus = []
    zero = []
    for k in range(n):
        r = rays[k]
        s = 0
        for j in range(dim):
            s += row[j] * r[j]
        vals[k] = s
        if s > 0:
            plus.append(k)
        elif s < 0:
            minus.append(k)
        else:
            zero.append(k)
    new_rays = []
    new_z = []
    for k in plus:
        new_rays.append(rays[k])
        new_z.append(zsets[k])
    for k in zero:
        new_rays.append(rays[k])
        new_z.append(zsets[k] | bit)
    need = dim - 2
    for p in plus:
        zp = zsets[p]
        sp = vals[p]
        rp = rays[p]
        for q in minus:
            common = zp & zsets[q]
            if common.bit_count() < need:
                continue
            adjacent = True
            for k in range(n):
                if k != p and k != q and (zsets[k] & common) == common:
                    adjacent = False
                    break
            if not adjacent:
                continue
            sq = -vals[q]
            rq = rays[q]
            v = [sq * rp[j] + sp * rq[j] for j in range(dim)]
            new_rays.append(_gcd_normalize(v))
            new_z.append(common | bit)
    return new_rays, new_z


def tight_masks(points, functionals):
    """For each point, the bitmask of integer functionals ``(c, f)`` with ``f . p == c``.

    Points are given as integer numerator rows with a common denominator in
    position 0: ``p = row[1:] / row[0]``.
    """
    out = []
    for p in points:
        den = p[0]
        mask = 0
        for idx, f in enumerate(functionals):
            s = 0
            for j in range(1, len(p)):
                s += f[j] * p[j]
            if s == f[0] * den:
                mask |= 1 << idx
        out.append(mask)
    return out
