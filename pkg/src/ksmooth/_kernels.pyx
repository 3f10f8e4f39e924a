# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels (arbitrary-precision entries stay Python ints)."""


def int_rank(rows):
    cdef list m = [list(x) for x in rows]
    cdef Py_ssize_t nrows = len(m)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(m[0])
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef list pr, row
    cdef object prev = 1, piv, lead
    for c in range(ncols):
        p = r
        while p < nrows and (<list>m[p])[c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        pr = <list>m[r]
        piv = pr[c]
        for i in range(r + 1, nrows):
            row = <list>m[i]
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
    cdef Py_ssize_t n = len(a)
    cdef list m = [list(a[i]) + [b[i]] for i in range(n)]
    cdef Py_ssize_t k, p, i, j
    cdef list pk, row
    cdef object prev = 1, piv, lead, det
    for k in range(n):
        p = k
        while p < n and (<list>m[p])[k] == 0:
            p += 1
        if p == n:
            return None
        if p != k:
            m[p], m[k] = m[k], m[p]
        pk = <list>m[k]
        piv = pk[k]
        for i in range(n):
            if i == k:
                continue
            row = <list>m[i]
            lead = row[k]
            for j in range(n + 1):
                if j != k:
                    row[j] = (piv * row[j] - lead * pk[j]) // prev
            row[k] = 0
        prev = piv
    det = (<list>m[n - 1])[n - 1]
    nums = [(<list>m[i])[n] for i in range(n)]
    if det < 0:
        det = -det
        nums = [-v for v in nums]
    return nums, det


cdef object _gcd(object a, object b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef list _gcd_normalize(list v):
    cdef object g = 0
    for x in v:
        if x:
            g = _gcd(g, x)
    if g > 1:
        return [x // g for x in v]
    return v


def dd_insert(list rays, list zsets, row, object bit, Py_ssize_t dim):
    cdef Py_ssize_t n = len(rays)
    cdef list vals = [0] * n
    cdef list plus = [], minus = [], zero = []
    cdef Py_ssize_t k, j, p, q, need = dim - 2
    cdef list r, rp, rq, v
    cdef list rowl = list(row)
    cdef object s, zp, sp, sq, common
    cdef bint adjacent
    for k in range(n):
        r = <list>rays[k]
        s = 0
        for j in range(dim):
            s += rowl[j] * r[j]
        vals[k] = s
        if s > 0:
            plus.append(k)
        elif s < 0:
            minus.append(k)
        else:
            zero.append(k)
    cdef list new_rays = [], new_z = []
    for k in plus:
        new_rays.append(rays[k])
        new_z.append(zsets[k])
    for k in zero:
        new_rays.append(rays[k])
        new_z.append(zsets[k] | bit)
    for p in plus:
        zp = zsets[p]
        sp = vals[p]
        rp = <list>rays[p]
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
            rq = <list>rays[q]
            v = [sq * rp[j] + sp * rq[j] for j in range(dim)]
            new_rays.append(_gcd_normalize(v))
            new_z.append(common | bit)
    return new_rays, new_z


def tight_masks(points, functionals):
    cdef list out = []
    cdef list fl = [list(f) for f in functionals]
    cdef list pl, f
    cdef Py_ssize_t idx, j, d
    cdef object den, mask, s, one = 1
    for p in points:
        pl = list(p)
        d = len(pl)
        den = pl[0]
        mask = 0
        for idx in range(len(fl)):
            f = <list>fl[idx]
            s = 0
            for j in range(1, d):
                s += f[j] * pl[j]
            if s == f[0] * den:
                mask |= one << idx
        out.append(mask)
    return out
