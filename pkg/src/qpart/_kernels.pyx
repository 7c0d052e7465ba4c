# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled coefficient kernels.

Same signatures and semantics as `qpart._kernels_py`.  The exact
kernels keep Python-int coefficients (arbitrary precision) but run the
index loops at C speed; the modular kernels switch to native 64-bit
arithmetic whenever (m-1)^2 + m fits in an int64.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"

# Largest modulus for which (m-1)**2 + (m-1) stays below 2**63.
_MOD_NATIVE_LIMIT = 3037000499


def mul(a, b, Py_ssize_t n):
    """Cauchy product of coefficient sequences, truncated to length n."""
    cdef Py_ssize_t i, j, top
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef list out = [0] * n
    cdef list bl = b if type(b) is list else list(b)
    if la > n:
        la = n
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        top = n - i
        if top > lb:
            top = lb
        for j in range(top):
            bj = bl[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def inv(a, Py_ssize_t n):
    """Multiplicative inverse of a series with constant term +1 or -1."""
    cdef Py_ssize_t t, j, pos, nsup
    cdef Py_ssize_t la = len(a)
    cdef list b = [0] * n
    cdef list al = a if type(a) is list else list(a)
    cdef list support = []
    a0 = al[0]
    b[0] = a0
    if la > n:
        la = n
    for j in range(1, la):
        if al[j]:
            support.append(j)
    nsup = len(support)
    cdef bint negate = a0 == 1
    for t in range(1, n):
        s = 0
        for pos in range(nsup):
            j = support[pos]
            if j > t:
                break
            s = s + al[j] * b[t - j]
        b[t] = -s if negate else s
    return b


def mul_mod(a, b, Py_ssize_t n, m):
    """Cauchy product with every coefficient reduced modulo m."""
    if m > _MOD_NATIVE_LIMIT:
        return _mul_mod_obj(a, b, n, m)

    cdef long long cm = m
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j, top
    cdef long long ai
    if la > n:
        la = n
    if lb > n:
        lb = n
    cdef long long *ca = <long long *> malloc(la * sizeof(long long))
    cdef long long *cb = <long long *> malloc(lb * sizeof(long long))
    cdef long long *co = <long long *> malloc(n * sizeof(long long))
    if ca == NULL or cb == NULL or co == NULL:
        free(ca)
        free(cb)
        free(co)
        raise MemoryError()
    try:
        for i in range(la):
            ca[i] = a[i] % m
        for j in range(lb):
            cb[j] = b[j] % m
        for i in range(n):
            co[i] = 0
        for i in range(la):
            ai = ca[i]
            if ai == 0:
                continue
            top = n - i
            if top > lb:
                top = lb
            for j in range(top):
                if cb[j]:
                    co[i + j] = (co[i + j] + ai * cb[j]) % cm
        return [co[i] for i in range(n)]
    finally:
        free(ca)
        free(cb)
        free(co)


def inv_mod(a, Py_ssize_t n, m):
    """Inverse of a series whose constant term is a unit modulo m."""
    if m > _MOD_NATIVE_LIMIT:
        return _inv_mod_obj(a, n, m)

    cdef long long cm = m
    cdef long long a0 = pow(a[0] % m, -1, m)
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t t, j, pos, nsup
    cdef long long s
    if la > n:
        la = n
    cdef long long *ca = <long long *> malloc(la * sizeof(long long))
    cdef long long *cb = <long long *> malloc(n * sizeof(long long))
    cdef Py_ssize_t *sup = <Py_ssize_t *> malloc(la * sizeof(Py_ssize_t))
    if ca == NULL or cb == NULL or sup == NULL:
        free(ca)
        free(cb)
        free(sup)
        raise MemoryError()
    try:
        for t in range(la):
            ca[t] = a[t] % m
        nsup = 0
        for j in range(1, la):
            if ca[j]:
                sup[nsup] = j
                nsup += 1
        for t in range(n):
            cb[t] = 0
        cb[0] = a0
        for t in range(1, n):
            s = 0
            for pos in range(nsup):
                j = sup[pos]
                if j > t:
                    break
                s = (s + ca[j] * cb[t - j]) % cm
            cb[t] = (cm - a0 * s % cm) % cm
        return [cb[t] for t in range(n)]
    finally:
        free(ca)
        free(cb)
        free(sup)


def _mul_mod_obj(a, b, Py_ssize_t n, m):
    cdef Py_ssize_t i, j, top
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef list out = [0] * n
    cdef list br = [x % m for x in b[:n]]
    lb = len(br)
    if la > n:
        la = n
    for i in range(la):
        ai = a[i] % m
        if not ai:
            continue
        top = n - i
        if top > lb:
            top = lb
        for j in range(top):
            bj = br[j]
            if bj:
                out[i + j] = (out[i + j] + ai * bj) % m
    return out


def _inv_mod_obj(a, Py_ssize_t n, m):
    cdef Py_ssize_t t, j, pos, nsup
    cdef list ar = [x % m for x in a[:n]]
    a0 = pow(ar[0], -1, m)
    cdef list b = [0] * n
    b[0] = a0
    cdef list support = [j for j in range(1, len(ar)) if ar[j]]
    nsup = len(support)
    for t in range(1, n):
        s = 0
        for pos in range(nsup):
            j = support[pos]
            if j > t:
                break
            s = s + ar[j] * b[t - j]
        b[t] = (-a0 * s) % m
    return b
