# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels`` (same signatures)."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


def shift_map(int q, int d):
    cdef int e, t
    out = []
    for e in range(q):
        t = e + d
        if t >= q:
            t = (t - 1) % (q - 1) + 1
        out.append(t)
    return tuple(out)


cdef int* _alloc(int n) except NULL:
    cdef int* buf = <int*> PyMem_Malloc(n * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    return buf


def linrec(h1, h2, smap, int c, int e, int count, int q,
           const int[::1] add, const int[::1] mul, const int[::1] neg):
    cdef int* a = _alloc(q)
    cdef int* b = _alloc(q)
    cdef int* nxt = _alloc(q)
    cdef int* sm = _alloc(q)
    cdef int* tmp
    cdef int k, t, v, step
    cdef int cq = c * q
    cdef int neq = neg[e] * q
    out = []
    try:
        for k in range(q):
            a[k] = h1[k]
            b[k] = h2[k]
            sm[k] = smap[k]
        for step in range(count):
            for k in range(q):
                nxt[k] = 0
            for k in range(q):
                v = b[k]
                if v:
                    t = sm[k]
                    nxt[t] = add[nxt[t] * q + v]
            if c:
                for k in range(q):
                    v = b[k]
                    if v:
                        nxt[k] = add[nxt[k] * q + mul[cq + v]]
            for k in range(q):
                v = a[k]
                if v:
                    nxt[k] = add[nxt[k] * q + mul[neq + v]]
            out.append(tuple([nxt[k] for k in range(q)]))
            tmp = a
            a = b
            b = nxt
            nxt = tmp
    finally:
        PyMem_Free(a)
        PyMem_Free(b)
        PyMem_Free(nxt)
        PyMem_Free(sm)
    return out


def eval_table(coeffs, int q, const int[::1] add, const int[::1] mul):
    cdef int* c = _alloc(q)
    cdef int b, k, v
    out = []
    try:
        for k in range(q):
            c[k] = coeffs[k]
        for b in range(q):
            v = 0
            for k in range(q - 1, -1, -1):
                v = add[mul[v * q + b] * q + c[k]]
            out.append(v)
    finally:
        PyMem_Free(c)
    return tuple(out)


def interpolate(values, int q, const int[::1] add, const int[::1] mul, const int[::1] neg):
    cdef int* acc = _alloc(q)
    cdef int b, j, v, pw, slot, v0
    try:
        for j in range(q):
            acc[j] = 0
        for b in range(1, q):
            v = values[b]
            if not v:
                continue
            pw = 1
            for j in range(q - 1):
                slot = q - 1 - j
                acc[slot] = add[acc[slot] * q + mul[v * q + pw]]
                pw = mul[pw * q + b]
        v0 = values[0]
        acc[q - 1] = add[acc[q - 1] * q + v0]
        out = [neg[acc[j]] for j in range(q)]
        out[0] = v0
    finally:
        PyMem_Free(acc)
    return tuple(out)


def polymul_reduced(a, b, int q, const int[::1] add, const int[::1] mul):
    cdef int* x = _alloc(q)
    cdef int* y = _alloc(q)
    cdef int* out = _alloc(q)
    cdef int i, j, e, xi, xq
    try:
        for i in range(q):
            x[i] = a[i]
            y[i] = b[i]
            out[i] = 0
        for i in range(q):
            xi = x[i]
            if not xi:
                continue
            xq = xi * q
            for j in range(q):
                if not y[j]:
                    continue
                e = i + j
                if e >= q:
                    e = (e - 1) % (q - 1) + 1
                out[e] = add[out[e] * q + mul[xq + y[j]]]
        result = tuple([out[i] for i in range(q)])
    finally:
        PyMem_Free(x)
        PyMem_Free(y)
        PyMem_Free(out)
    return result
