# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Semantics are defined by ``_kernels_py``."""

import numpy as np



def transitive_closure(m):
    out = np.ascontiguousarray(m, dtype=np.uint8).copy()
    cdef unsigned char[:, ::1] r = out
    cdef Py_ssize_t n = r.shape[0]
    cdef Py_ssize_t i, j, k
    for k in range(n):
        for i in range(n):
            if r[i, k]:
                for j in range(n):
                    if r[k, j]:
                        r[i, j] = 1
    return out.view(np.bool_)


def leq_g_matrix(leq, perms, mult, Py_ssize_t identity):
    cdef const unsigned char[:, ::1] le = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef const long long[:, ::1] pm = np.ascontiguousarray(perms, dtype=np.int64)
    cdef const long long[:, ::1] mt = np.ascontiguousarray(mult, dtype=np.int64)
    cdef Py_ssize_t n = le.shape[0]
    cdef Py_ssize_t order = pm.shape[0]
    out = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] res = out
    cdef long long[::1] hs = np.empty(order, dtype=np.int64)
    cdef long long[::1] stack = np.empty(order, dtype=np.int64)
    cdef unsigned char[::1] seen = np.empty(order, dtype=np.uint8)
    cdef Py_ssize_t x, y, g, nh, top, a, b, t
    for x in range(n):
        for y in range(n):
            nh = 0
            for g in range(order):
                if le[x, pm[g, y]]:
                    hs[nh] = g
                    nh += 1
            if nh == 0:
                continue
            seen[:] = 0
            top = 0
            for t in range(nh):
                seen[hs[t]] = 1
                stack[top] = hs[t]
                top += 1
            while top > 0 and not seen[identity]:
                top -= 1
                a = stack[top]
                for t in range(nh):
                    b = mt[a, hs[t]]
                    if not seen[b]:
                        seen[b] = 1
                        stack[top] = b
                        top += 1
            res[x, y] = seen[identity]
    return out.view(np.bool_)


def invariance_violation(m, gens):
    cdef const unsigned char[:, ::1] r = np.ascontiguousarray(m, dtype=np.uint8)
    cdef const long long[:, ::1] gs = np.ascontiguousarray(gens, dtype=np.int64).reshape(-1, r.shape[0])
    cdef Py_ssize_t n = r.shape[0]
    cdef Py_ssize_t k, x, y
    for k in range(gs.shape[0]):
        for x in range(n):
            for y in range(n):
                if r[x, y] != r[gs[k, x], gs[k, y]]:
                    return (k, x, y)
    return None
