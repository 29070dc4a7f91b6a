# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython monomial kernel; mirrors _mono_py exactly.

Monomials are flat tuples (v1, e1, v2, e2, ...) with strictly increasing
variable ids and positive exponents.  Only integer loop logic is typed;
the tuples themselves stay ordinary Python objects so both backends are
interchangeable at the call site.
"""

BACKEND = "c"


cpdef tuple mul(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef long va, vb
    if la == 0:
        return b
    if lb == 0:
        return a
    out = []
    while i < la and j < lb:
        va = a[i]
        vb = b[j]
        if va == vb:
            out.append(va)
            out.append(a[i + 1] + b[j + 1])
            i += 2
            j += 2
        elif va < vb:
            out.append(va)
            out.append(a[i + 1])
            i += 2
        else:
            out.append(vb)
            out.append(b[j + 1])
            j += 2
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef bint divides(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef long va
    while i < la:
        va = a[i]
        while j < lb and <long> b[j] < va:
            j += 2
        if j >= lb or <long> b[j] != va or <long> b[j + 1] < <long> a[i + 1]:
            return False
        i += 2
        j += 2
    return True


cpdef tuple div(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef long va, e
    if lb == 0:
        return a
    out = []
    while i < la:
        va = a[i]
        if j < lb and <long> b[j] == va:
            e = <long> a[i + 1] - <long> b[j + 1]
            if e:
                out.append(va)
                out.append(e)
            j += 2
        else:
            out.append(va)
            out.append(a[i + 1])
        i += 2
    return tuple(out)


cpdef tuple lcm(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef long va, vb, ea, eb
    if la == 0:
        return b
    if lb == 0:
        return a
    out = []
    while i < la and j < lb:
        va = a[i]
        vb = b[j]
        if va == vb:
            ea = a[i + 1]
            eb = b[j + 1]
            out.append(va)
            out.append(ea if ea >= eb else eb)
            i += 2
            j += 2
        elif va < vb:
            out.append(va)
            out.append(a[i + 1])
            i += 2
        else:
            out.append(vb)
            out.append(b[j + 1])
            j += 2
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef bint coprime(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef long va, vb
    while i < la and j < lb:
        va = a[i]
        vb = b[j]
        if va == vb:
            return False
        if va < vb:
            i += 2
        else:
            j += 2
    return True


cpdef long deg(tuple a):
    cdef Py_ssize_t i
    cdef long s = 0
    for i in range(1, len(a), 2):
        s += <long> a[i]
    return s
