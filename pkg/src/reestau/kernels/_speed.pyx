# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel: the Cython twin of ``_pure``.

Same data contract — term lists of (key tuple, coeff int), strictly
descending — and bit-identical results; only the loop machinery is compiled.
Coefficients live in [0, p) with p < 2^16, so C int64 arithmetic never
overflows.
"""

from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF
from cpython.object cimport PyObject_RichCompareBool, Py_GT, Py_LT

IMPL = "compiled"

_MISSING = object()  # divisor-cache sentinel (values are None or a hit pair)


cdef inline tuple _tuple_add(tuple a, tuple b):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object x
    for i in range(n):
        x = (<object> PyTuple_GET_ITEM(a, i)) + (<object> PyTuple_GET_ITEM(b, i))
        Py_INCREF(x)
        PyTuple_SET_ITEM(out, i, x)
    return out


cdef inline tuple _tuple_sub(tuple a, tuple b):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object x
    for i in range(n):
        x = (<object> PyTuple_GET_ITEM(a, i)) - (<object> PyTuple_GET_ITEM(b, i))
        Py_INCREF(x)
        PyTuple_SET_ITEM(out, i, x)
    return out


cdef inline bint _divides(tuple bt, tuple tail) except -1:
    cdef Py_ssize_t n = PyTuple_GET_SIZE(bt)
    cdef Py_ssize_t i
    cdef long long a, b
    for i in range(n):
        a = <long long> (<object> PyTuple_GET_ITEM(bt, i))
        b = <long long> (<object> PyTuple_GET_ITEM(tail, i))
        if a > b:
            return 0
    return 1


def add_terms(A, B, long long p):
    """Sum of two descending term lists."""
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t la = len(A), lb = len(B)
    cdef tuple ta, tb, ka, kb
    cdef long long c
    while i < la and j < lb:
        ta = <tuple> A[i]
        tb = <tuple> B[j]
        ka = <tuple> PyTuple_GET_ITEM(ta, 0)
        kb = <tuple> PyTuple_GET_ITEM(tb, 0)
        if PyObject_RichCompareBool(ka, kb, Py_GT):
            out.append(ta)
            i += 1
        elif PyObject_RichCompareBool(ka, kb, Py_LT):
            out.append(tb)
            j += 1
        else:
            c = (<long long> (<object> PyTuple_GET_ITEM(ta, 1))
                 + <long long> (<object> PyTuple_GET_ITEM(tb, 1))) % p
            if c:
                out.append((ka, c))
            i += 1
            j += 1
    while i < la:
        out.append(A[i])
        i += 1
    while j < lb:
        out.append(B[j])
        j += 1
    return tuple(out)


def scale_terms(A, long long c, long long p):
    """Multiply a term list by the scalar c."""
    c %= p
    if c < 0:
        c += p
    if c == 0:
        return ()
    if c == 1:
        return tuple(A)
    cdef list out = []
    cdef tuple t
    cdef long long cc
    for t in A:
        cc = (c * <long long> (<object> PyTuple_GET_ITEM(t, 1))) % p
        if cc:
            out.append(((<object> PyTuple_GET_ITEM(t, 0)), cc))
    return tuple(out)


def shift_terms(A, tuple kshift, long long c, long long p):
    """Multiply a term list by the single term c * x^kshift (key arithmetic)."""
    c %= p
    if c < 0:
        c += p
    if c == 0:
        return ()
    cdef list out = []
    cdef tuple t
    cdef long long cc
    for t in A:
        cc = (c * <long long> (<object> PyTuple_GET_ITEM(t, 1))) % p
        if cc:
            out.append((_tuple_add(<tuple> PyTuple_GET_ITEM(t, 0), kshift), cc))
    return tuple(out)


def mul_terms(A, B, long long p):
    """Full product of two descending term lists."""
    if not A or not B:
        return ()
    if len(A) < len(B):
        A, B = B, A
    if len(B) == 1:
        t0 = B[0]
        return shift_terms(A, <tuple> t0[0], <long long> t0[1], p)
    cdef dict acc = {}
    cdef tuple ta, tb, k
    cdef long long ca
    cdef object v
    for ta in A:
        ca = <long long> (<object> PyTuple_GET_ITEM(ta, 1))
        for tb in B:
            k = _tuple_add(<tuple> PyTuple_GET_ITEM(ta, 0),
                           <tuple> PyTuple_GET_ITEM(tb, 0))
            v = acc.get(k)
            if v is None:
                acc[k] = (ca * <long long> (<object> PyTuple_GET_ITEM(tb, 1))) % p
            else:
                acc[k] = (<long long> v
                          + ca * <long long> (<object> PyTuple_GET_ITEM(tb, 1))) % p
    cdef list out = []
    cdef long long c
    for k in sorted(acc, reverse=True):
        c = <long long> acc[k]
        if c:
            out.append((k, c))
    return tuple(out)


cdef list _merge_from(list A, Py_ssize_t i0, list B, long long p):
    """add_terms(A[i0:], B) for lists of terms."""
    cdef list out = []
    cdef Py_ssize_t i = i0, j = 0
    cdef Py_ssize_t la = len(A), lb = len(B)
    cdef tuple ta, tb, ka, kb
    cdef long long c
    while i < la and j < lb:
        ta = <tuple> A[i]
        tb = <tuple> B[j]
        ka = <tuple> PyTuple_GET_ITEM(ta, 0)
        kb = <tuple> PyTuple_GET_ITEM(tb, 0)
        if PyObject_RichCompareBool(ka, kb, Py_GT):
            out.append(ta)
            i += 1
        elif PyObject_RichCompareBool(ka, kb, Py_LT):
            out.append(tb)
            j += 1
        else:
            c = (<long long> (<object> PyTuple_GET_ITEM(ta, 1))
                 + <long long> (<object> PyTuple_GET_ITEM(tb, 1))) % p
            if c:
                out.append((ka, c))
            i += 1
            j += 1
    while i < la:
        out.append(A[i])
        i += 1
    while j < lb:
        out.append(B[j])
        j += 1
    return out


def nf_terms(f, basis, long long p, Py_ssize_t nvars, cache=None, skip_key=None):
    """Full normal form against a prepared monic basis (see the pure twin)."""
    cdef list rem = []
    cdef list work = list(f)
    cdef Py_ssize_t start = 0
    cdef Py_ssize_t nw = len(work)
    cdef bint use_cache = cache is not None and skip_key is None
    cdef dict dcache = <dict> cache if use_cache else None
    cdef tuple term, k, tail, hit_key, kt
    cdef tuple entry
    cdef object hit, bk
    cdef long long c, mc, cc, ct
    cdef Py_ssize_t klen
    cdef list sub
    while start < nw:
        term = <tuple> work[start]
        k = <tuple> PyTuple_GET_ITEM(term, 0)
        c = <long long> (<object> PyTuple_GET_ITEM(term, 1))
        hit = _MISSING
        if use_cache:
            hit = dcache.get(k, _MISSING)
        if hit is _MISSING:
            klen = PyTuple_GET_SIZE(k)
            tail = k[klen - nvars:]
            hit = None
            for entry in basis:
                bk = <object> PyTuple_GET_ITEM(entry, 1)
                if skip_key is not None and bk == skip_key:
                    continue
                if _divides(<tuple> PyTuple_GET_ITEM(entry, 0), tail):
                    hit = (bk, <object> PyTuple_GET_ITEM(entry, 2))
                    break
            if use_cache:
                dcache[k] = hit
        if hit is None:
            rem.append(term)
            start += 1
            continue
        hit_key = <tuple> (<tuple> hit)[0]
        kdiff = _tuple_sub(k, hit_key)
        mc = p - c
        sub = []
        for t in (<tuple> (<tuple> hit)[1])[1:]:
            ct = <long long> (<object> PyTuple_GET_ITEM(<tuple> t, 1))
            cc = (mc * ct) % p
            if cc:
                sub.append((_tuple_add(<tuple> PyTuple_GET_ITEM(<tuple> t, 0), kdiff), cc))
        work = _merge_from(work, start + 1, sub, p)
        start = 0
        nw = len(work)
    return tuple(rem)
