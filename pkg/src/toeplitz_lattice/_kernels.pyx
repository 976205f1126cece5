# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``_pykernels``.

Strings are read and written in place through the PEP 393 accessors, so the
output keeps the narrowest storage kind the letters allow.
"""

from libc.string cimport memcmp, memcpy

cdef extern from "Python.h":
    object PyUnicode_New(Py_ssize_t size, Py_UCS4 maxchar)
    int PyUnicode_KIND(object o)
    void *PyUnicode_DATA(object o)
    Py_UCS4 PyUnicode_READ(int kind, void *data, Py_ssize_t index) nogil
    void PyUnicode_WRITE(int kind, void *data, Py_ssize_t index, Py_UCS4 value) nogil
    object PyUnicode_FromKindAndData(int kind, const void *buffer, Py_ssize_t size)

ctypedef unsigned long long u64


cdef Py_UCS4 _max_char(str s):
    cdef Py_ssize_t i, n = len(s)
    cdef int kind = PyUnicode_KIND(s)
    cdef void *d = PyUnicode_DATA(s)
    cdef Py_UCS4 c, top = 0
    for i in range(n):
        c = PyUnicode_READ(kind, d, i)
        if c > top:
            top = c
    return top


cdef int _width(Py_UCS4 c):
    return 0 if c < 128 else 1 if c < 256 else 2 if c < 65536 else 3


cdef object _canonical(object out, str body):
    # A letter of body that never reaches out can leave out wider than its
    # contents; CPython then compares it unequal to the same text.
    cdef Py_ssize_t i
    cdef int kind = PyUnicode_KIND(body)
    cdef void *d = PyUnicode_DATA(body)
    cdef int top = _width(_max_char(body))
    for i in range(len(body)):
        if _width(PyUnicode_READ(kind, d, i)) != top:
            return PyUnicode_FromKindAndData(PyUnicode_KIND(out), PyUnicode_DATA(out), len(out))
    return out


def toeplitz_prefix(str body, Py_ssize_t length):
    cdef Py_ssize_t r = len(body) + 1
    cdef Py_ssize_t n
    cdef int wk = PyUnicode_KIND(body)
    cdef void *w = PyUnicode_DATA(body)
    if length <= 0:
        return ""
    out = PyUnicode_New(length, _max_char(body))
    cdef int ok = PyUnicode_KIND(out)
    cdef void *o = PyUnicode_DATA(out)
    # Slot n-1 holds X(n); X(n) = X(n/r) is already written when r | n.
    for n in range(1, length + 1):
        if n % r:
            PyUnicode_WRITE(ok, o, n - 1, PyUnicode_READ(wk, w, n % r - 1))
        else:
            PyUnicode_WRITE(ok, o, n - 1, PyUnicode_READ(ok, o, n // r - 1))
    return _canonical(out, body)


def lattice_extract(str body, u64 q, Py_ssize_t count):
    cdef u64 r = len(body) + 1
    cdef u64 n = 0, k
    cdef Py_ssize_t j
    cdef int wk = PyUnicode_KIND(body)
    cdef void *w = PyUnicode_DATA(body)
    if count <= 0:
        return ""
    out = PyUnicode_New(count, _max_char(body))
    cdef int ok = PyUnicode_KIND(out)
    cdef void *o = PyUnicode_DATA(out)
    for j in range(count):
        n += q
        k = n
        while k % r == 0:
            k //= r
        PyUnicode_WRITE(ok, o, j, PyUnicode_READ(wk, w, k % r - 1))
    return _canonical(out, body)


def almost_periodic_witness(str word, Py_ssize_t q):
    cdef Py_ssize_t j, n = len(word)
    cdef int kind = PyUnicode_KIND(word)
    cdef void *w = PyUnicode_DATA(word)
    for j in range(1, n - q + 1):
        if j % q and PyUnicode_READ(kind, w, j - 1) != PyUnicode_READ(kind, w, j + q - 1):
            return j
    return 0


def prefix_conditions(str word, Py_ssize_t m):
    cdef Py_ssize_t j, n = len(word)
    cdef int kind = PyUnicode_KIND(word)
    cdef void *w = PyUnicode_DATA(word)
    for j in range(1, n // m + 1):
        if PyUnicode_READ(kind, w, m * j - 1) != PyUnicode_READ(kind, w, j - 1):
            return 1, j
    j = almost_periodic_witness(word, m)
    if j:
        return 2, j
    return 0, 0


def compose_bodies(str ubody, str vbody):
    cdef Py_ssize_t a = len(ubody), b = len(vbody)
    cdef Py_ssize_t size = a * (b + 1) + b
    cdef Py_ssize_t i, j, pos = 0
    cdef int uk = PyUnicode_KIND(ubody), vk = PyUnicode_KIND(vbody)
    cdef void *u = PyUnicode_DATA(ubody)
    cdef void *v = PyUnicode_DATA(vbody)
    if size == 0:
        return ""
    out = PyUnicode_New(size, max(_max_char(ubody), _max_char(vbody)))
    cdef int ok = PyUnicode_KIND(out)
    cdef char *o = <char *> PyUnicode_DATA(out)
    for j in range(b + 1):
        if uk == ok:
            memcpy(o + pos * ok, u, a * ok)
        else:
            for i in range(a):
                PyUnicode_WRITE(ok, o, pos + i, PyUnicode_READ(uk, u, i))
        pos += a
        if j < b:
            PyUnicode_WRITE(ok, o, pos, PyUnicode_READ(vk, v, j))
            pos += 1
    return out


def first_mismatch(str a, str b):
    cdef Py_ssize_t i, n = min(len(a), len(b))
    cdef int ka = PyUnicode_KIND(a), kb = PyUnicode_KIND(b)
    cdef void *da = PyUnicode_DATA(a)
    cdef void *db = PyUnicode_DATA(b)
    if ka == kb and memcmp(da, db, n * ka) == 0:
        return 0
    for i in range(n):
        if PyUnicode_READ(ka, da, i) != PyUnicode_READ(kb, db, i):
            return i + 1
    return 0
