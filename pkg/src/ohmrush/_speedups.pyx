# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse polynomial kernels.

Drop-in replacement for :mod:`ohmrush._kernels_py`; see that module for the
data layout and the meaning of ``mode``.  Exponent tuples are built directly
with the tuple C API, and the MODULAR mode runs on C ``long long`` when the
modulus fits in 31 bits.
"""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_SIZE
from heapq import heapify, heappop, heappush

cdef enum:
    _NATIVE = 0
    _MODULAR = 1
    _GENERIC = 2
    _LEX = 0
    _GRLEX = 1

NATIVE, MODULAR, GENERIC = 0, 1, 2
LEX, GRLEX, GREVLEX = 0, 1, 2


cdef inline tuple _add(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = <long>a[i] + <long>b[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline tuple _sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = <long>a[i] - <long>b[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


cpdef tuple mono_mul(tuple a, tuple b):
    return _add(a, b)


cpdef tuple mono_div(tuple a, tuple b):
    return _sub(a, b)


cpdef bint mono_divides(tuple a, tuple b):
    return _divides(a, b)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef long x, y
    cdef object v
    for i in range(n):
        x = a[i]
        y = b[i]
        v = x if x > y else y
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cpdef bint mono_coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    for i in range(n):
        if <long>a[i] != 0 and <long>b[i] != 0:
            return False
    return True


cdef tuple _plain_key(tuple m, int order, Py_ssize_t lo, Py_ssize_t hi, int sign):
    cdef Py_ssize_t i, n = hi - lo, k = 0
    cdef long deg = 0
    cdef tuple out
    cdef object v
    if order == _LEX:
        out = PyTuple_New(n)
        for i in range(lo, hi):
            v = sign * <long>m[i]
            Py_INCREF(v)
            PyTuple_SET_ITEM(out, k, v)
            k += 1
        return out
    for i in range(lo, hi):
        deg += <long>m[i]
    out = PyTuple_New(n + 1)
    v = sign * deg
    Py_INCREF(v)
    PyTuple_SET_ITEM(out, 0, v)
    k = 1
    if order == _GRLEX:
        for i in range(lo, hi):
            v = sign * <long>m[i]
            Py_INCREF(v)
            PyTuple_SET_ITEM(out, k, v)
            k += 1
    else:
        for i in range(hi - 1, lo - 1, -1):
            v = -sign * <long>m[i]
            Py_INCREF(v)
            PyTuple_SET_ITEM(out, k, v)
            k += 1
    return out


cdef tuple _key(tuple m, int order, Py_ssize_t block, int sign):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(m)
    if block:
        return _plain_key(m, order, 0, block, sign) + _plain_key(m, order, block, n, sign)
    return _plain_key(m, order, 0, n, sign)


cpdef tuple order_key(tuple m, int order, Py_ssize_t block=0):
    return _key(m, order, block, 1)


def poly_mul(dict f, dict g, int mode, object m, object dom):
    cdef dict res = {}
    cdef dict out
    cdef tuple ma, mb, mono
    cdef object ca, cb, prev, c
    cdef long long mm, acc
    cdef bint small = mode == _MODULAR and m < 2147483648
    if mode == _GENERIC:
        add, mul, is_zero = dom.add, dom.mul, dom.is_zero
        for ma, ca in f.items():
            for mb, cb in g.items():
                mono = _add(ma, mb)
                prev = res.get(mono)
                c = mul(ca, cb)
                res[mono] = c if prev is None else add(prev, c)
        return {k: v for k, v in res.items() if not is_zero(v)}
    if small:
        mm = m
        for ma, ca in f.items():
            for mb, cb in g.items():
                mono = _add(ma, mb)
                prev = res.get(mono)
                acc = (<long long>ca * <long long>cb) % mm
                if prev is not None:
                    acc = (acc + <long long>prev) % mm
                res[mono] = acc
        return {k: v for k, v in res.items() if v}
    for ma, ca in f.items():
        for mb, cb in g.items():
            mono = _add(ma, mb)
            prev = res.get(mono)
            res[mono] = ca * cb if prev is None else prev + ca * cb
    if mode == _MODULAR:
        out = {}
        for k, v in res.items():
            v = v % m
            if v:
                out[k] = v
        return out
    return {k: v for k, v in res.items() if v}


def poly_sub_mul(dict f, dict g, tuple mono, object c, int mode, object m, object dom):
    cdef dict res = dict(f)
    cdef tuple mg, key
    cdef object cg, v, old
    if mode == _GENERIC:
        sub, mul, is_zero = dom.sub, dom.mul, dom.is_zero
        zero = dom.zero()
        for mg, cg in g.items():
            key = _add(mg, mono)
            old = res.get(key)
            v = sub(zero if old is None else old, mul(c, cg))
            if is_zero(v):
                if old is not None:
                    del res[key]
            else:
                res[key] = v
        return res
    for mg, cg in g.items():
        key = _add(mg, mono)
        old = res.get(key)
        v = (0 if old is None else old) - c * cg
        if mode == _MODULAR:
            v = v % m
        if v:
            res[key] = v
        elif old is not None:
            del res[key]
    return res


def normal_form(dict f, list basis, int order, Py_ssize_t block, int mode, object m, object dom):
    cdef dict p = dict(f)
    cdef dict rem = {}
    cdef list heap = [(_key(mono, order, block, -1), mono) for mono in p]
    cdef tuple mono, lm, q, key, tm, entry
    cdef object c, old, v, tc
    cdef list tail
    cdef Py_ssize_t i, nb = len(basis)
    cdef bint found
    cdef bint generic = mode == _GENERIC
    cdef bint small = mode == _MODULAR and m < 2147483648
    cdef long long mm = m if small else 0
    cdef long long acc
    heapify(heap)
    if generic:
        sub, mul, is_zero = dom.sub, dom.mul, dom.is_zero
        zero = dom.zero()
    while heap:
        mono = heappop(heap)[1]
        c = p.pop(mono, None)
        if c is None:
            continue
        found = False
        for i in range(nb):
            entry = basis[i]
            lm = entry[0]
            if _divides(lm, mono):
                tail = entry[1]
                found = True
                break
        if not found:
            rem[mono] = c
            continue
        q = _sub(mono, lm)
        for tm, tc in tail:
            key = _add(tm, q)
            old = p.get(key)
            if generic:
                v = sub(zero if old is None else old, mul(c, tc))
                if is_zero(v):
                    if old is not None:
                        del p[key]
                    continue
            elif small:
                acc = (<long long>c * <long long>tc) % mm
                acc = ((0 if old is None else <long long>old) - acc) % mm
                if acc < 0:
                    acc += mm
                if acc == 0:
                    if old is not None:
                        del p[key]
                    continue
                v = acc
            else:
                v = (0 if old is None else old) - c * tc
                if mode == _MODULAR:
                    v = v % m
                if not v:
                    if old is not None:
                        del p[key]
                    continue
            p[key] = v
            if old is None:
                heappush(heap, (_key(key, order, block, -1), key))
    return rem
