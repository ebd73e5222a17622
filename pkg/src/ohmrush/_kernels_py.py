"""Pure-Python sparse polynomial kernels.

A polynomial is a dict mapping exponent tuples to nonzero coefficients.
Coefficient arithmetic is chosen by ``mode``:

NATIVE
    Python numbers (``int``, ``Fraction``) with the usual operators.
MODULAR
    Python ints reduced modulo ``m``.
GENERIC
    Opaque payloads; operations are looked up on the domain object ``dom``
    (``add``, ``sub``, ``mul``, ``is_zero``).

The compiled module ``_speedups`` exposes exactly the same functions.
"""

from heapq import heapify, heappop, heappush

NATIVE, MODULAR, GENERIC = 0, 1, 2
LEX, GRLEX, GREVLEX = 0, 1, 2


def mono_mul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def mono_divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _plain_key(m, order):
    if order == LEX:
        return tuple(m)
    if order == GRLEX:
        return (sum(m),) + tuple(m)
    return (sum(m),) + tuple([-e for e in reversed(m)])


def order_key(m, order, block=0):
    """Sort key realizing a monomial order; larger key means larger monomial.

    With ``block > 0`` the first ``block`` variables form an elimination
    block compared before the rest.
    """
    if block:
        return _plain_key(m[:block], order) + _plain_key(m[block:], order)
    return _plain_key(m, order)


def _neg_key(m, order, block):
    return tuple([-k for k in order_key(m, order, block)])


def poly_mul(f, g, mode, m, dom):
    res = {}
    get = res.get
    if mode == GENERIC:
        add, mul = dom.add, dom.mul
        for ma, ca in f.items():
            for mb, cb in g.items():
                mono = tuple([x + y for x, y in zip(ma, mb)])
                prev = get(mono)
                c = mul(ca, cb)
                res[mono] = c if prev is None else add(prev, c)
        is_zero = dom.is_zero
        return {k: v for k, v in res.items() if not is_zero(v)}
    for ma, ca in f.items():
        for mb, cb in g.items():
            mono = tuple([x + y for x, y in zip(ma, mb)])
            res[mono] = get(mono, 0) + ca * cb
    if mode == MODULAR:
        out = {}
        for k, v in res.items():
            v %= m
            if v:
                out[k] = v
        return out
    return {k: v for k, v in res.items() if v}


def poly_sub_mul(f, g, mono, c, mode, m, dom):
    """Return ``f - c * x^mono * g`` as a new dict."""
    res = dict(f)
    if mode == GENERIC:
        sub, mul, is_zero = dom.sub, dom.mul, dom.is_zero
        zero = dom.zero()
        for mg, cg in g.items():
            key = tuple([x + y for x, y in zip(mg, mono)])
            v = sub(res.get(key, zero), mul(c, cg))
            if is_zero(v):
                res.pop(key, None)
            else:
                res[key] = v
        return res
    for mg, cg in g.items():
        key = tuple([x + y for x, y in zip(mg, mono)])
        v = res.get(key, 0) - c * cg
        if mode == MODULAR:
            v %= m
        if v:
            res[key] = v
        else:
            res.pop(key, None)
    return res


def normal_form(f, basis, order, block, mode, m, dom):
    """Fully reduce ``f`` by a list of monic polynomials.

    ``basis`` holds pairs ``(lead_monomial, tail)`` where ``tail`` is a list
    of ``(monomial, coefficient)`` pairs for the non-leading terms.  The
    remainder has no term divisible by any leading monomial.
    """
    p = dict(f)
    heap = [(_neg_key(mono, order, block), mono) for mono in p]
    heapify(heap)
    rem = {}
    generic = mode == GENERIC
    if generic:
        sub, mul, is_zero = dom.sub, dom.mul, dom.is_zero
        zero = dom.zero()
    while heap:
        mono = heappop(heap)[1]
        c = p.pop(mono, None)
        if c is None:
            continue
        for lm, tail in basis:
            if mono_divides(lm, mono):
                break
        else:
            rem[mono] = c
            continue
        q = tuple([x - y for x, y in zip(mono, lm)])
        for tm, tc in tail:
            key = tuple([x + y for x, y in zip(tm, q)])
            if generic:
                old = p.get(key)
                v = sub(zero if old is None else old, mul(c, tc))
                if is_zero(v):
                    if old is not None:
                        del p[key]
                    continue
            else:
                old = p.get(key)
                v = (0 if old is None else old) - c * tc
                if mode == MODULAR:
                    v %= m
                if not v:
                    if old is not None:
                        del p[key]
                    continue
            p[key] = v
            if old is None:
                heappush(heap, (_neg_key(key, order, block), key))
    return rem
