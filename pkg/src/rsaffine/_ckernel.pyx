# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernel: behavioral twin of _pykernel.

Same dict-of-exponent-tuples representation at the boundary.  Internally the
sparse product runs on integer numerator/denominator pairs with C-level
exponent arithmetic, building Fraction objects only for the surviving output
terms.  tests/test_kernel_parity.py pins the two implementations against
each other.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from fractions import Fraction
from math import gcd

BACKEND_NAME = "cython"


def padd(dict p, dict q):
    """Sum of two coefficient dicts."""
    cdef dict out
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    out = dict(p)
    for k, c in q.items():
        v = out.get(k)
        if v is None:
            out[k] = c
        else:
            v = v + c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def psub(dict p, dict q):
    cdef dict out
    if not q:
        return dict(p)
    out = dict(p)
    for k, c in q.items():
        v = out.get(k)
        if v is None:
            out[k] = -c
        else:
            v = v - c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def pneg(dict p):
    cdef dict out = {}
    for k, c in p.items():
        out[k] = -c
    return out


def pscale(dict p, c):
    """Multiply every coefficient by a nonzero scalar."""
    cdef dict out = {}
    if not c:
        return out
    for k, v in p.items():
        out[k] = v * c
    return out


def pshift(dict p, long dr, long ds, long da, long db):
    """Multiply by the monomial with exponent tuple (dr, ds, da, db)."""
    cdef dict out = {}
    cdef tuple k
    if dr == 0 and ds == 0 and da == 0 and db == 0:
        return dict(p)
    for k, c in p.items():
        out[
            (
                <long> k[0] + dr,
                <long> k[1] + ds,
                <long> k[2] + da,
                <long> k[3] + db,
            )
        ] = c
    return out


def pmul(dict p, dict q):
    """Product of two coefficient dicts (sparse convolution)."""
    cdef dict acc, out
    cdef Py_ssize_t nq, j
    cdef long e0, e1, e2, e3
    cdef long *qe
    cdef tuple k, key
    cdef list qnum, qden, ent

    if not p or not q:
        return {}
    if len(p) == 1:
        ((k, c),) = p.items()
        return pscale(pshift(q, <long> k[0], <long> k[1], <long> k[2], <long> k[3]), c)
    if len(q) == 1:
        ((k, c),) = q.items()
        return pscale(pshift(p, <long> k[0], <long> k[1], <long> k[2], <long> k[3]), c)
    if len(p) > len(q):
        p, q = q, p

    nq = len(q)
    qe = <long *> PyMem_Malloc(4 * nq * sizeof(long))
    if qe == NULL:
        raise MemoryError()
    qnum = []
    qden = []
    try:
        j = 0
        for k, c in q.items():
            qe[4 * j] = <long> k[0]
            qe[4 * j + 1] = <long> k[1]
            qe[4 * j + 2] = <long> k[2]
            qe[4 * j + 3] = <long> k[3]
            qnum.append(c.numerator)
            qden.append(c.denominator)
            j += 1

        acc = {}
        for k, c in p.items():
            e0 = <long> k[0]
            e1 = <long> k[1]
            e2 = <long> k[2]
            e3 = <long> k[3]
            pn = c.numerator
            pd = c.denominator
            for j in range(nq):
                key = (e0 + qe[4 * j], e1 + qe[4 * j + 1], e2 + qe[4 * j + 2], e3 + qe[4 * j + 3])
                num = pn * qnum[j]
                den = pd * qden[j]
                ent = <list> acc.get(key)
                if ent is None:
                    acc[key] = [num, den]
                else:
                    # a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)), g = gcd(b, d)
                    b = ent[0]
                    bd = ent[1]
                    g = gcd(bd, den)
                    if g == 1:
                        ent[0] = b * den + num * bd
                        ent[1] = bd * den
                    else:
                        dg = den // g
                        ent[0] = b * dg + num * (bd // g)
                        ent[1] = bd * dg
    finally:
        PyMem_Free(qe)

    out = {}
    for key, ent in acc.items():
        if ent[0]:
            out[key] = Fraction(ent[0], ent[1])
    return out


def peq(dict p, dict q):
    return p == q
