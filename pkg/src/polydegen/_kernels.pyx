# cython: language_level=3
# cython: binding=False
"""Compiled term kernels.

Same contract as ``polydegen._kernels_py``: a term dict maps an exponent
tuple to a nonzero Fraction, functions return fresh dicts and never mutate
their arguments.  The speedup comes from avoiding Fraction's operator
dispatch: coefficients are combined through gcd arithmetic on the private
numerator/denominator slots, which both stay normalized invariants of the
Fraction type.  Exponents remain Python ints, so there is no overflow cutoff.
"""

from fractions import Fraction
from math import gcd

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM

BACKEND = "compiled"

cdef object _Fraction = Fraction

# Fast construction writes the private slots directly.  Verify once at import
# time that the running interpreter accepts that; otherwise use the ordinary
# constructor everywhere.
cdef bint _FAST_NEW
try:
    _probe = _Fraction.__new__(_Fraction)
    _probe._numerator = 3
    _probe._denominator = 7
    _FAST_NEW = (_probe == _Fraction(3, 7)) and (_probe + _probe == _Fraction(6, 7))
except (AttributeError, TypeError):
    _FAST_NEW = False

FAST_FRACTION = bool(_FAST_NEW)


cdef inline object _make_fraction(object num, object den):
    # num/den already coprime with den > 0
    cdef object out
    if _FAST_NEW:
        out = _Fraction.__new__(_Fraction)
        out._numerator = num
        out._denominator = den
        return out
    return _Fraction(num, den)


cdef object _coeff_add(object a, object b):
    if type(a) is not _Fraction or type(b) is not _Fraction:
        return a + b
    cdef object na = a._numerator
    cdef object da = a._denominator
    cdef object nb = b._numerator
    cdef object db = b._denominator
    cdef object g = gcd(da, db)
    cdef object s, t, x, g2
    if g == 1:
        return _make_fraction(na * db + nb * da, da * db)
    s = da // g
    t = db // g
    x = na * t + nb * s
    g2 = gcd(x, g)
    if g2 == 1:
        return _make_fraction(x, s * db)
    return _make_fraction(x // g2, s * (db // g2))


cdef object _coeff_sub(object a, object b):
    if type(a) is not _Fraction or type(b) is not _Fraction:
        return a - b
    cdef object na = a._numerator
    cdef object da = a._denominator
    cdef object nb = b._numerator
    cdef object db = b._denominator
    cdef object g = gcd(da, db)
    cdef object s, t, x, g2
    if g == 1:
        return _make_fraction(na * db - nb * da, da * db)
    s = da // g
    t = db // g
    x = na * t - nb * s
    g2 = gcd(x, g)
    if g2 == 1:
        return _make_fraction(x, s * db)
    return _make_fraction(x // g2, s * (db // g2))


cdef object _coeff_mul(object a, object b):
    if type(a) is not _Fraction or type(b) is not _Fraction:
        return a * b
    cdef object na = a._numerator
    cdef object da = a._denominator
    cdef object nb = b._numerator
    cdef object db = b._denominator
    cdef object g1 = gcd(na, db)
    cdef object g2 = gcd(nb, da)
    if g1 > 1:
        na = na // g1
        db = db // g1
    if g2 > 1:
        nb = nb // g2
        da = da // g2
    return _make_fraction(na * nb, da * db)


cdef object _coeff_neg(object a):
    if type(a) is not _Fraction:
        return -a
    return _make_fraction(-(<object>a._numerator), a._denominator)


cdef inline bint _coeff_is_zero(object a):
    if type(a) is _Fraction:
        return a._numerator == 0
    return not a


cdef inline tuple _key_add(tuple ka, tuple kb):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(ka)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = ka[i] + kb[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object key, coeff, cur, s
    for key, coeff in b.items():
        cur = out.get(key)
        if cur is None:
            out[key] = coeff
        else:
            s = _coeff_add(cur, coeff)
            if _coeff_is_zero(s):
                del out[key]
            else:
                out[key] = s
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object key, coeff, cur, s
    for key, coeff in b.items():
        cur = out.get(key)
        if cur is None:
            out[key] = _coeff_neg(coeff)
        else:
            s = _coeff_sub(cur, coeff)
            if _coeff_is_zero(s):
                del out[key]
            else:
                out[key] = s
    return out


def neg_terms(dict a):
    cdef dict out = {}
    cdef object key, coeff
    for key, coeff in a.items():
        out[key] = _coeff_neg(coeff)
    return out


def scale_terms(dict a, c):
    cdef dict out = {}
    cdef object key, coeff
    if _coeff_is_zero(c):
        return out
    for key, coeff in a.items():
        out[key] = _coeff_mul(coeff, c)
    return out


def mul_terms(dict a, dict b):
    cdef dict swap
    if len(a) > len(b):
        swap = a
        a = b
        b = swap
    cdef dict out = {}
    cdef object ka, ca, kb, cb, prod, cur, s
    cdef tuple key
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = _key_add(<tuple>ka, <tuple>kb)
            prod = _coeff_mul(ca, cb)
            cur = out.get(key)
            if cur is None:
                out[key] = prod
            else:
                s = _coeff_add(cur, prod)
                if _coeff_is_zero(s):
                    del out[key]
                else:
                    out[key] = s
    return out
