"""Pure Python term kernels.

A term dict maps an exponent tuple to a nonzero Fraction.  These functions
are the inner loops of the sparse polynomial arithmetic; the compiled module
``polydegen._kernels`` implements the same five functions with identical
semantics.  Both return fresh dicts and never mutate their arguments.
"""

from __future__ import annotations

BACKEND = "pure"


def add_terms(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, coeff in b.items():
        cur = out.get(key)
        if cur is None:
            out[key] = coeff
        else:
            s = cur + coeff
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def sub_terms(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, coeff in b.items():
        cur = out.get(key)
        if cur is None:
            out[key] = -coeff
        else:
            s = cur - coeff
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def neg_terms(a: dict) -> dict:
    return {key: -coeff for key, coeff in a.items()}


def scale_terms(a: dict, c) -> dict:
    if not c:
        return {}
    return {key: coeff * c for key, coeff in a.items()}


def mul_terms(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            prod = ca * cb
            cur = out.get(key)
            if cur is None:
                out[key] = prod
            else:
                s = cur + prod
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out
