"""Dickson polynomials of the first kind, D_n(x, a).

D_0 = 2, D_1 = x, D_{i+2} = x D_{i+1} - a D_i.  Equivalently

    D_n(x, a) = sum_{i <= n/2} n/(n-i) * C(n-i, i) * (-a)^i * x^(n-2i)

where the weight n/(n-i) * C(n-i, i) is always an integer.  The inverted
weight (n-i)/n * C(n-i, i) disagrees with the recurrence already at n = 2
(it gives 1/2 instead of 2); see ``inverted_weight``.
"""

from fractions import Fraction
from math import comb, gcd
from typing import Dict, Tuple

import numpy as np

from cpplab import ff
from cpplab.tables import FieldTables


def dickson_eval(ctx: ff.FieldCtx, n: int, x: ff.FieldElem, a: ff.FieldElem) -> ff.FieldElem:
    """D_n(x, a) by n - 1 steps of the recurrence."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    prev, cur = ff.const(ctx, 2), x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, ff.sub(ctx, ff.mul(ctx, x, cur), ff.mul(ctx, a, prev))
    return cur


def dickson_images(t: FieldTables, n: int, a: ff.FieldElem) -> np.ndarray:
    """Index vector of D_n(x, a) over every x of the field, by the same recurrence."""
    xs = t.all()
    ai = t.idx(a)
    prev = np.full(t.q, t.idx(ff.const(t.ctx, 2)), dtype=np.int64)
    if n == 0:
        return prev
    cur = xs
    for _ in range(n - 1):
        prev, cur = cur, t.sub(t.mul(xs, cur), t.scale(ai, prev))
    return cur


def closed_form_weight(n: int, i: int) -> int:
    """n/(n-i) * C(n-i, i), computed exactly over the integers."""
    num = n * comb(n - i, i)
    w, rem = divmod(num, n - i)
    if rem:
        raise ArithmeticError(f"weight for n={n}, i={i} is not integral")
    return w


def inverted_weight(n: int, i: int) -> Fraction:
    """(n-i)/n * C(n-i, i); kept only to document that it is not the Dickson weight."""
    return Fraction((n - i) * comb(n - i, i), n)


def dickson_coeffs(p: int, n: int) -> Dict[int, int]:
    """Map i -> coefficient of (-a)^i x^(n-2i) in D_n, reduced mod p (zeros dropped)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = {}
    for i in range(n // 2 + 1):
        c = closed_form_weight(n, i) % p
        if c:
            out[i] = c
    return out


def recurrence_coeffs(p: int, n: int) -> Dict[Tuple[int, int], int]:
    """Symbolic D_n over GF(p)[x, a]: map (deg_x, deg_a) -> coefficient."""
    prev: Dict[Tuple[int, int], int] = {(0, 0): 2 % p}
    cur: Dict[Tuple[int, int], int] = {(1, 0): 1}
    if n == 0:
        return {k: v for k, v in prev.items() if v}
    for _ in range(n - 1):
        nxt: Dict[Tuple[int, int], int] = {}
        for (dx, da), c in cur.items():
            nxt[(dx + 1, da)] = (nxt.get((dx + 1, da), 0) + c) % p
        for (dx, da), c in prev.items():
            nxt[(dx, da + 1)] = (nxt.get((dx, da + 1), 0) - c) % p
        prev, cur = cur, {k: v for k, v in nxt.items() if v}
    return cur


def coeffs_as_monomials(p: int, n: int) -> Dict[Tuple[int, int], int]:
    """dickson_coeffs rewritten in the (deg_x, deg_a) keys of recurrence_coeffs."""
    out = {}
    for i, c in dickson_coeffs(p, n).items():
        v = (c * (-1) ** i) % p
        if v:
            out[(n - 2 * i, i)] = v
    return out


def dickson_is_pp(n: int, q: int) -> bool:
    """D_n(x, a), a != 0, permutes GF(q) iff gcd(n, q^2 - 1) == 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return gcd(n, q * q - 1) == 1
