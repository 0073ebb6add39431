"""Dense univariate polynomials over GF(p).

A polynomial a_0 + a_1 X + ... + a_n X^n is a tuple (a_0, ..., a_n) of
integers in range(p) with a_n != 0; the zero polynomial is ().
Functions take p explicitly and never mutate their arguments.
"""

import itertools
from typing import Iterator, Sequence, Tuple

Poly = Tuple[int, ...]


def trim(a: Sequence[int]) -> Poly:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def reduce(a: Sequence[int], p: int) -> Poly:
    return trim([c % p for c in a])


def degree(a: Poly) -> int:
    """Degree of a; -1 for the zero polynomial."""
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] = (r[i] + c) % p
    return trim(r)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    return add(a, tuple((-c) % p for c in b), p)


def scale(a: Poly, c: int, p: int) -> Poly:
    return trim([(c * x) % p for x in a])


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return reduce(r, p)


def divmod_(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead_inv = pow(b[-1], -1, p)
    if len(r) <= db:
        return (), trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = (r[k] * lead_inv) % p
        if c:
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] = (r[k - db + j] - c * b[j]) % p
    return trim(q), trim(r[:db])


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_(a, b, p)[1]


def mulmod(a: Poly, b: Poly, f: Poly, p: int) -> Poly:
    return mod(mul(a, b, p), f, p)


def powmod(a: Poly, e: int, f: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = mod(a, f, p)
    while e:
        if e & 1:
            result = mulmod(result, base, f, p)
        base = mulmod(base, base, f, p)
        e >>= 1
    return mod(result, f, p)


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def ext_gcd(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly, Poly]:
    """Return (g, u, w) with u*a + w*b = g, g monic."""
    r0, r1 = a, b
    u0, u1 = (1,), ()
    w0, w1 = (), (1,)
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1, p), p)
        w0, w1 = w1, sub(w0, mul(q, w1, p), p)
    if not r0:
        return (), u0, w0
    c = pow(r0[-1], -1, p)
    return scale(r0, c, p), scale(u0, c, p), scale(w0, c, p)


def inverse_mod(a: Poly, f: Poly, p: int) -> Poly:
    g, u, _ = ext_gcd(mod(a, f, p), f, p)
    if g != (1,):
        raise ZeroDivisionError("polynomial is not invertible modulo f")
    return mod(u, f, p)


def is_irreducible(f: Poly, p: int) -> bool:
    """Ben-Or test: f has no factor of degree <= deg(f)/2."""
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    f = monic(f, p)
    x: Poly = (0, 1)
    h = x
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        if gcd(f, sub(h, x, p), p) != (1,):
            return False
    return True


def monic_polys(p: int, n: int) -> Iterator[Poly]:
    """Monic degree-n polynomials, lexicographic on (a_0, ..., a_{n-1})."""
    for low in itertools.product(range(p), repeat=n):
        yield tuple(low) + (1,)


def first_irreducible(p: int, n: int) -> Poly:
    for f in monic_polys(p, n):
        if is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible polynomial of degree {n} over GF({p})")


def evaluate(a: Poly, x: int, p: int) -> int:
    r = 0
    for c in reversed(a):
        r = (r * x + c) % p
    return r
