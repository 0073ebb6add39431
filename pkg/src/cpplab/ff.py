"""Exact arithmetic in the two-level tower GF(p) -> GF(p^m) -> GF(p^2m).

The base field GF(p^m) is GF(p)[t]/(base_modulus); the top field is
GF(p^m)[alpha]/(alpha^2 + b*alpha + c).  An element of the top field is a
pair (a0, a1) meaning a0 + a1*alpha, each coordinate a length-m tuple of
coefficients of 1, t, ..., t^(m-1).

Elements are plain immutable tuples; every operation is a pure function of
the context and its operands.
"""

import enum
import functools
import itertools
import os
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from cpplab import polyfp
from cpplab.errors import (
    DivisionByZero,
    InternalInvariant,
    NotPrime,
    ReducibleModulus,
    UnsupportedSize,
)

BaseElem = Tuple[int, ...]

DEFAULT_MAX_Q = 2**20
DEFAULT_TRIAL_BOUND = 10**6


class FieldElem(NamedTuple):
    a0: BaseElem
    a1: BaseElem


class TopModulus(str, enum.Enum):
    X2_PLUS_1 = "x2+1"
    X2_2X_2 = "x2+2x+2"
    X2_X_2 = "x2+x+2"
    AUTO = "auto"


# (b, c) for alpha^2 + b*alpha + c, integers reduced mod p later
_NAMED_MODULI = {
    TopModulus.X2_PLUS_1: (0, 1),
    TopModulus.X2_2X_2: (2, 2),
    TopModulus.X2_X_2: (1, 2),
}


@dataclass(frozen=True)
class FieldCtx:
    p: int
    m: int
    base_modulus: Tuple[int, ...]
    top_b: BaseElem
    top_c: BaseElem
    variant: TopModulus
    base_trace: Tuple[int, ...]  # Tr_{p^m/p}(t^k) for k < m

    @property
    def q_base(self) -> int:
        return self.p**self.m

    @property
    def q(self) -> int:
        return self.p ** (2 * self.m)

    @property
    def unit_order(self) -> int:
        return self.q - 1

    @property
    def top_modulus(self) -> Tuple[BaseElem, BaseElem, BaseElem]:
        """Coefficients (c, b, 1) of alpha^2 + b*alpha + c, constant term first."""
        return (self.top_c, self.top_b, _unit(self.m, self.p))


def default_max_q() -> int:
    env = os.environ.get("CPPLAB_MAX_Q")
    return int(env) if env else DEFAULT_MAX_Q


def check_size(q: int, max_q: Optional[int] = None) -> None:
    cap = default_max_q() if max_q is None else max_q
    if q > cap:
        raise UnsupportedSize(f"q = {q} exceeds the exhaustive-sweep cap {cap}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = 3
    while r * r <= n:
        if n % r == 0:
            return False
        r += 2
    return True


def factorize(n: int, bound: int = DEFAULT_TRIAL_BOUND) -> Dict[int, int]:
    """Prime factorization by trial division up to `bound`.

    Raises UnsupportedSize if a cofactor remains that trial division up to
    `bound` cannot certify as prime.
    """
    if n < 1:
        raise ValueError("n must be positive")
    factors: Dict[int, int] = {}
    r = 2
    while r * r <= n:
        if r > bound:
            raise UnsupportedSize(f"factoring {n} needs trial division beyond {bound}")
        while n % r == 0:
            factors[r] = factors.get(r, 0) + 1
            n //= r
        r += 1 if r == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


# ---------------------------------------------------------------- base field

def _unit(m: int, p: int) -> BaseElem:
    return (1 % p,) + (0,) * (m - 1)


def _pad(a: Sequence[int], m: int) -> BaseElem:
    return tuple(a) + (0,) * (m - len(a))


def base_zero(ctx: FieldCtx) -> BaseElem:
    return (0,) * ctx.m


def base_one(ctx: FieldCtx) -> BaseElem:
    return _unit(ctx.m, ctx.p)


def base_const(ctx: FieldCtx, c: int) -> BaseElem:
    return ((c % ctx.p),) + (0,) * (ctx.m - 1)


def base_add(ctx: FieldCtx, a: BaseElem, b: BaseElem) -> BaseElem:
    p = ctx.p
    return tuple((x + y) % p for x, y in zip(a, b))


def base_sub(ctx: FieldCtx, a: BaseElem, b: BaseElem) -> BaseElem:
    p = ctx.p
    return tuple((x - y) % p for x, y in zip(a, b))


def base_neg(ctx: FieldCtx, a: BaseElem) -> BaseElem:
    p = ctx.p
    return tuple((-x) % p for x in a)


def base_mul(ctx: FieldCtx, a: BaseElem, b: BaseElem) -> BaseElem:
    m, p = ctx.m, ctx.p
    if m == 1:
        return ((a[0] * b[0]) % p,)
    prod = polyfp.mul(polyfp.trim(a), polyfp.trim(b), p)
    return _pad(polyfp.mod(prod, ctx.base_modulus, p), m)


def base_pow(ctx: FieldCtx, a: BaseElem, e: int) -> BaseElem:
    if e < 0:
        a, e = base_inv(ctx, a), -e
    result = base_one(ctx)
    while e:
        if e & 1:
            result = base_mul(ctx, result, a)
        a = base_mul(ctx, a, a)
        e >>= 1
    return result


def base_inv(ctx: FieldCtx, a: BaseElem) -> BaseElem:
    """Inverse in GF(p^m) by the polynomial extended Euclidean algorithm."""
    if not any(a):
        raise DivisionByZero("inverse of zero")
    u = polyfp.inverse_mod(polyfp.trim(a), ctx.base_modulus, ctx.p)
    return _pad(u, ctx.m)


def base_is_square(ctx: FieldCtx, a: BaseElem) -> bool:
    if not any(a):
        return True
    return base_pow(ctx, a, (ctx.q_base - 1) // 2) == base_one(ctx)


def base_abs_trace(ctx: FieldCtx, a: BaseElem) -> int:
    """Tr from GF(p^m) down to GF(p)."""
    return sum(x * t for x, t in zip(a, ctx.base_trace)) % ctx.p


def enumerate_base(ctx: FieldCtx) -> List[BaseElem]:
    return [tuple(reversed(d)) for d in itertools.product(range(ctx.p), repeat=ctx.m)]


# ---------------------------------------------------------------- context

def _base_trace_vector(p: int, m: int, f: polyfp.Poly) -> Tuple[int, ...]:
    out = []
    for k in range(m):
        basis = tuple([0] * k + [1])
        acc: polyfp.Poly = ()
        term = polyfp.mod(basis, f, p)
        for _ in range(m):
            acc = polyfp.add(acc, term, p)
            term = polyfp.powmod(term, p, f, p)
        if polyfp.degree(acc) > 0:
            raise InternalInvariant("base trace left GF(p)")
        out.append(acc[0] if acc else 0)
    return tuple(out)


def _quadratic_irreducible(ctx: FieldCtx) -> bool:
    b, c = ctx.top_b, ctx.top_c
    disc = base_sub(ctx, base_mul(ctx, b, b), base_mul(ctx, base_const(ctx, 4), c))
    return any(disc) and not base_is_square(ctx, disc)


def make_ctx(p: int, m: int, top: TopModulus = TopModulus.AUTO,
             max_q: Optional[int] = None) -> FieldCtx:
    """Build and validate the tower GF(p^2m) = GF(p^m)(alpha).

    AUTO picks alpha^2 = c for the first non-square c of GF(p^m) in
    enumeration order (a constant of GF(p) whenever m is odd).
    """
    top = TopModulus(top)
    if not is_prime(p) or p == 2:
        raise NotPrime(f"p = {p} is not an odd prime")
    if m < 1:
        raise ValueError("m must be >= 1")
    check_size(p ** (2 * m), max_q)
    f = polyfp.first_irreducible(p, m)
    trace_vec = _base_trace_vector(p, m, f)
    zero = (0,) * m
    proto = FieldCtx(p, m, f, zero, zero, top, trace_vec)
    if top is TopModulus.AUTO:
        for c in enumerate_base(proto)[1:]:
            if not base_is_square(proto, c):
                ctx = FieldCtx(p, m, f, zero, base_neg(proto, c), top, trace_vec)
                break
        else:
            raise InternalInvariant("GF(p^m) has no non-square")
    else:
        b, c = _NAMED_MODULI[top]
        ctx = FieldCtx(p, m, f, base_const(proto, b), base_const(proto, c), top, trace_vec)
    if not _quadratic_irreducible(ctx):
        raise ReducibleModulus(f"{top.value} has a root in GF({p}^{m})")
    _check_trace_identities(ctx)
    return ctx


def _check_trace_identities(ctx: FieldCtx) -> None:
    """Trace values of alpha-powers that the admissible sets rely on (p = 3)."""
    if ctx.p != 3 or ctx.m % 2 == 0:
        return
    a = alpha(ctx)
    tr = {k: trace_to_base(ctx, power(ctx, a, k)) for k in (1, 2, 3, 6)}
    one, zero = base_one(ctx), base_zero(ctx)
    if ctx.variant is TopModulus.X2_PLUS_1:
        expected = {1: zero, 2: one, 3: zero}
    elif ctx.variant is TopModulus.X2_2X_2:
        expected = {1: one, 3: one, 2: zero, 6: zero}
    else:
        return
    for k, val in expected.items():
        if tr[k] != val:
            raise InternalInvariant(f"Tr(alpha^{k}) = {tr[k]}, expected {val}")


# ---------------------------------------------------------------- elements

def zero(ctx: FieldCtx) -> FieldElem:
    z = base_zero(ctx)
    return FieldElem(z, z)


def one(ctx: FieldCtx) -> FieldElem:
    return FieldElem(base_one(ctx), base_zero(ctx))


def alpha(ctx: FieldCtx) -> FieldElem:
    return FieldElem(base_zero(ctx), base_one(ctx))


def embed(ctx: FieldCtx, a: BaseElem) -> FieldElem:
    return FieldElem(tuple(a), base_zero(ctx))


def const(ctx: FieldCtx, c: int) -> FieldElem:
    return embed(ctx, base_const(ctx, c))


def element(ctx: FieldCtx, encoded: Sequence[Sequence[int]]) -> FieldElem:
    """Decode the canonical [[a0 coeffs], [a1 coeffs]] encoding."""
    a0, a1 = encoded
    if len(a0) != ctx.m or len(a1) != ctx.m:
        raise ValueError(f"coordinates must have length {ctx.m}")
    return FieldElem(tuple(c % ctx.p for c in a0), tuple(c % ctx.p for c in a1))


def encode(x: FieldElem) -> List[List[int]]:
    return [list(x.a0), list(x.a1)]


def is_zero(x: FieldElem) -> bool:
    return not any(x.a0) and not any(x.a1)


def index(ctx: FieldCtx, x: FieldElem) -> int:
    """Position of x in enumerate_field: base-p digits a0[0..m-1], a1[0..m-1], least significant first."""
    r = 0
    for c in reversed(x.a0 + x.a1):
        r = r * ctx.p + c
    return r


def from_index(ctx: FieldCtx, i: int) -> FieldElem:
    p, m = ctx.p, ctx.m
    digits = []
    for _ in range(2 * m):
        i, d = divmod(i, p)
        digits.append(d)
    return FieldElem(tuple(digits[:m]), tuple(digits[m:]))


def enumerate_field(ctx: FieldCtx, max_q: Optional[int] = None) -> List[FieldElem]:
    check_size(ctx.q, max_q)
    return [from_index(ctx, i) for i in range(ctx.q)]


def add(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    return FieldElem(base_add(ctx, a.a0, b.a0), base_add(ctx, a.a1, b.a1))


def sub(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    return FieldElem(base_sub(ctx, a.a0, b.a0), base_sub(ctx, a.a1, b.a1))


def neg(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    return FieldElem(base_neg(ctx, a.a0), base_neg(ctx, a.a1))


def mul(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    # alpha^2 = -b*alpha - c
    x00 = base_mul(ctx, a.a0, b.a0)
    x11 = base_mul(ctx, a.a1, b.a1)
    cross = base_add(ctx, base_mul(ctx, a.a0, b.a1), base_mul(ctx, a.a1, b.a0))
    c0 = base_sub(ctx, x00, base_mul(ctx, ctx.top_c, x11))
    c1 = base_sub(ctx, cross, base_mul(ctx, ctx.top_b, x11))
    return FieldElem(c0, c1)


def power(ctx: FieldCtx, a: FieldElem, e: int) -> FieldElem:
    """a**e by square-and-multiply; exponents of nonzero a are reduced mod q-1."""
    if is_zero(a):
        if e < 0:
            raise DivisionByZero("negative power of zero")
        return one(ctx) if e == 0 else a
    e %= ctx.unit_order
    result = one(ctx)
    while e:
        if e & 1:
            result = mul(ctx, result, a)
        a = mul(ctx, a, a)
        e >>= 1
    return result


def inv(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    if is_zero(a):
        raise DivisionByZero("inverse of zero")
    return power(ctx, a, ctx.q - 2)


def inv_gcd(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    """Inverse via conjugate / norm, with the norm inverted by extended gcd in GF(p)[t]."""
    if is_zero(a):
        raise DivisionByZero("inverse of zero")
    conj = frobenius(ctx, a, ctx.m)
    n = norm_to_base(ctx, a)
    n_inv = base_inv(ctx, n)
    return FieldElem(base_mul(ctx, conj.a0, n_inv), base_mul(ctx, conj.a1, n_inv))


def div(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    return mul(ctx, a, inv(ctx, b))


def frobenius(ctx: FieldCtx, a: FieldElem, k: int) -> FieldElem:
    """a**(p**k).  k = m is conjugation over GF(p^m), done in closed form."""
    k %= 2 * ctx.m
    if k == 0:
        return a
    if k == ctx.m:
        # conj(alpha) = -b - alpha, and GF(p^m) is fixed
        return FieldElem(base_sub(ctx, a.a0, base_mul(ctx, ctx.top_b, a.a1)),
                         base_neg(ctx, a.a1))
    return power(ctx, a, ctx.p**k)


def trace_to_base(ctx: FieldCtx, x: FieldElem) -> BaseElem:
    s = add(ctx, x, frobenius(ctx, x, ctx.m))
    if any(s.a1):
        raise InternalInvariant("relative trace left the base field")
    return s.a0


def abs_trace(ctx: FieldCtx, x: FieldElem) -> int:
    return base_abs_trace(ctx, trace_to_base(ctx, x))


def norm_to_base(ctx: FieldCtx, x: FieldElem) -> BaseElem:
    n = mul(ctx, x, frobenius(ctx, x, ctx.m))
    if any(n.a1):
        raise InternalInvariant("relative norm left the base field")
    return n.a0


def in_base(x: FieldElem) -> bool:
    return not any(x.a1)


def order_of(ctx: FieldCtx, a: FieldElem, group_order: Optional[int] = None,
             bound: int = DEFAULT_TRIAL_BOUND) -> int:
    """Multiplicative order of a, given a multiple of it (default q-1)."""
    if is_zero(a):
        raise DivisionByZero("zero has no multiplicative order")
    n = ctx.unit_order if group_order is None else group_order
    unit = one(ctx)
    if power(ctx, a, n) != unit:
        raise ValueError("group_order is not a multiple of the element order")
    for r, k in factorize(n, bound).items():
        for _ in range(k):
            if power(ctx, a, n // r) == unit:
                n //= r
            else:
                break
    return n


def _has_full_order(ctx: FieldCtx, a: FieldElem, n: int, primes: Iterable[int]) -> bool:
    unit = one(ctx)
    return all(power(ctx, a, n // r) != unit for r in primes)


@functools.lru_cache(maxsize=None)
def primitive_element(ctx: FieldCtx, bound: int = DEFAULT_TRIAL_BOUND) -> FieldElem:
    """First element in enumeration order whose multiplicative order is q-1."""
    n = ctx.unit_order
    primes = list(factorize(n, bound))
    for i in range(1, ctx.q):
        g = from_index(ctx, i)
        if _has_full_order(ctx, g, n, primes):
            return g
    raise InternalInvariant("no primitive element found")


@functools.lru_cache(maxsize=None)
def base_primitive_element(ctx: FieldCtx, bound: int = DEFAULT_TRIAL_BOUND) -> FieldElem:
    """First generator of GF(p^m)^* in enumeration order, embedded in the tower."""
    n = ctx.q_base - 1
    if n == 1:
        return one(ctx)
    primes = list(factorize(n, bound))
    for i in range(1, ctx.q_base):
        g = from_index(ctx, i)
        if _has_full_order(ctx, g, n, primes):
            return g
    raise InternalInvariant("no primitive element of the base field found")
