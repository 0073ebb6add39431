"""Index-level lookup tables for exhaustive sweeps.

Every element is identified by its enumeration index (see ff.index).  A
FieldTables instance holds, for one finite field, the digit matrix, a
discrete exp/log pair relative to a fixed generator, and the absolute trace
of every element, so that whole-field maps evaluate as numpy array ops.

Two domains are supported: the full tower GF(p^2m) (``tables(ctx)``) and
its base subfield GF(p^m) (``tables(BaseField(ctx))``), whose elements are
exactly the indices below p^m.
"""

import functools
from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np

from cpplab import ff
from cpplab.errors import DivisionByZero, InternalInvariant


@dataclass(frozen=True)
class BaseField:
    """The subfield GF(p^m) of a tower, used as a field in its own right."""

    ctx: ff.FieldCtx


Field = Union[ff.FieldCtx, BaseField]


@dataclass(frozen=True, eq=False)
class FieldTables:
    ctx: ff.FieldCtx
    p: int
    k: int  # number of GF(p) digits
    q: int
    generator: ff.FieldElem
    weights: np.ndarray  # p**j
    digits: np.ndarray  # (q, k)
    exp: np.ndarray  # exp[i] = index of generator**i, length q-1
    log: np.ndarray  # log[0] = -1
    trace: np.ndarray  # absolute trace to GF(p)
    zech: np.ndarray  # zech[n] = log(1 + g^n), -1 where 1 + g^n = 0

    @property
    def order(self) -> int:
        return self.q - 1

    @property
    def is_base(self) -> bool:
        return self.k == self.ctx.m

    def elem(self, i: int) -> ff.FieldElem:
        return ff.from_index(self.ctx, int(i))

    def idx(self, x: ff.FieldElem) -> int:
        i = ff.index(self.ctx, x)
        if i >= self.q:
            raise ValueError("element does not lie in this field")
        return i

    def elements(self) -> List[ff.FieldElem]:
        return [self.elem(i) for i in range(self.q)]

    def from_digits(self, d: np.ndarray) -> np.ndarray:
        return (d % self.p) @ self.weights

    def add(self, a, b) -> np.ndarray:
        """a + b via Zech logarithms: a + b = a (1 + b/a)."""
        a = np.asarray(a)
        b = np.asarray(b)
        n = self.order
        la, lb = self.log[a], self.log[b]
        z = self.zech[(lb - la) % n]
        out = np.where(z < 0, 0, self.exp[(la + z) % n])
        return np.where(a == 0, b, np.where(b == 0, a, out))

    def add_digits(self, a, b) -> np.ndarray:
        """a + b by coordinatewise addition mod p (independent of the log tables)."""
        return self.from_digits(self.digits[a] + self.digits[b])

    def sub(self, a, b) -> np.ndarray:
        return self.from_digits(self.digits[a] - self.digits[b])

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        la, lb = self.log[a], self.log[b]
        out = self.exp[(la + lb) % self.order]
        return np.where((a == 0) | (b == 0), 0, out)

    def power(self, a, e: int) -> np.ndarray:
        """Elementwise a**e for e >= 0 (0**0 = 1)."""
        a = np.asarray(a)
        if e == 0:
            return np.ones_like(a)
        out = self.exp[(self.log[a] * (e % self.order)) % self.order]
        return np.where(a == 0, 0, out)

    def scale(self, c: int, a) -> np.ndarray:
        """c * a for a scalar index c."""
        a = np.asarray(a)
        if c == 0:
            return np.zeros_like(a)
        out = self.exp[(int(self.log[c]) + self.log[a]) % self.order]
        return np.where(a == 0, 0, out)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.exp[(-int(self.log[a])) % self.order])

    def all(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)


def _basis(ctx: ff.FieldCtx, k: int) -> List[ff.FieldElem]:
    return [ff.from_index(ctx, ctx.p**j) for j in range(k)]


def _digit_matrix(p: int, k: int) -> np.ndarray:
    q = p**k
    idx = np.arange(q, dtype=np.int64)
    return np.stack([(idx // p**j) % p for j in range(k)], axis=1)


def _build(ctx: ff.FieldCtx, base: bool) -> FieldTables:
    p = ctx.p
    k = ctx.m if base else 2 * ctx.m
    q = p**k
    g = ff.base_primitive_element(ctx) if base else ff.primitive_element(ctx)
    weights = np.array([p**j for j in range(k)], dtype=np.int64)
    digits = _digit_matrix(p, k)
    basis = _basis(ctx, k)

    # multiplication by g is GF(p)-linear: column j holds the digits of g * e_j
    cols = [ff.index(ctx, ff.mul(ctx, g, e)) for e in basis]
    mat = digits[cols].T  # (k, k)
    times_g = ((digits @ mat.T) % p) @ weights
    exp = np.empty(q - 1, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    cur = 1
    times_g_list = times_g.tolist()
    exp_list = [0] * (q - 1)
    for i in range(q - 1):
        exp_list[i] = cur
        cur = times_g_list[cur]
    exp[:] = exp_list
    if cur != 1 or len(set(exp_list)) != q - 1:
        raise InternalInvariant("generator walk did not cover the unit group")
    log[exp] = np.arange(q - 1, dtype=np.int64)

    if base:
        tvec = [ff.base_abs_trace(ctx, e.a0) for e in basis]
    else:
        tvec = [ff.abs_trace(ctx, e) for e in basis]
    trace = (digits @ np.array(tvec, dtype=np.int64)) % p

    plus_one = digits.copy()
    plus_one[:, 0] += 1
    plus_one = (plus_one % p) @ weights
    zech = log[plus_one[exp]]
    return FieldTables(ctx, p, k, q, g, weights, digits, exp, log, trace, zech)


@functools.lru_cache(maxsize=32)
def _cached(ctx: ff.FieldCtx, base: bool) -> FieldTables:
    return _build(ctx, base)


@functools.lru_cache(maxsize=32)
def trace_form(t: FieldTables) -> np.ndarray:
    """Row gamma holds the index of (Tr(gamma e_0), ..., Tr(gamma e_{k-1}))."""
    xs = t.all()
    cols = [t.trace[t.scale(t.p**j, xs)] for j in range(t.k)]
    return np.stack(cols, axis=1) @ t.weights


def tables(field: Union[Field, FieldTables]) -> FieldTables:
    """Lookup tables for a field (no size check; see maybe_tables)."""
    if isinstance(field, FieldTables):
        return field
    if isinstance(field, BaseField):
        return _cached(field.ctx, True)
    return _cached(field, False)


def field_size(field: Union[Field, FieldTables]) -> int:
    if isinstance(field, FieldTables):
        return field.q
    if isinstance(field, BaseField):
        return field.ctx.q_base
    return field.q


def field_ctx(field: Union[Field, FieldTables]) -> ff.FieldCtx:
    if isinstance(field, (FieldTables, BaseField)):
        return field.ctx
    return field


def maybe_tables(field: Union[Field, FieldTables], max_q: Optional[int] = None) -> FieldTables:
    ff.check_size(field_size(field), max_q)
    return tables(field)
