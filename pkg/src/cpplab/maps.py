"""Evaluable maps on a finite field: monomials, dense polynomials, f(x) + x.

Each map offers ``evaluate(ctx, x)`` on single elements and
``images(tables)``, the vector of image indices over the whole field in
enumeration order.  Plain callables FieldElem -> FieldElem are accepted by
``images_of`` as well and evaluated element by element.
"""

from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np

from cpplab import ff
from cpplab.tables import FieldTables


@dataclass(frozen=True)
class Monomial:
    coeff: ff.FieldElem
    exponent: int

    def __post_init__(self):
        if ff.is_zero(self.coeff):
            raise ValueError("monomial coefficient must be nonzero")
        if self.exponent < 1:
            raise ValueError("monomial exponent must be >= 1")

    def evaluate(self, ctx: ff.FieldCtx, x: ff.FieldElem) -> ff.FieldElem:
        return ff.mul(ctx, self.coeff, ff.power(ctx, x, self.exponent))

    def images(self, t: FieldTables) -> np.ndarray:
        return t.scale(t.idx(self.coeff), t.power(t.all(), self.exponent))


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, coefficients constant term first."""

    coeffs: Tuple[ff.FieldElem, ...]

    def evaluate(self, ctx: ff.FieldCtx, x: ff.FieldElem) -> ff.FieldElem:
        acc = ff.zero(ctx)
        for c in reversed(self.coeffs):
            acc = ff.add(ctx, ff.mul(ctx, acc, x), c)
        return acc

    def images(self, t: FieldTables) -> np.ndarray:
        xs = t.all()
        acc = np.zeros(t.q, dtype=np.int64)
        for c in reversed(self.coeffs):
            acc = t.add(t.mul(acc, xs), np.full(t.q, t.idx(c), dtype=np.int64))
        return acc


@dataclass(frozen=True)
class PlusX:
    """x -> f(x) + x."""

    f: "Map"

    def evaluate(self, ctx: ff.FieldCtx, x: ff.FieldElem) -> ff.FieldElem:
        return ff.add(ctx, evaluate(ctx, self.f, x), x)

    def images(self, t: FieldTables) -> np.ndarray:
        return t.add(images_of(t, self.f), t.all())


Map = Union[Monomial, Polynomial, PlusX, Callable[[ff.FieldElem], ff.FieldElem]]


def evaluate(ctx: ff.FieldCtx, f: Map, x: ff.FieldElem) -> ff.FieldElem:
    if hasattr(f, "evaluate"):
        return f.evaluate(ctx, x)
    return f(x)


def images_of(t: FieldTables, f: Map) -> np.ndarray:
    if hasattr(f, "images"):
        return f.images(t)
    return np.array([t.idx(f(x)) for x in t.elements()], dtype=np.int64)
