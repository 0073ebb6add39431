"""The three classes of complete permutation monomials v^-1 x^d and their inverses.

C1  p = 3, m odd, d = 3^m + 2; v nonzero with relative trace 0.  Which
    coordinates that means depends on the quadratic modulus:
    x^2+1: v0 = 0;  x^2+2x+2: v0 = v1;  x^2+x+2: v1 = 2 v0.
C2  p = 3, m odd, d = 2*3^m + 3, modulus x^2+2x+2; v nonzero with
    v0 = 0 or v1 = 2 v0 (equivalently Tr(alpha v) = 0 or Tr(alpha^3 v) = 0).
C3  gcd(2s-1, p^m+1) = 1, 2s | p^m+1, gcd(s-1, p^m+1) = 1,
    d = s(p^m - 1) + 1; v in U \\ U^s where U is the norm-1 subgroup.
"""

from dataclasses import dataclass, replace
from math import gcd
from typing import List, Optional, Tuple

from cpplab import ff, modring
from cpplab.errors import HypothesisViolated, InadmissibleCoefficient, InternalInvariant
from cpplab.ff import TopModulus
from cpplab.maps import Monomial

CLASSES = ("C1", "C2", "C3")
C1_MODULI = (TopModulus.X2_PLUS_1, TopModulus.X2_2X_2, TopModulus.X2_X_2)


@dataclass(frozen=True)
class FamilySpec:
    cls: str
    p: int
    m: int
    s: Optional[int] = None
    modulus: Optional[TopModulus] = None

    @property
    def d(self) -> int:
        """Forward exponent."""
        if self.cls == "C1":
            return 3**self.m + 2
        if self.cls == "C2":
            return 2 * 3**self.m + 3
        return self.s * (self.p**self.m - 1) + 1

    @property
    def q(self) -> int:
        return self.p ** (2 * self.m)

    def to_json(self) -> dict:
        return {
            "class": self.cls,
            "p": self.p,
            "m": self.m,
            "s": self.s,
            "modulus_variant": self.modulus.value if self.modulus else None,
        }


@dataclass(frozen=True)
class UnitCircle:
    generator: ff.FieldElem
    order: int

    def elements(self, ctx: ff.FieldCtx) -> List[ff.FieldElem]:
        out, u = [], ff.one(ctx)
        for _ in range(self.order):
            out.append(u)
            u = ff.mul(ctx, u, self.generator)
        return out


def _fail(msg: str):
    raise HypothesisViolated(msg)


def validate(spec: FamilySpec) -> FamilySpec:
    """Check the class hypotheses and fill in the default modulus."""
    cls = str(spec.cls).upper()
    if cls not in CLASSES:
        _fail(f"unknown class {spec.cls!r}")
    p, m, s = spec.p, spec.m, spec.s
    if m < 1:
        _fail("m must be a positive integer")
    if not ff.is_prime(p) or p == 2:
        _fail(f"p = {p} is not an odd prime")
    modulus = TopModulus(spec.modulus) if spec.modulus is not None else None
    if cls in ("C1", "C2"):
        if p != 3:
            _fail(f"{cls} requires p = 3 (got {p})")
        if m % 2 == 0:
            _fail(f"{cls} requires odd m (got {m})")
        if cls == "C1":
            modulus = modulus or TopModulus.X2_PLUS_1
            if modulus not in C1_MODULI:
                _fail(f"C1 modulus must be one of {[v.value for v in C1_MODULI]}")
        else:
            modulus = modulus or TopModulus.X2_2X_2
            if modulus is not TopModulus.X2_2X_2:
                _fail("C2 is defined over the x2+2x+2 tower")
        s = None
    else:
        if s is None or s < 1:
            _fail("C3 requires a positive integer s")
        n = p**m + 1
        if gcd(2 * s - 1, n) != 1:
            _fail(f"gcd(2s-1, p^m+1) = gcd({2 * s - 1}, {n}) != 1")
        if n % (2 * s):
            _fail(f"2s = {2 * s} does not divide p^m+1 = {n}")
        if gcd(s - 1, n) != 1:
            _fail(f"gcd(s-1, p^m+1) = gcd({s - 1}, {n}) != 1")
        modulus = modulus or TopModulus.AUTO
    out = replace(spec, cls=cls, s=s, modulus=modulus)
    if gcd(out.d, out.q - 1) != 1:
        raise InternalInvariant(f"gcd(d, q-1) != 1 for {out}")
    return out


def c3_char3(m: int) -> FamilySpec:
    """C3 with p = 3, s = 2 (any odd m)."""
    if m % 2 == 0:
        _fail("p = 3, s = 2 requires odd m")
    return validate(FamilySpec("C3", 3, m, 2))


def c3_seven_mod_twelve(p: int, m: int) -> FamilySpec:
    """C3 with s = 2 for p = 7 (mod 12) and odd m."""
    if p % 12 != 7:
        _fail(f"p = {p} is not 7 mod 12")
    if m % 2 == 0:
        _fail("p = 7 mod 12, s = 2 requires odd m")
    return validate(FamilySpec("C3", p, m, 2))


def family_ctx(spec: FamilySpec, max_q: Optional[int] = None) -> ff.FieldCtx:
    spec = validate(spec)
    return ff.make_ctx(spec.p, spec.m, spec.modulus, max_q=max_q)


def _check_ctx(ctx: ff.FieldCtx, spec: FamilySpec) -> None:
    if (ctx.p, ctx.m) != (spec.p, spec.m):
        _fail("field context does not match the family parameters")
    if spec.cls in ("C1", "C2") and ctx.variant is not spec.modulus:
        _fail(f"{spec.cls} with modulus {spec.modulus.value} needs the matching tower")


def unit_circle(ctx: ff.FieldCtx) -> UnitCircle:
    g = ff.primitive_element(ctx)
    return UnitCircle(ff.power(ctx, g, ctx.q_base - 1), ctx.q_base + 1)


def _coordinate_rule(ctx: ff.FieldCtx, spec: FamilySpec, v: ff.FieldElem) -> bool:
    v0, v1 = v.a0, v.a1
    twice_v0 = ff.base_add(ctx, v0, v0)
    if spec.cls == "C2":
        return not any(v0) or v1 == twice_v0
    if spec.modulus is TopModulus.X2_PLUS_1:
        return not any(v0)
    if spec.modulus is TopModulus.X2_2X_2:
        return v0 == v1
    return v1 == twice_v0


def is_admissible(ctx: ff.FieldCtx, spec: FamilySpec, v: ff.FieldElem) -> bool:
    if ff.is_zero(v):
        return False
    if spec.cls == "C3":
        n = ctx.q_base + 1
        return (ff.norm_to_base(ctx, v) == ff.base_one(ctx)
                and ff.power(ctx, v, n // spec.s) != ff.one(ctx))
    return _coordinate_rule(ctx, spec, v)


def admissible_v(ctx: ff.FieldCtx, spec: FamilySpec) -> Tuple[ff.FieldElem, ...]:
    """The admissible coefficients, in enumeration order."""
    spec = validate(spec)
    _check_ctx(ctx, spec)
    if spec.cls == "C3":
        cands = unit_circle(ctx).elements(ctx)
    else:
        base = ff.enumerate_base(ctx)
        cands = [ff.FieldElem(a0, a1) for a1 in base for a0 in base]
    out = [v for v in cands if is_admissible(ctx, spec, v)]
    return tuple(sorted(out, key=lambda v: ff.index(ctx, v)))


def admissible_by_trace(ctx: ff.FieldCtx, spec: FamilySpec) -> Tuple[ff.FieldElem, ...]:
    """C1/C2 admissible sets described through relative traces, by exhaustive search."""
    spec = validate(spec)
    _check_ctx(ctx, spec)
    zero = ff.base_zero(ctx)
    a = ff.alpha(ctx)
    a3 = ff.power(ctx, a, 3)
    out = []
    for v in ff.enumerate_field(ctx)[1:]:
        if spec.cls == "C1":
            ok = ff.trace_to_base(ctx, v) == zero
        elif spec.cls == "C2":
            ok = (ff.trace_to_base(ctx, ff.mul(ctx, a, v)) == zero
                  or ff.trace_to_base(ctx, ff.mul(ctx, a3, v)) == zero)
        else:
            _fail("trace description exists only for C1 and C2")
        if ok:
            out.append(v)
    return tuple(out)


def expected_count(spec: FamilySpec) -> int:
    spec = validate(spec)
    if spec.cls == "C1":
        return 3**spec.m - 1
    if spec.cls == "C2":
        return 2 * (3**spec.m - 1)
    return (spec.p**spec.m + 1) * (spec.s - 1) // spec.s


def inverse_exponent(spec: FamilySpec) -> Tuple[int, str, Optional[modring.ClosedForm]]:
    """(e, path, closed_form): path is "closed-form" or "generic"."""
    spec = validate(spec)
    n = spec.q - 1
    if modring.has_closed_form(spec.cls, spec.p, spec.m, spec.s):
        cf = modring.closed_form_exponent(spec.cls, spec.p, spec.m, spec.s)
        if cf.value != modring.mod_inverse(spec.d, n):
            raise InternalInvariant(f"closed form {cf} is not the inverse of {spec.d}")
        return cf.value, "closed-form", cf
    return modring.mod_inverse(spec.d, n), "generic", None


def _require(ctx, spec, v):
    if not is_admissible(ctx, spec, v):
        raise InadmissibleCoefficient(f"v = {ff.encode(v)} is not admissible for {spec.cls}")


def forward_monomial(ctx: ff.FieldCtx, spec: FamilySpec, v: ff.FieldElem) -> Monomial:
    spec = validate(spec)
    _check_ctx(ctx, spec)
    _require(ctx, spec, v)
    return Monomial(ff.inv(ctx, v), spec.d % (ctx.q - 1))


def inverse_monomial(ctx: ff.FieldCtx, spec: FamilySpec, v: ff.FieldElem) -> Monomial:
    spec = validate(spec)
    _check_ctx(ctx, spec)
    _require(ctx, spec, v)
    e, _, _ = inverse_exponent(spec)
    return Monomial(ff.power(ctx, v, e), e)
