"""Integer arithmetic in the exponent ring Z/(q-1) and the closed-form inverse exponents."""

from dataclasses import dataclass
from typing import Optional, Tuple

from cpplab.errors import HypothesisViolated, NotInvertible


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, u, w) with u*a + w*b == g == gcd(a, b) > 0."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    r0, r1 = a, b
    u0, u1 = 1, 0
    w0, w1 = 0, 1
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        u0, u1 = u1, u0 - k * u1
        w0, w1 = w1, w0 - k * w1
    if r0 < 0:
        r0, u0, w0 = -r0, -u0, -w0
    return r0, u0, w0


def mod_inverse(a: int, n: int) -> int:
    if n < 2:
        raise ValueError("modulus must be >= 2")
    g, u, _ = ext_gcd(a % n, n)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible modulo {n} (gcd {g})")
    return u % n


@dataclass(frozen=True)
class ClosedForm:
    """A closed-form inverse exponent: normalized value plus how it was obtained."""

    value: int  # in [0, q-1)
    raw: int  # the formula evaluated over the integers, before reduction
    formula: str
    source: str  # which construction supplies the formula


def _check_family(cls: str, p: int, m: int, s: Optional[int]) -> None:
    if cls in ("C1", "C2"):
        if p != 3 or m % 2 == 0 or m < 1:
            raise HypothesisViolated(f"{cls} needs p = 3 and odd m (got p={p}, m={m})")
    elif cls == "C3":
        if s != 2 or m % 2 == 0 or m < 1:
            raise HypothesisViolated("closed forms for C3 exist only for s = 2 and odd m")
        if p != 3 and p % 12 != 7:
            raise HypothesisViolated(f"C3 closed form needs p = 3 or p = 7 mod 12 (got p={p})")
    else:
        raise HypothesisViolated(f"unknown family class {cls!r}")


def has_closed_form(cls: str, p: int, m: int, s: Optional[int] = None) -> bool:
    try:
        _check_family(cls, p, m, s)
    except HypothesisViolated:
        return False
    return True


def closed_form_exponent(cls: str, p: int, m: int, s: Optional[int] = None) -> ClosedForm:
    """Inverse exponent of the family's forward monomial, from its closed form.

    C1: 2*3^(2m-1) - 3^(m-1);  C2: -(2*3^m - 3)/5 with 1/5 taken mod q-1;
    C3, p = 3: 3^(2m-1) + 2*3^(m-1);  C3, p = 7 mod 12: (3 - 2(p^m-1)(2p^m+1))/3.
    """
    _check_family(cls, p, m, s)
    n = p ** (2 * m) - 1
    if cls == "C1":
        raw = 2 * 3 ** (2 * m - 1) - 3 ** (m - 1)
        return ClosedForm(raw % n, raw, "2*3^(2m-1) - 3^(m-1)", "C1 inverse")
    if cls == "C2":
        raw = -(2 * 3**m - 3)
        value = (raw * mod_inverse(5, n)) % n
        return ClosedForm(value, raw, "-(2*3^m - 3) * 5^(-1) mod (3^(2m) - 1)", "C2 inverse")
    if p == 3:
        raw = 3 ** (2 * m - 1) + 2 * 3 ** (m - 1)
        return ClosedForm(raw % n, raw, "3^(2m-1) + 2*3^(m-1)", "C3 inverse, p = 3")
    num = 3 - 2 * (p**m - 1) * (2 * p**m + 1)
    raw, rem = divmod(num, 3)
    if rem:
        raise HypothesisViolated(f"(3 - 2(p^m-1)(2p^m+1)) is not divisible by 3 for p={p}, m={m}")
    return ClosedForm(raw % n, raw, "(3 - 2(p^m-1)(2p^m+1)) / 3", "C3 inverse, p = 7 mod 12")
