import itertools

import pytest

from cpplab import polyfp


def _brute_irreducible(f, p):
    n = polyfp.degree(f)
    for d in range(1, n // 2 + 1):
        for g in polyfp.monic_polys(p, d):
            if not polyfp.mod(f, g, p):
                return False
    return True


def _mobius(n):
    res, k, m = 1, 2, n
    while k * k <= m:
        if m % k == 0:
            m //= k
            if m % k == 0:
                return 0
            res = -res
        k += 1
    return -res if m > 1 else res


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
def test_ben_or_matches_trial_division(p, n):
    got = [f for f in polyfp.monic_polys(p, n) if polyfp.is_irreducible(f, p)]
    want = [f for f in polyfp.monic_polys(p, n) if _brute_irreducible(f, p)]
    assert got == want
    necklace = sum(_mobius(n // d) * p**d for d in range(1, n + 1) if n % d == 0) // n
    assert len(got) == necklace


def test_first_irreducible_cubic_over_f3():
    # lex order on (a0, a1, a2): x^3+1, x^3+x^2+1 have the root 2 resp. 1
    want = next(f for f in polyfp.monic_polys(3, 3)
                if all(polyfp.evaluate(f, r, 3) for r in range(3)))
    assert want == (1, 0, 2, 1)
    assert polyfp.first_irreducible(3, 3) == want


def test_first_irreducible_linear_is_x():
    assert polyfp.first_irreducible(3, 1) == (0, 1)


def test_divmod_roundtrip():
    p = 7
    for a in itertools.product(range(p), repeat=4):
        a = polyfp.trim(a)
        b = (3, 0, 1)
        q, r = polyfp.divmod_(a, b, p)
        assert polyfp.add(polyfp.mul(q, b, p), r, p) == a
        assert polyfp.degree(r) < 2


def test_ext_gcd_bezout():
    p = 5
    f = polyfp.first_irreducible(p, 3)
    for a in itertools.product(range(p), repeat=3):
        a = polyfp.trim(a)
        if not a:
            continue
        g, u, w = polyfp.ext_gcd(a, f, p)
        assert g == (1,)
        assert polyfp.add(polyfp.mul(u, a, p), polyfp.mul(w, f, p), p) == (1,)
        assert polyfp.mulmod(a, polyfp.inverse_mod(a, f, p), f, p) == (1,)


def test_inverse_mod_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        polyfp.inverse_mod((), (1, 0, 1), 3)
