import math
import random

import pytest

from cpplab import modring
from cpplab.errors import HypothesisViolated, NotInvertible


def test_mod_inverse_examples():
    assert modring.mod_inverse(5, 8) == 5
    assert modring.mod_inverse(1, 97) == 1
    assert modring.mod_inverse(9, 8) == 1
    with pytest.raises(NotInvertible):
        modring.mod_inverse(2, 8)


def test_ext_gcd_bezout_random():
    rng = random.Random(128)
    for _ in range(10_000):
        a, b = rng.randrange(2**128), rng.randrange(1, 2**128)
        g, u, w = modring.ext_gcd(a, b)
        assert a * u + b * w == g
        assert g == math.gcd(a, b)


def test_ext_gcd_signs_and_zero():
    assert modring.ext_gcd(0, 5)[0] == 5
    assert modring.ext_gcd(-4, 6)[0] == 2
    with pytest.raises(ValueError):
        modring.ext_gcd(0, 0)


def test_mod_inverse_agrees_with_builtin():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randrange(2, 10**12)
        a = rng.randrange(1, n)
        try:
            want = pow(a, -1, n)
        except ValueError:
            with pytest.raises(NotInvertible):
                modring.mod_inverse(a, n)
        else:
            assert modring.mod_inverse(a, n) == want


@pytest.mark.parametrize("cls,p,m,s,value", [
    ("C1", 3, 1, None, 5),
    ("C1", 3, 5, None, 39285),
    ("C3", 3, 1, 2, 5),
    ("C3", 3, 3, 2, 261),
    ("C3", 7, 1, 2, 37),
    ("C3", 19, 1, 2, 253),
    ("C3", 31, 1, 2, 661),
    ("C2", 3, 1, None, 1),
    ("C2", 3, 3, None, 281),
])
def test_closed_form_examples(cls, p, m, s, value):
    cf = modring.closed_form_exponent(cls, p, m, s)
    assert cf.value == value


def test_closed_form_raw_is_normalized():
    cf = modring.closed_form_exponent("C3", 7, 1, 2)
    assert cf.raw == -59 and cf.value == 37 and 13 * 37 % 48 == 1
    assert modring.closed_form_exponent("C1", 3, 5).value * 245 % (3**10 - 1) == 1


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_closed_forms_match_mod_inverse(m):
    n = 3 ** (2 * m) - 1
    assert modring.closed_form_exponent("C1", 3, m).value == pow(3**m + 2, -1, n)
    assert modring.closed_form_exponent("C2", 3, m).value == pow(2 * 3**m + 3, -1, n)
    assert modring.closed_form_exponent("C3", 3, m, 2).value == pow(2 * (3**m - 1) + 1, -1, n)


@pytest.mark.parametrize("p,m", [(7, 1), (7, 3), (19, 1), (19, 3), (31, 1), (43, 1), (67, 1)])
def test_seven_mod_twelve_matches_mod_inverse(p, m):
    n = p ** (2 * m) - 1
    assert modring.closed_form_exponent("C3", p, m, 2).value == pow(2 * (p**m - 1) + 1, -1, n)


@pytest.mark.parametrize("args", [
    ("C1", 3, 2, None), ("C1", 5, 1, None), ("C2", 3, 4, None),
    ("C3", 7, 1, 4), ("C3", 5, 1, 2), ("C3", 3, 2, 2), ("C4", 3, 1, None),
])
def test_closed_form_hypotheses(args):
    assert not modring.has_closed_form(*args)
    with pytest.raises(HypothesisViolated):
        modring.closed_form_exponent(*args)
