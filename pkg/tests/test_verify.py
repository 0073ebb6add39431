import random
from math import gcd

import numpy as np
import pytest

from conftest import elem
from cpplab import families, ff, verify
from cpplab.errors import BadDivisor, NotInvertible, UnsupportedSize, ZeroCoefficient, ZeroGamma
from cpplab.families import FamilySpec
from cpplab.maps import Monomial, PlusX, Polynomial
from cpplab.tables import BaseField, tables


def _ident(x):
    return x


# ---------------------------------------------------------------- bijectivity

def test_is_permutation_examples(f9):
    assert verify.is_permutation(f9, _ident)
    assert not verify.is_permutation(f9, lambda x: ff.one(f9))
    assert verify.is_permutation(f9, Monomial(ff.one(f9), 5))
    assert not verify.is_permutation(f9, Monomial(ff.one(f9), 2))


def test_is_cpp_examples(f9):
    assert verify.is_cpp(f9, Monomial(elem(f9, 0, 2), 5))
    # v = 1 lies outside the admissible set; only recorded
    verify.is_cpp(f9, Monomial(ff.one(f9), 5))
    for c in ff.enumerate_field(f9)[1:]:
        want = c != ff.const(f9, -1)
        assert verify.is_cpp(f9, Monomial(c, 1)) == want


def test_size_cap(f729):
    with pytest.raises(UnsupportedSize):
        verify.is_permutation(f729, _ident, max_q=500)
    assert verify.is_permutation(f729, _ident, max_q=729)


@pytest.mark.parametrize("field", ["f9", "f729", "f49"])
def test_monomial_gcd_criterion(field, request):
    ctx = request.getfixturevalue(field)
    fields = [ctx] + ([BaseField(ctx)] if ctx.m == 3 else [])
    for fld in fields:
        t = tables(fld)
        one = t.elem(1)
        for n in range(1, t.q):
            assert verify.is_permutation(t, Monomial(one, n)) == (gcd(n, t.q - 1) == 1)


# ---------------------------------------------------------------- character sums

def test_char_sum_examples(f9, f729):
    for ctx in (f9, f729):
        for g in (ff.one(ctx), ff.alpha(ctx)):
            counts, ok = verify.char_sum_uniformity(ctx, _ident, g)
            assert ok and counts == (ctx.q // 3,) * 3
    counts, ok = verify.char_sum_uniformity(f9, lambda x: ff.zero(f9), ff.one(f9))
    assert counts == (9, 0, 0) and not ok
    with pytest.raises(ZeroGamma):
        verify.char_sum_uniformity(f9, _ident, ff.zero(f9))


def test_char_sums_vanish_for_c1_instance(f9):
    a = ff.alpha(f9)
    f = Polynomial((ff.zero(f9), a) + (ff.zero(f9),) * 3 + (ff.one(f9),))  # x^5 + a x
    for g in ff.enumerate_field(f9)[1:]:
        assert verify.char_sum_uniformity(f9, f, g)[1]
    assert verify.pp_by_char_sums(f9, f)


def test_pp_by_char_sums_examples(f9):
    assert verify.pp_by_char_sums(f9, _ident)
    assert not verify.pp_by_char_sums(f9, Monomial(ff.one(f9), 2))


@pytest.mark.parametrize("field", ["f9", "f9b", "f49", "f729"])
def test_table_matches_per_gamma(field, request):
    ctx = request.getfixturevalue(field)
    rng = random.Random(ctx.q)
    for fld in ([ctx, BaseField(ctx)] if ctx.m == 3 else [ctx]):
        t = tables(fld)
        f = Monomial(t.elem(rng.randrange(1, t.q)), rng.randrange(1, t.q))
        table = verify.char_sum_table(t, f)
        for g in range(1, t.q, max(1, t.q // 60)):
            counts, _ = verify.char_sum_uniformity(t, f, t.elem(g))
            assert tuple(table[g]) == counts
        assert tuple(table[0]) == (t.q,) + (0,) * (t.p - 1)


def test_char_sums_by_object_arithmetic(f49):
    # element-by-element trace counts, no lookup tables involved
    f = Monomial(elem(f49, 3, 1), 5)
    for gi in (1, 8, 30, 48):
        g = ff.from_index(f49, gi)
        counts = [0] * 7
        for x in ff.enumerate_field(f49):
            counts[ff.abs_trace(f49, ff.mul(f49, g, f.evaluate(f49, x)))] += 1
        assert verify.char_sum_uniformity(f49, f, g)[0] == tuple(counts)


@pytest.mark.parametrize("field", ["f9", "f49"])
def test_char_sums_agree_with_bijectivity_random(field, request):
    ctx = request.getfixturevalue(field)
    t = tables(ctx)
    rng = random.Random(1)
    for _ in range(60):
        coeffs = tuple(t.elem(rng.randrange(t.q)) for _ in range(rng.randrange(1, 8)))
        f = Polynomial(coeffs)
        assert verify.is_permutation(t, f) == verify.pp_by_char_sums(t, f)
        assert verify.is_permutation(t, PlusX(f)) == verify.pp_by_char_sums(t, PlusX(f))


# ---------------------------------------------------------------- Wan criterion

def test_wan_examples(f9):
    assert verify.wan_check(f9, 2, ff.alpha(f9))
    assert not verify.wan_check(f9, 2, ff.one(f9))
    assert not verify.wan_check(f9, 2, ff.const(f9, -1))
    with pytest.raises(BadDivisor):
        verify.wan_check(f9, 3, ff.one(f9))
    with pytest.raises(BadDivisor):
        verify.wan_check(f9, 0, ff.one(f9))
    with pytest.raises(ZeroCoefficient):
        verify.wan_check(f9, 2, ff.zero(f9))


def _wan_poly(t, d, a):
    k = (t.q - 1) // d + 1
    return t.add(t.power(t.all(), k), t.scale(t.idx(a), t.all()))


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (7, 1)])
def test_wan_agrees_with_exhaustive(p, m):
    ctx = ff.make_ctx(p, m)
    t = tables(ctx)
    for d in range(1, t.q):
        if (t.q - 1) % d:
            continue
        for ai in range(1, t.q):
            a = t.elem(ai)
            want = len(set(_wan_poly(t, d, a).tolist())) == t.q
            assert verify.wan_check(t, d, a) == want, (d, ai)


def test_wan_randomized_f729(f729):
    t = tables(f729)
    rng = random.Random(9)
    divisors = [d for d in range(1, 729) if 728 % d == 0 and d <= 56]
    for _ in range(150):
        d, a = rng.choice(divisors), t.elem(rng.randrange(1, 729))
        want = len(set(_wan_poly(t, d, a).tolist())) == 729
        assert verify.wan_check(t, d, a) == want


# ---------------------------------------------------------------- scans

def test_scan_examples(f9):
    found = verify.cpp_scan(f9, 5)
    assert {ff.alpha(f9), elem(f9, 0, 2)} <= found
    lin = verify.cpp_scan(f9, 1)
    want = {v for v in ff.enumerate_field(f9)[1:] if v != ff.const(f9, -1)}
    assert lin == want
    with pytest.raises(NotInvertible):
        verify.cpp_scan(f9, 2)
    with pytest.raises(ValueError):
        verify.cpp_scan(f9, 5, strategy="guess")


@pytest.mark.parametrize("field", ["f9", "f9b", "f49", "f729"])
def test_scan_strategies_agree(field, request):
    ctx = request.getfixturevalue(field)
    n = ctx.q - 1
    for d in [d for d in range(1, min(ctx.q, 80)) if gcd(d, n) == 1][:8]:
        assert verify.cpp_scan(ctx, d, "exhaustive") == verify.cpp_scan(ctx, d, "cosets")


# ---------------------------------------------------------------- family sweeps

@pytest.mark.parametrize("spec,count,path", [
    (FamilySpec("C1", 3, 3), 26, "closed-form"),
    (FamilySpec("C2", 3, 1), 4, "closed-form"),
    (FamilySpec("C3", 7, 1, 4), 6, "generic"),
])
def test_verify_family_examples(spec, count, path):
    rep = verify.verify_family(spec)
    assert rep.all_pass
    assert rep.admissible_count == count == rep.expected_count
    assert rep.inverse_path == path
    assert rep.scan_superset_ok
    wan = [r.wan_ok for r in rep.records]
    assert wan == ([True] * count if spec.cls == "C3" else [None] * count)


def test_workers_do_not_change_records():
    spec = FamilySpec("C3", 19, 1, 2)
    one = verify.verify_family(spec, workers=1, scan=False)
    four = verify.verify_family(spec, workers=4, scan=False)
    assert one.records == four.records
    assert [r.index for r in one.records] == sorted(r.index for r in one.records)


def test_report_flags_a_broken_inverse(monkeypatch):
    spec = FamilySpec("C1", 3, 1)
    monkeypatch.setattr(families, "inverse_exponent", lambda s: (3, "closed-form", None))
    rep = verify.verify_family(spec, scan=False)
    assert not rep.all_pass
    assert rep.failures and not rep.failures[0].composition_ok
    assert not rep.failures[0].inverse_ok


def test_report_flags_missing_scan_member():
    spec = FamilySpec("C1", 3, 1)
    rep = verify.verify_family(spec)
    rep.scan = frozenset()
    assert rep.scan_superset_ok is False and not rep.all_pass


def test_scan_superset_strict_cases_recorded():
    rep = verify.verify_family(FamilySpec("C3", 7, 1, 4))
    assert rep.scan_superset_ok
    assert len(rep.scan) >= rep.admissible_count
    assert np.isfinite(rep.elapsed_ms)
