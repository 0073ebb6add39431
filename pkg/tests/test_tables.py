import numpy as np
import pytest

from cpplab import ff
from cpplab.errors import DivisionByZero, UnsupportedSize
from cpplab.tables import BaseField, maybe_tables, tables, trace_form


@pytest.fixture(params=["f9", "f9b", "f49", "f729"])
def ctx(request):
    return request.getfixturevalue(request.param)


def test_ops_match_object_arithmetic(ctx):
    t = tables(ctx)
    rng = np.random.default_rng(ctx.q)
    a = rng.integers(0, t.q, 400)
    b = rng.integers(0, t.q, 400)
    add, sub, mul = t.add(a, b), t.sub(a, b), t.mul(a, b)
    for i in range(len(a)):
        x, y = t.elem(a[i]), t.elem(b[i])
        assert t.elem(add[i]) == ff.add(ctx, x, y)
        assert t.elem(sub[i]) == ff.sub(ctx, x, y)
        assert t.elem(mul[i]) == ff.mul(ctx, x, y)
    for e in (0, 1, 2, 5, t.q - 2, t.q + 3):
        pw = t.power(a, e)
        for i in range(0, len(a), 37):
            assert t.elem(pw[i]) == ff.power(ctx, t.elem(a[i]), e)


def test_zech_add_equals_digit_add(ctx):
    t = tables(ctx)
    xs = t.all()
    for y in (0, 1, t.q // 2, t.q - 1):
        assert (t.add(xs, y) == t.add_digits(xs, y)).all()


def test_exp_log_and_trace(ctx):
    t = tables(ctx)
    assert sorted(t.exp.tolist()) == list(range(1, t.q))
    assert (t.exp[t.log[1:]] == np.arange(1, t.q)).all()
    assert t.log[0] == -1
    for i in range(0, t.q, max(1, t.q // 50)):
        assert t.trace[i] == ff.abs_trace(ctx, t.elem(i))
    assert t.inv(1) == 1
    with pytest.raises(DivisionByZero):
        t.inv(0)


def test_scale_matches_mul(ctx):
    t = tables(ctx)
    xs = t.all()
    for c in (0, 1, 2, t.q - 1):
        assert (t.scale(c, xs) == t.mul(np.full(t.q, c), xs)).all()


def test_base_tables(f729):
    t = tables(BaseField(f729))
    assert (t.q, t.k, t.is_base) == (27, 3, True)
    rng = np.random.default_rng(1)
    a, b = rng.integers(0, 27, 200), rng.integers(0, 27, 200)
    mul = t.mul(a, b)
    for i in range(200):
        want = ff.base_mul(f729, t.elem(a[i]).a0, t.elem(b[i]).a0)
        assert t.elem(mul[i]).a0 == want
    assert all(t.trace[i] == ff.base_abs_trace(f729, t.elem(i).a0) for i in range(27))
    with pytest.raises(ValueError):
        t.idx(ff.alpha(f729))


def test_trace_form_rows(f49):
    t = tables(f49)
    tf = trace_form(t)
    g = 17
    row = t.digits[tf[g]]
    for j in range(t.k):
        assert row[j] == t.trace[t.mul(g, t.p**j)]


def test_maybe_tables_respects_cap(f729):
    with pytest.raises(UnsupportedSize):
        maybe_tables(f729, max_q=100)
    assert maybe_tables(BaseField(f729), max_q=100).q == 27
