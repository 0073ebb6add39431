import sys

import pytest

from cpplab import ff


@pytest.fixture(scope="session")
def f9():
    return ff.make_ctx(3, 1, ff.TopModulus.X2_PLUS_1)


@pytest.fixture(scope="session")
def f9b():
    """GF(9) through x^2 + 2x + 2."""
    return ff.make_ctx(3, 1, ff.TopModulus.X2_2X_2)


@pytest.fixture(scope="session")
def f49():
    return ff.make_ctx(7, 1)


@pytest.fixture(scope="session")
def f729():
    return ff.make_ctx(3, 3, ff.TopModulus.X2_PLUS_1)


def base(ctx, *coeffs):
    return tuple(coeffs) + (0,) * (ctx.m - len(coeffs))


def elem(ctx, a0, a1):
    """Element with constant-only coordinates a0 + a1*alpha."""
    return ff.FieldElem(base(ctx, a0 % ctx.p), base(ctx, a1 % ctx.p))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
