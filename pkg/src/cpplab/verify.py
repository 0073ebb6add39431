"""Permutation oracles and whole-family verification sweeps.

Three independent ways of deciding that a map permutes GF(q):

* ``is_permutation``: count occurrences of every image index.
* ``pp_by_char_sums``: for every gamma != 0 the trace values Tr(gamma f(x))
  must be equidistributed over GF(p).  Since the minimal polynomial of a
  primitive p-th root of unity w is 1 + X + ... + X^(p-1), the character
  sum sum_c n_c w^c vanishes exactly when all counts n_c agree, so the test
  is done on integer count vectors only.
* ``wan_check``: the two-condition criterion for x^((q-1)/d + 1) + a x.
"""

import functools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from cpplab import families, ff, modring
from cpplab.errors import BadDivisor, NotInvertible, ZeroCoefficient, ZeroGamma
from cpplab.families import FamilySpec
from cpplab.maps import Map, Monomial, PlusX, images_of
from cpplab.tables import Field, FieldTables, maybe_tables, trace_form

EXHAUSTIVE_SCAN_MAX_Q = 4096


# ---------------------------------------------------------------- bijectivity

def _bijective(t: FieldTables, img: np.ndarray) -> bool:
    return bool((np.bincount(img, minlength=t.q) == 1).all())


def is_permutation(field: Field, f: Map, max_q: Optional[int] = None) -> bool:
    t = maybe_tables(field, max_q)
    return _bijective(t, images_of(t, f))


def is_cpp(field: Field, mono: Map, max_q: Optional[int] = None) -> bool:
    t = maybe_tables(field, max_q)
    img = images_of(t, mono)
    return _bijective(t, img) and _bijective(t, t.add(img, t.all()))


# ---------------------------------------------------------------- character sums

def char_sum_uniformity(field: Field, f: Map, gamma: ff.FieldElem,
                        max_q: Optional[int] = None) -> Tuple[Tuple[int, ...], bool]:
    """counts[c] = #{x : Tr(gamma f(x)) = c}; verdict True iff the sum vanishes."""
    t = maybe_tables(field, max_q)
    g = t.idx(gamma)
    if g == 0:
        raise ZeroGamma("gamma must be nonzero")
    vals = t.trace[t.scale(g, images_of(t, f))]
    counts = np.bincount(vals, minlength=t.p)
    return tuple(int(c) for c in counts), bool((counts == t.q // t.p).all())


@functools.lru_cache(maxsize=8)
def _shift_index(p: int) -> np.ndarray:
    g, y, r = np.meshgrid(np.arange(p), np.arange(p), np.arange(p), indexing="ij")
    return (r - g * y) % p


def _count_transform(t: FieldTables, hist: np.ndarray) -> np.ndarray:
    """out[w, c] = sum_y hist[y] [w . y = c], w and y as GF(p) digit vectors.

    One pass per digit position; exact integer arithmetic throughout.
    """
    p, k = t.p, t.k
    a = np.zeros((t.q, p), dtype=np.int64)
    a[:, 0] = hist
    a = a.reshape((p,) * k + (p,))
    ys = np.arange(p)[None, :, None]
    shift = _shift_index(p)
    for axis in range(k):
        # x[rest, y, c] -> out[rest, g, r] = sum_y x[rest, y, r - g*y]
        x = np.moveaxis(a, axis, -2).reshape(-1, p, p)
        out = x[:, ys, shift].sum(axis=2)
        a = np.moveaxis(out.reshape(np.moveaxis(a, axis, -2).shape), -2, axis)
    return np.ascontiguousarray(a).reshape(t.q, p)


def char_sum_table(field: Field, f: Map, max_q: Optional[int] = None) -> np.ndarray:
    """Row gamma: trace-value counts of gamma f(x) over all x (row 0 is gamma = 0)."""
    t = maybe_tables(field, max_q)
    return _char_sum_table(t, images_of(t, f))


def _char_sum_table(t: FieldTables, img: np.ndarray) -> np.ndarray:
    hist = np.bincount(img, minlength=t.q)
    return _count_transform(t, hist)[trace_form(t)]


def _sums_vanish(t: FieldTables, img: np.ndarray) -> bool:
    table = _char_sum_table(t, img)
    return bool((table[1:] == t.q // t.p).all())


def pp_by_char_sums(field: Field, f: Map, max_q: Optional[int] = None) -> bool:
    t = maybe_tables(field, max_q)
    return _sums_vanish(t, images_of(t, f))


# ---------------------------------------------------------------- Wan criterion

def wan_check(field: Field, d: int, a: ff.FieldElem, max_q: Optional[int] = None) -> bool:
    """Decide whether x^((q-1)/d + 1) + a x permutes GF(q) without evaluating it.

    (i) (-a)^d != 1;  (ii) ((a + z^i)/(a + z^j))^((q-1)/d) != z^(j-i) for all
    0 <= i < j < d, z = g^((q-1)/d).  A pair with a + z^j = 0 counts as
    satisfied; under (i) that case cannot occur because -a would lie in <z>.
    """
    t = maybe_tables(field, max_q)
    ctx = t.ctx
    n = t.q - 1
    if d <= 0 or n % d:
        raise BadDivisor(f"d = {d} does not divide q-1 = {n}")
    if ff.is_zero(a):
        raise ZeroCoefficient("a must be nonzero")
    unit = ff.one(ctx)
    if ff.power(ctx, ff.neg(ctx, a), d) == unit:
        return False
    k = n // d
    z = ff.power(ctx, t.generator, k)
    zp = [unit]
    for _ in range(d - 1):
        zp.append(ff.mul(ctx, zp[-1], z))
    lifted = [ff.power(ctx, ff.add(ctx, a, zi), k) for zi in zp]
    for j in range(d):
        if ff.is_zero(ff.add(ctx, a, zp[j])):
            continue
        aj = lifted[j]
        for i in range(j):
            # ratio^k == z^(j-i)  <=>  lifted_i == z^(j-i) * lifted_j
            if lifted[i] == ff.mul(ctx, zp[j - i], aj):
                return False
    return True


# ---------------------------------------------------------------- scans

def _cpp_unit_indices(t: FieldTables, xd: np.ndarray, v_indices) -> List[int]:
    xs = t.all()
    hits = []
    for vi in v_indices:
        img = t.scale(t.inv(int(vi)), xd)
        if _bijective(t, img) and _bijective(t, t.add(img, xs)):
            hits.append(int(vi))
    return hits


def cpp_scan(field: Field, d: int, strategy: str = "auto",
             max_q: Optional[int] = None) -> FrozenSet[ff.FieldElem]:
    """All v != 0 for which v^-1 x^d is a complete permutation of GF(q).

    "exhaustive" tests every v.  "cosets" tests one v per coset of the
    image of x -> x^(d-1): substituting x -> bx turns x^d + v x into
    b^d (x^d + v b^(1-d) x), so the verdict is constant on those cosets.
    "auto" is exhaustive up to EXHAUSTIVE_SCAN_MAX_Q.
    """
    t = maybe_tables(field, max_q)
    n = t.q - 1
    if gcd(d, n) != 1:
        raise NotInvertible(f"gcd({d}, q-1) != 1")
    if strategy == "auto":
        strategy = "exhaustive" if t.q <= EXHAUSTIVE_SCAN_MAX_Q else "cosets"
    xd = t.power(t.all(), d)
    if strategy == "exhaustive":
        hits = _cpp_unit_indices(t, xd, range(1, t.q))
    elif strategy == "cosets":
        c = gcd(d - 1, n)
        reps = _cpp_unit_indices(t, xd, t.exp[:c])
        hits = []
        for r in reps:
            lr = int(t.log[r])
            hits.extend(int(i) for i in t.exp[(lr + c * np.arange(n // c)) % n])
    else:
        raise ValueError(f"unknown scan strategy {strategy!r}")
    return frozenset(t.elem(i) for i in hits)


# ---------------------------------------------------------------- family sweep

@dataclass
class VRecord:
    v: ff.FieldElem
    index: int
    is_pp: bool
    is_cpp: bool
    composition_ok: bool
    inverse_ok: bool
    inverse_is_cpp: bool
    char_sum_ok: bool
    wan_ok: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return (self.is_pp and self.is_cpp and self.composition_ok and self.inverse_ok
                and self.inverse_is_cpp and self.char_sum_ok and self.wan_ok is not False)


@dataclass
class VerifyReport:
    spec: FamilySpec
    ctx: ff.FieldCtx
    d: int
    inverse_e: int
    inverse_path: str
    closed_form: Optional[modring.ClosedForm]
    records: List[VRecord]
    expected_count: int
    scan: Optional[FrozenSet[ff.FieldElem]] = None
    elapsed_ms: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def admissible_count(self) -> int:
        return len(self.records)

    @property
    def scan_superset_ok(self) -> Optional[bool]:
        if self.scan is None:
            return None
        return all(r.v in self.scan for r in self.records)

    @property
    def scan_equals_admissible(self) -> Optional[bool]:
        if self.scan is None:
            return None
        return self.scan == frozenset(r.v for r in self.records)

    @property
    def failures(self) -> List[VRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def all_pass(self) -> bool:
        return (not self.failures and self.admissible_count == self.expected_count
                and self.scan_superset_ok is not False)


def _check_one(t: FieldTables, ctx, spec: FamilySpec, v, e: int, generic_e: int,
               max_q: Optional[int] = None) -> VRecord:
    xs = t.all()
    fwd = families.forward_monomial(ctx, spec, v)
    bwd = families.inverse_monomial(ctx, spec, v)
    img_f = fwd.images(t)
    img_fx = t.add(img_f, xs)
    img_b = bwd.images(t)
    is_pp = _bijective(t, img_f)
    is_cpp_ = is_pp and _bijective(t, img_fx)
    composition_ok = bool((img_b[img_f] == xs).all() and (img_f[img_b] == xs).all())
    inverse_is_cpp = _bijective(t, img_b) and _bijective(t, t.add(img_b, xs))
    char_sum_ok = _sums_vanish(t, img_f) and _sums_vanish(t, img_fx)
    wan_ok = None
    if spec.cls == "C3":
        wan_ok = wan_check(t, (spec.p**spec.m + 1) // spec.s, v, max_q)
    return VRecord(v, ff.index(ctx, v), is_pp, is_cpp_, composition_ok, e == generic_e,
                   inverse_is_cpp, char_sum_ok, wan_ok)


def verify_family(spec: FamilySpec, ctx: Optional[ff.FieldCtx] = None, workers: int = 1,
                  scan: bool = True, max_q: Optional[int] = None) -> VerifyReport:
    start = time.perf_counter()
    spec = families.validate(spec)
    if ctx is None:
        ctx = families.family_ctx(spec, max_q)
    t = maybe_tables(ctx, max_q)
    vs = families.admissible_v(ctx, spec)
    e, path, cf = families.inverse_exponent(spec)
    generic_e = modring.mod_inverse(spec.d, ctx.q - 1)

    def run(v):
        return _check_one(t, ctx, spec, v, e, generic_e, max_q)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run, vs))
    else:
        records = [run(v) for v in vs]
    records.sort(key=lambda r: r.index)
    found = cpp_scan(t, spec.d, max_q=max_q) if scan else None
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerifyReport(spec, ctx, spec.d, e, path, cf, records,
                        families.expected_count(spec), found, elapsed)
