"""Serialization of verification reports (JSON, CSV, text)."""

import csv
import io
import json
from typing import Any, Dict, Optional

from cpplab import __version__, ff
from cpplab.verify import VerifyReport


def field_json(ctx: ff.FieldCtx) -> Dict[str, Any]:
    return {
        "p": ctx.p,
        "m": ctx.m,
        "base_modulus": list(ctx.base_modulus),
        "top_modulus": [list(c) for c in ctx.top_modulus],
        "top_variant": ctx.variant.value,
    }


def report_dict(rep: VerifyReport, config: Optional[Dict[str, Any]] = None,
                timing: bool = True) -> Dict[str, Any]:
    family = {
        "class": rep.spec.cls,
        "spec": rep.spec.to_json(),
        "d": str(rep.d),
        "inverse_e": str(rep.inverse_e),
        "inverse_path": rep.inverse_path,
    }
    if rep.closed_form is not None:
        family["closed_form"] = {
            "formula": rep.closed_form.formula,
            "raw": str(rep.closed_form.raw),
            "source": rep.closed_form.source,
        }
    results = [
        {
            "v": ff.encode(r.v),
            "index": r.index,
            "is_pp": r.is_pp,
            "is_cpp": r.is_cpp,
            "composition_ok": r.composition_ok,
            "inverse_ok": r.inverse_ok,
            "inverse_is_cpp": r.inverse_is_cpp,
            "char_sum_ok": r.char_sum_ok,
            "wan_ok": r.wan_ok,
        }
        for r in rep.records
    ]
    summary: Dict[str, Any] = {
        "count": rep.admissible_count,
        "expected_count": rep.expected_count,
        "all_pass": rep.all_pass,
        "failures": [ff.encode(r.v) for r in rep.failures],
        "elapsed_ms": round(rep.elapsed_ms, 3) if timing else None,
    }
    if rep.scan is not None:
        summary["scan_count"] = len(rep.scan)
        summary["scan_superset_ok"] = rep.scan_superset_ok
        summary["scan_equals_admissible"] = rep.scan_equals_admissible
    return {
        "version": __version__,
        "config": config or {},
        "field": field_json(rep.ctx),
        "family": family,
        "results": results,
        "summary": summary,
    }


def to_json(rep: VerifyReport, config=None, timing: bool = True) -> str:
    return json.dumps(report_dict(rep, config, timing), indent=2, sort_keys=True) + "\n"


CSV_COLUMNS = ["class", "p", "m", "s", "d", "inverse_e", "inverse_path", "index", "v",
               "is_pp", "is_cpp", "composition_ok", "inverse_ok", "inverse_is_cpp",
               "char_sum_ok", "wan_ok"]


def to_csv(rep: VerifyReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rep.records:
        w.writerow([rep.spec.cls, rep.spec.p, rep.spec.m, rep.spec.s or "", rep.d,
                    rep.inverse_e, rep.inverse_path, r.index, json.dumps(ff.encode(r.v)),
                    r.is_pp, r.is_cpp, r.composition_ok, r.inverse_ok, r.inverse_is_cpp,
                    r.char_sum_ok, "" if r.wan_ok is None else r.wan_ok])
    return buf.getvalue()


def to_text(rep: VerifyReport, timing: bool = True) -> str:
    s = rep.spec
    lines = [
        f"family {s.cls}  p={s.p} m={s.m}" + (f" s={s.s}" if s.s else "")
        + f"  modulus={rep.ctx.variant.value}  q={rep.ctx.q}",
        f"forward exponent d = {rep.d}",
        f"inverse exponent e = {rep.inverse_e} ({rep.inverse_path})",
    ]
    if rep.closed_form is not None:
        lines.append(f"  closed form {rep.closed_form.formula} = {rep.closed_form.raw}")
    lines.append(f"admissible v: {rep.admissible_count} (expected {rep.expected_count})")
    bad = rep.failures
    lines.append(f"passed: {rep.admissible_count - len(bad)}/{rep.admissible_count}")
    for r in bad:
        lines.append(f"  FAIL v={ff.encode(r.v)} {r}")
    if rep.scan is not None:
        lines.append(f"cpp scan: {len(rep.scan)} coefficients, superset={rep.scan_superset_ok},"
                     f" equal={rep.scan_equals_admissible}")
    if timing:
        lines.append(f"elapsed: {rep.elapsed_ms:.1f} ms")
    lines.append("ALL PASS" if rep.all_pass else "FAILED")
    return "\n".join(lines) + "\n"
