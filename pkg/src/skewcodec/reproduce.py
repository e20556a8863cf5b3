"""Run the built-in manifests and compare computed values with the typeset ones."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache, reduce
from typing import Callable

from . import manifests as mf
from .errors import SkewCodecError
from .gf import GF
from .gray import gray_image_code, min_distance
from .mixedcode import CodeContext, build_mixed_code, minimal_generating_set, module_basis
from .qecc import css, dual_containing_mixed, dual_containing_theta, dual_containing_theta_big, reciprocal_test
from .skewpoly import SkewPoly, format_poly


@dataclass
class Check:
    name: str
    expected: object
    computed: object
    informational: bool = False

    @property
    def ok(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        out = {"name": self.name, "expected": _plain(self.expected), "computed": _plain(self.computed), "ok": self.ok}
        if self.informational:
            out["informational"] = True
        return out


@dataclass
class EntryResult:
    id: str
    citation: str
    checks: list = dc_field(default_factory=list)
    error: str | None = None
    skipped: str | None = None
    seconds: float = 0.0

    @property
    def verdict(self) -> str:
        if self.skipped:
            return "SKIP"
        if self.error or not all(c.ok for c in self.checks if not c.informational):
            return "FAIL"
        return "PASS"

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "citation": self.citation,
            "verdict": self.verdict,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.error:
            out["error"] = self.error
        if self.skipped:
            out["skipped"] = self.skipped
        return out

    def diff_lines(self) -> list[str]:
        lines = [f"{c.name}: expected {_plain(c.expected)}, got {_plain(c.computed)}" for c in self.checks if not c.ok]
        if self.error:
            lines.append(self.error)
        return lines


def _plain(v):
    if isinstance(v, tuple):
        return list(v)
    return v


@lru_cache(maxsize=None)
def field_context(name: str, i: int | None = None) -> CodeContext:
    spec = mf.FIELDS[name]
    F = GF(spec["p"], spec["m"], spec["modulus"])
    return CodeContext(F, spec["frobenius_power"] if i is None else i)


def compact_poly(ctx: CodeContext, s: str) -> SkewPoly:
    return ctx.fpoly(mf.parse_compact(s))


def latex_poly(ctx: CodeContext, s) -> SkewPoly:
    if isinstance(s, (list, tuple)):
        return reduce(lambda a, b: a * b, (latex_poly(ctx, f) for f in s))
    return ctx.fpoly(mf.latex_to_text(s))


def _distance(lc, strategy, budget, workers) -> int:
    return min_distance(lc, strategy=strategy, budget=budget, workers=workers).distance


def _qecc_triple(n, k, d, q, dual_ok) -> tuple | str:
    try:
        p = css(n, k, d, q, dual_ok)
    except SkewCodecError as e:
        return type(e).__name__
    return (p.n, p.k, p.d)


# -- entry runners -----------------------------------------------------------------


def run_table1(row: int, opts: dict, data=None, i=None) -> list[Check]:
    s, t1, t2, t3, t4, (n, k, d) = data or mf.TABLE1[row]
    ctx = field_context("F9", i)
    ts = [compact_poly(ctx, x) for x in (t1, t2, t3, t4)]
    checks = [Check("dimension 4s - sum deg t_i", k, 4 * s - sum(t.degree for t in ts))]
    code = build_mixed_code(ctx, 0, s, 1, None, ts)
    lc = gray_image_code(code)
    checks.append(Check("distance", d, _distance(lc, **opts)))
    return checks


def run_table2(row: int, opts: dict, data=None, i=None) -> list[Check]:
    fname, n, ell_s, printed = data or mf.TABLE2[row]
    ctx = field_context(fname, i)
    return _theta_code_checks(ctx, n, compact_poly(ctx, ell_s), printed, opts)


def _theta_code_checks(ctx, n, ell, printed, opts) -> list[Check]:
    code = build_mixed_code(ctx, n, 0, ell, None, None)
    lc = gray_image_code(code)
    d = _distance(lc, **opts)
    dual_ok = bool(dual_containing_theta(ctx, n, code.ell))
    q = ctx.q
    got = _qecc_triple(n, lc.k, d, q, dual_ok)
    checks = [
        Check("dual-containing", True, dual_ok),
        Check("[[n,k,d]]", tuple(printed), got),
    ]
    if isinstance(got, tuple):
        checks.append(Check("MDS defect", 0, got[0] - got[1] + 2 - 2 * got[2]))
    return checks


def run_table3(row: int, opts: dict, data=None, i=None) -> list[Check]:
    fname, s, t1, t2, t3, t4, classical, quantum = data or mf.TABLE3[row]
    ctx = field_context(fname, i)
    ts = [compact_poly(ctx, x) for x in (t1, t2, t3, t4)]
    code = build_mixed_code(ctx, 0, s, 1, None, ts)
    lc = gray_image_code(code)
    d = _distance(lc, **opts)
    dual_ok = dual_containing_theta_big(ctx, s, code.t)[0]
    return [
        Check("[n,k,d]", tuple(classical), (lc.n, lc.k, d)),
        Check("dual-containing", True, dual_ok),
        Check("[[n,k,d]]", tuple(quantum), _qecc_triple(lc.n, lc.k, d, ctx.q, dual_ok)),
    ]


def run_table4(row: int, opts: dict, data=None, i=None) -> list[Check]:
    fname, r, s, ell_s, t1, t2, t3, t4, classical, quantum = data or mf.TABLE4[row]
    ctx = field_context(fname, i)
    ts = [compact_poly(ctx, x) for x in (t1, t2, t3, t4)]
    code = build_mixed_code(ctx, r, s, compact_poly(ctx, ell_s), None, ts)
    lc = gray_image_code(code)
    d = _distance(lc, **opts)
    dual_ok = dual_containing_mixed(code)
    return [
        Check("[n,k,d]", tuple(classical), (lc.n, lc.k, d)),
        Check("dual-containing", True, dual_ok),
        Check("[[n,k,d]]", tuple(quantum), _qecc_triple(lc.n, lc.k, d, ctx.q, dual_ok)),
    ]


def run_example(key: str, opts: dict) -> list[Check]:
    ex = mf.EXAMPLES[key]
    ctx = field_context(ex["field"])
    r, s = ex["r"], ex["s"]
    ell = latex_poly(ctx, ex["ell"])
    ts = [latex_poly(ctx, f) for f in ex["t"]]
    code = build_mixed_code(ctx, r, s, ell, None, ts)
    pr = ex["printed"]
    fmt = format_poly
    checks = [Check("k", ex["classical"][1], code.k)]

    def poly_check(name, printed, computed):
        checks.append(Check(name, fmt(latex_poly(ctx, printed)), fmt(computed)))

    fres = reciprocal_test(ctx, r, code.f)
    poly_check("f", pr["f"], code.f)
    poly_check("f_dagger", pr["f_dagger"], code.f.reciprocal())
    checks.append(Check(f"x^{r} - 1 right-divides f_dagger f", True, fres.holds))
    if fres.holds:
        poly_check("f_dagger f cofactor", pr["f_cofactor"], fres.cofactor)
    for j in range(4):
        hres = reciprocal_test(ctx, s, code.h[j])
        poly_check(f"h{j + 1}", pr["h"][j], code.h[j])
        poly_check(f"h{j + 1}_dagger", pr["h_dagger"][j], code.h[j].reciprocal())
        checks.append(Check(f"x^{s} - 1 right-divides h{j + 1}_dagger h{j + 1}", True, hres.holds))
        if hres.holds:
            poly_check(f"h{j + 1}_dagger h{j + 1} cofactor", pr["h_cofactor"][j], hres.cofactor)

    # punctured parts
    cr = build_mixed_code(ctx, r, 0, ell, None, None)
    lcr = gray_image_code(cr)
    checks.append(Check("C_r", tuple(ex["parts"]["C_r"]), (lcr.n, lcr.k, _distance(lcr, **opts))))
    cs = build_mixed_code(ctx, 0, s, 1, None, ts)
    lcs = gray_image_code(cs)
    checks.append(Check("Phi1(C_s)", tuple(ex["parts"]["C_s"]), (lcs.n, lcs.k, _distance(lcs, **opts))))

    lc = gray_image_code(code)
    d = _distance(lc, **opts)
    dual_ok = dual_containing_mixed(code)
    checks.append(Check("[n,k,d]", tuple(ex["classical"]), (lc.n, lc.k, d)))
    checks.append(Check("dual-containing", True, dual_ok))
    checks.append(Check("[[n,k,d]]", tuple(ex["qecc"]), _qecc_triple(lc.n, lc.k, d, ctx.q, dual_ok)))
    return checks


def run_section3(opts: dict) -> list[Check]:
    ex = mf.SECTION3
    ctx = field_context(ex["field"])
    F = ctx.field
    r, s = ex["r"], ex["s"]
    ts = [latex_poly(ctx, t) for t in ex["t"]]
    code = build_mixed_code(ctx, r, s, latex_poly(ctx, ex["ell"]), latex_poly(ctx, ex["s_poly"]), ts)
    gs = minimal_generating_set(code)
    layout = []
    for w in gs.words:
        field_block = [F.fmt(c) for c in w.g]
        ring_block = []
        for b in w.b:
            nz = [j for j in range(4) if b[j]]
            ring_block.append(None if not nz else (nz[0] + 1, F.fmt(b[nz[0]])) if len(nz) == 1 else "mixed")
        layout.append((field_block, ring_block))
    expected_layout = [(list(fb), list(rb)) for fb, rb in ex["matrix"]]
    expected_layout = [(fb, [None if e is None else tuple(e) for e in rb]) for fb, rb in expected_layout]
    return [
        Check("log_q |D| from generator degrees", ex["log_q_size"], code.k),
        Check("generating set size", len(ex["matrix"]), len(gs)),
        Check("generator matrix layout", expected_layout, layout),
        Check("ell |_r h1 s (structure condition)", True, code.constraints["ell_divides_h1_s"], True),
        Check("log_q |D| by closure", ex["log_q_size"], int(module_basis(code).shape[0]), True),
        Check("f", format_poly(latex_poly(ctx, ex["printed"]["f"])), format_poly(code.f), True),
    ]


def with_amendment(table: str, runner, row: int):
    """Run a table row; if an alternative reading is on file, append its checks as informational."""

    def run(opts):
        amend = mf.AMENDED.get((table, row))
        try:
            checks = runner(row, opts)
        except SkewCodecError as e:
            if not amend:
                raise
            checks = [Check("typeset reading", "valid", f"{type(e).__name__}: {e}")]
        if amend:
            data = list(getattr(mf, table.upper())[row])
            for idx, val in amend["replace"].items():
                data[idx] = val
            try:
                extra = runner(row, opts, tuple(data), amend.get("frobenius_power"))
                checks += [Check(f"[alternative reading] {c.name}", c.expected, c.computed, True) for c in extra]
            except SkewCodecError as e:
                checks.append(Check("[alternative reading]", "valid", f"{type(e).__name__}: {e}", True))
        return checks

    return run


# -- registry ----------------------------------------------------------------------


def entries(which) -> list[tuple[str, str, Callable[[dict], list]]]:
    out = []
    for w in which:
        if w == "table1":
            out += [(f"table1-row{i + 1:02d}", f"catalogue 1 row {i + 1}", with_amendment("table1", run_table1, i)) for i in range(len(mf.TABLE1))]
        elif w == "table2":
            out += [(f"table2-row{i + 1:02d}", f"catalogue 2 row {i + 1}", with_amendment("table2", run_table2, i)) for i in range(len(mf.TABLE2))]
        elif w == "table3":
            out += [(f"table3-row{i + 1:02d}", f"catalogue 3 row {i + 1}", with_amendment("table3", run_table3, i)) for i in range(len(mf.TABLE3))]
        elif w == "table4":
            out += [(f"table4-row{i + 1:02d}", f"catalogue 4 row {i + 1}", with_amendment("table4", run_table4, i)) for i in range(len(mf.TABLE4))]
        elif w in mf.EXAMPLES:
            out.append((w, mf.EXAMPLES[w]["citation"], _bind(run_example, w)))
        elif w == "section3":
            out.append((w, mf.SECTION3["citation"], run_section3))
        else:
            raise KeyError(f"unknown manifest {w!r}; choose from {', '.join(mf.WHICH)}")
    return out


def _bind(fn, arg):
    return lambda opts: fn(arg, opts)


def run_entry(eid: str, citation: str, fn, opts: dict) -> EntryResult:
    res = EntryResult(eid, citation)
    t0 = time.perf_counter()
    try:
        res.checks = fn(opts)
    except SkewCodecError as e:
        res.error = f"{type(e).__name__}: {e}"
    except (KeyError, ValueError, IndexError) as e:
        res.skipped = f"malformed entry: {type(e).__name__}: {e}"
    res.seconds = time.perf_counter() - t0
    return res


def reproduce(which=mf.WHICH, strategy="auto", budget=None, workers=1, pool=1) -> list[EntryResult]:
    opts = {"strategy": strategy, "budget": budget, "workers": workers}
    todo = entries(which)
    if pool > 1:
        with ThreadPoolExecutor(pool) as ex:
            return list(ex.map(lambda e: run_entry(*e, opts), todo))
    return [run_entry(*e, opts) for e in todo]
