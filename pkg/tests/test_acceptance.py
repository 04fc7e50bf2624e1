"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (also collected into the pytest
terminal summary).  All checks are exact; the time limits are wall-clock
bounds on the whole criterion with fresh caches.

Run directly with ``python3 tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from twistinv import systems
from twistinv.cosets import coset_of
from twistinv.duality import AffineSetup, check_closed_forms, coset_expansion, scan_extremal_pairs
from twistinv.laurent import LaurentPoly
from twistinv.module import InvolutionModule
from twistinv.verify import VerifyContext, run_suite, split_table

FINITE = ["A1", "A2", "A2-swap", "A3", "A3-flip", "B2", "B3", "I2(5)", "I2(6)", "H3"]
AFFINE = ["A1-affine", "A2-affine-swap", "C2-affine"]
AFFINE_LEN = 12


def _contexts(names, affine_len=AFFINE_LEN):
    for name in names:
        spec = systems.get(name)
        yield name, VerifyContext(spec.build(), None if spec.finite else affine_len)


def _record(num, title, ok, detail, elapsed, limit):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"{status} criterion {num:>2} ({title}): {detail}; {elapsed:.1f}s (limit {limit}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return status == "PASS"


def _suite_criterion(num, title, suite, names, limit, time_names=None):
    t0 = time.perf_counter()
    checks, failures, timed = 0, [], 0.0
    for name, ctx in _contexts(names):
        t = time.perf_counter()
        for r in run_suite(suite, ctx):
            checks += r.checked
            if not r.ok:
                failures.append(f"{name}: {r.line()}")
        if time_names is not None and name in time_names:
            timed += time.perf_counter() - t
    elapsed = time.perf_counter() - t0 if time_names is None else timed
    detail = f"{len(names)} systems, {checks} identities checked, {len(failures)} failed"
    if failures:
        detail += f"; first: {failures[0]}"
    assert _record(num, title, not failures, detail, elapsed, limit), detail


def test_criterion_01_module_axioms():
    _suite_criterion(1, "quadratic and braid relations", "module-axioms", FINITE + AFFINE, 30)


def test_criterion_02_bar_operator():
    _suite_criterion(2, "bar involution and semilinearity", "bar", FINITE + AFFINE, 30)


def test_criterion_03_r_polynomials():
    _suite_criterion(3, "r-polynomials", "rpoly", FINITE + AFFINE, 60)


def test_criterion_04_canonical_basis():
    _suite_criterion(4, "canonical basis", "canonical", FINITE + AFFINE, 120,
                     time_names={"A3", "B3"})


def test_criterion_05_c_s_action():
    _suite_criterion(5, "c_s action on the canonical basis", "sixthree",
                     ["A3", "B3", "I2(6)"], 120)


def test_criterion_06_spherical_identities():
    names = ["A1", "A2", "A2-swap", "A3", "A3-flip", "B2", "B3", "I2(5)", "I2(6)"]
    _suite_criterion(6, "spherical identities", "spherical", names, 60)


def test_criterion_07_inversion():
    names = ["A1", "A2", "A2-swap", "A3", "A3-flip", "B2", "B3", "I2(5)"]
    _suite_criterion(7, "inversion formula and r duality", "inversion", names, 120)


def test_criterion_08_affine_fixtures():
    t0 = time.perf_counter()
    problems = []
    expected = {
        "A2-affine-swap": ("01210", [LaurentPoly.from_u(c) for c in
                                     ([1], [1], [1], [1, -1], [1, -1, 1])]),
        "C2-affine": ("010", [LaurentPoly.from_u(c) for c in ([1], [1], [1, 0, 1])]),
    }
    setups = {n: AffineSetup(InvolutionModule(systems.get(n).build()), 0) for n in AFFINE}
    for name, (word, family) in expected.items():
        S = setups[name]
        d = coset_of(S.module, S.W.parse(word), S.K).d
        got = [f for _, f in coset_expansion(S, d)]
        if got != family:
            problems.append(f"{name} coefficients {[str(f) for f in got]}")
    for name in ["A1-affine", "A2-affine-swap"]:
        res = check_closed_forms(setups[name])
        if not res.ok:
            problems.append(f"{name} closed forms {res}")
    n_rows = 0
    for name, L in [("A1-affine", 9), ("A2-affine-swap", 12)]:
        rows = scan_extremal_pairs(setups[name], L)
        n_rows += len(rows)
        bad = [r for r in rows if not r.equal]
        if bad:
            problems.append(f"{name} scan: {len(bad)} unequal rows")
    detail = (f"2 coefficient families, 2 closed-form checks, {n_rows} scan rows, "
              f"{len(problems)} problems" + (f"; {problems[0]}" if problems else ""))
    assert _record(8, "affine fixtures", not problems, detail, time.perf_counter() - t0, 300), detail


def test_criterion_09_mod2():
    t0 = time.perf_counter()
    failures, checks = [], 0
    for name, ctx in _contexts(FINITE + ["A2-affine-swap"]):
        for r in run_suite("mod2", ctx):
            checks += r.checked
            if not r.ok:
                failures.append(f"{name}: {r.line()}")
    detail = f"{len(FINITE) + 1} systems, {checks} checks, {len(failures)} failed" + \
        (f"; first: {failures[0]}" if failures else "")
    assert _record(9, "mod 2 congruence and model", not failures, detail,
                   time.perf_counter() - t0, 120), detail


def test_criterion_10_split_positivity():
    t0 = time.perf_counter()
    asserted_bad, report, pairs = [], [], 0
    for name, ctx in _contexts(FINITE + AFFINE):
        rows = split_table(ctx)   # raises if a half is not integral
        pairs += len(rows)
        neg = [r for r in rows if not r.nonnegative]
        if systems.get(name).weyl:
            if neg:
                r = neg[0]
                asserted_bad.append(f"{name} y={ctx.W.fmt(r.y)!r} w={ctx.W.fmt(r.w)!r}: "
                                    f"P+={r.plus}, P-={r.minus}")
        else:
            report.append(f"{name}: {len(neg)} negative")
    detail = (f"{pairs} pairs integral, {len(asserted_bad)} negative on crystallographic systems; "
              f"report-only {', '.join(report)}")
    if asserted_bad:
        detail += f"; first: {asserted_bad[0]}"
    assert _record(10, "split into P+ and P-", not asserted_bad, detail,
                   time.perf_counter() - t0, 60), detail


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
