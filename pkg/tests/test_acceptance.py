"""Acceptance suite: one test per criterion, one printed line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.  Every
check is exact (zero tolerance); orders are confirmed by brute-force
application as an oracle independent of the closed forms.
"""

import time
from fractions import Fraction

from kmforge import verify

_T0 = time.time()
_RESULTS = []


def _record(num, label, report):
    ok = report["ok"]
    _RESULTS.append((num, label, ok))
    print(f"criterion {num} ({label}): {'PASS' if ok else 'FAIL'}")
    if not ok:
        for check in report["checks"]:
            if not check["pass"]:
                print(f"  failed: {check}")
    assert ok, f"criterion {num} failed: {report}"


def test_criterion_1_affine_jacobi():
    t0 = time.time()
    report = verify.verify_jacobi(algebra="sl2C", N=6, trials=100, seed=101)
    elapsed = time.time() - t0
    print(f"criterion 1 runtime: {elapsed:.2f}s (target < 10s)")
    _record(1, "exact Jacobi on the hat algebra, untwisted and twisted", report)
    assert elapsed < 10


def test_criterion_2_cocycle_laws():
    report = verify.verify_cocycle(algebra="sl2C", N=6, trials=100, seed=102)
    _record(2, "cocycle antisymmetry and 2-cocycle identity", report)


def test_criterion_3_first_kind_round_trip():
    report = verify.verify_roundtrip(algebra="sl2C", qs=(2, 3, 4, 6))
    first = [c for c in report["checks"] if c["name"].startswith("first:")]
    ok = all(c["pass"] for c in first)
    oracle_ok = all(c["order_bruteforce"] == c["order_closed_form"] for c in first)
    sub = {"ok": ok and oracle_ok, "checks": first}
    _record(3, "first-kind realize/extract round trips, q in {2,3,4,6}", sub)


def test_criterion_4_second_kind_round_trip():
    report = verify.verify_roundtrip(algebra="sl2C", qs=())
    second = [c for c in report["checks"] if c["name"].startswith("second:")]
    names = {c["name"].split(":", 2)[2] for c in second}
    expected = {"plus=id:minus=id", "plus=mu:minus=mu", "plus=mu:minus=id",
                "plus=tau:minus=tau", "plus=tau:minus=id"}
    ok = all(c["pass"] for c in second) and expected <= names
    ok = ok and all(c["swap_equivalent"] for c in second)
    sub = {"ok": ok, "checks": second}
    _record(4, "second-kind round trips and swap symmetry", sub)


def test_criterion_5_golden_real_form_catalog():
    report = verify.verify_realforms(algebra="sl2C", N=4)
    _record(5, "seven golden real forms, distinct, verified at N=4", report)


def test_criterion_6_finite_order_hat_extensions():
    report = verify.verify_hat(algebra="sl2C", seed=106)
    negative_seen = any("negative_control_order" in c for c in report["checks"])
    sub = {"ok": report["ok"] and negative_seen, "checks": report["checks"]}
    _record(6, "finite-order hat extensions with wrong-constant control", sub)


def test_criterion_7_cartan_decompositions():
    report = verify.verify_cartan(algebra="sl2C", N=3)
    _record(7, "Cartan inclusions and compactness of k+im at N=3", report)


def test_criterion_8_scaling_maps():
    report = verify.verify_tau_r(algebra="sl2C", r=Fraction(2), trials=50, seed=108)
    _record(8, "scaling map r=2: exact homomorphism, unbounded order", report)


def test_criterion_9_untwisting_isomorphism():
    report = verify.verify_untwisting(seed=109)
    _record(9, "exponential-curve isomorphism onto the untwisted algebra", report)


def test_total_runtime_summary():
    elapsed = time.time() - _T0
    print(f"acceptance suite total runtime: {elapsed:.1f}s (target < 120s)")
    assert len(_RESULTS) == 9
    assert all(ok for _, _, ok in _RESULTS)
    assert elapsed < 120
