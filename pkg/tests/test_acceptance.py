"""Acceptance suite: one criterion per test, one pass/fail line each.

Run as `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
"""

import json
import time

from surdcf import families as fam_mod
from surdcf.analyzer import (
    CLAIM_BOUND,
    CLAIM_CENTER_EQ,
    CLAIM_CENTER_EQM1,
    CLAIM_CENTER_LT,
    CLAIM_PALINDROME,
    CLAIM_TERMINAL,
    CLAIM_TWOSQ,
    CLAIM_TWOSQ_CONVERSE,
    check_claims,
)
from surdcf.chebyshev import cheb_u, cousin_closed_form, cheb_u_prime, cousin_mat_pow, eval_poly
from surdcf.cli import main as cli_main
from surdcf.convergents import convergents_of_word
from surdcf.engine import SurdState, expand_sqrt, expand_surd
from surdcf.families import family_by_id, verify_family
from surdcf.mat2 import Mat2, mat_pow, odd_quotient_power, pell_power, sqrt3_power
from surdcf.miner import mine, mine_sweep


def _report(num, ok, msg):
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] criterion {num}: {msg}", flush=True)
    assert ok, f"criterion {num}: {msg}"


GOLDEN_EXPANSIONS = {
    2: [1, 2],
    3: [1, 1, 2],
    13: [3, 1, 1, 1, 1, 6],
    6: [2, 2, 4],
    11: [3, 3, 6],
    8: [2, 1, 4],
    20: [4, 2, 8],
    40: [6, 3, 12],
}


def test_criterion_1_golden_expansions():
    t0 = time.perf_counter()
    ok = all(expand_sqrt(d).as_list() == want for d, want in GOLDEN_EXPANSIONS.items())
    elapsed = time.perf_counter() - t0
    _report(1, ok and elapsed < 1.0,
            f"8 golden expansions byte-exact in {elapsed:.3f}s (< 1s)")


def _conv(word, count, skip_first=False):
    conv = convergents_of_word(word)[:count + (1 if skip_first else 0)]
    if skip_first:
        conv = conv[1:]
    return [(c.p, c.q) for c in conv]


def test_criterion_2_convergent_tables():
    ok = _conv([1] + [2] * 6, 7) == [
        (1, 1), (3, 2), (7, 5), (17, 12), (41, 29), (99, 70), (239, 169)]
    ok &= _conv([1] + [1, 2] * 4, 8, skip_first=True) == [
        (2, 1), (5, 3), (7, 4), (19, 11), (26, 15), (71, 41), (97, 56), (265, 153)]
    # sqrt(6): the printed 7th entry 48271/1960 violates the convergent
    # recurrence (4801 = 2*2158 + 485); assert the consistent value
    sqrt6 = _conv([2] + [2, 4] * 4, 8, skip_first=True)
    ok &= sqrt6 == [
        (5, 2), (22, 9), (49, 20), (218, 89), (485, 198), (2158, 881),
        (4801, 1960), (21362, 8721)]
    ok &= 2 * 2158 + 485 == 4801 != 48271
    ok &= _conv([3] + [3, 6] * 4, 8, skip_first=True) == [
        (10, 3), (63, 19), (199, 60), (1257, 379), (3970, 1197),
        (25077, 7561), (79201, 23880), (500283, 150841)]
    ok &= _conv([2] + [1, 4] * 4, 9) == [
        (2, 1), (3, 1), (14, 5), (17, 6), (82, 29), (99, 35), (478, 169),
        (577, 204), (2786, 985)]
    ok &= _conv([4] + [2, 8] * 4, 9) == [
        (4, 1), (9, 2), (76, 17), (161, 36), (1364, 305), (2889, 646),
        (24476, 5473), (51841, 11592), (439204, 98209)]
    # sqrt(40): printed last numerator 33743 also violates the recurrence
    sixes = _conv([6] + [3, 12] * 3, 7)
    ok &= sixes == [
        (6, 1), (19, 3), (234, 37), (721, 114), (8886, 1405), (27379, 4329),
        (337434, 53353)]
    ok &= 12 * 27379 + 8886 == 337434 != 33743
    _report(2, ok, "printed convergent tables reproduced exactly "
                   "(two recurrence-violating printed entries corrected)")


PRINTED_MATRICES = [
    (Mat2(1, 2, 1, 1), 2, Mat2(3, 4, 2, 3)),
    (Mat2(1, 2, 1, 1), 3, Mat2(7, 10, 5, 7)),
    (Mat2(1, 2, 1, 1), 4, Mat2(17, 24, 12, 17)),
    (Mat2(1, 2, 1, 1), 5, Mat2(41, 58, 29, 41)),
    (Mat2(3, 2, 1, 1), 2, Mat2(11, 8, 4, 3)),
    (Mat2(3, 2, 1, 1), 3, Mat2(41, 30, 15, 11)),
    (Mat2(3, 2, 1, 1), 4, Mat2(153, 112, 56, 41)),
    (Mat2(3, 2, 1, 1), 5, Mat2(571, 418, 209, 153)),
    (Mat2(3, 1, 1, 0), 3, Mat2(33, 10, 10, 3)),
    (Mat2(3, 1, 1, 0), 4, Mat2(109, 33, 33, 10)),
    (Mat2(3, 1, 1, 0), 6, Mat2(1189, 360, 360, 109)),
    (Mat2(3, 1, 1, 0), 7, Mat2(3927, 1189, 1189, 360)),
]


def test_criterion_3_matrix_lemmas():
    ok = all(mat_pow(m, n) == want for m, n, want in PRINTED_MATRICES)
    pell_base, sqrt3_base = Mat2(1, 2, 1, 1), Mat2(3, 2, 1, 1)
    for k in range(1, 201):
        ok &= pell_power(k) == mat_pow(pell_base, k)
        ok &= sqrt3_power(k) == mat_pow(sqrt3_base, k)
    for m in range(11):
        base = Mat2(2 * m + 1, 1, 1, 0)
        for n in range(1, 201):
            ok &= odd_quotient_power(m, n) == mat_pow(base, n)
    _report(3, ok, "sequence-backed powers match mat_pow to 200 and "
                   "reproduce all 12 printed proof matrices")


def test_criterion_4_chebyshev():
    t0 = time.perf_counter()
    ok = [p.coeffs for p in map(cheb_u, range(6))] == [
        (1,), (0, 1), (-1, 0, 1), (0, -2, 0, 1), (1, 0, -3, 0, 1), (0, 3, 0, -4, 0, 1)]
    for m in range(9):
        base = Mat2(2 * m + 1, 1, 1, 0)
        for n in range(1, 101):
            ok &= cousin_mat_pow(m, n) == mat_pow(base, n)
    from fractions import Fraction
    args = [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(2), Fraction(3)]
    for n in range(41):
        poly = cheb_u_prime(n)
        for x in args:
            ok &= cousin_closed_form(n, x) == eval_poly(poly, x)
    elapsed = time.perf_counter() - t0
    _report(4, ok and elapsed < 10.0,
            f"printed polynomials, cousin powers and exact closed form in {elapsed:.2f}s (< 10s)")


def test_criterion_5_full_family_verification():
    t0 = time.perf_counter()
    failures = []
    tested = 0
    for fam in fam_mod.registry():
        report = verify_family(fam)
        tested += report.tested
        if report.failures and not fam.is_erratum:
            failures.append(fam.id)
    elapsed = time.perf_counter() - t0
    _report(5, not failures and elapsed < 300.0,
            f"every non-erratum family verified term-for-term "
            f"({tested} expansions in {elapsed:.1f}s, < 5min); failures={failures}")


def test_criterion_6_erratum_detection():
    printed = verify_family(family_by_id("threes-printed-17n"), budget={"n": 10})
    ok = printed.status == "erratum" and len(printed.failures) > 0
    corrected = family_by_id("rep2-k3")
    ok &= str(corrected.a_expr) == "17*n+1" and str(corrected.b_expr) == "14*n+1"
    ok &= verify_family(corrected, budget={"n": 50}).status == "verified"
    tail = expand_surd(SurdState(-5, 1, 29))
    ok &= tail.preperiod == [0] and tail.period == [2, 1, 1, 2, 10]
    ok &= tail.period != [2, 1, 1, 2, 29]
    # further printed-vs-corrected splits discovered by the verifier
    for bad_id, good_id in [("l7-a-m1-printed", "l7-a-m1"), ("l9-d-printed", "l9-d"),
                            ("pair-m2m-m2-k3-printed", "pair-m2m-m2-k3"),
                            ("pair-m2m-k2-printed", "pair-m2m-k2")]:
        ok &= bool(verify_family(family_by_id(bad_id), budget={"n": 6, "m": 3}).failures)
        ok &= not verify_family(family_by_id(good_id), budget={"n": 6, "m": 3}).failures
    _report(6, ok, "printed records fail as printed; corrected forms verify "
                   "(incl. a=17n+1,b=14n+1 and the sqrt(29) tail 10)")


def test_criterion_7_structure_harness_at_scale():
    t0 = time.perf_counter()
    report = check_claims(2, 100_000, jobs=8)
    elapsed = time.perf_counter() - t0
    ok = elapsed < 120.0
    for cid in (CLAIM_PALINDROME, CLAIM_TERMINAL, CLAIM_BOUND, CLAIM_TWOSQ):
        ok &= report.claim(cid).status == "ok"
        ok &= report.claim(cid).counterexamples == []
    statuses = {}
    for cid in (CLAIM_CENTER_LT, CLAIM_CENTER_EQM1, CLAIM_CENTER_EQ, CLAIM_TWOSQ_CONVERSE):
        claim = report.claim(cid)
        obj = claim.to_dict()
        ok &= "counterexamples" in obj and obj["status"] in ("ok", "counterexamples")
        statuses[cid] = f"{obj['status']}({len(obj['counterexamples'])})"
    # the emitted lists are data: present, serializable, never suppressed
    ok &= json.dumps(report.to_dict(), sort_keys=True) != ""
    _report(7, ok, f"1e5 sweep in {elapsed:.1f}s (< 2min, jobs=8); classical claims clean; "
                   f"observation claims emitted: {statuses}")


def test_criterion_8_miner_reproduction():
    fam22 = mine([2, 2])
    ok = fam22 is not None and (fam22.a_residue, fam22.a_modulus) == (1, 5)
    ok &= (fam22.b_slope, fam22.b_const) == (4, 1)
    ok &= mine([1, 1]) is None
    swept = mine_sweep(3, 3)
    ok &= any(f.palindrome == (2, 2) for f in swept)
    for fam in swept:
        for c in range(fam.min_c, fam.min_c + 50):
            a, b = fam.a_of(c), fam.b_of(c)
            cf = expand_sqrt(a * a + b)
            ok &= cf.a0 == a and cf.period == (*fam.palindrome, 2 * a)
    _report(8, ok, f"mine([2,2]) = (a=1 mod 5, b=4c+1); mine([1,1]) empty; "
                   f"{len(swept)} swept families verified for 50 instances each")


def test_criterion_9_determinism(capsys):
    argv = ["analyze", "--from", "2", "--to", "10000"]
    assert cli_main(argv + ["--jobs", "1"]) == 0
    out_serial = capsys.readouterr().out
    assert cli_main(argv + ["--jobs", "8"]) == 0
    out_parallel = capsys.readouterr().out
    ok = out_serial == out_parallel and len(out_serial) > 100
    with capsys.disabled():
        _report(9, ok, "cmd_analyze byte-identical for jobs 1 vs 8 over 2..10^4")
