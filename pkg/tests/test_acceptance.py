"""The thirteen acceptance criteria, one test each.

Every test records a PASS or FAIL line in RESULTS; conftest.py prints
them at the end of the run. Run this file directly for the same lines
without pytest.
"""

import subprocess
import sys
import time
from itertools import combinations
from math import factorial, prod

from sytlab import bijections, formulas, jdt, rimhook, strips, truncated, words
from sytlab.oracle import count_linear_extensions
from sytlab.perms import all_perms, descent_set, lds_length, lis_length
from sytlab.series import sec_plus_tan
from sytlab.shapes import (
    Ordinary,
    Shifted,
    Skew,
    TruncatedShifted,
    Zigzag,
    hook_lengths,
    partitions,
    r_core,
    staircase,
    strict_partitions,
)
from sytlab.tableau import Tableau
from sytlab.verify import q_suite, random_skew_shapes

RESULTS: dict[int, str] = {}


def _record(num: int, title: str, failures: list, detail: str = "") -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {num:2d} {status}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; first failure: {failures[0]!r}"
    RESULTS[num] = line
    print(line)
    assert not failures, failures[:5]


def test_criterion_01_ordinary_formulas():
    t = time.perf_counter()
    bad, n = [], 0
    for m in range(13):
        for lam in partitions(m):
            vals = {meth: formulas.f_ordinary(lam, meth) for meth in formulas.METHODS}
            vals["oracle"] = count_linear_extensions(Ordinary(lam))
            n += 1
            if len(set(vals.values())) != 1:
                bad.append((lam, vals))
    if formulas.f_ordinary((4, 3, 1)) != 70 or hook_lengths((4, 3, 1)) != ((6, 4, 3, 1), (4, 2, 1), (1,)):
        bad.append("f(4,3,1) or its hook table")
    secs = time.perf_counter() - t
    if secs >= 30:
        bad.append(f"took {secs:.1f}s")
    _record(1, "product = hook = det = oracle for |lam| <= 12", bad, f"{n} partitions, {secs:.1f}s")


def test_criterion_02_skew_determinant():
    bad = []
    shapes = random_skew_shapes(200, 10, seed=2)
    for lam, mu in shapes:
        d, o = formulas.f_skew_det(lam, mu), count_linear_extensions(Skew(lam, mu))
        if d != o:
            bad.append((lam, mu, d, o))
    _record(2, "skew determinant = oracle on 200 random skew shapes", bad, f"{len(shapes)} shapes")


def test_criterion_03_shifted():
    bad, n = [], 0
    for m in range(1, 13):
        for lam in strict_partitions(m):
            vals = {meth: formulas.g_shifted(lam, meth) for meth in formulas.METHODS}
            vals["oracle"] = count_linear_extensions(Shifted(lam))
            n += 1
            if len(set(vals.values())) != 1:
                bad.append((lam, vals))
    if formulas.g_shifted(staircase(4)) != 12:
        bad.append("g(delta_4) != 12")
    trunc = (truncated.truncated_count("tr_staircase_cell", 4), count_linear_extensions(TruncatedShifted(staircase(4), (1,))))
    if trunc != (4, 4):
        bad.append(("truncated delta_4", trunc))
    _record(3, "shifted product = hook = det = oracle, g = 12 and 4", bad, f"{n} strict partitions")


def test_criterion_04_rs():
    bad = []
    P, Q = jdt.rs_pair((2, 4, 1, 3))
    if (P.to_text(), Q.to_text()) != ("13/24", "12/34"):
        bad.append(("2413", P.to_text(), Q.to_text()))
    for n in range(1, 7):
        pairs = set()
        for p in all_perms(n):
            P, Q = jdt.rs_pair(p)
            if P.shape != Q.shape or jdt.rs_inverse(P, Q) != p:
                bad.append(("inverse", p))
            shape = [len(r) for r in P.rows()]
            if shape[0] != lis_length(p) or len(shape) != lds_length(p):
                bad.append(("schensted", p))
            pairs.add((P, Q))
        if len(pairs) != factorial(n):
            bad.append(("not bijective", n, len(pairs)))
    _record(4, "RS bijective for n <= 6, 2413 example, Schensted", bad)


def test_criterion_05_hook_bijections():
    bad, n = [], 0
    for m in range(1, 8):
        for lam in partitions(m):
            for meth in ("fz", "nps"):
                count, distinct, valid = bijections.hook_bijection_image(lam, meth)
                image = formulas.f_ordinary(lam) * prod(map(prod, hook_lengths(lam)))
                n += 1
                if not (count == distinct == factorial(m) == image and valid):
                    bad.append((meth, lam, count, distinct, valid))
    T, P = bijections.insert_column([[1, 8], [4], [7]], [[1, 0], [0], [0]], [12, 5, 3, 6])
    if (T, P) != ([[1, 4, 8], [3, 7], [5, 12], [6]], [[-2, 1, 0], [0, 0], [1, 0], [0]]):
        bad.append("InsertColumn example")
    T, P = bijections.fz_sort(Tableau.from_rows([[9, 12, 8, 1], [2, 5, 4], [11, 3, 7], [10, 6]]))
    if (T.rows(), P) != ([[1, 3, 4, 8], [2, 7, 9], [5, 10, 12], [6, 11]], [[0, -2, 1, 0], [2, 0, 0], [-1, 1, 0], [1, 0]]):
        bad.append("FZ example")
    trace: list = []
    bijections.nps_sort(Tableau.from_rows([[6, 2], [4, 3], [5, 1]]), trace)
    want = [
        ([[6, 2], [4, 1], [5, 3]], [[0, 0], [0, -1], [0, 0]]),
        ([[6, 1], [4, 2], [5, 3]], [[0, -2], [0, 0], [0, 0]]),
        ([[6, 1], [4, 2], [3, 5]], [[0, -2], [0, 0], [1, 0]]),
        ([[6, 1], [2, 4], [3, 5]], [[0, -2], [1, 0], [1, 0]]),
        ([[1, 4], [2, 5], [3, 6]], [[0, -2], [0, 0], [1, 0]]),
    ]
    if [(t.rows(), p) for t, p in trace] != want:
        bad.append("NPS example")
    _record(5, "FZ and NPS injective up to size 7, worked examples", bad, f"{n} runs")


def test_criterion_06_sampler():
    bad, ps = [], []
    for lam in ((2, 2), (3, 2), (2, 2, 1)):
        _, p, _ = bijections.chi_square(lam, 10_000, seed=2024)
        ps.append(f"{lam}: p={p:.3g}")
        if not p > 1e-6:
            bad.append((lam, p))
    _record(6, "hook walk passes chi-square at 1e-6", bad, ", ".join(ps))


def test_criterion_07_zigzag_and_andre():
    bad = []
    for n in range(1, 7):
        hist: dict = {}
        for p in all_perms(n):
            hist[descent_set(p)] = hist.get(descent_set(p), 0) + 1
        for k in range(n):
            for S in combinations(range(1, n), k):
                vals = {v: formulas.zigzag_det(n, S, v) for v in (1, 2, 3)}
                vals["oracle"] = count_linear_extensions(Zigzag(n, S))
                vals["perms"] = hist.get(frozenset(S), 0)
                if len(set(vals.values())) != 1:
                    bad.append((n, S, vals))
    A = formulas.andre_numbers(12)
    s = sec_plus_tan(12)
    if [s[n] * factorial(n) for n in range(13)] != A:
        bad.append("sec + tan")
    for n in range(1, 5):
        if count_linear_extensions(strips.basic_strip(2, n)) != A[2 * n]:
            bad.append(("2-strip", n))
    _record(7, "zigzag determinants, A_0..A_12, 2-strips to A_8", bad)


def test_criterion_08_strips():
    bad = []
    for m in range(2, 7):
        for n in range(m // 2, 5):
            spec = strips.StripSpec(m, n, (), ())
            d, o = strips.mstrip_count(spec), count_linear_extensions(spec.diagram())
            if d != o:
                bad.append((m, n, d, o))
    for kind in strips.COROLLARIES:
        for n in range(2 if kind == "5strip" else 1, 4):
            spec = strips.corollary_spec(kind, n)
            vals = (strips.romik_corollaries(kind, n), strips.mstrip_count(spec), count_linear_extensions(spec.diagram()))
            if len(set(vals)) != 1:
                bad.append((kind, n, vals))
    full = strips.StripSpec(3, 2)
    if not strips.mstrip_count(full) == count_linear_extensions(full.diagram()) == 14:
        bad.append("f(D_{3,2}) != 14")
    for abc in ((3, 3, 2), (4, 4, 3), (3, 2, 2)):
        if not strips.stanley_strip_gf(*abc, 12)["ok"]:
            bad.append(("Stanley", abc))
    _record(8, "m-strip determinant, corollaries, Stanley series to order 12", bad)


def test_criterion_09_truncated():
    bad = []
    smallest = {
        "tr_staircase_cell": [(3,), (4,)],
        "stair_minus_square": [(0, 1), (1, 1)],
        "rect_minus_square": [(1, 1, 1), (1, 1, 2)],
        "rect_corner": [(1, 1), (2, 1)],
        "sun_nn2": [(2,), (3,)],
        "snow": [(2, 0), (2, 1)],
        "pell_strip": [(1,), (2,), (3,)],
        "panova": [(2, 2, 1), (3, 2, 1)],
        "sun_middle": [(0,), (1,)],
    }
    for kind, cases in smallest.items():
        for params in cases:
            v = truncated.truncated_count(kind, *params)
            o = count_linear_extensions(truncated.truncated_diagram(kind, *params))
            if v != o:
                bad.append((kind, params, v, o))
    if [truncated.truncated_count("pell_strip", n) for n in (1, 2, 3)] != [1, 5, 29]:
        bad.append("Pell values")
    _record(9, "truncated closed forms at their smallest instances", bad)


def test_criterion_10_q_suite():
    checks = q_suite(8)
    bad = [(c.name, f) for c in checks for f in c.failures]
    _record(10, "q-identities at n <= 8", bad, f"{sum(c.checked for c in checks)} identities")


def test_criterion_11_rim_hooks():
    bad, n = [], 0
    for r in (1, 2, 3, 4):
        for m in range(r, 13, r):
            for lam in partitions(m):
                d = rimhook.count_rimhook_direct(lam, r)
                q = rimhook.count_rimhook_via_quotient(lam, r)
                h = rimhook.count_rimhook_hook_formula(lam, r) if not r_core(lam, r) else 0
                n += 1
                if not d == q == h:
                    bad.append((lam, r, d, q, h))
                if not rimhook.fomin_lulov_bound(lam, r):
                    bad.append(("Fomin-Lulov", lam, r))
    for r in range(1, 11):
        for k in range(1, 10 // r + 1):
            if not rimhook.rimhook_sum_identities(k, r)["ok"]:
                bad.append(("sums", k, r))
    _record(11, "rim hooks: direct = quotient = hook, sums, Fomin-Lulov", bad, f"{n} shapes")


def test_criterion_12_reduced_words():
    bad = []
    for n in range(2, 7):
        rep = words.staircase_chain_counts(n)
        if not rep["ok"]:
            bad.append(("staircase", n, rep))
    if [words.staircase_chain_counts(n)["reduced_words"] for n in (4, 5)] != [16, 768]:
        bad.append("16 and 768")
    for m in range(1, 8):
        for lam in partitions(m):
            if words.reduced_word_count(words.shuffle_of_shape(lam)) != formulas.f_ordinary(lam):
                bad.append(("shuffle", lam))
    for n in range(1, 4):
        if words.reduced_word_count(words.longest(n, "B"), "B") != formulas.f_ordinary((n,) * n):
            bad.append(("type B", n))
    for n in range(2, 6):
        if words.edelman_modified_chains(n) != formulas.g_shifted(staircase(n - 1)):
            bad.append(("Edelman", n))
    for n in (3, 4, 5):
        if words.reiner_expectation(n) != 1:
            bad.append(("Reiner", n))
    _record(12, "reduced words: staircase, shuffle, type B, Edelman, Reiner", bad)


def _verify_cli(size: int, budget: float) -> tuple[list, str]:
    t = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "sytlab", "verify", "all", "--max-size", str(size)],
        capture_output=True,
        text=True,
    )
    secs = time.perf_counter() - t
    bad = []
    if proc.returncode != 0:
        bad.append((size, proc.returncode, proc.stdout[-400:], proc.stderr[-400:]))
    if secs >= budget:
        bad.append((size, f"{secs:.1f}s over {budget:.0f}s"))
    return bad, f"--max-size {size}: {secs:.1f}s"


def test_criterion_13_end_to_end():
    bad6, d6 = _verify_cli(6, 60)
    bad8, d8 = _verify_cli(8, 15 * 60)
    _record(13, "verify all end to end", bad6 + bad8, f"{d6}, {d8}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
