"""Cross-check suites behind ``sytlab verify``.

Each suite yields Check records; a check counts how many identities it
compared and lists every mismatch it found.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import factorial

from . import bijections, formulas, jdt, qenum, rimhook, strips, truncated, words
from .exact import catalan
from .oracle import count_linear_extensions, enumerate_syt
from .perms import all_perms, descent_set
from .series import sec_plus_tan
from .shapes import (
    Ordinary,
    Shifted,
    Skew,
    Zigzag,
    partitions,
    r_core,
    r_quotient,
    staircase,
    strict_partitions,
)

SCOPES = ("formulas", "bijections", "q", "rimhook", "words")


@dataclass
class Check:
    suite: str
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, what) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(str(what))


def _run(suite: str, name: str, fn) -> Check:
    c = Check(suite, name)
    t = time.perf_counter()
    fn(c)
    c.seconds = time.perf_counter() - t
    return c


# -- formulas ---------------------------------------------------------------------

def random_skew_shapes(count: int, max_size: int, seed: int = 0) -> list[tuple[tuple, tuple]]:
    """Seeded skew shapes lam/mu with 1 <= |lam/mu| <= max_size."""
    rng = random.Random(seed)
    pool = [lam for m in range(1, max_size + 5) for lam in partitions(m)]
    out = []
    while len(out) < count:
        lam = rng.choice(pool)
        mu = []
        for i, l in enumerate(lam):
            top = min(l, mu[-1]) if mu else l
            mu.append(rng.randint(0, top))
        mu = tuple(x for x in mu if x)
        if 1 <= sum(lam) - sum(mu) <= max_size:
            out.append((lam, mu))
    return out


def _ordinary(c: Check, N: int) -> None:
    for m in range(N + 1):
        for lam in partitions(m):
            vals = {meth: formulas.f_ordinary(lam, meth) for meth in formulas.METHODS}
            vals["oracle"] = count_linear_extensions(Ordinary(lam))
            c.expect(len(set(vals.values())) == 1, (lam, vals))
    c.expect(formulas.f_ordinary((4, 3, 1)) == 70, "f(4,3,1) != 70")


def _skew(c: Check, N: int) -> None:
    for lam, mu in random_skew_shapes(200, N):
        d, o = formulas.f_skew_det(lam, mu), count_linear_extensions(Skew(lam, mu))
        c.expect(d == o, (lam, mu, d, o))


def _shifted(c: Check, N: int) -> None:
    for m in range(1, N + 1):
        for lam in strict_partitions(m):
            vals = {meth: formulas.g_shifted(lam, meth) for meth in formulas.METHODS}
            vals["oracle"] = count_linear_extensions(Shifted(lam))
            c.expect(len(set(vals.values())) == 1, (lam, vals))
    c.expect(formulas.g_shifted(staircase(4)) == 12, "g(delta_4) != 12")
    c.expect(truncated.truncated_count("tr_staircase_cell", 4) == 4, "g(delta_4 minus a cell) != 4")


def _thin(c: Check, N: int) -> None:
    for n in range(1, N + 1):
        by_height: dict[int, int] = {}
        for lam in partitions(n):
            by_height[len(lam)] = by_height.get(len(lam), 0) + count_linear_extensions(Ordinary(lam))
        for h in (2, 3, 4, 5):
            want = sum(v for k, v in by_height.items() if k <= h)
            c.expect(formulas.thin_counts(f"total_h{h}", n) == want, (n, h))
        c.expect(formulas.motzkin_sum(n) == formulas.thin_counts("total_h3", n), ("motzkin", n))
        for k in range(n):
            c.expect(
                formulas.thin_counts("hook", n, k) == count_linear_extensions(Ordinary((n - k,) + (1,) * k)),
                ("hook", n, k),
            )


def _zigzag(c: Check, N: int) -> None:
    for n in range(1, N + 1):
        hist: dict = {}
        if n <= 8:
            for p in all_perms(n):
                d = descent_set(p)
                hist[d] = hist.get(d, 0) + 1
        for k in range(n):
            for S in combinations(range(1, n), k):
                vals = {v: formulas.zigzag_det(n, S, v) for v in (1, 2, 3)}
                vals["oracle"] = count_linear_extensions(Zigzag(n, S))
                if hist:
                    vals["perms"] = hist.get(frozenset(S), 0)
                c.expect(len(set(vals.values())) == 1, (n, S, vals))


def _andre(c: Check, N: int) -> None:
    A = formulas.andre_numbers(12)
    s = sec_plus_tan(12)
    for n in range(13):
        c.expect(s[n] * factorial(n) == A[n], ("sec+tan", n))
    for n in range(1, 9):
        c.expect(count_linear_extensions(Zigzag(n, formulas.up_down_zigzag(n))) == A[n], ("zigzag", n))
    for n in range(1, 5):
        c.expect(count_linear_extensions(strips.basic_strip(2, n)) == A[2 * n], ("2-strip", n))


def _mstrips(c: Check, N: int) -> None:
    for m in range(2, 7):
        for n in range(m // 2, 5):
            spec = strips.StripSpec(m, n, (), ())
            if n < spec.k:
                continue
            d = strips.mstrip_count(spec)
            o = count_linear_extensions(spec.diagram())
            c.expect(d == o, (m, n, d, o))
    for kind in strips.COROLLARIES:
        for n in range(2 if kind == "5strip" else 1, 4):
            spec = strips.corollary_spec(kind, n)
            vals = (strips.romik_corollaries(kind, n), strips.mstrip_count(spec), count_linear_extensions(spec.diagram()))
            c.expect(len(set(vals)) == 1, (kind, n, vals))
    full = strips.StripSpec(3, 2)
    c.expect(strips.mstrip_count(full) == count_linear_extensions(full.diagram()) == 14, "f(D_{3,2}) != 14")


def _stanley(c: Check, N: int) -> None:
    for abc in ((3, 3, 2), (4, 4, 3), (3, 2, 2)):
        rep = strips.stanley_strip_gf(*abc, N)
        for key in ("theorem", "equal_rows", "zigzag"):
            for row in rep.get(key, []):
                c.expect(row[-1], (abc, key, row))


def _truncated(c: Check, N: int) -> None:
    smallest = {
        "tr_staircase_cell": [(3,), (4,)],
        "stair_minus_square": [(0, 1), (1, 1), (0, 2)],
        "rect_minus_square": [(1, 1, 1), (1, 1, 2), (2, 1, 2)],
        "rect_corner": [(1, 1), (2, 1)],
        "sun_nn2": [(2,), (3,)],
        "snow": [(2, 0), (2, 1), (3, 1)],
        "pell_strip": [(1,), (2,), (3,)],
        "panova": [(2, 2, 1), (3, 2, 1), (3, 3, 2)],
        "sun_middle": [(0,), (1,)],
    }
    for kind, cases in smallest.items():
        for params in cases:
            v = truncated.truncated_count(kind, *params)
            o = count_linear_extensions(truncated.truncated_diagram(kind, *params))
            c.expect(v == o, (kind, params, v, o))
    c.expect([truncated.truncated_count("pell_strip", n) for n in (1, 2, 3)] == [1, 5, 29], "pell values")


def formulas_suite(N: int) -> list[Check]:
    s = "formulas"
    return [
        _run(s, "ordinary product = hook = det = oracle", lambda c: _ordinary(c, N)),
        _run(s, "skew determinant = oracle", lambda c: _skew(c, N)),
        _run(s, "shifted product = hook = det = oracle", lambda c: _shifted(c, N)),
        _run(s, "thin totals and hooks", lambda c: _thin(c, N)),
        _run(s, "zigzag determinants = oracle = descent classes", lambda c: _zigzag(c, N)),
        _run(s, "Andre numbers, sec + tan, 2-strips", lambda c: _andre(c, N)),
        _run(s, "m-strip determinant and corollaries", lambda c: _mstrips(c, N)),
        _run(s, "Stanley strip series", lambda c: _stanley(c, N)),
        _run(s, "truncated closed forms", lambda c: _truncated(c, N)),
    ]


# -- bijections -----------------------------------------------------------------------

def _rs(c: Check, N: int) -> None:
    P, Q = jdt.rs_pair((2, 4, 1, 3))
    c.expect((P.to_text(), Q.to_text()) == ("13/24", "12/34"), ("2413", P.to_text(), Q.to_text()))
    for n in range(1, min(N, 7) + 1):
        seen = set()
        for p in all_perms(n):
            P, Q = jdt.rs_pair(p)
            c.expect((P, Q) == jdt.rs_insert(p), ("insertion", p))
            c.expect(P.shape == Q.shape and jdt.rs_inverse(P, Q) == p, ("inverse", p))
            c.expect(jdt.schensted_report(p)["ok"], ("schensted", p))
            seen.add((P, Q))
        c.expect(len(seen) == factorial(n), ("bijective", n))


def _jdt(c: Check, N: int) -> None:
    rng = random.Random(1)
    for lam, mu in random_skew_shapes(30, min(N, 8), seed=7):
        for T in list(enumerate_syt(Skew(lam, mu)))[:5]:
            outs = {jdt.rectify(T, pol, seed=rng.randrange(10**6)) for pol in jdt.POLICIES}
            c.expect(len(outs) == 1, (lam, mu, T.to_text()))


def _hook_bij(c: Check, N: int) -> None:
    for m in range(1, min(N, 7) + 1):
        for lam in partitions(m):
            for meth in ("fz", "nps"):
                count, distinct, valid = bijections.hook_bijection_image(lam, meth)
                c.expect(count == distinct == factorial(m) and valid, (meth, lam, count, distinct, valid))


def _sampler(c: Check, N: int) -> None:
    for lam in ((2, 2), (3, 2), (2, 2, 1)):
        _, p, _ = bijections.chi_square(lam, 10_000, seed=2024)
        c.expect(p > 1e-6, (lam, p))
    for m in range(1, min(N, 8) + 1):
        for lam in partitions(m):
            exact = bijections.corner_probabilities(lam)
            for corner, pr in exact.items():
                c.expect(pr == bijections.corner_probability_formula(lam, corner), (lam, corner))


def bijections_suite(N: int) -> list[Check]:
    s = "bijections"
    return [
        _run(s, "RS via jeu de taquin", lambda c: _rs(c, N)),
        _run(s, "rectification is policy independent", lambda c: _jdt(c, N)),
        _run(s, "FZ and NPS injective with valid pointers", lambda c: _hook_bij(c, N)),
        _run(s, "hook walk sampler", lambda c: _sampler(c, N)),
    ]


# -- q ------------------------------------------------------------------------------------

def _compositions(n: int, parts: int):
    if n == 0:
        yield ()
        return
    if parts == 0:
        return
    for p in range(1, n + 1):
        for rest in _compositions(n - p, parts - 1):
            yield (p,) + rest


def _q_hook(c: Check, N: int) -> None:
    for m in range(N + 1):
        for lam in partitions(m):
            g = qenum.stat_gf(Ordinary(lam), "maj")
            c.expect(qenum.q_hook_maj(lam) == g, ("q-hook", lam))
            c.expect(g.at(1) == formulas.f_ordinary(lam), ("q=1", lam))
            d = qenum.stat_gf(Ordinary(lam), "des")
            c.expect(d.at(1) == formulas.f_ordinary(lam), ("des q=1", lam))


def _descent_classes(c: Check, N: int) -> None:
    for n in range(1, min(N, 6) + 1):
        for k in range(n):
            for S in combinations(range(1, n), k):
                sub = qenum.descent_class_gf(n, S, "subset_maj")
                c.expect(sub == qenum.descent_class_brute(n, S, "maj"), ("subset maj", n, S))
                c.expect(sub == qenum.descent_class_brute(n, S, "inv"), ("subset inv", n, S))
                det = qenum.descent_class_gf(n, S, "exact_det")
                c.expect(det == qenum.descent_class_brute(n, S, "maj", exact=True), ("det", n, S))
                c.expect(qenum.zigzag_q_check(n, S), ("zigzag maj/winv", n, S))
        full = qenum.descent_class_gf(n, range(1, n), "subset_maj")
        c.expect(full == qenum.q_factorial(n), ("[n]!", n))


def _catalan(c: Check, N: int) -> None:
    for n in range(N + 1):
        fh = qenum.q_catalan("furlinger_hofbauer", n)
        cr = qenum.q_catalan("carlitz_riordan", n)
        c.expect(fh.at(1) == cr.at(1) == catalan(n), ("q=1", n))
        if 0 < 2 * n <= N:
            c.expect(qenum.stat_gf(Ordinary((n, n)), "inv") == cr, ("Shynar", n))
            c.expect(qenum.stat_gf(Ordinary((n, n)), "maj") == fh.shift(n), ("two-row maj", n))


def _thin_q(c: Check, N: int) -> None:
    for n in range(1, N + 1):
        for name, ok in qenum.thin_q_identities(n).items():
            c.expect(ok, (name, n))
    c.expect(qenum.stat_gf(Ordinary((2, 1)), "des") == qenum.barahovski(2, 1), "Barahovski (2,1)")


def _stembridge(c: Check, N: int) -> None:
    for m in range(1, N + 1):
        for lam in strict_partitions(m):
            c.expect(qenum.stembridge_gf(lam) == qenum.stembridge_brute(lam), ("Stembridge", lam))


def _descents(c: Check, N: int) -> None:
    for m in range(2, N + 1):
        for lam in partitions(m):
            for k in range(1, m):
                c.expect(qenum.one_descent_stats(lam, k) == qenum.one_descent_brute(lam, k), (lam, k))
    for m in range(1, min(N, 6) + 1):
        for lam in partitions(m):
            for mu in _compositions(m, 3):
                for nu in set(permutations(mu)):
                    c.expect(qenum.descent_window_invariance(lam, mu, nu), ("window", lam, mu, nu))
    for n in range(1, min(N, 6) + 1):
        for k in range(1, 5):
            c.expect(qenum.avoidance_des_check(n, k), ("avoidance", n, k))


def _signs(c: Check, N: int) -> None:
    for n in range(1, N + 1):
        c.expect(qenum.sign_sum(n) == 2 ** (n // 2), ("sign sum", n))
    for m in range(1, min(N, 6) + 1):
        for a in range(m + 1):
            for l0 in partitions(a):
                for l1 in partitions(m - a):
                    c.expect(qenum.r_tableau_q_hook([l0, l1]) == qenum.r_tableau_maj_brute([l0, l1]), (l0, l1))


def q_suite(N: int) -> list[Check]:
    s = "q"
    return [
        _run(s, "q-hook length formula", lambda c: _q_hook(c, N)),
        _run(s, "descent classes and zigzag q-determinant", lambda c: _descent_classes(c, N)),
        _run(s, "q-Catalan numbers", lambda c: _catalan(c, N)),
        _run(s, "thin-shape q-identities", lambda c: _thin_q(c, N)),
        _run(s, "Stembridge shifted q-formula", lambda c: _stembridge(c, N)),
        _run(s, "descent counts, windows, avoidance", lambda c: _descents(c, N)),
        _run(s, "sign sum and r-tableau q-hook", lambda c: _signs(c, N)),
    ]


# -- rim hooks ----------------------------------------------------------------------------

def _rim_counts(c: Check, N: int) -> None:
    top = min(2 * N, 14)
    for r in (1, 2, 3, 4):
        for m in range(r, top + 1, r):
            for lam in partitions(m):
                d = rimhook.count_rimhook_direct(lam, r)
                q = rimhook.count_rimhook_via_quotient(lam, r)
                h = 0 if r_core(lam, r) else rimhook.count_rimhook_hook_formula(lam, r)
                c.expect(d == q == h, (lam, r, d, q, h))
                c.expect(rimhook.fomin_lulov_bound(lam, r), ("Fomin-Lulov", lam, r))
                if not r_core(lam, r):
                    c.expect(rimhook.divisible_hooks(lam, r) == sum(map(sum, r_quotient(lam, r))), ("hooks", lam, r))
    c.expect(rimhook.count_rimhook_direct((6, 4, 2, 2, 2, 1), 2) == 0, "(6,4,2,2,2,1)")
    c.expect(rimhook.count_rimhook_direct((4, 2), 2) == 3, "(4,2)")


def _rim_sums(c: Check, N: int) -> None:
    top = min(2 * N, 12)
    for r in (1, 2, 3, 4, 5):
        for n in range(1, top // r + 1):
            rep = rimhook.rimhook_sum_identities(n, r)
            c.expect(rep["ok"], (n, r, rep))


def _core_sizes(c: Check, N: int) -> None:
    for m in range(min(2 * N, 14) + 1):
        for lam in partitions(m):
            for r in range(1, 6):
                core, quo = r_core(lam, r), r_quotient(lam, r)
                c.expect(m == r * sum(map(sum, quo)) + sum(core), (lam, r))


def rimhook_suite(N: int) -> list[Check]:
    s = "rimhook"
    return [
        _run(s, "direct = quotient = hook formula, Fomin-Lulov", lambda c: _rim_counts(c, N)),
        _run(s, "sum identities", lambda c: _rim_sums(c, N)),
        _run(s, "core and quotient sizes", lambda c: _core_sizes(c, N)),
    ]


# -- words --------------------------------------------------------------------------------

def _words(c: Check, N: int) -> None:
    for name, ok in words.words_verify(min(N, 6)).items():
        c.expect(ok, name)
    c.expect(words.shuffle_of_shape((5, 4, 1)) == (4, 1, 5, 6, 7, 2, 8, 3), "41567283")
    c.expect(words.unimodal_of_shape((5, 4, 1), 7) == (4, 3, 5, 6, 2, 1, 7), "4356217")
    for n in range(2, min(N, 7) + 1):
        rng = random.Random(n)
        for _ in range(20):
            p = tuple(rng.sample(range(1, n + 1), n))
            c.expect(words.vexillary_check(p)["ok"], ("vexillary", p))


def words_suite(N: int) -> list[Check]:
    return [_run("words", "reduced words", lambda c: _words(c, N))]


SUITES = {
    "formulas": formulas_suite,
    "bijections": bijections_suite,
    "q": q_suite,
    "rimhook": rimhook_suite,
    "words": words_suite,
}


def verify(scope: str = "all", max_size: int = 6) -> list[Check]:
    if scope in ("", "all"):
        names = SCOPES
    elif scope in SUITES:
        names = (scope,)
    else:
        raise ValueError(f"unknown scope {scope!r}; choose from all, {', '.join(SCOPES)}")
    out: list[Check] = []
    for name in names:
        out.extend(SUITES[name](max_size))
    return out

