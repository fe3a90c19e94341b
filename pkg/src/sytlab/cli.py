"""Command-line front end: ``sytlab <subcommand> ...``.

Exit codes: 0 on success, 1 on a usage or input error, 2 when a
cross-check or verification fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from . import bijections, formulas, jdt, qenum, rimhook, words
from .oracle import SizeLimitError, count_linear_extensions, enumerate_syt
from .perms import format_perm, parse_perm
from .shapes import (
    Ordinary,
    Shifted,
    ShapeError,
    ShapeSyntaxError,
    Skew,
    Zigzag,
    format_shape,
    parse_shape,
)
from .tableau import Tableau, TableauError, statistics

DEFAULT_SEED = 20240601

OK, USAGE, FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, record: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(record, default=str))
    else:
        print(text)


def _partition_arg(text: str) -> tuple[int, ...]:
    spec = parse_shape(text)
    if not isinstance(spec, Ordinary):
        raise UsageError(f"expected a partition such as 4,3,1, got {text!r}")
    return spec.lam


# -- count ---------------------------------------------------------------------

COUNT_METHODS = ("auto", "product", "hook", "det", "oracle")


def count_shape(spec, method: str = "auto") -> tuple[int, str]:
    """(f^D, method actually used)."""
    if method == "oracle":
        return count_linear_extensions(spec), "oracle"
    if isinstance(spec, Ordinary):
        m = "hook" if method == "auto" else method
        return formulas.f_ordinary(spec.lam, m), m
    if isinstance(spec, Shifted):
        m = "product" if method == "auto" else method
        return formulas.g_shifted(spec.lam, m), m
    if isinstance(spec, Skew):
        if method not in ("auto", "det"):
            raise UsageError(f"skew shapes support --method det or oracle, not {method}")
        return formulas.f_skew_det(spec.lam, spec.mu), "det"
    if isinstance(spec, Zigzag):
        if method not in ("auto", "det"):
            raise UsageError(f"zigzags support --method det or oracle, not {method}")
        return formulas.zigzag_det(spec.n, spec.S), "det"
    if method != "auto":
        raise UsageError("this shape has no closed form here; use --method oracle")
    return count_linear_extensions(spec), "oracle"


def cmd_count(args) -> int:
    spec = parse_shape(args.shape)
    method = "oracle" if args.oracle else args.method
    value, used = count_shape(spec, method)
    checks = {}
    if args.cross_check and used != "oracle":
        checks["oracle"] = "agree" if count_linear_extensions(spec) == value else "disagree"
    record = {"shape": format_shape(spec), "method": used, "value": value, "cross_checks": checks}
    text = str(value) + "".join(f"\n{k}: {v}" for k, v in checks.items())
    _emit(args, record, text)
    return FAILED if "disagree" in checks.values() else OK


# -- tableaux ------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    spec = parse_shape(args.shape)
    out = []
    for k, T in enumerate(enumerate_syt(spec, limit=args.limit)):
        if args.count is not None and k >= args.count:
            break
        out.append(T.to_text())
    _emit(args, {"shape": format_shape(spec), "method": "enumerate", "tableaux": out}, "\n".join(out))
    return OK


def cmd_sample(args) -> int:
    lam = _partition_arg(args.shape)
    rng = random.Random(args.seed)
    out = [bijections.gnw_sample(lam, rng).to_text() for _ in range(args.count)]
    _emit(args, {"shape": format_shape(Ordinary(lam)), "method": "hook walk", "seed": args.seed, "tableaux": out},
          "\n".join(out))
    return OK


def cmd_stats(args) -> int:
    T = Tableau.from_text(args.tableau)
    s = statistics(T)
    rec = {"tableau": T.to_text(), "des_set": sorted(s.des_set), "des": s.des, "maj": s.maj,
           "inv": s.inv, "winv": s.winv, "sign": s.sign}
    text = "\n".join(f"{k}: {v}" for k, v in rec.items())
    _emit(args, rec, text)
    return OK


def cmd_rs(args) -> int:
    pi = parse_perm(args.perm)
    P, Q = jdt.rs_pair(pi)
    checks = {}
    if args.cross_check:
        checks["row insertion"] = "agree" if (P, Q) == jdt.rs_insert(pi) else "disagree"
        checks["inverse"] = "agree" if jdt.rs_inverse(P, Q) == tuple(pi) else "disagree"
        checks["schensted"] = "agree" if jdt.schensted_report(pi)["ok"] else "disagree"
    rec = {"perm": format_perm(pi), "P": P.to_text(), "Q": Q.to_text(),
           "shape": [len(r) for r in P.rows()], "cross_checks": checks}
    text = f"P: {P.to_text()}\nQ: {Q.to_text()}" + "".join(f"\n{k}: {v}" for k, v in checks.items())
    _emit(args, rec, text)
    return FAILED if "disagree" in checks.values() else OK


def cmd_jdt(args) -> int:
    T = Tableau.from_text(args.tableau)
    R = jdt.rectify(T, args.policy, seed=args.seed)
    _emit(args, {"tableau": args.tableau, "policy": args.policy, "rectified": R.to_text()}, R.to_text())
    return OK


# -- q ---------------------------------------------------------------------------

def cmd_qgf(args) -> int:
    spec = parse_shape(args.shape)
    if args.closed_form:
        if args.stat == "maj" and isinstance(spec, Ordinary):
            poly, method = qenum.q_hook_maj(spec.lam), "q-hook"
        elif args.stat == "maj" and isinstance(spec, Zigzag):
            poly, method = qenum.descent_class_gf(spec.n, spec.S, "exact_det"), "descent-class determinant"
        elif args.stat == "stembridge" and isinstance(spec, Shifted):
            poly, method = qenum.stembridge_gf(spec.lam), "Stembridge"
        else:
            raise UsageError("--closed-form covers maj on partitions and zigzags, stembridge on shifted shapes")
    else:
        poly, method = qenum.stat_gf(spec, args.stat), "enumeration"
    rec = {"shape": format_shape(spec), "method": method, "stat": args.stat, "coefficients": list(poly.c)}
    _emit(args, rec, poly.format())
    return OK


# -- rim hooks -------------------------------------------------------------------

def cmd_rimhook(args) -> int:
    lam = _partition_arg(args.shape)
    try:
        value = rimhook.count_rimhook(lam, args.r, args.method)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    checks = {}
    if args.cross_check:
        others = [m for m in rimhook.METHODS if m != args.method]
        for m in others:
            if m == "hook" and value == 0:
                continue
            checks[m] = "agree" if rimhook.count_rimhook(lam, args.r, m) == value else "disagree"
    rec = {"shape": format_shape(Ordinary(lam)), "method": args.method, "r": args.r, "value": value,
           "cross_checks": checks}
    _emit(args, rec, str(value) + "".join(f"\n{k}: {v}" for k, v in checks.items()))
    return FAILED if "disagree" in checks.values() else OK


# -- words -------------------------------------------------------------------------

def _signed(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad signed permutation {text!r}") from None


def cmd_words(args) -> int:
    if args.perm is not None:
        args.arg = args.perm
    if args.action == "count":
        if args.arg is None:
            raise UsageError("words count needs a permutation")
        w = _signed(args.arg) if args.type == "B" else parse_perm(args.arg)
        value = words.reduced_word_count(w, args.type)
        _emit(args, {"perm": args.arg, "type": args.type, "value": value}, str(value))
        return OK
    if args.action == "shuffle":
        if args.arg is None:
            raise UsageError("words shuffle needs a partition")
        lam = _partition_arg(args.arg)
        pi = words.shuffle_of_shape(lam)
        n = words.reduced_word_count(pi)
        f = formulas.f_ordinary(lam)
        rec = {"shape": format_shape(Ordinary(lam)), "perm": format_perm(pi), "reduced_words": n, "f": f,
               "cross_checks": {"f": "agree" if n == f else "disagree"}}
        _emit(args, rec, f"{format_perm(pi)}\nreduced words: {n}\nf: {f}")
        return OK if n == f else FAILED
    report = words.words_verify(args.max_n)
    _emit(args, {"max_n": args.max_n, "checks": report},
          "\n".join(f"{'PASS' if v else 'FAIL'} {k}" for k, v in report.items()))
    return OK if all(report.values()) else FAILED


# -- verify ----------------------------------------------------------------------------

def cmd_verify(args) -> int:
    from .verify import verify

    t = time.perf_counter()
    checks = verify(args.scope or "all", args.max_size)
    total = time.perf_counter() - t
    failed = sum(len(c.failures) for c in checks)
    if args.json:
        print(json.dumps({
            "scope": args.scope or "all", "max_size": args.max_size, "seconds": round(total, 2),
            "suites": [{"suite": c.suite, "name": c.name, "checked": c.checked, "failures": c.failures}
                       for c in checks],
        }))
    else:
        for c in checks:
            print(f"{'PASS' if c.ok else 'FAIL'} [{c.suite}] {c.name}: {c.checked} checked, "
                  f"{len(c.failures)} failed ({c.seconds:.1f}s)")
            for f in c.failures[:5]:
                print(f"    {f}")
        print(f"{sum(c.checked for c in checks)} identities checked, {failed} failures, {total:.1f}s")
    return FAILED if failed else OK


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sytlab", description="Exact enumeration of standard Young tableaux.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_, fn):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--json", action="store_true", help="machine-readable output")
        s.set_defaults(fn=fn)
        return s

    s = add("count", "number of SYT of a shape", cmd_count)
    s.add_argument("shape")
    s.add_argument("--method", choices=COUNT_METHODS, default="auto")
    s.add_argument("--oracle", action="store_true", help="count with the order-ideal DP")
    s.add_argument("--cross-check", action="store_true", help="compare with the oracle")

    s = add("enumerate", "list the SYT of a shape", cmd_enumerate)
    s.add_argument("shape")
    s.add_argument("--count", type=int, default=None, help="stop after this many")
    s.add_argument("--limit", type=int, default=20, help="refuse diagrams with more cells")

    s = add("sample", "uniform SYT by the hook walk", cmd_sample)
    s.add_argument("shape")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)

    s = add("stats", "des, maj, inv, winv and sign of a tableau like 13/24", cmd_stats)
    s.add_argument("tableau")

    s = add("rs", "RS pair of a permutation, via jeu de taquin", cmd_rs)
    s.add_argument("perm")
    s.add_argument("--cross-check", action="store_true")

    s = add("jdt", "rectify a skew tableau such as ..36/.147/258", cmd_jdt)
    s.add_argument("tableau")
    s.add_argument("--policy", choices=jdt.POLICIES, default="nw")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)

    s = add("qgf", "generating polynomial of a statistic", cmd_qgf)
    s.add_argument("shape")
    s.add_argument("--stat", choices=("maj", "inv", "des", "winv", "stembridge"), default="maj")
    s.add_argument("--closed-form", action="store_true")

    s = add("rimhook", "number of r-rim hook tableaux", cmd_rimhook)
    s.add_argument("shape")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--method", choices=rimhook.METHODS, default="direct")
    s.add_argument("--cross-check", action="store_true")

    s = add("words", "reduced words: count, shuffle, verify", cmd_words)
    s.add_argument("action", choices=("count", "shuffle", "verify"))
    s.add_argument("arg", nargs="?")
    s.add_argument("--perm", dest="perm", help="the argument as --perm=-1,-2 when it starts with a minus sign")
    s.add_argument("--type", choices=("A", "B"), default="A")
    s.add_argument("--max-n", type=int, default=5)

    s = add("verify", "run the cross-check suites", cmd_verify)
    s.add_argument("scope", nargs="?", default="all",
                   choices=("all", "formulas", "bijections", "q", "rimhook", "words"))
    s.add_argument("--max-size", type=int, default=6)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except ShapeSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.expr:
            print(f"  {exc.expr}\n  {' ' * exc.pos}^", file=sys.stderr)
        return USAGE
    except (ShapeError, TableauError, SizeLimitError, words.WordLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
