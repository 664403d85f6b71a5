"""Command-line front end.

Subcommands: expand, admissible, alphabet, unique, compare.  Output is
human text by default or a self-describing JSON report with --json;
exact values are always serialized as rational coefficient vectors,
never as floats.

Exit codes: 0 on success, 2 on parse or domain errors, 3 when a result
is UNDECIDED or a period was not found within the orbit budget.
"""

import argparse
import json
import os
import re
import sys

from .admissibility import (UNDECIDED, golden_forbidden_factor_check,
                            is_admissible_greedy, is_admissible_lazy,
                            ito_sadahiro_admissible, minimal_alphabet,
                            reference_bounds)
from .field import phi_field
from .oracle import (DEFAULT_NODE_BUDGET, BranchBudgetError,
                     count_representation_branches, enumerate_prefixes,
                     sample_unique_numbers)
from .schemes import (DEFAULT_ORBIT_BUDGET, DomainError, build_beta2_scheme,
                      build_ito_sadahiro_scheme, eval_beta2_pairs,
                      eval_neg_beta, greedy_neg_beta, interval_I,
                      lazy_neg_beta, run_scheme)
from .syntax import ParseError, coeff_vector, parse_base, parse_element
from .words import DigitString, alt_compare, format_word, parse_word

SCHEMA_VERSION = 1

_EXIT_SOFT = {"PERIOD_NOT_FOUND", "UNDECIDED"}


def _orbit_budget():
    return int(os.environ.get("NEGABASE_ORBIT_BUDGET", DEFAULT_ORBIT_BUDGET))


def _node_budget():
    return int(os.environ.get("NEGABASE_NODE_BUDGET", DEFAULT_NODE_BUDGET))


def _base_info(text, ctx):
    lo, hi = ctx.isolating_interval
    return {
        "text": text,
        "min_poly": list(ctx.min_poly),
        "isolating_interval": [str(lo), str(hi)],
        "floor": ctx.floor_beta,
    }


def _interval_info(ctx):
    I = interval_I(ctx)
    return {"l": coeff_vector(I.lo), "r": coeff_vector(I.hi)}


def _element_info(text, x):
    return {"text": text, "coeffs": coeff_vector(x)}


def _expansion_info(exp):
    word = exp.word
    return {
        "word": format_word(word),
        "preperiod_length": len(word.preperiod),
        "period_length": len(word.period) or None,
        "status": "OK" if exp.ok else "PERIOD_NOT_FOUND",
        "endpoint": exp.endpoint,
    }


def _status_of(*statuses):
    for bad in ("ERROR", "UNDECIDED", "PERIOD_NOT_FOUND"):
        if bad in statuses:
            return bad
    return "OK"


# -- commands -------------------------------------------------------------------


def _cmd_expand(args):
    ctx = parse_base(args.base)
    x = parse_element(args.x, ctx)
    budget = _orbit_budget()
    depth = args.depth
    kind = args.kind
    if kind == "greedy":
        exp = greedy_neg_beta(x, depth, budget)
        value = eval_neg_beta(ctx, exp.word)
    elif kind == "lazy":
        exp = lazy_neg_beta(x, depth, budget)
        value = eval_neg_beta(ctx, exp.word)
    elif kind == "is":
        exp = run_scheme(build_ito_sadahiro_scheme(ctx), x, depth, budget)
        value = eval_neg_beta(ctx, exp.word)
    elif kind in ("beta2-greedy", "beta2-lazy"):
        scheme = build_beta2_scheme(ctx, kind.split("-")[1])
        exp = run_scheme(scheme, x, depth, budget)
        value = eval_beta2_pairs(ctx, exp.word)
    else:  # pragma: no cover
        raise ParseError(f"unknown kind {kind!r}")
    info = _expansion_info(exp)
    report = {
        "schema": SCHEMA_VERSION,
        "command": "expand",
        "status": _status_of(info["status"]),
        "base": _base_info(args.base, ctx),
        "interval": _interval_info(ctx),
        "x": _element_info(args.x, x),
        "kind": kind,
        "result": info,
        "evaluated": coeff_vector(value),
        "round_trip": (value - x).sign() == 0,
    }
    lines = [
        f"{kind}({args.x}) in base {args.base}: {info['word']}",
        f"  preperiod {info['preperiod_length']}, period {info['period_length']},"
        f" status {info['status']}",
        f"  round-trip exact: {'yes' if report['round_trip'] else 'no'}",
    ]
    return report, lines


_VERDICT_TEXT = {True: "ACCEPT", False: "REJECT"}


def _cmd_admissible(args):
    if args.pairs is not None:
        if args.base is None:
            raise ParseError("--pairs needs --base")
        ctx = parse_base(args.base)
        word = parse_word(args.pairs, pair=True)
        level = args.level or "pairs-greedy"
        bounds = reference_bounds(ctx, _orbit_budget())
        if level == "pairs-greedy":
            rep = is_admissible_greedy(word, ctx, bounds)
        elif level == "pairs-lazy":
            rep = is_admissible_lazy(word, ctx, bounds)
        else:
            raise ParseError(f"level {level!r} does not apply to pair words")
        base_info = _base_info(args.base, ctx)
        word_text = format_word(word, pair=True)
    else:
        if args.base is not None and parse_base(args.base) != phi_field():
            raise ParseError("binary admissibility checks are golden-ratio presets")
        ctx = phi_field()
        base_info = _base_info("phi", ctx)
        if args.binary_golden is not None:
            word = parse_word(args.binary_golden)
            level = "binary-golden"
            rep = golden_forbidden_factor_check(word)
        else:
            word = parse_word(args.binary_is)
            level = "binary-is"
            rep = ito_sadahiro_admissible(word)
        word_text = format_word(word)
    status = "UNDECIDED" if rep.verdict == UNDECIDED else "OK"
    report = {
        "schema": SCHEMA_VERSION,
        "command": "admissible",
        "status": status,
        "base": base_info,
        "level": level,
        "word": word_text,
        "verdict": rep.verdict,
        "accepted": rep.ok,
        "violation": None if rep.violation is None else {
            "rule": rep.violation.rule,
            "position": rep.violation.position,
            "factor": rep.violation.factor,
        },
    }
    head = "UNDECIDED" if status == "UNDECIDED" else _VERDICT_TEXT[rep.ok]
    lines = [f"{head}: {word_text} ({level}, verdict {rep.verdict})"]
    if rep.violation is not None:
        v = rep.violation
        lines.append(f"  {v.rule} rule fails at position {v.position}: {v.factor}")
    return report, lines


def _cmd_alphabet(args):
    ctx = parse_base(args.base)
    alpha = minimal_alphabet(ctx)
    report = {
        "schema": SCHEMA_VERSION,
        "command": "alphabet",
        "status": "OK",
        "base": _base_info(args.base, ctx),
        "greedy_alphabet": [p.text() for p in alpha.greedy],
        "lazy_alphabet": [p.text() for p in alpha.lazy],
        "max_greedy": alpha.max_greedy.text(),
        "min_lazy": alpha.min_lazy.text(),
        "full": alpha.full,
        "pair_count": (ctx.floor_beta + 1) ** 2,
    }
    lines = [
        f"greedy alphabet: {' '.join(report['greedy_alphabet'])}"
        f" (max {report['max_greedy']})",
        f"lazy alphabet:   {' '.join(report['lazy_alphabet'])}"
        f" (min {report['min_lazy']})",
        f"uses all {report['pair_count']} pair digits: {'yes' if alpha.full else 'no'}",
    ]
    return report, lines


def _cmd_unique(args):
    ctx = parse_base(args.base)
    records = sample_unique_numbers(ctx, word_length=args.length,
                                    samples=args.samples, depth=args.depth,
                                    node_budget=_node_budget())
    all_unique = all(r.branch_count == 1 for r in records)
    report = {
        "schema": SCHEMA_VERSION,
        "command": "unique",
        "status": "OK",
        "base": _base_info(args.base, ctx),
        "depth": args.depth,
        "samples": [
            {
                "word": format_word(r.word),
                "value": coeff_vector(r.value),
                "branch_count": r.branch_count,
                "unique_at_depth": r.unique_at_depth,
            }
            for r in records
        ],
        "all_unique_at_depth": all_unique,
    }
    lines = [f"{format_word(r.word)} -> {r.branch_count} branch(es) at depth "
             f"{args.depth}" for r in records]
    lines.append(f"all unique at depth {args.depth}: {'yes' if all_unique else 'no'}")
    return report, lines


_ORDER_TEXT = {-1: "LT", 0: "EQ", 1: "GT"}


def _order_verdict(a, b, probe=60):
    """Alternate-order verdict between two expansions, 'UNDECIDED' when a
    missing period leaves the comparison unsettled."""
    if a.ok and b.ok and not a.word.is_finite and not b.word.is_finite:
        return _ORDER_TEXT[alt_compare(a.word, b.word)]
    from .words import DigitString

    n = probe
    for exp in (a, b):
        if exp.word.is_finite:
            n = min(n, len(exp.word))
    u = DigitString.finite(a.word.prefix(n))
    v = DigitString.finite(b.word.prefix(n))
    c = alt_compare(u, v)
    return _ORDER_TEXT[c] if c != 0 else "UNDECIDED"


def _cmd_branches(args):
    ctx = parse_base(args.base)
    x = parse_element(args.x, ctx)
    depth = args.depth
    prefixes = enumerate_prefixes(x, depth, _node_budget())
    count = len(prefixes)
    words = [format_word(DigitString.finite(p)) for p in prefixes]
    report = {
        "schema": SCHEMA_VERSION,
        "command": "branches",
        "status": "OK",
        "base": _base_info(args.base, ctx),
        "interval": _interval_info(ctx),
        "x": _element_info(args.x, x),
        "depth": depth,
        "count": count,
        "prefixes": words,
    }
    lines = [f"{count} extendable prefix(es) at depth {depth}"]
    lines.extend(f"  {w}" for w in words)
    return report, lines


def _cmd_compare(args):
    ctx = parse_base(args.base)
    x = parse_element(args.x, ctx)
    budget = _orbit_budget()
    depth = args.depth
    is_scheme = build_ito_sadahiro_scheme(ctx)
    if not is_scheme.domain.contains(x):
        raise DomainError(f"x = {x.as_text()} outside the Ito-Sadahiro domain "
                          f"{is_scheme.domain}")
    greedy = greedy_neg_beta(x, depth, budget)
    lazy = lazy_neg_beta(x, depth, budget)
    isexp = run_scheme(is_scheme, x, depth, budget)
    infos = {"greedy": _expansion_info(greedy), "lazy": _expansion_info(lazy),
             "ito_sadahiro": _expansion_info(isexp)}
    verdicts = {
        "lazy_vs_is": _order_verdict(lazy, isexp),
        "is_vs_greedy": _order_verdict(isexp, greedy),
    }
    status = _status_of(*(i["status"] for i in infos.values()),
                        *("UNDECIDED" for v in verdicts.values() if v == "UNDECIDED"))
    report = {
        "schema": SCHEMA_VERSION,
        "command": "compare",
        "status": status,
        "base": _base_info(args.base, ctx),
        "interval": _interval_info(ctx),
        "x": _element_info(args.x, x),
        "expansions": infos,
        "alternate_order": verdicts,
    }
    lines = [
        f"ito-sadahiro  {infos['ito_sadahiro']['word']}",
        f"lazy          {infos['lazy']['word']}",
        f"greedy        {infos['greedy']['word']}",
        f"lazy {verdicts['lazy_vs_is']} ito-sadahiro, "
        f"ito-sadahiro {verdicts['is_vs_greedy']} greedy",
    ]
    return report, lines


# -- driver --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that lets values like -1/2 or -b/2 follow --x."""

    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        self._negative_number_matcher = re.compile(r"^-(\d|b|\()")


def _build_parser():
    parser = _Parser(
        prog="negabase",
        description="Greedy, lazy and Ito-Sadahiro expansions in negative "
                    "base, with exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("expand", help="digit expansion of a point")
    p.add_argument("--base", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--kind", default="greedy",
                   choices=["greedy", "lazy", "is", "beta2-greedy", "beta2-lazy"])
    p.add_argument("--depth", type=int, default=None,
                   help="finite depth; omit to detect the period")
    add_common(p)

    p = sub.add_parser("admissible", help="admissibility of a digit word")
    p.add_argument("--base")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pairs", help="pair word, e.g. 1:1.0:0 or 0:1(1:0)")
    group.add_argument("--binary-golden", help="binary word, greedy shape test")
    group.add_argument("--binary-is", help="binary word, Ito-Sadahiro test")
    p.add_argument("--level", choices=["pairs-greedy", "pairs-lazy"])
    add_common(p)

    p = sub.add_parser("alphabet", help="minimal greedy/lazy pair alphabets")
    p.add_argument("--base", required=True)
    add_common(p)

    p = sub.add_parser("unique", help="sample uniquely representable numbers")
    p.add_argument("--base", required=True)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--length", type=int, default=6)
    add_common(p)

    p = sub.add_parser("branches", help="enumerate representation prefixes")
    p.add_argument("--base", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--depth", type=int, default=10)
    add_common(p)

    p = sub.add_parser("compare", help="greedy vs lazy vs Ito-Sadahiro")
    p.add_argument("--base", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--depth", type=int, default=None)
    add_common(p)

    return parser


_HANDLERS = {
    "expand": _cmd_expand,
    "admissible": _cmd_admissible,
    "alphabet": _cmd_alphabet,
    "unique": _cmd_unique,
    "branches": _cmd_branches,
    "compare": _cmd_compare,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report, lines = _HANDLERS[args.command](args)
    except (ValueError, BranchBudgetError) as exc:
        if args.json:
            err = {"schema": SCHEMA_VERSION, "command": args.command,
                   "status": "ERROR", "error": str(exc)}
            print(json.dumps(err, indent=2))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
        if report["status"] != "OK":
            print(f"status: {report['status']}")
    return 0 if report["status"] == "OK" else 3 if report["status"] in _EXIT_SOFT else 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
