"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .braids import (UnsupportedType, classical_braid_relation_check, classical_monoid,
                     cross_word_problem, dual_monoid, t_lifts, verify_duality_table,
                     verify_fact_a)
from .coxeter import build_group
from .dual import (CapExceeded, enumerate_pc, fixed_space_poset_check, hurwitz_orbits,
                   lattice_check)
from .garside import (delta_conjugation, format_mixed_form, group_mixed_form,
                      theta_antiautomorphisms, verify_garside)
from .ncp import ncp_model_a, ncp_model_b, verify_ncp_isomorphism
from .report import Report, timed
from .types import InvalidType, catalan_number, parse_type
from .words import WordSyntaxError, format_s_word, format_t_word, parse_word

SUITES = ("fact-a", "fact-b", "hurwitz", "duality", "garside", "theta", "brady", "orbits",
          "ncp-iso", "word-problem", "braid-relations")


class UsageError(ValueError):
    pass


def _emit(args, text: str, doc) -> None:
    out = json.dumps(doc, indent=2, sort_keys=True) if args.json else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _table(rows) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _type(args):
    text = args.type_opt or args.type
    if not text:
        raise UsageError("a Coxeter type is required (positional or --type)")
    return build_group(parse_type(text))


# ---- commands --------------------------------------------------------------------

def cmd_group_info(args) -> int:
    ctx = _type(args)
    pair = ctx.canonical_chromatic_pair()
    doc = {
        "type": str(ctx.descriptor),
        "rank": ctx.rank,
        "order": ctx.group_order(),
        "reflections": ctx.N,
        "coxeter_number": ctx.coxeter_number,
        "degrees": list(ctx.degrees),
        "L": [f"s{i + 1}" for i in pair.L],
        "R": [f"s{i + 1}" for i in pair.R],
        "coxeter_element": format_s_word(pair.order),
    }
    rows = [("type", doc["type"]), ("n", ctx.rank), ("|W|", doc["order"]), ("N", ctx.N),
            ("h", doc["coxeter_number"]), ("degrees", ",".join(map(str, ctx.degrees))),
            ("L", ",".join(doc["L"])), ("R", ",".join(doc["R"])),
            ("c", doc["coxeter_element"])]
    _emit(args, _table(rows), doc)
    return 0


def cmd_pc(args) -> int:
    if args.action == "catalan":
        desc = parse_type(args.type_opt or args.type or "")
        value = catalan_number(desc)
        _emit(args, str(value), {"type": str(desc), "catalan": value})
        return 0
    ctx = _type(args)
    c = ctx.canonical_chromatic_pair().c
    poset = enumerate_pc(ctx, c, max_size=args.max_poset)
    if args.action == "enumerate":
        if args.format == "edges":
            text = "\n".join(poset.edge_lines())
        else:
            text = "\n".join(f"{r} {format_t_word(w)}" for r, w in zip(poset.ranks, poset.words))
        _emit(args, text, poset.to_document())
        return 0
    if args.action == "polynomial":
        poly = poset.rank_polynomial()
        doc = {"type": str(ctx.descriptor), "coefficients": list(poly.coefficients),
               "palindromic": poly.is_palindromic(), "size": len(poset)}
        _emit(args, ",".join(map(str, poly.coefficients)), doc)
        return 0
    # lattice-check
    strategies = [args.strategy] if args.strategy else ["atoms"]
    if not args.strategy and len(poset) <= 200:
        strategies.append("exhaustive")
    reports = [lattice_check(poset, s) for s in strategies]
    return _emit_reports(args, reports, None)


def _view(ctx, monoid):
    return dual_monoid(ctx) if monoid == "dual" else classical_monoid(ctx)


def _signed_simples(ctx, view, monoid, text):
    letters = parse_word(text, ctx.rank, ctx.N)
    out = []
    lifts = None
    for kind, i, e in letters:
        if monoid == "dual":
            t = ctx.reflections[i] if kind == "t" else ctx.simple_reflections[i]
            out.append((view.index[t], e))
        elif kind == "s":
            out.append((view.index[ctx.simple_reflections[i]], e))
        else:
            lifts = lifts or t_lifts(ctx)
            word = lifts[i].word if e > 0 else tuple((g, -s) for g, s in reversed(lifts[i].word))
            out.extend((view.index[ctx.simple_reflections[g]], s) for g, s in word)
    return out


def cmd_nf(args) -> int:
    if args.type_opt and args.type and not args.word:
        args.word, args.type = args.type, None
    ctx = _type(args)
    view = _view(ctx, args.monoid)
    mf = group_mixed_form(view, _signed_simples(ctx, view, args.monoid, args.word))
    text = format_mixed_form(view, mf)
    _emit(args, text, {"type": str(ctx.descriptor), "monoid": args.monoid,
                       "delta_power": mf.delta_power,
                       "factors": [view.label(p) for p in mf.factors], "form": text})
    return 0


def cmd_wp(args) -> int:
    ctx = _type(args)
    view = _view(ctx, args.monoid)
    m1 = group_mixed_form(view, _signed_simples(ctx, view, args.monoid, args.word1))
    m2 = group_mixed_form(view, _signed_simples(ctx, view, args.monoid, args.word2))
    verdict = "equal" if m1 == m2 else "distinct"
    _emit(args, verdict, {"type": str(ctx.descriptor), "monoid": args.monoid,
                          "result": verdict, "forms": [format_mixed_form(view, m1),
                                                       format_mixed_form(view, m2)]})
    return 0


def _hurwitz_suite(ctx, args) -> list[Report]:
    c = ctx.canonical_chromatic_pair().c
    if args.element:
        if args.element == "w0":
            w = ctx.longest_element
        elif args.element == "c":
            w = c
        else:
            w = ctx.identity
            for kind, i, _ in parse_word(args.element, ctx.rank, ctx.N):
                w = w * (ctx.reflections[i] if kind == "t" else ctx.simple_reflections[i])
        rep = Report(str(ctx.descriptor), "hurwitz-element")
        with timed(rep):
            sizes = hurwitz_orbits(ctx, w, args.max_redt)
            rep.instances = sum(sizes)
            rep.details.update(element=args.element, reflection_length=ctx.reflection_length(w),
                               orbits=len(sizes), orbit_sizes=sizes,
                               below_c=ctx.absolute_divides(w, c))
        return [rep]
    poset = enumerate_pc(ctx, c, max_size=args.max_poset)
    rep = Report(str(ctx.descriptor), "hurwitz")
    with timed(rep):
        for i, w in enumerate(poset.elements):
            sizes = hurwitz_orbits(ctx, w, args.max_redt, poset)
            rep.instances += 1
            if len(sizes) != 1:
                rep.fail({"element": format_t_word(poset.words[i]), "orbit_sizes": sizes})
        rep.details["elements"] = len(poset)
    return [rep]


def _fact_b_suite(ctx, args) -> list[Report]:
    c = ctx.canonical_chromatic_pair().c
    poset = enumerate_pc(ctx, c, max_size=args.max_poset)
    reports = [lattice_check(poset, "atoms")]
    if len(poset) <= 200:
        reports.append(lattice_check(poset, "exhaustive"))
    count = Report(str(ctx.descriptor), "catalan", instances=1)
    expected = catalan_number(ctx.descriptor)
    count.details.update(size=len(poset), catalan=expected,
                         rank_polynomial=list(poset.rank_polynomial().coefficients))
    if len(poset) != expected:
        count.fail({"size": len(poset), "catalan": expected})
    return reports + [count]


def _orbits_suite(ctx, args) -> list[Report]:
    pair = ctx.canonical_chromatic_pair()
    rep = Report(str(ctx.descriptor), "orbits")
    with timed(rep):
        try:
            orbits = ctx.coxeter_conjugation_orbits(pair.c)
            rep.details["orbit_sizes"] = [len(o) for o in orbits]
        except Exception as exc:  # the engine flags a broken dichotomy
            rep.fail({"reason": str(exc)})
        rep.instances += 1
        expected_T = sum(comp.h * len(comp.simples) // 2 for comp in ctx.components)
        if ctx.N != expected_T:
            rep.fail({"reason": "|T| != hn/2", "N": ctx.N})
        poset = enumerate_pc(ctx, pair.c, max_size=args.max_poset)
        poly = poset.rank_polynomial()
        rep.details["rank_polynomial"] = list(poly.coefficients)
        if not poly.is_palindromic():
            rep.fail({"reason": "rank polynomial not palindromic"})
        for w, r in zip(poset.elements, poset.ranks):
            rep.instances += 1
            k = poset.index.get(w.inverse() * pair.c)
            if k is None or poset.ranks[k] != ctx.rank - r:
                rep.fail({"reason": "w -> w^-1 c does not invert rank"})
        rep.details["order_of_c"] = ctx.order(pair.c)
    return [rep]


def _ncp_suite(ctx, args) -> list[Report]:
    if not ctx.irreducible or ctx.descriptor.factors[0].family not in "AB":
        raise UsageError("ncp-iso applies to types A and B")
    f = ctx.descriptor.factors[0]
    model = ncp_model_a(f.rank + 1) if f.family == "A" else ncp_model_b(f.rank)
    return [verify_ncp_isomorphism(model)]


def _garside_suite(ctx, args) -> list[Report]:
    dual = dual_monoid(ctx)
    reports = [verify_garside(dual, seed=args.seed), delta_conjugation(dual).report]
    try:
        classical = classical_monoid(ctx)
    except CapExceeded:
        return reports
    reports += [verify_garside(classical, seed=args.seed), delta_conjugation(classical).report]
    return reports


def _brady_suite(ctx, args):
    if not ctx.exact_coordinates:
        raise UsageError("the fixed-space check needs exact coordinates (no dihedral factors)")
    return [fixed_space_poset_check(ctx, ctx.canonical_chromatic_pair().c)]


def cmd_verify(args) -> int:
    ctx = _type(args)
    suite = args.suite
    runners = {
        "fact-a": lambda: [verify_fact_a(ctx)],
        "fact-b": lambda: _fact_b_suite(ctx, args),
        "hurwitz": lambda: _hurwitz_suite(ctx, args),
        "duality": lambda: [verify_duality_table(ctx)],
        "garside": lambda: _garside_suite(ctx, args),
        "theta": lambda: [theta_antiautomorphisms(ctx).report],
        "brady": lambda: _brady_suite(ctx, args),
        "orbits": lambda: _orbits_suite(ctx, args),
        "ncp-iso": lambda: _ncp_suite(ctx, args),
        "word-problem": lambda: [cross_word_problem(ctx, trials=args.trials, seed=args.seed)],
        "braid-relations": lambda: [classical_braid_relation_check(ctx)],
    }
    start = time.perf_counter()
    reports = runners[suite]()
    return _emit_reports(args, reports, time.perf_counter() - start)


def _emit_reports(args, reports, elapsed) -> int:
    passed = all(r.passed for r in reports)
    doc = {"seed": args.seed, "passed": passed,
           "reports": [r.to_dict(timings=args.timings) for r in reports]}
    if args.timings and elapsed is not None:
        doc["wall_time"] = round(elapsed, 6)
    lines = [f"seed {args.seed}"]
    tw = max(len(r.type) for r in reports)
    cw = max(len(r.check) for r in reports)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        summary = ", ".join(f"{k}={v}" for k, v in sorted(r.details.items())
                            if isinstance(v, (int, str, bool, float)))
        lines.append(f"{status}  {r.type:<{tw}} {r.check:<{cw}} instances={r.instances} "
                     f"failures={len(r.failures)}" + (f"  {summary}" if summary else ""))
        if "orbit_sizes" in r.details:
            lines.append(f"      orbit sizes: {r.details['orbit_sizes']}")
        for f in r.failures[:10]:
            lines.append(f"      {f}")
    _emit(args, "\n".join(lines), doc)
    return 0 if passed else 1


# ---- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_opt", help="Coxeter type, e.g. A3, I2(5), A2xA1")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write output to this path")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--max-poset", type=int, default=100000)
    common.add_argument("--max-redt", type=int, default=8)
    common.add_argument("--timings", action="store_true", help="include wall times in JSON")

    p = argparse.ArgumentParser(prog="dualbraid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group-info", parents=[common], help="basic data of a Coxeter group")
    g.add_argument("type", nargs="?")
    g.set_defaults(func=cmd_group_info)

    pc = sub.add_parser("pc", parents=[common], help="the poset of divisors of c")
    pc.add_argument("action", choices=("enumerate", "lattice-check", "polynomial", "catalan"))
    pc.add_argument("type", nargs="?")
    pc.add_argument("--format", choices=("elements", "edges"), default="elements")
    pc.add_argument("--strategy", choices=("atoms", "exhaustive"))
    pc.set_defaults(func=cmd_pc)

    nf = sub.add_parser("nf", parents=[common], help="mixed normal form of a word")
    nf.add_argument("type", nargs="?")
    nf.add_argument("word", nargs="?", default="")
    nf.add_argument("--monoid", choices=("dual", "classical"), default="dual")
    nf.set_defaults(func=cmd_nf)

    wp = sub.add_parser("wp", parents=[common], help="decide equality of two words")
    wp.add_argument("type", nargs="?")
    wp.add_argument("word1")
    wp.add_argument("word2")
    wp.add_argument("--monoid", choices=("dual", "classical"), default="dual")
    wp.set_defaults(func=cmd_wp)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("type", nargs="?")
    v.add_argument("--element", help="for hurwitz: w0, c, or a word")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidType, WordSyntaxError, UsageError, UnsupportedType) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, OverflowError) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
