"""The classical and dual braid monoids of W and their cross-checks.

Reflections are lifted to the braid group as ``c^k s c^-k``.  Checks that
need the braid group itself go through the classical Garside structure
(simples = W, Delta = w_0), so they never assume what the dual monoid is
meant to prove.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .coxeter import GroupContext, GroupElement, InvariantViolation
from .dual import CapExceeded, enumerate_pc
from .garside import (COMPLEMENT_TABLE_LIMIT, DivisorPreMonoid, MixedForm, divisor_premonoid,
                      group_mixed_form, invert_mixed, multiply_mixed)
from .report import Report, timed
from .words import format_word

_MONOIDS: dict = {}


class UnsupportedType(ValueError):
    """The construction is only defined for some types."""


def classical_monoid(ctx: GroupContext) -> DivisorPreMonoid:
    """Divisors of ``w_0`` for the Coxeter length: every element of W."""
    key = (ctx.descriptor, "S")
    if ctx.group_order() > COMPLEMENT_TABLE_LIMIT:
        raise CapExceeded(f"|W| = {ctx.group_order()} is too large for the classical monoid")
    if key not in _MONOIDS:
        _MONOIDS[key] = divisor_premonoid(ctx, ctx.longest_element, "S")
    return _MONOIDS[key]


def dual_monoid(ctx: GroupContext, c: GroupElement | None = None) -> DivisorPreMonoid:
    """Divisors of ``c`` for the reflection length."""
    c = c if c is not None else ctx.canonical_chromatic_pair().c
    key = (ctx.descriptor, "T", c)
    if key not in _MONOIDS:
        _MONOIDS[key] = divisor_premonoid(ctx, c, "T")
    return _MONOIDS[key]


def _require_canonical(ctx, c):
    pair = ctx.canonical_chromatic_pair()
    if c is not None and c != pair.c:
        raise UnsupportedType("lifts are defined for the canonical Coxeter element")
    if not ctx.irreducible:
        raise UnsupportedType("lifts are defined for irreducible types")
    return pair


# ---- lifts of reflections --------------------------------------------------------

@dataclass(frozen=True)
class TLift:
    reflection: int  # index into ctx.reflections
    k: int
    s: int  # simple generator index
    word: tuple[tuple[int, int], ...]  # signed S-word c^k s c^-k
    m: int  # position in the product formula, 1-based
    formula_word: tuple[tuple[int, int], ...]


def _eval_signed(ctx, word):
    w = ctx.identity
    for i, _ in word:
        w = w * ctx.simple_reflections[i]
    return w


def t_lifts(ctx: GroupContext, c: GroupElement | None = None) -> list[TLift]:
    """Lifts of every reflection, indexed like ``ctx.reflections``.

    Two encodings are produced: the minimal ``c^k s c^-k`` and the product
    formula ``t_m = (s_1..s_m)(s_1..s_{m-1})^-1`` with indices read cyclically
    in the order ``L`` then ``R``.  Both must evaluate to the same reflection.
    """
    pair = _require_canonical(ctx, c)
    n, N = ctx.rank, ctx.N
    order = pair.order
    cword = tuple((i, 1) for i in order)
    cinv = tuple((i, -1) for i in reversed(order))
    minimal: dict[int, tuple[int, int]] = {}
    ck = ctx.identity
    k = 0
    while len(minimal) < N:
        for s in range(n):
            t = ctx.reflection_index[ck * ctx.simple_reflections[s] * ck.inverse()]
            if t not in minimal:
                minimal[t] = (k, s)
        ck = ck * pair.c
        k += 1
        if k > ctx.coxeter_number:
            raise InvariantViolation("conjugates of S by powers of c do not exhaust T")
    formula: dict[int, tuple[int, tuple]] = {}
    for m in range(1, N + 1):
        gens = [order[(i - 1) % n] for i in range(1, m + 1)]
        word = tuple((g, 1) for g in gens) + tuple((g, -1) for g in reversed(gens[:-1]))
        t = ctx.reflection_index.get(_eval_signed(ctx, word))
        if t is None or t in formula:
            raise InvariantViolation(f"product formula t_{m} is not a new reflection")
        formula[t] = (m, word)
    lifts = []
    for t in range(N):
        k, s = minimal[t]
        word = cword * k + ((s, 1),) + cinv * k
        if _eval_signed(ctx, word) != ctx.reflections[t]:
            raise InvariantViolation("lift does not evaluate to its reflection")
        m, fword = formula[t]
        lifts.append(TLift(t, k, s, word, m, fword))
    return lifts


def lift_by_position(lifts: list[TLift]) -> list[TLift]:
    """Lifts reordered so that entry ``m-1`` is ``t_m`` of the product formula."""
    return sorted(lifts, key=lambda x: x.m)


class LiftedWords:
    """Classical mixed forms of lifted reflections, for fast products."""

    def __init__(self, ctx: GroupContext, lifts=None):
        self.ctx = ctx
        self.view = classical_monoid(ctx)
        self.lifts = lifts or t_lifts(ctx)
        self._simple = [self.view.index[s] for s in ctx.simple_reflections]
        self.forms = [self.mixed(l.word) for l in self.lifts]
        self.inverse_forms = [invert_mixed(self.view, f) for f in self.forms]

    def mixed(self, signed_s_word) -> MixedForm:
        return group_mixed_form(self.view, [(self._simple[i], e) for i, e in signed_s_word])

    def of_t_word(self, signed_t_word) -> MixedForm:
        out = MixedForm(0, ())
        for t, e in signed_t_word:
            out = multiply_mixed(self.view, out, self.forms[t] if e > 0 else self.inverse_forms[t])
        return out


# ---- checks ----------------------------------------------------------------------

def _noncrossing_pairs(ctx, poset):
    """Ordered pairs ``(t, u)`` of reflections with ``t u`` of rank 2 in P_c."""
    pairs = []
    for x, r in zip(poset.elements, poset.ranks):
        if r != 2:
            continue
        for t, tt in enumerate(ctx.reflections):
            if ctx.reflection_length(tt * x) == 1:
                pairs.append((t, ctx.reflection_index[tt * x]))
    return pairs


def verify_fact_a(ctx: GroupContext, c: GroupElement | None = None) -> Report:
    """For each noncrossing ordered pair ``(t, u)`` with ``t u = u v``, check
    ``lift(t) lift(u) = lift(u) lift(v)`` in the classical braid group."""
    pair = _require_canonical(ctx, c)
    rep = Report(str(ctx.descriptor), "fact-a")
    with timed(rep):
        lw = LiftedWords(ctx)
        poset = enumerate_pc(ctx, pair.c)
        conj = ctx.conjugation_table
        commuting = 0
        for t, u in _noncrossing_pairs(ctx, poset):
            v = conj[u][t]
            rep.instances += 1
            commuting += v == t
            if lw.of_t_word([(t, 1), (u, 1)]) != lw.of_t_word([(u, 1), (v, 1)]):
                rep.fail({"t": f"t{t + 1}", "u": f"t{u + 1}", "v": f"t{v + 1}"})
        rep.details.update(pairs=rep.instances, commuting_pairs=commuting,
                           lift_exponents={f"t{l.reflection + 1}": l.k for l in lw.lifts})
    return rep


def verify_duality_table(ctx: GroupContext, c: GroupElement | None = None) -> Report:
    pair = _require_canonical(ctx, c)
    rep = Report(str(ctx.descriptor), "duality")
    with timed(rep):
        lw = LiftedWords(ctx)
        classical, dual = lw.view, dual_monoid(ctx, pair.c)
        w0 = ctx.longest_element

        def check(name, ok):
            rep.instances += 1
            if not ok:
                rep.fail({"check": name})

        check("product of simples in chromatic order is c",
              ctx.from_s_word(pair.order) == pair.c)
        by_m = lift_by_position(lw.lifts)
        check("t_m = s_m for m <= |L|",
              all(by_m[m].reflection == ctx.reflection_index[ctx.simple(pair.L[m])]
                  for m in range(len(pair.L))))
        cinv = pair.c.inverse()
        check("t_(m+n) = c t_m c^-1", all(
            ctx.reflections[by_m[m + ctx.rank].reflection]
            == pair.c * ctx.reflections[by_m[m].reflection] * cinv
            for m in range(ctx.N - ctx.rank)))
        prod = ctx.identity
        for m in range(ctx.N, 0, -1):
            prod = prod * ctx.reflections[by_m[m - 1].reflection]
        check("t_N ... t_1 = w_0 in W", prod == w0)
        formula_word = [x for m in range(ctx.N, 0, -1) for x in by_m[m - 1].formula_word]
        mf = lw.mixed(formula_word)
        check("t_N ... t_1 = Delta in the classical braid group", mf == MixedForm(1, ()))
        minimal = lw.of_t_word([(by_m[m - 1].reflection, 1) for m in range(ctx.N, 0, -1)])
        check("minimal lifts give the same product", minimal == mf)
        for l in lw.lifts:
            if lw.mixed(l.formula_word) != lw.forms[l.reflection]:
                check(f"lift encodings agree for t{l.reflection + 1}", False)
        check("mixed form of the product has length N",
              classical.lengths[classical.delta] * mf.delta_power
              + sum(classical.lengths[p] for p in mf.factors) == ctx.N)
        table = {
            "classical": {"atoms": len(classical.atoms),
                          "delta_length": classical.lengths[classical.delta],
                          "delta_order": ctx.order(w0)},
            "dual": {"atoms": len(dual.atoms), "delta_length": dual.lengths[dual.delta],
                     "delta_order": ctx.order(pair.c)},
        }
        expected = {"classical": {"atoms": ctx.rank, "delta_length": ctx.N, "delta_order": 2},
                    "dual": {"atoms": ctx.N, "delta_length": ctx.rank,
                             "delta_order": ctx.coxeter_number}}
        check("table matches (n, N, 2) against (N, n, h)", table == expected)
        rep.details.update(table=table, coxeter_word=format_word(("s", i, 1) for i in pair.order))
    return rep


def random_t_word(rng: random.Random, N: int, length: int):
    return [(rng.randrange(N), rng.choice((1, -1))) for _ in range(length)]


def _equal_moves(ctx, dual, word, rng, moves):
    """Apply relations valid in the dual braid group."""
    conj = ctx.conjugation_table
    T = ctx.reflections
    w = list(word)

    def rank2(a, b):
        k = dual.index.get(T[a] * T[b])
        return a != b and k is not None and dual.lengths[k] == 2

    for _ in range(moves):
        kind = rng.randrange(3)
        if kind == 0 or len(w) < 2:
            t, e = rng.randrange(ctx.N), rng.choice((1, -1))
            p = rng.randrange(len(w) + 1)
            w[p:p] = [(t, e), (t, -e)]
            continue
        p = rng.randrange(len(w) - 1)
        (a, ea), (b, eb) = w[p], w[p + 1]
        if a == b and ea == -eb:
            del w[p:p + 2]
        elif ea == eb == 1 and rank2(a, b):
            w[p:p + 2] = [(conj[a][b], 1), (a, 1)]
        elif ea == eb == -1 and rank2(b, a):
            w[p:p + 2] = [(b, -1), (conj[b][a], -1)]
    return w


def cross_word_problem(ctx: GroupContext, c: GroupElement | None = None, trials: int = 1000,
                       seed: int = 0, max_length: int = 8) -> Report:
    """Random signed T-word pairs decided by the dual mixed form and by the
    classical mixed form of the lifted words; the decisions must agree."""
    pair = _require_canonical(ctx, c)
    rep = Report(str(ctx.descriptor), "word-problem")
    with timed(rep):
        rng = random.Random(seed)
        dual = dual_monoid(ctx, pair.c)
        lw = LiftedWords(ctx)
        atom = [dual.index[t] for t in ctx.reflections]
        equal = 0
        for _ in range(trials):
            w1 = random_t_word(rng, ctx.N, rng.randrange(max_length + 1))
            w2 = _equal_moves(ctx, dual, w1, rng, rng.randrange(1, 5))
            if rng.random() < 0.5 and w2:
                p = rng.randrange(len(w2))
                w2[p] = (rng.randrange(ctx.N), w2[p][1])
            d1 = group_mixed_form(dual, [(atom[t], e) for t, e in w1])
            d2 = group_mixed_form(dual, [(atom[t], e) for t, e in w2])
            dual_eq = d1 == d2
            classical_eq = lw.of_t_word(w1) == lw.of_t_word(w2)
            rep.instances += 1
            equal += dual_eq
            if dual_eq != classical_eq:
                rep.fail({"w1": _fmt(w1), "w2": _fmt(w2), "dual": dual_eq,
                          "classical": classical_eq})
        rep.details.update(seed=seed, trials=trials, equal_pairs=equal,
                           agreement=(trials - len(rep.failures)) / trials if trials else 1.0)
    return rep


def _fmt(word):
    return format_word(("t", t, e) for t, e in word)


def classical_braid_relation_check(ctx: GroupContext, c: GroupElement | None = None) -> Report:
    """For reflections ``a != b`` with ``m`` the order of ``ab``: the
    alternating words of length ``m`` agree in the dual monoid exactly when
    ``ab`` or ``ba`` lies in P_c."""
    c = c if c is not None else ctx.canonical_chromatic_pair().c
    rep = Report(str(ctx.descriptor), "classical-braid-relations")
    with timed(rep):
        dual = dual_monoid(ctx, c)
        T = ctx.reflections
        atom = [dual.index[t] for t in T]
        holds = 0
        for a in range(ctx.N):
            for b in range(a + 1, ctx.N):
                m = ctx.order(T[a] * T[b])
                w1 = [(atom[(a, b)[k % 2]], 1) for k in range(m)]
                w2 = [(atom[(b, a)[k % 2]], 1) for k in range(m)]
                relation = group_mixed_form(dual, w1) == group_mixed_form(dual, w2)
                parallel = T[a] * T[b] in dual.index or T[b] * T[a] in dual.index
                rep.instances += 1
                holds += relation
                if relation != parallel:
                    rep.fail({"pair": [f"t{a + 1}", f"t{b + 1}"], "relation": relation,
                              "parallel": parallel})
        rep.details.update(pairs=rep.instances, relations_holding=holds)
    return rep
