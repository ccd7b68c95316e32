"""Reduced T-decompositions, the Hurwitz action and the poset P_c."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from . import exact
from .coxeter import GroupContext, GroupElement, InvariantViolation
from .report import Report, timed


class CapExceeded(RuntimeError):
    """A configured resource cap was hit."""


class LatticeViolation(ValueError):
    """A pair of poset elements without a unique meet or join."""

    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


# ---- reduced decompositions and the Hurwitz action -----------------------------

@dataclass(frozen=True)
class TFactorization:
    entries: tuple[int, ...]
    target: GroupElement

    def __len__(self):
        return len(self.entries)

    def product(self, ctx: GroupContext) -> GroupElement:
        return ctx.from_t_word(self.entries)


def reduced_decompositions(ctx: GroupContext, w: GroupElement, max_length: int = 8
                           ) -> list[TFactorization]:
    """All minimal-length T-words for ``w``, in lexicographic order."""
    lt = ctx.reflection_length
    if lt(w) > max_length:
        raise CapExceeded(f"l_T(w) = {lt(w)} exceeds the cap {max_length}")
    memo: dict = {}
    length: dict = {}

    def lt_cached(x):
        k = length.get(x)
        if k is None:
            k = length[x] = lt(x)
        return k

    def words(x):
        got = memo.get(x)
        if got is not None:
            return got
        if x.is_identity():
            out = [()]
        else:
            k = lt_cached(x)
            out = []
            for i, t in enumerate(ctx.reflections):
                y = t * x
                if lt_cached(y) == k - 1:
                    out.extend((i,) + rest for rest in words(y))
        memo[x] = out
        return out

    return [TFactorization(e, w) for e in words(w)]


def hurwitz_apply(ctx: GroupContext, i: int, sign: int, f: TFactorization) -> TFactorization:
    """Apply ``sigma_i`` (sign +1) or its inverse (sign -1), ``i`` 1-based."""
    k = len(f.entries)
    if not 1 <= i <= k - 1:
        raise IndexError(f"generator index {i} out of range 1..{k - 1}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    conj = ctx.conjugation_table
    e = list(f.entries)
    a, b = e[i - 1], e[i]
    if sign == 1:
        e[i - 1], e[i] = conj[a][b], a
    else:
        e[i - 1], e[i] = b, conj[b][a]
    return TFactorization(tuple(e), f.target)


def hurwitz_orbit_partition(ctx: GroupContext, decompositions) -> list[list[tuple]]:
    conj = ctx.conjugation_table
    universe = {d.entries if isinstance(d, TFactorization) else tuple(d) for d in decompositions}
    pending = set(universe)
    orbits = []
    for start in sorted(universe):
        if start not in pending:
            continue
        pending.discard(start)
        orbit = [start]
        queue = deque([start])
        while queue:
            e = queue.popleft()
            for i in range(len(e) - 1):
                a, b = e[i], e[i + 1]
                for pair in ((conj[a][b], a), (b, conj[b][a])):
                    u = e[:i] + pair + e[i + 2:]
                    if u not in universe:
                        raise InvariantViolation("Hurwitz move left the set of decompositions")
                    if u in pending:
                        pending.discard(u)
                        orbit.append(u)
                        queue.append(u)
        orbits.append(orbit)
    return orbits


def hurwitz_orbits(ctx: GroupContext, w: GroupElement, max_length: int = 8,
                   poset: DivisibilityPoset | None = None) -> list[int]:
    """Orbit sizes of the Hurwitz action on ``Red_T(w)``, largest first.

    When ``w`` lies in the given poset of divisors, decompositions are read
    off its labelled chains instead of searched for.
    """
    if poset is not None and w in poset.index:
        decs = poset.reduced_words(w)
    else:
        decs = reduced_decompositions(ctx, w, max_length)
    parts = hurwitz_orbit_partition(ctx, decs)
    return sorted((len(o) for o in parts), reverse=True)


# ---- ranked polynomials ---------------------------------------------------------

@dataclass(frozen=True)
class RankPolynomial:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coefficients):
            raise ValueError("negative coefficient")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, q):
        return sum(c * q ** k for k, c in enumerate(self.coefficients))

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                mono = "" if k == 0 else "q" if k == 1 else f"q^{k}"
                terms.append(str(c) if not mono else mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"


def product_polynomial(degrees) -> RankPolynomial:
    """Expand ``prod (1 + (d - 1) q)``."""
    coeffs = [1]
    for d in degrees:
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c
            nxt[k + 1] += c * (d - 1)
        coeffs = nxt
    return RankPolynomial(tuple(coeffs))


def lt_histogram(ctx: GroupContext, limit: int = 10 ** 5) -> RankPolynomial:
    counts = [0] * (ctx.rank + 1)
    for w in ctx.elements(limit):
        counts[ctx.reflection_length(w)] += 1
    return RankPolynomial(tuple(counts))


def lt_poincare_polynomial_W(ctx: GroupContext, verify_limit: int = 10 ** 5) -> RankPolynomial:
    """Generating function of ``l_T`` over W; checked by enumeration when
    ``|W| <= verify_limit``."""
    poly = product_polynomial(ctx.degrees)
    if ctx.group_order() <= verify_limit:
        hist = lt_histogram(ctx, verify_limit)
        if hist != poly:
            raise InvariantViolation(f"l_T histogram {hist.coefficients} != {poly.coefficients}")
    return poly


# ---- the poset P_c --------------------------------------------------------------

class DivisibilityPoset:
    """A finite graded poset given by its elements in rank order and the
    labelled cover relation.

    Up- and down-sets are stored as integer bitsets, which makes bound
    queries a few big-integer operations.
    """

    TABLE_LIMIT = 3000

    def __init__(self, ctx, elements, ranks, covers, words, top, label="l_T"):
        self.ctx = ctx
        self.elements = elements
        self.ranks = ranks
        self.covers = covers  # (lower index, upper index, reflection index)
        self.words = words
        self.top = top
        self.rank_function = label
        self.index = {w: i for i, w in enumerate(elements)}
        if ranks[0] != 0 or any(ranks[j] != ranks[i] + 1 for i, j, _ in covers):
            raise InvariantViolation("cover relation is not graded")

    def __len__(self):
        return len(self.elements)

    def _idx(self, x) -> int:
        return x if isinstance(x, int) else self.index[x]

    @cached_property
    def upper_covers(self) -> list[list[int]]:
        out = [[] for _ in self.elements]
        for i, j, _ in self.covers:
            out[i].append(j)
        return out

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        out = [[] for _ in self.elements]
        for i, j, _ in self.covers:
            out[j].append(i)
        return out

    @cached_property
    def up(self) -> list[int]:
        # elements are in nondecreasing rank order, so reverse order is safe
        up = [0] * len(self)
        for i in range(len(self) - 1, -1, -1):
            m = 1 << i
            for j in self.upper_covers[i]:
                m |= up[j]
            up[i] = m
        return up

    @cached_property
    def down(self) -> list[int]:
        down = [0] * len(self)
        for i in range(len(self)):
            m = 1 << i
            for j in self.lower_covers[i]:
                m |= down[j]
            down[i] = m
        return down

    @property
    def atoms(self) -> list[int]:
        return [i for i, r in enumerate(self.ranks) if r == 1]

    def leq(self, x, y) -> bool:
        return bool(self.up[self._idx(x)] >> self._idx(y) & 1)

    def join_index(self, x, y) -> int:
        i, j = self._idx(x), self._idx(y)
        table = self.__dict__.get("_join")
        if table is not None:
            return table[i][j]
        u = self.up[i] & self.up[j]
        if not u:
            raise LatticeViolation("no common upper bound", (i, j))
        z = (u & -u).bit_length() - 1
        if u & ~self.up[z]:
            raise LatticeViolation("no least upper bound", (i, j))
        return z

    def meet_index(self, x, y) -> int:
        i, j = self._idx(x), self._idx(y)
        table = self.__dict__.get("_meet")
        if table is not None:
            return table[i][j]
        d = self.down[i] & self.down[j]
        if not d:
            raise LatticeViolation("no common lower bound", (i, j))
        z = d.bit_length() - 1
        if d & ~self.down[z]:
            raise LatticeViolation("no greatest lower bound", (i, j))
        return z

    def join(self, x, y) -> GroupElement:
        return self.elements[self.join_index(x, y)]

    def meet(self, x, y) -> GroupElement:
        return self.elements[self.meet_index(x, y)]

    def build_tables(self) -> bool:
        """Materialize meet and join tables when the poset is small enough."""
        if len(self) > self.TABLE_LIMIT:
            return False
        n = len(self)
        join = [[self.join_index(i, j) for j in range(n)] for i in range(n)]
        meet = [[self.meet_index(i, j) for j in range(n)] for i in range(n)]
        self._join, self._meet = join, meet
        return True

    def rank_polynomial(self) -> RankPolynomial:
        counts = [0] * (max(self.ranks) + 1)
        for r in self.ranks:
            counts[r] += 1
        return RankPolynomial(tuple(counts))

    def reduced_words(self, x) -> list[tuple]:
        """Labels of all maximal chains from the bottom to ``x``; for P_c these
        are exactly the reduced T-decompositions of ``x``."""
        memo = self.__dict__.setdefault("_chains", {0: [()]})
        target = self._idx(x)
        for j in range(target + 1):
            if j in memo:
                continue
            memo[j] = [w + (t,) for i, jj, t in self._covers_into[j] for w in memo[i]]
        return memo[target]

    @cached_property
    def _covers_into(self):
        out = [[] for _ in self.elements]
        for cov in self.covers:
            out[cov[1]].append(cov)
        return out

    def word(self, x) -> tuple[int, ...]:
        return self.words[self._idx(x)]

    def edge_lines(self) -> list[str]:
        """``rank from to`` per cover, elements written as T-words."""
        from .words import format_t_word
        return [f"{self.ranks[i]} {format_t_word(self.words[i])} {format_t_word(self.words[j])}"
                for i, j, _ in self.covers]

    def to_document(self) -> dict:
        from .words import format_t_word
        return {
            "rank_function": self.rank_function,
            "size": len(self),
            "elements": [{"index": i, "rank": r, "word": format_t_word(w)}
                         for i, (r, w) in enumerate(zip(self.ranks, self.words))],
            "covers": [[i, j, f"t{t + 1}"] for i, j, t in self.covers],
            "rank_polynomial": list(self.rank_polynomial().coefficients),
        }


def _functionals(ctx: GroupContext):
    """For each reflection a row vanishing exactly on its fixed hyperplane."""
    rows = []
    for t in ctx.reflections:
        m = ctx.moved_rows(t)
        rows.append(next(r for r in m if any(r)))
    return rows


def enumerate_pc(ctx: GroupContext, c: GroupElement, max_size: int | None = None
                 ) -> DivisibilityPoset:
    """Breadth-first enumeration of ``{w : w <_T c}`` by rank.

    The children of ``x`` are ``x t`` for reflections ``t`` below
    ``x^-1 c``.  With exact coordinates this is decided by Carter's
    criterion (the fixed space of ``x^-1 c`` lies in the hyperplane of
    ``t``); dihedral factors fall back to reflection-length arithmetic.
    """
    T = ctx.reflections
    if ctx.exact_coordinates:
        F = _functionals(ctx)
        integer = all(type(x) is int for r in F for x in r)
        Fn = np.array(F, dtype=np.int64) if integer else None

        def below(y):
            ker = exact.kernel(ctx.moved_rows(y))
            if not ker:
                return list(range(len(T)))
            if integer:
                V = np.array(ker, dtype=np.int64).T
                return np.flatnonzero(~(Fn @ V).any(axis=1)).tolist()
            return [i for i, f in enumerate(F)
                    if all(not sum((a * b for a, b in zip(f, v)), 0 * f[0]) for v in ker)]
    else:
        lt = ctx.reflection_length

        def below(y):
            k = lt(y)
            return [i for i, t in enumerate(T) if lt(t * y) == k - 1]

    identity = ctx.identity
    elements, ranks, words = [identity], [0], [()]
    index = {identity: 0}
    covers = []
    layer = [0]
    r = 0
    while layer:
        r += 1
        nxt = []
        for i in layer:
            x = elements[i]
            y = x.inverse() * c
            if y.is_identity():
                continue
            for t in below(y):
                z = x * T[t]
                j = index.get(z)
                if j is None:
                    j = index[z] = len(elements)
                    elements.append(z)
                    ranks.append(r)
                    words.append(words[i] + (t,))
                    nxt.append(j)
                    if max_size is not None and len(elements) > max_size:
                        raise CapExceeded(f"|P_c| exceeds the cap {max_size}")
                covers.append((i, j, t))
        layer = nxt
    top = index.get(c)
    if top is None:
        raise InvariantViolation("c was not reached")
    return DivisibilityPoset(ctx, elements, ranks, covers, words, top)


def rank_polynomial(poset: DivisibilityPoset) -> RankPolynomial:
    return poset.rank_polynomial()


def meet(poset: DivisibilityPoset, x, y) -> GroupElement:
    return poset.meet(x, y)


def join(poset: DivisibilityPoset, x, y) -> GroupElement:
    return poset.join(x, y)


def lattice_check(poset: DivisibilityPoset, strategy: str = "atoms") -> Report:
    """Check the lattice property.

    ``atoms``: every pair of atoms has a least upper bound, which suffices for
    the Garside reduction on divisor pre-monoids.  ``exhaustive``: every pair
    of elements has both a meet and a join.
    """
    if strategy not in ("atoms", "exhaustive"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rep = Report(str(poset.ctx.descriptor), f"lattice-{strategy}")
    with timed(rep):
        if strategy == "atoms":
            atoms = poset.atoms
            pairs = ((a, b) for k, a in enumerate(atoms) for b in atoms[k + 1:])
            rep.details["pairs"] = comb(len(atoms), 2)
            ops = ("join",)
        else:
            n = len(poset)
            pairs = ((a, b) for a in range(n) for b in range(a + 1, n))
            rep.details["pairs"] = comb(n, 2)
            ops = ("join", "meet")
        for a, b in pairs:
            rep.instances += 1
            for op in ops:
                try:
                    (poset.join_index if op == "join" else poset.meet_index)(a, b)
                except LatticeViolation as exc:
                    rep.fail({"pair": [a, b], "operation": op, "reason": str(exc)})
        rep.details["size"] = len(poset)
        tops = [i for i in range(len(poset)) if not poset.upper_covers[i]]
        rep.details["maximal_elements"] = len(tops)
        if len(tops) != 1:
            rep.fail({"reason": "no unique maximal element", "maximal": tops})
        rep.details["height"] = max(poset.ranks)
    return rep


def fixed_space_poset_check(ctx: GroupContext, c: GroupElement,
                            poset: DivisibilityPoset | None = None) -> Report:
    """Divisibility on P_c against reverse inclusion of fixed spaces, plus
    injectivity of ``w -> ker(w - 1)``."""
    poset = poset or enumerate_pc(ctx, c)
    rep = Report(str(ctx.descriptor), "brady")
    with timed(rep):
        spans = [exact.canonical_span(ctx.fixed_space(w)) for w in poset.elements]
        dims = [len(s) for s in spans]
        if len(set(spans)) != len(spans):
            rep.fail({"reason": "fixed spaces are not distinct"})
        for i, x in enumerate(poset.elements):
            for j, y in enumerate(poset.elements):
                rep.instances += 1
                divides = ctx.absolute_divides(x, y)
                contains = _contains(spans[i], spans[j], dims[i])
                if divides != contains:
                    rep.fail({"pair": [i, j], "divides": divides, "contains": contains})
        rep.details["size"] = len(poset)
        rep.details["top_fixed_dimension"] = dims[poset.top]
        rep.details["identity_fixed_dimension"] = dims[0]
    return rep


def _contains(big, small, dim_big) -> bool:
    if not small:
        return True
    if not big:
        return False
    return exact.rank([list(v) for v in big] + [list(v) for v in small]) == dim_big
