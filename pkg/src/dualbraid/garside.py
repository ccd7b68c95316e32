"""Garside pre-monoids on finite sets of simples.

A view stores its simples sorted by length, with the unit at index 0.  The
primitive operations are the partial product and the two quotients; every
Garside notion (complements, gcds, normal forms, mixed forms for the group
of fractions) is built on top of them.

Conventions: ``x`` left-divides ``y`` when ``y = x z`` for a simple ``z``.
The right lcm of ``x, y`` is the least common right multiple ``x a = y b``;
the left gcd is the greatest common left divisor.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import product as iproduct

from .coxeter import GroupContext, GroupElement
from .dual import CapExceeded, enumerate_pc
from .report import Report, timed
from .words import format_s_word, format_t_word

COMPLEMENT_TABLE_LIMIT = 30000


class NotBalanced(ValueError):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class NoBound(ValueError):
    """A gcd or lcm does not exist among the simples."""


class GarsideViolation(ValueError):
    pass


@dataclass(frozen=True)
class MixedForm:
    """``Delta^delta_power`` times the positive normal form ``factors``."""

    delta_power: int
    factors: tuple[int, ...]


class PreMonoidView:
    """Base class: subclasses provide ``simples``, ``lengths``, ``delta``,
    ``atoms`` and ``mul``; the quotients default to brute force."""

    unit = 0

    def __init__(self, simples, lengths, delta, atoms, labels=None, name="premonoid"):
        self.simples = list(simples)
        self.lengths = list(lengths)
        self.delta = delta
        self.atoms = list(atoms)
        self.labels = labels
        self.name = name
        if any(a > b for a, b in zip(self.lengths, self.lengths[1:])):
            raise ValueError("simples must be sorted by length")
        self._gcd_memo: dict = {}
        self._amask: dict = {}
        self._complements = None
        self._phi_order = None
        self._divisibility = None

    def __len__(self):
        return len(self.simples)

    # ---- primitives ----

    def mul(self, i: int, j: int) -> int | None:
        raise NotImplementedError

    def left_quotient(self, i: int, j: int) -> int | None:
        """``z`` with ``i z = j``, if ``i`` left-divides ``j``."""
        for z in range(len(self)):
            if self.mul(i, z) == j:
                return z
        return None

    def right_quotient(self, i: int, j: int) -> int | None:
        """``z`` with ``z i = j``, if ``i`` right-divides ``j``."""
        for z in range(len(self)):
            if self.mul(z, i) == j:
                return z
        return None

    def left_divides(self, i, j) -> bool:
        return self.left_quotient(i, j) is not None

    def right_divides(self, i, j) -> bool:
        return self.right_quotient(i, j) is not None

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    # ---- complements and the Delta automorphism ----

    def complements(self):
        """(``x -> x^-1 Delta``, ``x -> Delta x^-1``, phi, phi^-1) as lists."""
        if self._complements is None:
            if len(self) > COMPLEMENT_TABLE_LIMIT:
                raise CapExceeded(f"{len(self)} simples exceed the complement table limit")
            right = [self.left_quotient(i, self.delta) for i in range(len(self))]
            left = [self.right_quotient(i, self.delta) for i in range(len(self))]
            if None in right or None in left:
                bad = (right + left).index(None) % len(self)
                raise GarsideViolation(f"simple {self.label(bad)} does not divide Delta")
            phi = [right[right[i]] for i in range(len(self))]
            phi_inv = [left[left[i]] for i in range(len(self))]
            self._complements = (right, left, phi, phi_inv)
        return self._complements

    def phi_power(self, i: int, k: int) -> int:
        """``Delta^-k x Delta^k``; negative ``k`` is reduced modulo the order."""
        phi = self.complements()[2]
        order = self.phi_order()
        k %= order
        for _ in range(k):
            i = phi[i]
        return i

    def phi_order(self) -> int:
        if self._phi_order is None:
            _, _, phi, _ = self.complements()
            k, cur = 1, list(phi)
            while cur != list(range(len(self))):
                cur = [phi[x] for x in cur]
                k += 1
            self._phi_order = k
        return self._phi_order

    # ---- divisibility by atoms ----

    def atom_mask(self, x: int) -> int:
        m = self._amask.get(x)
        if m is None:
            m = 0
            for k, a in enumerate(self.atoms):
                if self.left_quotient(a, x) is not None:
                    m |= 1 << k
            self._amask[x] = m
        return m

    def gcd(self, x: int, y: int) -> int:
        """Left gcd by repeated extraction of a common atom."""
        key = (x, y)
        got = self._gcd_memo.get(key)
        if got is not None:
            return got
        d = self.unit
        a_, b_ = x, y
        while True:
            common = self.atom_mask(a_) & self.atom_mask(b_)
            if not common:
                break
            a = self.atoms[(common & -common).bit_length() - 1]
            a_ = self.left_quotient(a, a_)
            b_ = self.left_quotient(a, b_)
            d = self.mul(d, a)
            if d is None:
                raise GarsideViolation("common left divisors do not multiply")
        self._gcd_memo[key] = d
        return d

    # ---- divisibility bitsets (for verification and generic bounds) ----

    def divisibility(self):
        """Bitsets ``(left_up, left_down, right_up, right_down)``; ``left_up[i]``
        holds every ``j`` that ``i`` left-divides."""
        if self._divisibility is None:
            n = len(self)
            lup_edges = [[] for _ in range(n)]
            rup_edges = [[] for _ in range(n)]
            for i in range(n):
                for a in self.atoms:
                    j = self.mul(i, a)
                    if j is not None:
                        lup_edges[i].append(j)
                    j = self.mul(a, i)
                    if j is not None:
                        rup_edges[i].append(j)
            self._divisibility = (_up_sets(lup_edges), _down_sets(lup_edges),
                                  _up_sets(rup_edges), _down_sets(rup_edges))
        return self._divisibility


def _up_sets(edges):
    n = len(edges)
    up = [0] * n
    for i in range(n - 1, -1, -1):
        m = 1 << i
        for j in edges[i]:
            m |= up[j]
        up[i] = m
    return up


def _down_sets(edges):
    n = len(edges)
    rev = [[] for _ in range(n)]
    for i, js in enumerate(edges):
        for j in js:
            rev[j].append(i)
    down = [0] * n
    for j in range(n):
        m = 1 << j
        for i in rev[j]:
            m |= down[i]
        down[j] = m
    return down


def _least(bits: int, up) -> int:
    if not bits:
        raise NoBound("no common bound")
    z = (bits & -bits).bit_length() - 1
    if bits & ~up[z]:
        raise NoBound("common bounds have no least element")
    return z


def _greatest(bits: int, down) -> int:
    if not bits:
        raise NoBound("no common bound")
    z = bits.bit_length() - 1
    if bits & ~down[z]:
        raise NoBound("common bounds have no greatest element")
    return z


class TablePreMonoid(PreMonoidView):
    """A pre-monoid given by an explicit product table."""

    def __init__(self, simples, lengths, delta, atoms, products: dict, labels=None,
                 name="table"):
        super().__init__(simples, lengths, delta, atoms, labels, name)
        self.products = dict(products)
        self._by_left: dict = {}
        self._by_right: dict = {}

    def mul(self, i, j):
        if i == self.unit:
            return j
        if j == self.unit:
            return i
        return self.products.get((i, j))

    def left_quotient(self, i, j):
        if i not in self._by_left:
            self._by_left[i] = {self.mul(i, z): z for z in range(len(self))
                                if self.mul(i, z) is not None}
        return self._by_left[i].get(j)

    def right_quotient(self, i, j):
        if i not in self._by_right:
            self._by_right[i] = {self.mul(z, i): z for z in range(len(self))
                                 if self.mul(z, i) is not None}
        return self._by_right[i].get(j)

    def without_product(self, i, j) -> TablePreMonoid:
        products = {k: v for k, v in self.products.items() if k != (i, j)}
        return TablePreMonoid(self.simples, self.lengths, self.delta, self.atoms, products,
                              self.labels, self.name + "-corrupted")


class DivisorPreMonoid(PreMonoidView):
    """Divisors of a balanced element ``g`` of a group generated by ``A``,
    with the product defined when lengths add."""

    def __init__(self, ctx, simples, lengths, delta, atoms, labels, kind, name):
        super().__init__(simples, lengths, delta, atoms, labels, name)
        self.ctx = ctx
        self.kind = kind
        self.index = {w: i for i, w in enumerate(self.simples)}

    def mul(self, i, j):
        k = self.index.get(self.simples[i] * self.simples[j])
        if k is not None and self.lengths[k] == self.lengths[i] + self.lengths[j]:
            return k
        return None

    def left_quotient(self, i, j):
        k = self.index.get(self.simples[i].inverse() * self.simples[j])
        if k is not None and self.lengths[i] + self.lengths[k] == self.lengths[j]:
            return k
        return None

    def right_quotient(self, i, j):
        k = self.index.get(self.simples[j] * self.simples[i].inverse())
        if k is not None and self.lengths[k] + self.lengths[i] == self.lengths[j]:
            return k
        return None

    def to_table(self) -> TablePreMonoid:
        n = len(self)
        products = {}
        for i in range(1, n):
            for j in range(1, n):
                k = self.mul(i, j)
                if k is not None:
                    products[(i, j)] = k
        return TablePreMonoid(self.simples, self.lengths, self.delta, self.atoms, products,
                              self.labels, self.name + "-table")

    def element(self, i) -> GroupElement:
        return self.simples[i]


def divisor_premonoid(ctx: GroupContext, g: GroupElement, generators: str = "T") -> DivisorPreMonoid:
    """The pre-monoid of divisors of ``g`` for the generating set ``T``
    (reflection length) or ``S`` (Coxeter length).

    Raises ``NotBalanced`` with a witness when some left divisor of ``g`` is
    not a right divisor.
    """
    if generators == "T":
        poset = enumerate_pc(ctx, g)
        simples, lengths = poset.elements, poset.ranks
        labels = [format_t_word(w) for w in poset.words]
        length = ctx.reflection_length
        atoms = [i for i, r in enumerate(lengths) if r == 1]
    elif generators == "S":
        length = ctx.s_length
        lg = length(g)
        simples, lengths = [ctx.identity], [0]
        seen = {ctx.identity}
        layer = [ctx.identity]
        r = 0
        while layer:
            r += 1
            nxt = []
            for x in layer:
                for s in ctx.simple_reflections:
                    y = x * s
                    if y in seen or length(y) != r:
                        continue
                    if r + length(y.inverse() * g) == lg:
                        seen.add(y)
                        nxt.append(y)
            simples.extend(nxt)
            lengths.extend([r] * len(nxt))
            layer = nxt
        labels = [format_s_word(ctx.to_s_word(w)) for w in simples]
        atoms = [i for i, r in enumerate(lengths) if r == 1]
    else:
        raise ValueError("generators must be 'T' or 'S'")
    lg = length(g)
    for h in simples:
        if length(g * h.inverse()) + length(h) != lg:
            raise NotBalanced(f"{format_s_word(ctx.to_s_word(h))} left-divides g but does not "
                              f"right-divide it", h)
    index = {w: i for i, w in enumerate(simples)}
    return DivisorPreMonoid(ctx, simples, lengths, index[g], atoms, labels, generators,
                            f"{ctx.descriptor}-{'dual' if generators == 'T' else 'classical'}")


# ---- gcd and lcm -----------------------------------------------------------------

def left_gcd(view: PreMonoidView, x: int, y: int) -> int:
    lup, ldown, _, _ = view.divisibility()
    return _greatest(ldown[x] & ldown[y], ldown)


def right_gcd(view: PreMonoidView, x: int, y: int) -> int:
    _, _, rup, rdown = view.divisibility()
    return _greatest(rdown[x] & rdown[y], rdown)


def right_lcm(view: PreMonoidView, x: int, y: int) -> int:
    """Least ``m`` with ``m = x a = y b``."""
    lup, _, _, _ = view.divisibility()
    return _least(lup[x] & lup[y], lup)


def left_lcm(view: PreMonoidView, x: int, y: int) -> int:
    """Least ``m`` with ``m = a x = b y``."""
    _, _, rup, _ = view.divisibility()
    return _least(rup[x] & rup[y], rup)


# ---- normal forms ------------------------------------------------------------------

def _pair_step(view, a, b):
    """Left-weight the pair ``(a, b)``; returns the new pair (``b`` may become unit)."""
    right = view.complements()[0]
    d = view.gcd(right[a], b)
    if d == view.unit:
        return a, b
    return view.mul(a, d), view.left_quotient(d, b)


def _push(view, nf: list, x: int) -> None:
    """Append a simple to a normal form, restoring normality in place."""
    if x == view.unit:
        return
    nf.append(x)
    k = len(nf) - 1
    while k > 0:
        a, b = _pair_step(view, nf[k - 1], nf[k])
        if (a, b) == (nf[k - 1], nf[k]):
            break
        nf[k - 1] = a
        if b == view.unit:
            del nf[k]
        else:
            nf[k] = b
        k -= 1
    _stabilize(view, nf)


def _stabilize(view, nf: list) -> None:
    changed = True
    while changed:
        changed = False
        k = 1
        while k < len(nf):
            a, b = _pair_step(view, nf[k - 1], nf[k])
            if (a, b) != (nf[k - 1], nf[k]):
                changed = True
                nf[k - 1] = a
                if b == view.unit:
                    del nf[k]
                    continue
                nf[k] = b
            k += 1


def normal_form(view: PreMonoidView, word) -> tuple[int, ...]:
    """Greedy normal form of a positive word of simples."""
    nf: list = []
    for x in word:
        _push(view, nf, x)
    return tuple(nf)


def is_normal(view: PreMonoidView, seq) -> bool:
    """Local test: no unit factors and every adjacent pair is left-weighted."""
    if any(x == view.unit for x in seq):
        return False
    right = view.complements()[0]
    return all(view.gcd(right[a], b) == view.unit for a, b in zip(seq, seq[1:]))


def group_mixed_form(view: PreMonoidView, signed_word) -> MixedForm:
    """Mixed form of a word of ``(simple, +1 | -1)`` pairs."""
    _, left, _, phi_inv = view.complements()
    k = 0
    nf: list = []
    for x, sign in signed_word:
        if sign > 0:
            _push(view, nf, x)
        else:
            # P x^-1 = Delta^-1 phi^-1(P) (Delta x^-1)
            k -= 1
            nf = [phi_inv[p] for p in nf]
            _push(view, nf, left[x])
        k, nf = _strip(view, k, nf)
    return MixedForm(k, tuple(nf))


def _strip(view, k, nf):
    if view.delta == view.unit:
        return k, nf
    i = 0
    while i < len(nf) and nf[i] == view.delta:
        i += 1
    return k + i, nf[i:] if i else nf


def multiply_mixed(view: PreMonoidView, m1: MixedForm, m2: MixedForm) -> MixedForm:
    # P1 Delta^k2 = Delta^k2 phi^k2(P1)
    # phi is an automorphism, so the image of a normal form is normal
    nf = [view.phi_power(p, m2.delta_power) for p in m1.factors]
    for x in m2.factors:
        _push(view, nf, x)
    k, nf = _strip(view, m1.delta_power + m2.delta_power, nf)
    return MixedForm(k, tuple(nf))


def invert_mixed(view: PreMonoidView, m: MixedForm) -> MixedForm:
    inv = group_mixed_form(view, [(p, -1) for p in reversed(m.factors)])
    return multiply_mixed(view, inv, MixedForm(-m.delta_power, ()))


def word_problem_eq(view: PreMonoidView, w1, w2) -> bool:
    return group_mixed_form(view, w1) == group_mixed_form(view, w2)


def format_normal_form(view: PreMonoidView, factors) -> str:
    return "".join(f"[{view.label(p)}]" for p in factors)


def format_mixed_form(view: PreMonoidView, m: MixedForm) -> str:
    """``"D^k · [..][..]"``."""
    return f"D^{m.delta_power} · {format_normal_form(view, m.factors)}"


# ---- the Delta automorphism ---------------------------------------------------------

@dataclass
class DeltaConjugation:
    permutation: tuple[int, ...]
    order: int
    report: Report


def delta_conjugation(view: PreMonoidView) -> DeltaConjugation:
    """``x -> Delta^-1 x Delta`` on simples, checked to be an automorphism of
    finite order ``d`` with ``Delta^d`` central."""
    rep = Report(view.name, "delta-conjugation")
    with timed(rep):
        _, _, phi, _ = view.complements()
        n = len(view)
        if sorted(phi) != list(range(n)):
            rep.fail({"reason": "not a permutation of the simples"})
        if phi[view.unit] != view.unit or phi[view.delta] != view.delta:
            rep.fail({"reason": "unit or Delta not fixed"})
        for i in range(n):
            if view.lengths[phi[i]] != view.lengths[i]:
                rep.fail({"reason": "length not preserved", "simple": view.label(i)})
        for a in view.atoms:
            for j in range(n):
                rep.instances += 1
                p = view.mul(a, j)
                q = view.mul(phi[a], phi[j])
                if (p is None) != (q is None) or (p is not None and phi[p] != q):
                    rep.fail({"reason": "product not preserved",
                              "pair": [view.label(a), view.label(j)]})
        d = view.phi_order()
        for a in view.atoms:
            lhs = group_mixed_form(view, [(view.delta, 1)] * d + [(a, 1)])
            rhs = group_mixed_form(view, [(a, 1)] + [(view.delta, 1)] * d)
            if lhs != rhs:
                rep.fail({"reason": "Delta^d not central", "atom": view.label(a)})
        rep.details["order"] = d
    return DeltaConjugation(tuple(phi), d, rep)


# ---- the Garside verifier -----------------------------------------------------------

def verify_garside(view: PreMonoidView, samples: int = 2000, seed: int = 0) -> Report:
    """Check the hypotheses and conclusions that make the view Garside."""
    rep = Report(view.name, "garside")
    with timed(rep):
        n = len(view)
        conditions = {}

        def fail(cond, **info):
            conditions[cond] = False
            rep.fail({"condition": cond, **info})

        for c in ("atoms", "unit", "atomic", "delta-divisors", "balanced", "atom-lcms",
                  "associative", "cancellative"):
            conditions[c] = True
        if not view.atoms or any(view.lengths[a] != 1 for a in view.atoms):
            fail("atoms", reason="atoms must be nonempty simples of length 1")
        if view.lengths[view.unit] != 0:
            fail("unit", reason="unit has nonzero length")
        for i in range(n):
            if view.mul(view.unit, i) != i or view.mul(i, view.unit) != i:
                fail("unit", simple=view.label(i))
        for i in range(1, n):
            if view.lengths[i] < 1 or not view.atom_mask(i):
                fail("atomic", simple=view.label(i), reason="no atom divides it")
        for i in range(n):
            for a in view.atoms:
                k = view.mul(i, a)
                if k is not None and view.lengths[k] != view.lengths[i] + 1:
                    fail("atomic", pair=[view.label(i), view.label(a)], reason="length not additive")
        lup, ldown, rup, rdown = view.divisibility()
        full = (1 << n) - 1
        if ldown[view.delta] != full:
            missing = (~ldown[view.delta] & full).bit_length() - 1
            fail("delta-divisors", side="left", simple=view.label(missing))
        if rdown[view.delta] != full:
            missing = (~rdown[view.delta] & full).bit_length() - 1
            fail("delta-divisors", side="right", simple=view.label(missing))
        if ldown[view.delta] != rdown[view.delta]:
            fail("balanced", reason="left and right divisors of Delta differ")
        pairs = 0
        for k, a in enumerate(view.atoms):
            for b in view.atoms[k + 1:]:
                pairs += 1
                for side, up in (("right", lup), ("left", rup)):
                    try:
                        _least(up[a] & up[b], up)
                    except NoBound as exc:
                        fail("atom-lcms", side=side, pair=[view.label(a), view.label(b)],
                             reason=str(exc))
        rep.details["atom_pairs"] = pairs
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = (rng.randrange(n) for _ in range(3))
            ab, bc = view.mul(a, b), view.mul(b, c)
            lhs = view.mul(ab, c) if ab is not None else None
            rhs = view.mul(a, bc) if bc is not None else None
            if (lhs is None) != (rhs is None) or lhs != rhs:
                fail("associative", triple=[view.label(a), view.label(b), view.label(c)])
            pm, qm = view.mul(a, c), view.mul(b, c)
            if pm is not None and pm == qm and a != b:
                fail("cancellative", triple=[view.label(a), view.label(b), view.label(c)])
            mp, mq = view.mul(c, a), view.mul(c, b)
            if mp is not None and mp == mq and a != b:
                fail("cancellative", triple=[view.label(c), view.label(a), view.label(b)])
        rep.instances = n + pairs + samples
        rep.details.update(conditions=conditions, simples=n, samples=samples, seed=seed,
                           atoms=len(view.atoms), delta_length=view.lengths[view.delta])
    return rep


# ---- equivalence classes of words and the poset E(m) ---------------------------------

def _splits(view, p, cache):
    got = cache.get(p)
    if got is None:
        got = []
        for q in range(1, len(view)):
            if view.lengths[q] >= view.lengths[p]:
                break
            r = view.left_quotient(q, p)
            if r is not None and r != view.unit:
                got.append((q, r))
        cache[p] = got
    return got


def word_class(view: PreMonoidView, word, limit: int = 10 ** 6) -> set[tuple[int, ...]]:
    """All words of non-unit simples equal to ``word`` in the monoid generated
    by the pre-monoid, found by closing under single merges and splits."""
    start = tuple(x for x in word if x != view.unit)
    seen = {start}
    queue = deque([start])
    cache: dict = {}
    while queue:
        w = queue.popleft()
        nbrs = []
        for i in range(len(w) - 1):
            m = view.mul(w[i], w[i + 1])
            if m is not None:
                nbrs.append(w[:i] + (m,) + w[i + 2:])
        for i, p in enumerate(w):
            for q, r in _splits(view, p, cache):
                nbrs.append(w[:i] + (q, r) + w[i + 1:])
        for u in nbrs:
            if u not in seen:
                seen.add(u)
                if len(seen) > limit:
                    raise CapExceeded(f"word class exceeds {limit}")
                queue.append(u)
    return seen


@dataclass
class EPoset:
    vertices: list[tuple[int, ...]]
    covers: list[tuple[int, int]]  # (finer, coarser): one adjacent merge
    dimension: int


def e_poset(view: PreMonoidView, m, cap: int = 6) -> EPoset:
    """Reduced decompositions of the monoid element ``m`` (a word of simples),
    ordered by single merges; the dimension is the longest chain length."""
    total = sum(view.lengths[x] for x in m)
    if total > cap:
        raise CapExceeded(f"element of length {total} exceeds the cap {cap}")
    vertices = sorted(word_class(view, m), key=lambda w: (-len(w), w))
    index = {w: i for i, w in enumerate(vertices)}
    covers = []
    for w in vertices:
        for i in range(len(w) - 1):
            p = view.mul(w[i], w[i + 1])
            if p is not None:
                covers.append((index[w], index[w[:i] + (p,) + w[i + 2:]]))
    # longest chain starting at each vertex, processed coarse to fine
    longest = [0] * len(vertices)
    up = [[] for _ in vertices]
    for a, b in covers:
        up[a].append(b)
    for i in sorted(range(len(vertices)), key=lambda i: len(vertices[i])):
        longest[i] = max((1 + longest[j] for j in up[i]), default=0)
    return EPoset(vertices, covers, max(longest, default=0))


# ---- the anti-automorphisms Theta and Theta' ------------------------------------------

@dataclass
class ThetaMaps:
    theta: tuple[int, ...]
    theta_prime: tuple[int, ...]
    report: Report


def theta_antiautomorphisms(ctx: GroupContext, c: GroupElement | None = None,
                            view: DivisorPreMonoid | None = None) -> ThetaMaps:
    """``Theta(x) = s_R x^-1 s_R`` and ``Theta'(x) = (s_R c) x^-1 (s_R c)^-1``
    on the simples of the dual monoid."""
    pair = ctx.canonical_chromatic_pair()
    c = c if c is not None else pair.c
    view = view or divisor_premonoid(ctx, c, "T")
    rep = Report(str(ctx.descriptor), "theta")
    with timed(rep):
        sR = pair.s_R
        u = sR * c
        uinv = u.inverse()
        n = len(view)
        maps = []
        for conj, conj_inv in ((sR, sR), (u, uinv)):
            images = []
            for x in view.simples:
                y = conj * x.inverse() * conj_inv
                j = view.index.get(y)
                if j is None or view.lengths[j] != view.lengths[view.index[x]]:
                    rep.fail({"reason": "image is not a simple of the same length"})
                    j = view.index[x]
                images.append(j)
            maps.append(tuple(images))
        th, thp = maps
        for name, f in (("theta", th), ("theta_prime", thp)):
            if any(f[f[i]] != i for i in range(n)):
                rep.fail({"reason": "not involutive", "map": name})
            for i in range(n):
                for j in range(n):
                    k = view.mul(i, j)
                    if k is None:
                        continue
                    rep.instances += 1
                    if view.mul(f[j], f[i]) != f[k]:
                        rep.fail({"reason": "product not reversed", "map": name,
                                  "pair": [view.label(i), view.label(j)]})
        h = ctx.coxeter_number
        rot = tuple(th[thp[i]] for i in range(n))  # conjugation by c
        order, cur = 1, rot
        while cur != tuple(range(n)):
            cur = tuple(rot[x] for x in cur)
            order += 1

        def alternating(first, second, length):
            out = list(range(n))
            for k in range(length):
                f = first if k % 2 == 0 else second
                out = [f[x] for x in out]
            return out

        if alternating(th, thp, h) != alternating(thp, th, h):
            rep.fail({"reason": f"braid relation of length {h} fails"})
        expected = {h, h // 2} if h % 2 == 0 else {h}
        if order not in expected or h % order:
            rep.fail({"reason": "order of Theta Theta' is not h or h/2", "order": order})
        rep.details.update(h=h, order=order, faithful=order == h,
                           dihedral_order=2 * order, simples=n)
    return ThetaMaps(th, thp, rep)


def exhaustive_words(view: PreMonoidView, max_length: int):
    nonunit = range(1, len(view))
    for k in range(max_length + 1):
        yield from iproduct(nonunit, repeat=k)
