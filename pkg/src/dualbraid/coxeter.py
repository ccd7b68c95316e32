"""Finite reflection groups with exact arithmetic.

An element is stored as the permutation it induces on the root system.
Positive roots carry indices ``0..N-1`` sorted by (height, coordinates in
decreasing lexicographic order), so the simple roots are ``0..n-1`` and the
reflection ``t_{i+1}`` is the one attached to positive root ``i``.  The
negative of root ``r`` is ``r + N``.

Crystallographic factors use integer coordinates in the basis of simple
roots; H3 and H4 use coordinates in Q(sqrt 5).  Dihedral factors I2(m) use a
closed-form action on the ``2m`` roots indexed by angle.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exact
from .qsqrt5 import QSqrt5
from .types import Irreducible, TypeDescriptor, as_descriptor


class ContextMismatch(ValueError):
    """Elements from different groups were combined."""


class InvariantViolation(RuntimeError):
    """An invariant that holds for every finite Coxeter group failed."""


class GroupElement:
    """An element of W as a permutation of root indices.

    Composition is ``(u * w)[r] == u[w[r]]``.  Equality and hashing use the
    images of the simple roots, which determine the element.
    """

    __slots__ = ("perm", "key")

    def __init__(self, perm: tuple, rank: int):
        self.perm = perm
        self.key = perm[:rank]

    def __mul__(self, other: GroupElement) -> GroupElement:
        if len(self.perm) != len(other.perm):
            raise ContextMismatch("elements belong to different groups")
        return GroupElement(tuple(map(self.perm.__getitem__, other.perm)), len(self.key))

    def inverse(self) -> GroupElement:
        inv = [0] * len(self.perm)
        for i, x in enumerate(self.perm):
            inv[x] = i
        return GroupElement(tuple(inv), len(self.key))

    def conjugate(self, x: GroupElement) -> GroupElement:
        """``self * x * self^-1``."""
        return self * x * self.inverse()

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GroupElement({self.key})"

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.key))


@dataclass
class _Component:
    factor: Irreducible
    simples: tuple[int, ...]  # global simple indices
    h: int


@dataclass(frozen=True)
class ChromaticPair:
    L: tuple[int, ...]
    R: tuple[int, ...]
    s_L: GroupElement
    s_R: GroupElement
    c: GroupElement

    @property
    def order(self) -> tuple[int, ...]:
        """Generators in the order ``L`` then ``R`` (ascending within each)."""
        return self.L + self.R


class GroupContext:
    """An immutable finite Coxeter group together with its root data."""

    def __init__(self, desc: TypeDescriptor):
        self.descriptor = desc
        self.rank = n = desc.rank
        self.coxeter_matrix = desc.coxeter_matrix()
        self.degrees = desc.degrees()
        self.components = []
        raw = []  # (offset, rank, local roots) per factor
        actions = []
        exact_coords = True
        for ci, (f, off) in enumerate(zip(desc.factors, desc.offsets())):
            self.components.append(_Component(f, tuple(range(off, off + f.rank)),
                                              f.coxeter_number()))
            if f.family == "I":
                exact_coords = False
                roots, action = _dihedral_roots(f.m)
            else:
                roots, action = _linear_roots(f.cartan_matrix())
            actions.append(action)
            raw.append((off, f.rank, roots))

        # Global coordinates: pad each factor's coordinates with zeros.
        entries = []  # (coords, float_coords, factor, local index)
        for ci, (off, r, roots) in enumerate(raw):
            zero = QSqrt5(0) if desc.factors[ci].family == "H" else 0
            for li, (coords, fcoords) in enumerate(roots):
                if coords is not None:
                    full = [zero] * n
                    full[off:off + r] = coords
                    full = tuple(full)
                else:
                    full = None
                ff = [0.0] * n
                ff[off:off + r] = fcoords
                entries.append((full, tuple(ff), ci, li))
        self.exact_coordinates = exact_coords

        def positive(e):
            return all(x >= 0 for x in e[1]) and any(x > 0 for x in e[1])

        pos = [e for e in entries if positive(e)]
        if exact_coords:
            pos.sort(key=lambda e: (sum(e[0][1:], e[0][0]), tuple(-x for x in e[0])))
        else:
            pos.sort(key=lambda e: (round(sum(e[1]), 9), tuple(round(-x, 9) for x in e[1])))
        self.N = N = len(pos)
        index = {}
        for i, e in enumerate(pos):
            index[(e[2], e[3])] = i
        neg_of = {}
        for ci, (off, r, roots) in enumerate(raw):
            for li in range(len(roots)):
                if (ci, li) not in index:
                    continue
                neg_of[(ci, _negate_local(desc.factors[ci], roots, li))] = index[(ci, li)] + N
        index.update(neg_of)
        self.roots = [None] * (2 * N)
        self.float_roots = [None] * (2 * N)
        for e in entries:
            g = index[(e[2], e[3])]
            self.roots[g] = e[0]
            self.float_roots[g] = e[1]
        for i in range(n):
            expected = tuple(1.0 if j == i else 0.0 for j in range(n))
            if tuple(round(x, 9) for x in self.float_roots[i]) != expected:
                raise InvariantViolation("simple roots are not the first positive roots")

        # Simple reflections as permutations of global root indices.
        local_to_global = {}
        for (ci, li), g in index.items():
            local_to_global[(ci, li)] = g
        global_to_local = {g: key for key, g in local_to_global.items()}
        self.component_of_root = [global_to_local[g][0] for g in range(2 * N)]
        self.simple_reflections = []
        for ci, (off, r, roots) in enumerate(raw):
            for k in range(r):
                act = actions[ci][k]
                perm = list(range(2 * N))
                for g in range(2 * N):
                    cj, li = global_to_local[g]
                    if cj == ci:
                        perm[g] = local_to_global[(ci, act[li])]
                self.simple_reflections.append(GroupElement(tuple(perm), n))
        self.identity = GroupElement(tuple(range(2 * N)), n)

        # Reflections: closure of S under conjugation, indexed by their root.
        found = {}
        queue = deque(self.simple_reflections)
        seen = set(queue)
        while queue:
            t = queue.popleft()
            root = next(r for r in range(N) if t.perm[r] == r + N)
            found[root] = t
            for s in self.simple_reflections:
                u = s * t * s
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        if sorted(found) != list(range(N)):
            raise InvariantViolation("reflections do not match positive roots")
        self.reflections = tuple(found[i] for i in range(N))
        self.reflection_index = {t: i for i, t in enumerate(self.reflections)}
        self.h_by_component = tuple(c.h for c in self.components)
        for ci, comp in enumerate(self.components):
            count = sum(1 for r in range(N) if self.component_of_root[r] == ci)
            if 2 * count != comp.h * len(comp.simples):
                raise InvariantViolation(f"|T| != hn/2 for {comp.factor}")

    # ---- basic data -------------------------------------------------------

    @property
    def coxeter_number(self) -> int:
        """Coxeter number: ``h`` of an irreducible group, lcm over factors otherwise."""
        return math.lcm(*self.h_by_component)

    @property
    def irreducible(self) -> bool:
        return len(self.components) == 1

    def reflection(self, i: int) -> GroupElement:
        """The reflection ``t_{i+1}`` (0-based index ``i``)."""
        return self.reflections[i]

    def simple(self, i: int) -> GroupElement:
        return self.simple_reflections[i]

    def check(self, *elements: GroupElement) -> None:
        for w in elements:
            if len(w.perm) != 2 * self.N:
                raise ContextMismatch("element does not belong to this group")

    @cached_property
    def conjugation_table(self) -> tuple[tuple[int, ...], ...]:
        """``table[i][j]`` is the index of ``t_i t_j t_i``."""
        rows = []
        for ti in self.reflections:
            rows.append(tuple(self.reflection_index[ti * tj * ti] for tj in self.reflections))
        return tuple(rows)

    # ---- matrices ---------------------------------------------------------

    def matrix(self, w: GroupElement) -> list[list]:
        """Exact matrix of ``w`` in the basis of simple roots (rows)."""
        if not self.exact_coordinates:
            raise TypeError("dihedral factors have no exact matrix in this backend")
        cols = [self.roots[w.perm[i]] for i in range(self.rank)]
        return [[cols[j][i] for j in range(self.rank)] for i in range(self.rank)]

    def moved_rows(self, w: GroupElement, comp: int | None = None) -> list[list]:
        """Rows of ``M_w - I``, optionally restricted to one component."""
        idx = self.components[comp].simples if comp is not None else range(self.rank)
        rows = []
        for i in idx:
            row = []
            for j in idx:
                x = self.roots[w.perm[j]][i]
                row.append(x - 1 if i == j else x)
            rows.append(row)
        return rows

    def fixed_space(self, w: GroupElement) -> list[list]:
        """Basis of ``ker(M_w - I)``."""
        return exact.kernel(self.moved_rows(w))

    # ---- lengths ----------------------------------------------------------

    def reflection_length(self, w: GroupElement) -> int:
        total = 0
        for ci, comp in enumerate(self.components):
            if comp.factor.family == "I":
                total += self._dihedral_length(w, comp)
            else:
                total += exact.rank(self.moved_rows(w, ci))
        return total

    def _dihedral_length(self, w: GroupElement, comp: _Component) -> int:
        a, b = comp.simples
        m = comp.factor.m
        # angle index of the images of the roots at angle 0 and angle m-1
        x, y = self._angle(w.perm[a]), self._angle(w.perm[b])
        if x == 0 and y == m - 1:
            return 0
        return 2 if (y - x) % (2 * m) == m - 1 else 1

    def _angle(self, g: int) -> int:
        return self._angles[g]

    @cached_property
    def _angles(self) -> tuple:
        out = []
        for g in range(2 * self.N):
            fx = self.float_roots[g]
            ci = self.component_of_root[g]
            comp = self.components[ci]
            if comp.factor.family != "I":
                out.append(None)
                continue
            m = comp.factor.m
            a, b = comp.simples
            v = _dihedral_vector(m, fx[a], fx[b])
            ang = math.atan2(v[1], v[0])
            out.append(round(ang * m / math.pi) % (2 * m))
        return tuple(out)

    def s_length(self, w: GroupElement) -> int:
        N = self.N
        return sum(1 for r in range(N) if w.perm[r] >= N)

    def absolute_divides(self, u: GroupElement, w: GroupElement) -> bool:
        """``u`` is a prefix of a reduced T-word for ``w``."""
        lt = self.reflection_length
        return lt(u) + lt(u.inverse() * w) == lt(w)

    # ---- words and special elements ----------------------------------------

    def from_s_word(self, word) -> GroupElement:
        w = self.identity
        for i in word:
            w = w * self.simple_reflections[i]
        return w

    def from_t_word(self, word) -> GroupElement:
        w = self.identity
        for i in word:
            w = w * self.reflections[i]
        return w

    def to_s_word(self, w: GroupElement) -> tuple[int, ...]:
        """A reduced S-word (0-based generators), lexicographically first descents."""
        word = []
        N = self.N
        while not w.is_identity():
            i = next(i for i in range(self.rank) if w.perm[i] >= N)
            word.append(i)
            w = w * self.simple_reflections[i]
        return tuple(reversed(word))

    def is_right_descent(self, w: GroupElement, i: int) -> bool:
        return w.perm[i] >= self.N

    @cached_property
    def longest_element(self) -> GroupElement:
        w = self.identity
        while True:
            i = next((i for i in range(self.rank) if w.perm[i] < self.N), None)
            if i is None:
                return w
            w = w * self.simple_reflections[i]

    def order(self, w: GroupElement) -> int:
        k, x = 1, w
        while not x.is_identity():
            x = x * w
            k += 1
        return k

    def group_order(self) -> int:
        total = 1
        for comp in self.components:
            f = comp.factor
            if f.family == "I":
                total *= 2 * f.m
            else:
                total *= _weight_chain_order(f.cartan_matrix())
        return total

    def elements(self, limit: int = 10 ** 6):
        """All elements, breadth first by S-length."""
        if self.group_order() > limit:
            raise OverflowError(f"|W| = {self.group_order()} exceeds limit {limit}")
        seen = {self.identity}
        layer = [self.identity]
        out = [self.identity]
        while layer:
            nxt = []
            for w in layer:
                for s in self.simple_reflections:
                    u = w * s
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            out.extend(nxt)
            layer = nxt
        return out

    # ---- Coxeter elements ---------------------------------------------------

    def canonical_chromatic_pair(self) -> ChromaticPair:
        n = self.rank
        color = [None] * n
        for start in range(n):
            if color[start] is not None:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in range(n):
                    if j != i and self.coxeter_matrix[i][j] > 2:
                        if color[j] is None:
                            color[j] = 1 - color[i]
                            queue.append(j)
                        elif color[j] == color[i]:
                            raise InvariantViolation("Coxeter graph is not bipartite")
        L = tuple(i for i in range(n) if color[i] == 0)
        R = tuple(i for i in range(n) if color[i] == 1)
        s_L, s_R = self.from_s_word(L), self.from_s_word(R)
        return ChromaticPair(L, R, s_L, s_R, s_L * s_R)

    def coxeter_conjugation_orbits(self, c: GroupElement) -> list[tuple[int, ...]]:
        """Orbits of ``t -> c t c^-1`` on reflection indices, checked against
        the size dichotomy (h with two simples, or h/2 with one)."""
        cinv = c.inverse()
        remaining = set(range(self.N))
        orbits = []
        while remaining:
            start = min(remaining)
            orbit = [start]
            t = self.reflections[start]
            while True:
                t = c * t * cinv
                j = self.reflection_index[t]
                if j == start:
                    break
                orbit.append(j)
            remaining.difference_update(orbit)
            h = self.components[self.component_of_root[start]].h
            simples = sum(1 for j in orbit if j < self.rank)
            if not ((len(orbit) == h and simples == 2) or (2 * len(orbit) == h and simples == 1)):
                raise InvariantViolation(
                    f"orbit of t{start + 1} has size {len(orbit)} with {simples} simple reflections (h={h})")
            orbits.append(tuple(orbit))
        return orbits


def build_group(desc) -> GroupContext:
    """Build the group for a descriptor or type string such as ``"B3"``.

    >>> g = build_group("A2")
    >>> g.group_order(), g.N, g.coxeter_number, g.degrees
    (6, 3, 3, (2, 3))
    """
    return _build_cached(as_descriptor(desc))


_CACHE: dict = {}


def _build_cached(desc: TypeDescriptor) -> GroupContext:
    ctx = _CACHE.get(desc)
    if ctx is None:
        ctx = GroupContext(desc)
        _CACHE[desc] = ctx
    return ctx


def element_arithmetic(ctx: GroupContext, op: str, *args):
    """Dispatch ``multiply``, ``invert``, ``equal`` or ``conjugate``."""
    ctx.check(*args)
    if op == "multiply":
        out = ctx.identity
        for a in args:
            out = out * a
        return out
    if op == "invert":
        (a,) = args
        return a.inverse()
    if op == "equal":
        a, b = args
        return a == b
    if op == "conjugate":
        w, x = args
        return w.conjugate(x)
    raise ValueError(f"unknown operation {op!r}")


# ---- root system construction ------------------------------------------------

def _linear_roots(cartan):
    """Roots of a crystallographic or H-type system from its Cartan matrix.

    Returns ``(roots, action)`` where roots are ``(coords, float_coords)``
    pairs and ``action[i][r]`` is the index of ``s_i(root r)``.
    """
    n = len(cartan)
    one = cartan[0][0] // 2 if isinstance(cartan[0][0], int) else cartan[0][0] / 2
    zero = one * 0

    def reflect(i, v):
        k = sum((cartan[i][j] * v[j] for j in range(1, n)), cartan[i][0] * v[0])
        return tuple(v[j] - k if j == i else v[j] for j in range(n))

    simple = [tuple(one if j == i else zero for j in range(n)) for i in range(n)]
    found = {}
    order = []
    queue = deque()
    for v in simple + [tuple(-x for x in s) for s in simple]:
        found[v] = len(order)
        order.append(v)
        queue.append(v)
    while queue:
        v = queue.popleft()
        for i in range(n):
            u = reflect(i, v)
            if u not in found:
                found[u] = len(order)
                order.append(u)
                queue.append(u)
    action = [tuple(found[reflect(i, v)] for v in order) for i in range(n)]
    roots = [(v, tuple(float(x) for x in v)) for v in order]
    return roots, action


def _dihedral_vector(m, x, y):
    """Euclidean coordinates of ``x a1 + y a2`` with roots at angles 0 and (m-1)pi/m."""
    th = (m - 1) * math.pi / m
    return (x + y * math.cos(th), y * math.sin(th))


def _dihedral_roots(m):
    th = (m - 1) * math.pi / m
    roots = []
    for j in range(2 * m):
        a = j * math.pi / m
        vx, vy = math.cos(a), math.sin(a)
        y = vy / math.sin(th)
        x = vx - y * math.cos(th)
        x = 0.0 if abs(x) < 1e-12 else x
        y = 0.0 if abs(y) < 1e-12 else y
        roots.append((None, (x, y)))
    # simple roots at angle indices 0 and m-1; s_a maps j to 2a + m - j
    action = [tuple((2 * a + m - j) % (2 * m) for j in range(2 * m)) for a in (0, m - 1)]
    return roots, action


def _negate_local(f: Irreducible, roots, li):
    if f.family == "I":
        return (li + f.m) % (2 * f.m)
    target = tuple(-x for x in roots[li][0])
    for k, (v, _) in enumerate(roots):
        if v == target:
            return k
    raise InvariantViolation("root system is not closed under negation")


def _weight_chain_order(cartan) -> int:
    """|W| as |W omega_last| * |W_{S minus last}|, recursively."""
    n = len(cartan)
    if n == 0:
        return 1
    field = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in cartan]
    rhs = [0] * (n - 1) + [1]
    # coordinates of the fundamental weight in the basis of simple roots:
    # <alpha_i^vee, v> = sum_j C[i][j] v_j
    v = tuple(exact.solve(field, rhs))
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for i in range(n):
            k = sum((field[i][j] * x[j] for j in range(1, n)), field[i][0] * x[0])
            if k:
                y = tuple(x[j] - k if j == i else x[j] for j in range(n))
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    sub = [row[:n - 1] for row in cartan[:n - 1]]
    return len(seen) * _weight_chain_order(sub)
