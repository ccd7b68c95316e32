"""Finite Coxeter type descriptors and the static classification data.

Simple roots follow Bourbaki's numbering.  Type strings look like ``"A5"``,
``"E8"``, ``"I2(7)"``, and products are joined with ``x``: ``"A2xA1"``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .qsqrt5 import PHI, QSqrt5

FAMILIES = "ABDEFHI"


class InvalidType(ValueError):
    """Invalid Coxeter type descriptor; carries the offending (family, rank)."""

    def __init__(self, message, family=None, rank=None, position=None):
        super().__init__(message)
        self.family = family
        self.rank = rank
        self.position = position


@dataclass(frozen=True)
class Irreducible:
    family: str
    rank: int
    m: int | None = None  # dihedral order, family I only

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = (
            (f == "A" and n >= 1)
            or (f == "B" and n >= 2)
            or (f == "D" and n >= 3)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "H" and n in (3, 4))
            or (f == "I" and n == 2 and self.m is not None and self.m >= 3)
        )
        if not ok:
            label = f"{f}{n}" + (f"({self.m})" if self.m is not None else "")
            raise InvalidType(f"not a finite Coxeter type: {label}", f, n)
        if f != "I" and self.m is not None:
            raise InvalidType(f"dihedral order only allowed for family I: {f}{n}", f, n)

    def __str__(self):
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def crystallographic(self) -> bool:
        return self.family in "ABDEF"

    def degrees(self) -> tuple[int, ...]:
        f, n = self.family, self.rank
        if f == "A":
            return tuple(range(2, n + 2))
        if f == "B":
            return tuple(range(2, 2 * n + 1, 2))
        if f == "D":
            return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
        if f == "I":
            return (2, self.m)
        return _EXCEPTIONAL_DEGREES[(f, n)]

    def coxeter_number(self) -> int:
        return max(self.degrees())

    def coxeter_matrix(self) -> list[list[int]]:
        n = self.rank
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for (i, j), order in _edges(self).items():
            m[i][j] = m[j][i] = order
        return m

    def cartan_matrix(self) -> list[list]:
        """``C[i][j] = <alpha_i^vee, alpha_j>``, so ``s_i(a_j) = a_j - C[i][j] a_i``.

        Integer for crystallographic types; for H3/H4 the symmetric
        normalization ``-2 cos(pi/m)`` with entries in Q(sqrt 5).
        Family I has no Cartan data here (dihedral backend).
        """
        if self.family == "I":
            raise InvalidType("dihedral types use the closed-form backend", "I", 2)
        n = self.rank
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), order in _edges(self).items():
            if order == 3:
                c[i][j] = c[j][i] = -1
            elif order == 5:
                c[i][j] = c[j][i] = -PHI
            elif order == 4:
                # (i, j) is (long, short)
                c[i][j], c[j][i] = -1, -2
            else:  # pragma: no cover - exhausted by the classification
                raise InvalidType(f"unsupported edge order {order}", self.family, n)
        if self.family == "H":
            c = [[QSqrt5(x) if isinstance(x, int) else x for x in row] for row in c]
        return c


_EXCEPTIONAL_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("H", 3): (2, 6, 10),
    ("H", 4): (2, 12, 20, 30),
}


def _edges(t: Irreducible) -> dict[tuple[int, int], int]:
    """Coxeter graph edges (0-based) with their orders; for order 4 the
    first node is the long root."""
    f, n = t.family, t.rank
    e = {}
    if f == "A":
        for i in range(n - 1):
            e[(i, i + 1)] = 3
    elif f == "B":
        for i in range(n - 2):
            e[(i, i + 1)] = 3
        e[(n - 2, n - 1)] = 4
    elif f == "D":
        for i in range(n - 2):
            e[(i, i + 1)] = 3
        e[(n - 3, n - 1)] = 3
    elif f == "E":
        e[(0, 2)] = 3
        e[(1, 3)] = 3
        for i in range(2, n - 1):
            e[(i, i + 1)] = 3
    elif f == "F":
        e[(0, 1)] = 3
        e[(1, 2)] = 4
        e[(2, 3)] = 3
    elif f == "H":
        e[(0, 1)] = 5
        for i in range(1, n - 1):
            e[(i, i + 1)] = 3
    elif f == "I":
        e[(0, 1)] = t.m
    return e


@dataclass(frozen=True)
class TypeDescriptor:
    """A finite Coxeter type: a nonempty product of irreducible factors."""

    factors: tuple[Irreducible, ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidType("empty product type")

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def irreducible(self) -> bool:
        return len(self.factors) == 1

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for f in self.factors for d in f.degrees())

    def __str__(self):
        return "x".join(str(f) for f in self.factors)

    def offsets(self) -> list[int]:
        out, k = [], 0
        for f in self.factors:
            out.append(k)
            k += f.rank
        return out

    def coxeter_matrix(self) -> list[list[int]]:
        n = self.rank
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for f, off in zip(self.factors, self.offsets()):
            sub = f.coxeter_matrix()
            for i in range(f.rank):
                for j in range(f.rank):
                    m[off + i][off + j] = sub[i][j]
        return m


_FACTOR_RE = re.compile(r"([A-Za-z])(\d+)(?:\((\d+)\))?")


def parse_type(text: str) -> TypeDescriptor:
    """Parse ``"A5"``, ``"I2(7)"``, ``"A2xA1"`` ...

    >>> str(parse_type("a2xI2(5)"))
    'A2xI2(5)'
    """
    s = text.strip()
    if not s:
        raise InvalidType("empty type string", position=0)
    factors = []
    pos = 0
    while True:
        m = _FACTOR_RE.match(s, pos)
        if m is None:
            raise InvalidType(f"cannot parse type at position {pos}: {s!r}", position=pos)
        family = m.group(1).upper()
        rank = int(m.group(2))
        order = int(m.group(3)) if m.group(3) else None
        if family not in FAMILIES:
            raise InvalidType(f"unknown family {family!r} at position {pos}", family, rank, pos)
        if family == "I" and order is None:
            raise InvalidType(f"dihedral type needs an order, e.g. I2(5), at position {pos}",
                              family, rank, pos)
        try:
            factors.append(Irreducible(family, rank, order))
        except InvalidType as exc:
            exc.position = pos
            raise
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] not in "x*":
            raise InvalidType(f"expected 'x' at position {pos}: {s!r}", position=pos)
        pos += 1
    return TypeDescriptor(tuple(factors))


def as_descriptor(desc) -> TypeDescriptor:
    if isinstance(desc, TypeDescriptor):
        return desc
    if isinstance(desc, Irreducible):
        return TypeDescriptor((desc,))
    return parse_type(str(desc))


def catalan_number(desc) -> int:
    """Number of simples of the dual monoid: the product over irreducible
    factors of prod (d_i + h) / d_i.

    >>> catalan_number("A3"), catalan_number("E7")
    (14, 4160)
    """
    total = 1
    for f in as_descriptor(desc).factors:
        h = f.coxeter_number()
        q = Fraction(1)
        for d in f.degrees():
            q *= Fraction(d + h, d)
        if q.denominator != 1:
            raise ArithmeticError(f"non-integral Catalan number for {f}: {q}")
        total *= q.numerator
    return total
