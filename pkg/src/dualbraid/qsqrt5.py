"""Exact arithmetic in the real quadratic field Q(sqrt 5).

Used for the root systems of types H3 and H4, whose Cartan entries involve
the golden ratio (1 + sqrt 5) / 2.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class QSqrt5:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    >>> phi = QSqrt5(Fraction(1, 2), Fraction(1, 2))
    >>> phi * phi == phi + 1
    True
    >>> QSqrt5(2, -1) < 0
    True
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _coerce(other):
        if isinstance(other, QSqrt5):
            return other
        if isinstance(other, (int, Rational)):
            return QSqrt5(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QSqrt5(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QSqrt5(self.a * other.a + 5 * self.b * other.b,
                      self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def conjugate(self) -> QSqrt5:
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        num = self * other.conjugate()
        return QSqrt5(num.a / n, num.b / n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def sign(self) -> int:
        # sign of a + b*sqrt5, decided without floating point
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        diff = self.a * self.a - 5 * self.b * self.b
        if diff == 0:
            return 0
        return sa if diff > 0 else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        if not self.b:
            return f"QSqrt5({self.a})"
        return f"QSqrt5({self.a}, {self.b})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"({self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*sqrt5)"


PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))
