"""The coefficient field: Q extended by at most one square root.

An element is ``rational + radical * sqrt(radicand)`` with exact
``fractions.Fraction`` parts and a squarefree non-negative integer
radicand.  Elements whose radical part is zero carry radicand 0, so the
radicand is chosen lazily by the first irrational square root taken in a
computation.  Mixing two different nonzero radicands raises
:class:`~ljgalois.errors.UnsupportedExtension`: the package deliberately
supports a single quadratic extension, not an algebraic-number tower.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ljgalois.errors import UnsupportedExtension

Rat = Fraction  # arbitrary-precision rational: gcd-reduced, positive denominator


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write ``n = s*s*f`` with f squarefree; return ``(s, f)``.  Requires n >= 0."""
    if n < 0:
        raise ValueError("squarefree_decompose needs n >= 0")
    if n in (0, 1):
        return (1, n)
    s, f = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            s *= p ** (k // 2)
            if k % 2:
                f *= p
        p += 1 if p == 2 else 2
    return (s, f * n)


class FieldElem:
    """An element a + b*sqrt(d) of Q(sqrt(d)); immutable."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if d < 0:
            raise UnsupportedExtension("negative radicand (complex field not supported)")
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0:
            d = 0
        elif d == 0:
            b = Fraction(0)
        else:
            s, f = squarefree_decompose(d)
            if s != 1:
                b, d = b * s, f
            if d == 1:
                a, b, d = a + b, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *args):
        raise AttributeError("FieldElem is immutable")

    # -- field-compatibility plumbing ------------------------------------

    @staticmethod
    def _coerce(x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (int, Fraction)):
            return FieldElem(x)
        return NotImplemented  # type: ignore[return-value]

    def _join(self, other: "FieldElem") -> int:
        """Common radicand of two elements, or raise UnsupportedExtension."""
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise UnsupportedExtension(
            f"cannot combine sqrt({self.d}) with sqrt({other.d})"
        )

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise UnsupportedExtension(f"{self} is not rational")
        return self.a

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join(other)
        return FieldElem(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join(other)
        # (a + b sqrt d)(a' + b' sqrt d) = aa' + bb'd + (ab' + a'b) sqrt d
        return FieldElem(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero:
            raise ZeroDivisionError("division by zero field element")
        # 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d); the norm is nonzero
        # for nonzero elements because d is squarefree (sqrt d irrational).
        norm = self.a * self.a - self.b * self.b * self.d
        return FieldElem(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = FieldElem(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "FieldElem":
        """a + b*sqrt(d) -> a - b*sqrt(d)."""
        return FieldElem(self.a, -self.b, self.d)

    # -- comparisons (by real value, exactly) ----------------------------

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 d
        lhs, rhs = a * a, b * b * d
        if a > 0:
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __bool__(self):
        return not self.is_zero

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    # -- display ---------------------------------------------------------

    def __repr__(self):
        return f"FieldElem({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = f"sqrt({self.d})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.d})"
        rad = rad if self.b > 0 else "-" + rad
        if self.a == 0:
            return rad
        return f"{self.a} + {rad}" if self.b > 0 else f"{self.a} - {rad.lstrip('-')}"


ZERO = FieldElem(0)
ONE = FieldElem(1)


def fe(a, b=0, d: int = 0) -> FieldElem:
    """Shorthand constructor; accepts ints, Fractions, or 'p/q' strings."""
    if isinstance(a, str):
        a = Fraction(a)
    if isinstance(b, str):
        b = Fraction(b)
    return FieldElem(a, b, d)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    sn, fn = squarefree_decompose(q.numerator)
    sd, fd = squarefree_decompose(q.denominator)
    if fn == 1 and fd == 1:
        return Fraction(sn, sd)
    return None


def sqrt_elem(x: FieldElem) -> FieldElem:
    """Square root of x within a single quadratic extension.

    For rational x >= 0 the result is rational or a fresh sqrt(d) element.
    For x = a + b*sqrt(d) the result exists in Q(sqrt(d)) only when x is a
    perfect square there, i.e. x = (p + q*sqrt(d))^2; otherwise (and for
    negative values) UnsupportedExtension is raised.
    """
    if x.sign() < 0:
        raise UnsupportedExtension(f"sqrt of negative value {x}")
    if x.is_rational:
        q = x.a
        # sqrt(n/m) = sqrt(n*m)/m
        s, f = squarefree_decompose(q.numerator * q.denominator)
        coeff = Fraction(s, q.denominator)
        if f == 1:
            return FieldElem(coeff)
        return FieldElem(0, coeff, f)
    # x = a + b sqrt(d): look for p + q sqrt(d) with p^2 + q^2 d = a, 2pq = b
    a, b, d = x.a, x.b, x.d
    t = rational_sqrt(a * a - b * b * d)
    if t is not None:
        for p2 in ((a + t) / 2, (a - t) / 2):
            p = rational_sqrt(p2)
            if p is not None and p != 0:
                q = b / (2 * p)
                cand = FieldElem(p, q, d)
                if cand * cand == x:
                    return cand if cand.sign() >= 0 else -cand
    raise UnsupportedExtension(f"sqrt({x}) does not lie in Q(sqrt({x.d}))")
