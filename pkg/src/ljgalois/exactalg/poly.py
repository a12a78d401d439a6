"""Dense univariate polynomials over the quadratic field.

Coefficients are stored degree-0 upward with no trailing zeros; the zero
polynomial is the empty list.  Degrees in play stay small (< ~40), so a
dense list beats sparse bookkeeping.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ljgalois.exactalg.field import FieldElem, ZERO, ONE


def _fe(x) -> FieldElem:
    return x if isinstance(x, FieldElem) else FieldElem(x)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_fe(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c) -> "Poly":
        return Poly([_fe(c)])

    @staticmethod
    def x(power: int = 1, coeff=1) -> "Poly":
        return Poly([ZERO] * power + [_fe(coeff)])

    @staticmethod
    def from_terms(terms: dict[int, object]) -> "Poly":
        if not terms:
            return Poly()
        n = max(terms)
        cs = [ZERO] * (n + 1)
        for k, v in terms.items():
            cs[k] = cs[k] + _fe(v)
        return Poly(cs)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> FieldElem:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> FieldElem:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def is_monic(self) -> bool:
        return not self.is_zero and self.lead == ONE

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "Poly":
        c = _fe(c)
        return Poly([a * c for a in self.coeffs])

    def _as_poly(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, FieldElem)):
            return Poly.const(other)
        return NotImplemented

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division; coefficients stay in the field."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, FieldElem] = {}
        rem = list(self.coeffs)
        dn, lc = other.degree, other.lead
        while len(rem) - 1 >= dn and rem:
            k = len(rem) - 1 - dn
            f = rem[-1] / lc
            q[k] = f
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - f * b
            while rem and rem[-1].is_zero:
                rem.pop()
        return Poly.from_terms(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.lead.inverse())

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (Euclid)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def derivative(self) -> "Poly":
        return Poly([self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def __call__(self, x):
        """Horner evaluation; accepts FieldElem/Fraction/int/float."""
        if self.is_zero:
            return ZERO if isinstance(x, FieldElem) else 0.0
        if isinstance(x, float):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        x = _fe(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c) -> "Poly":
        """Taylor recentering: returns q with q(y) = p(y + c)."""
        c = _fe(c)
        if c.is_zero or self.is_zero:
            return self
        # repeated synthetic division by (x - c) collects the Taylor coefficients
        work = list(self.coeffs)
        out = []
        while work:
            for i in range(len(work) - 2, -1, -1):
                work[i] = work[i] + c * work[i + 1]
            out.append(work[0])
            work = work[1:]
        return Poly(out)

    def compose_linear(self, alpha, beta) -> "Poly":
        """p(alpha*x + beta) via scale-then-shift."""
        alpha = _fe(alpha)
        scaled = Poly([self.coeffs[i] * alpha**i for i in range(len(self.coeffs))])
        return scaled.shift(_fe(beta) / alpha) if not _fe(beta).is_zero else scaled

    # -- equality / display ----------------------------------------------

    def __eq__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        from ljgalois.exprparse import render_poly

        return render_poly(self)


def poly_sqrt(p: Poly) -> Poly | None:
    """Exact polynomial square root, or None when p is not a perfect square."""
    from ljgalois.exactalg.field import sqrt_elem
    from ljgalois.errors import UnsupportedExtension

    if p.is_zero:
        return Poly()
    if p.degree % 2:
        return None
    try:
        lead = sqrt_elem(p.lead)
    except UnsupportedExtension:
        return None
    m = p.degree // 2
    s = [ZERO] * (m + 1)
    s[m] = lead
    # match coefficients of x^(2m-1) .. x^m to fix s[m-1] .. s[0]
    for k in range(2 * m - 1, m - 1, -1):
        j = k - m
        acc = ZERO
        for i in range(j + 1, m + 1):
            if 0 <= k - i <= m:
                acc = acc + s[i] * s[k - i]
        s[j] = (p.coeff(k) - acc) / (2 * lead)
    cand = Poly(s)
    return cand if cand * cand == p else None
