"""Reduced rational functions, pole analysis, and square-root Laurent heads.

A :class:`RatFunc` is always stored with gcd(num, den) = 1 and a monic
denominator, so equality is plain componentwise comparison.  Pole finding
factors the denominator over Q(sqrt(d)) using rational-root enumeration
plus the quadratic formula; anything needing more (an irreducible factor
of degree >= 2 over the field) raises UnsupportedPoles rather than
guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ljgalois.errors import (
    OddOrder,
    UnsupportedExtension,
    UnsupportedPoles,
    ZeroDenominator,
    ZeroFunction,
)
from ljgalois.exactalg.field import FieldElem, ONE, ZERO, sqrt_elem
from ljgalois.exactalg.poly import Poly

INFINITY = "infinity"


@dataclass(frozen=True)
class PoleData:
    """A finite pole location with its multiplicity in the denominator."""

    location: FieldElem
    order: int


@dataclass(frozen=True)
class LaurentHead:
    """Leading terms of a Laurent expansion.

    At a finite point c this is ``sum coeffs[i] * (x - c)^(leading_order + i)``;
    at infinity (point is None) it is ``sum coeffs[i] * x^(-leading_order - i)``.
    """

    point: FieldElem | None
    leading_order: int
    coeffs: tuple[FieldElem, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[0].is_zero:
            raise ValueError("leading Laurent coefficient must be nonzero")


class RatFunc:
    """num/den with gcd(num, den) = 1 and monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = Poly.const(1)):
        if den.is_zero:
            raise ZeroDenominator("denominator is the zero polynomial")
        if num.is_zero:
            num, den = Poly(), Poly.const(1)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lead
            if lc != ONE:
                num, den = num.scale(lc.inverse()), den.scale(lc.inverse())
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc(Poly.const(c))

    @staticmethod
    def x(power: int = 1, coeff=1) -> "RatFunc":
        """coeff * x^power for any integer power."""
        if power >= 0:
            return RatFunc(Poly.x(power, coeff))
        return RatFunc(Poly.const(coeff), Poly.x(-power))

    @staticmethod
    def from_poly(p: Poly) -> "RatFunc":
        return RatFunc(p)

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num

    # -- arithmetic -----------------------------------------------------------

    def _as_rf(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, FieldElem)):
            return RatFunc.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._as_rf(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (RatFunc.const(1) / self) ** (-n)
        out, base = RatFunc.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        if isinstance(x, float):
            return self.num(x) / self.den(x)
        num, den = self.num(x), self.den(x)
        return num / den

    def scale_arg(self, c) -> "RatFunc":
        """Affine substitution x -> c*x (c a nonzero field constant)."""
        c = c if isinstance(c, FieldElem) else FieldElem(c)
        if c.is_zero:
            raise ValueError("scale factor must be nonzero")
        sub = lambda p: Poly([p.coeffs[i] * c**i for i in range(len(p.coeffs))])
        return RatFunc(sub(self.num), sub(self.den))

    def subst_square(self) -> "RatFunc":
        """Substitute x -> x^2 (exponent doubling)."""
        stretch = lambda p: Poly.from_terms(
            {2 * i: p.coeffs[i] for i in range(len(p.coeffs))}
        )
        return RatFunc(stretch(self.num), stretch(self.den))

    # -- equality / display -------------------------------------------------

    def __eq__(self, other):
        other = self._as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        from ljgalois.exprparse import render_ratfunc

        return render_ratfunc(self)


def normalize(num: Poly, den: Poly) -> RatFunc:
    """Unique reduced form with monic denominator."""
    return RatFunc(num, den)


# ---------------------------------------------------------------------------
# factorization of denominators over Q(sqrt(d))
# ---------------------------------------------------------------------------


def _rational_roots(p: Poly) -> list[Fraction]:
    """Rational roots of a poly with rational coefficients (with repetition
    collapsed; divisor enumeration on the integer-scaled coefficients)."""
    if any(not c.is_rational for c in p.coeffs):
        return []
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.a.denominator // _gcd(den_lcm, c.a.denominator)
    ints = [int(c.a * den_lcm) for c in p.coeffs]
    # strip x^k factor: root 0
    roots = []
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        ints = ints[k:]
    if len(ints) <= 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    for pnum in _divisors(a0):
        for qden in _divisors(an):
            for sign in (1, -1):
                cand = Fraction(sign * pnum, qden)
                if cand not in roots and _eval_int(ints, cand) == 0:
                    roots.append(cand)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _eval_int(ints: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def _quadratic_roots(p: Poly) -> list[FieldElem]:
    """Roots of a degree-2 poly over Q(sqrt(d)); UnsupportedPoles if the
    discriminant's square root leaves the field."""
    c, b, a = p.coeff(0), p.coeff(1), p.coeff(2)
    disc = b * b - FieldElem(4) * a * c
    try:
        root = sqrt_elem(disc)
    except UnsupportedExtension as exc:
        raise UnsupportedPoles(
            f"quadratic factor with discriminant {disc} does not split over the field"
        ) from exc
    two_a = FieldElem(2) * a
    r1 = (-b + root) / two_a
    r2 = (-b - root) / two_a
    return [r1] if r1 == r2 else [r1, r2]


def linear_roots(p: Poly) -> list[tuple[FieldElem, int]]:
    """Complete factorization of p into linear factors over Q(sqrt(d)).

    Returns (root, multiplicity) pairs.  Raises UnsupportedPoles when an
    irreducible factor of degree >= 2 over the field remains (degree >= 3
    always; degree 2 when the discriminant needs an incompatible radical).
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    # squarefree split first so (x^2-2)^2 and friends factor cleanly
    mults: dict[FieldElem, int] = {}
    for factor, mult in _squarefree_decomposition(p):
        for root in _roots_squarefree(factor):
            mults[root] = mults.get(root, 0) + mult
    items = sorted(mults.items(), key=lambda kv: (kv[0].a, kv[0].b))
    return [(root, m) for root, m in items]


def _squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun-style decomposition p = prod f_i^i with the f_i squarefree."""
    out: list[tuple[Poly, int]] = []
    g = p.gcd(p.derivative())
    w = p // g
    i = 1
    while w.degree > 0:
        y = w.gcd(g)
        f = w // y
        if f.degree > 0:
            out.append((f, i))
        w, g = y, g // y
        i += 1
    if g.degree > 0:
        # leftover means characteristic quirks that cannot happen over Q
        out.append((g, i))
    return out


def _roots_squarefree(p: Poly) -> list[FieldElem]:
    roots: list[FieldElem] = []
    work = p
    for r in _rational_roots(work):
        fe_root = FieldElem(r)
        lin = Poly([-fe_root, ONE])
        q, rem = work.divmod(lin)
        if rem.is_zero:
            roots.append(fe_root)
            work = q
    if work.degree >= 3:
        raise UnsupportedPoles(
            f"irreducible factor of degree {work.degree} over Q(sqrt(d))"
        )
    if work.degree == 2:
        roots.extend(_quadratic_roots(work))
    elif work.degree == 1:
        roots.append(-work.coeff(0) / work.coeff(1))
    return roots


def poles(r: RatFunc) -> list[PoleData]:
    """All finite poles with multiplicities, ordered by
    (rational_part, radical_part) lexicographically."""
    if r.den.degree == 0:
        return []
    return [PoleData(root, mult) for root, mult in linear_roots(r.den)]


def order_at_infinity(r: RatFunc) -> int:
    """deg(den) - deg(num); the order of infinity as a zero of r."""
    if r.is_zero:
        raise ZeroFunction("order at infinity undefined for r = 0")
    return r.den.degree - r.num.degree


# ---------------------------------------------------------------------------
# Laurent expansions
# ---------------------------------------------------------------------------


def _series_div(num: Sequence[FieldElem], den: Sequence[FieldElem], depth: int):
    """Power-series quotient coefficients of num/den up to (excluding) depth.

    den[0] must be nonzero.
    """
    inv0 = den[0].inverse()
    out: list[FieldElem] = []
    for k in range(depth):
        acc = num[k] if k < len(num) else ZERO
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return out


def laurent_at_pole(r: RatFunc, c: FieldElem, count: int) -> tuple[int, list[FieldElem]]:
    """First ``count`` Laurent coefficients of r at the finite point c.

    Returns (lead, coeffs) so that r = sum coeffs[i] * (x-c)^(lead+i) + ...
    ``lead`` is -order when c is a pole (num and den are coprime, so the
    multiplicity of c in den is the pole order).
    """
    num_c = r.num.shift(c)
    den_c = r.den.shift(c)
    m = 0
    while den_c.coeff(m).is_zero:
        m += 1
    unit = Poly(den_c.coeffs[m:])
    series = _series_div(num_c.coeffs, unit.coeffs, count)
    return (-m, series)


def laurent_at_infinity(r: RatFunc, count: int) -> tuple[int, list[FieldElem]]:
    """Expansion in descending powers of x at infinity.

    Returns (lead, coeffs) so that r = sum coeffs[i] * x^(lead-i) + ...;
    lead = deg(num) - deg(den) = -order_at_infinity(r).
    """
    num_rev = list(reversed(r.num.coeffs))
    den_rev = list(reversed(r.den.coeffs))
    series = _series_div(num_rev, den_rev, count)
    return (r.num.degree - r.den.degree, series)


def coeff_at_infinity(r: RatFunc, power: int) -> FieldElem:
    """Coefficient of x^power in the expansion of r at infinity."""
    if r.is_zero:
        return ZERO
    lead, series = laurent_at_infinity(r, max(1, r.num.degree - r.den.degree - power + 1))
    idx = lead - power
    return series[idx] if 0 <= idx < len(series) else ZERO


def sqrt_laurent(
    r: RatFunc, at: PoleData | str
) -> tuple[LaurentHead, FieldElem, FieldElem, int]:
    """Square-root Laurent head of r at a finite pole or at infinity.

    At a finite pole of even order 2v >= 4 the head collects the terms from
    (x-c)^(-v) down to (x-c)^(-2); at infinity (order -2v <= 0 even) the
    head runs from x^v down to x^0.  Returns (head, a, b, v) where a is the
    leading head coefficient and b is the next Laurent coefficient of
    r - head^2 beyond the matched range.
    """
    if at == INFINITY:
        if r.is_zero:
            raise ZeroFunction("no expansion at infinity for r = 0")
        o = order_at_infinity(r)
        if o > 0 or o % 2:
            raise OddOrder(f"order at infinity {o} is not an even value <= 0")
        v = -o // 2
        lead, series = laurent_at_infinity(r, 2 * v + 2)
        # head h = h_0 x^v + ... + h_v; match coefficients of x^(2v) .. x^v
        h = _match_sqrt_head(series, v + 1)
        b = series[v + 1] - _head_square_coeff(h, v + 1)
        head = LaurentHead(None, -v, tuple(h))
        return (head, h[0], b, v)
    pole = at
    if pole.order % 2 or pole.order < 4:
        raise OddOrder(
            f"pole order {pole.order} does not have the even >= 4 shape"
        )
    v = pole.order // 2
    lead, series = laurent_at_pole(r, pole.location, v + 2)
    # series[i] is the coefficient of (x-c)^(-2v+i); the head has v-1 terms
    # (x-c)^(-v) .. (x-c)^(-2), fixed by matching down to (x-c)^(-v-2)
    h = _match_sqrt_head(series, v - 1)
    b = series[v - 1] - _head_square_coeff(h, v - 1)
    head = LaurentHead(pole.location, -v, tuple(h))
    return (head, h[0], b, v)


def _match_sqrt_head(series: Sequence[FieldElem], nterms: int) -> list[FieldElem]:
    """Head coefficients h_0..h_{nterms-1} with (sum h_i y^i)^2 matching
    series[0..nterms-1] (relative offsets from the leading term)."""
    lead = sqrt_elem(series[0])
    if lead.is_zero:
        raise ValueError("leading coefficient must be nonzero")
    h = [lead]
    for k in range(1, nterms):
        acc = ZERO
        for i in range(1, k):
            acc = acc + h[i] * h[k - i]
        h.append((series[k] - acc) / (FieldElem(2) * lead))
    return h


def _head_square_coeff(h: Sequence[FieldElem], k: int) -> FieldElem:
    """Coefficient at relative offset k of (sum h_i y^i)^2."""
    acc = ZERO
    for i in range(len(h)):
        j = k - i
        if 0 <= j < len(h):
            acc = acc + h[i] * h[j]
    return acc


def head_as_ratfunc(head: LaurentHead) -> RatFunc:
    """The head as an exact rational function (finite point or infinity)."""
    out = RatFunc.const(0)
    if head.point is None:
        for i, c in enumerate(head.coeffs):
            out = out + RatFunc.x(-head.leading_order - i, c)
        return out
    c0 = head.point
    shifted = Poly([-c0, ONE])  # (x - c)
    for i, c in enumerate(head.coeffs):
        k = head.leading_order + i
        if k >= 0:
            out = out + RatFunc((shifted**k).scale(c))
        else:
            out = out + RatFunc(Poly.const(c), shifted ** (-k))
    return out
