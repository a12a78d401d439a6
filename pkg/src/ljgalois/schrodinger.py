"""Exact ODE construction and integrability decision procedures.

Builds the radial problems -u'' + (v_eff - energy) u = 0 for generalized
Lennard-Jones potentials -A/r^nu + B/r^delta + C/r^2, reduces them to
Kovacic-ready normal form through the substitution z = r^2, and decides
zero-energy integrability of the delta = 2*nu - 2 family through the
Whittaker / Martinet-Ramis criterion, cross-checked against Kovacic's
algorithm whenever both routes are available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ljgalois import kovacic
from ljgalois.errors import (
    NonPositiveRadius,
    NonzeroEnergy,
    OddExponent,
    Undecidable,
    UnsupportedExtension,
    WrongFamily,
)
from ljgalois.exactalg.field import FieldElem, ONE, sqrt_elem
from ljgalois.exactalg.poly import Poly
from ljgalois.exactalg.ratfunc import RatFunc


@dataclass(frozen=True)
class LJParams:
    """Parameters of one generalized L-J Schrodinger problem.

    Physical mode enforces 0 < nu < delta, A_bar > 0, B_bar > 0 and
    C_bar >= 0; ``formal=True`` lifts the positivity constraints so the
    coefficients may range over all rationals in Galoisian sweeps.
    """

    nu: int
    delta: int
    A_bar: Fraction
    B_bar: Fraction
    C_bar: Fraction = Fraction(0)
    energy: Fraction = Fraction(0)
    formal: bool = False

    def __post_init__(self):
        object.__setattr__(self, "A_bar", Fraction(self.A_bar))
        object.__setattr__(self, "B_bar", Fraction(self.B_bar))
        object.__setattr__(self, "C_bar", Fraction(self.C_bar))
        object.__setattr__(self, "energy", Fraction(self.energy))
        if self.nu < 3:
            raise ValueError("nu must be an integer >= 3")
        if self.delta <= self.nu:
            raise ValueError("need nu < delta")
        if not self.formal:
            if self.A_bar <= 0 or self.B_bar <= 0:
                raise ValueError("physical mode needs A_bar > 0 and B_bar > 0")
            if self.C_bar < 0:
                raise ValueError("physical mode needs C_bar >= 0")

    @classmethod
    def from_angular_momentum(cls, nu, delta, A_bar, B_bar, l: int, energy=0, formal=False):
        if l < 0:
            raise ValueError("angular momentum l must be >= 0")
        return cls(nu, delta, Fraction(A_bar), Fraction(B_bar),
                   Fraction(l * (l + 1)), Fraction(energy), formal)


@dataclass(frozen=True)
class WhittakerParams:
    kappa: FieldElem
    mu: FieldElem


@dataclass(frozen=True)
class IntegrabilityVerdict:
    integrable: bool
    witnesses: tuple[tuple[int, str, str], ...]  # (m, outer sign, inner sign)
    method: str  # "martinet-ramis" | "kovacic" | "both"


# ---------------------------------------------------------------------------
# potentials and normal forms
# ---------------------------------------------------------------------------


def effective_potential(p: LJParams) -> RatFunc:
    """-A/r^nu + B/r^delta + C/r^2 as a reduced rational function of r."""
    num = Poly.from_terms(
        {
            p.delta - p.nu: FieldElem(-p.A_bar),
            0: FieldElem(p.B_bar),
            p.delta - 2: FieldElem(p.C_bar),
        }
    )
    return RatFunc(num, Poly.x(p.delta))


def reduce_to_normal(a: RatFunc, b: RatFunc) -> tuple[RatFunc, str]:
    """Normal form of z'' + a z' + b z = 0.

    Returns (r, multiplier) with y'' = r*y, r = a^2/4 + a'/2 - b, and the
    original unknown recovered as z = multiplier * y.
    """
    r = a * a * Fraction(1, 4) + a.derivative() * Fraction(1, 2) - b
    from ljgalois.exprparse import render_ratfunc

    if a.is_zero:
        multiplier = "1"
    else:
        multiplier = f"exp(-1/2 * Integral({render_ratfunc(a)}, x))"
    return r, multiplier


def algebrize(f: RatFunc, alpha: RatFunc) -> tuple[RatFunc, RatFunc]:
    """Coefficients (a, b) of the algebraic form y'' + a y' + b y = 0
    produced by a change of variable with (dz/dx)^2 = alpha(z) and
    transformed potential f: a = alpha'/(2 alpha), b = -f/alpha."""
    if alpha.is_zero:
        raise ZeroDivisionError("alpha must be nonzero")
    return alpha.derivative() / (2 * alpha), -f / alpha


def lj_normal_form(p: LJParams) -> RatFunc:
    """Kovacic-ready coefficient of the z = r^2 transformed problem.

    Both exponents must be even (the substitution halves them); odd
    families route through the Whittaker parameters instead.
    """
    if p.nu % 2 or p.delta % 2:
        raise OddExponent(
            f"z = r^2 needs even exponents, got nu={p.nu}, delta={p.delta}"
        )
    veff = effective_potential(p)
    f_z = _halve_exponents(veff) - RatFunc.const(FieldElem(p.energy))
    alpha = RatFunc(Poly.x(1, 4))  # 4z
    a, b = algebrize(f_z, alpha)
    r, _ = reduce_to_normal(a, b)
    return r


def _halve_exponents(f: RatFunc) -> RatFunc:
    def halve(poly: Poly) -> Poly:
        terms = {}
        for i in range(poly.degree + 1):
            c = poly.coeff(i)
            if not c.is_zero:
                if i % 2:
                    raise OddExponent("odd exponent under z = r^2")
                terms[i // 2] = c
        return Poly.from_terms(terms)

    return RatFunc(halve(f.num), halve(f.den))


def radial_effective_transform(
    samples: list[tuple[float, float]], inverse: bool = False
) -> list[tuple[float, float]]:
    """Pointwise u(r) -> r*u(r) (or back with inverse=True)."""
    out = []
    for r, value in samples:
        if r <= 0:
            raise NonPositiveRadius(f"sample at r = {r}")
        out.append((r, value / r if inverse else value * r))
    return out


# ---------------------------------------------------------------------------
# Whittaker / Martinet-Ramis / Bessel
# ---------------------------------------------------------------------------


def whittaker_r(w: WhittakerParams) -> RatFunc:
    """r(x) = 1/4 - kappa/x + (4 mu^2 - 1)/(4 x^2)."""
    quarter = FieldElem(Fraction(1, 4))
    c2 = (FieldElem(4) * w.mu * w.mu - ONE) * quarter
    num = Poly([c2, -w.kappa, quarter])
    return RatFunc(num, Poly.x(2))


def martinet_ramis(w: WhittakerParams) -> bool:
    """Integrability of the Whittaker equation: some +-kappa +- mu lies in
    1/2 + N (with 0 in N).  Irrational parameters raise Undecidable."""
    if not (w.kappa.is_rational and w.mu.is_rational):
        raise Undecidable(
            f"membership in 1/2 + N undecided for irrational kappa={w.kappa}, mu={w.mu}"
        )
    for s1 in (1, -1):
        for s2 in (1, -1):
            t = s1 * w.kappa.as_fraction() + s2 * w.mu.as_fraction()
            shifted = t - Fraction(1, 2)
            if shifted.denominator == 1 and shifted >= 0:
                return True
    return False


def bessel_integrable(n: Fraction) -> bool:
    """Bessel's equation is solvable by quadratures iff n is in 1/2 + Z."""
    return (Fraction(n) - Fraction(1, 2)).denominator == 1


def lj_whittaker_params(p: LJParams) -> WhittakerParams:
    """kappa = A/(sqrt(B)(2 nu - 4)), mu = sqrt(1 + 4C)/(2 nu - 4).

    Zero energy only; both radicals must live in one quadratic extension.
    """
    if p.energy != 0:
        raise NonzeroEnergy("Whittaker parameters are defined at zero energy")
    sqrt_b = sqrt_elem(FieldElem(p.B_bar))
    sqrt_c = sqrt_elem(ONE + FieldElem(4 * p.C_bar))
    denom = FieldElem(2 * p.nu - 4)
    kappa = FieldElem(p.A_bar) / (sqrt_b * denom)
    mu = sqrt_c / denom
    # force a common extension now (addition raises if incompatible)
    _ = kappa + mu
    return WhittakerParams(kappa, mu)


# ---------------------------------------------------------------------------
# the delta = 2 nu - 2 family at zero energy
# ---------------------------------------------------------------------------


def _witnesses(p: LJParams) -> list[tuple[int, str, str]]:
    """All (m, s1, s2) with A = s1*sqrt(B)*(s2*sqrt(1+4C) + nu-2 + (2nu-4)m),
    solved for m and kept when m is a rational integer."""
    sqrt_b = sqrt_elem(FieldElem(p.B_bar))
    sqrt_c = sqrt_elem(ONE + FieldElem(4 * p.C_bar))
    out = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            lhs = FieldElem(p.A_bar) / (FieldElem(s1) * sqrt_b)
            m_val = (lhs - FieldElem(s2) * sqrt_c - FieldElem(p.nu - 2)) / FieldElem(
                2 * p.nu - 4
            )
            if m_val.is_integer():
                out.append(
                    (int(m_val.a), "+" if s1 > 0 else "-", "+" if s2 > 0 else "-")
                )
    return sorted(out)


def integrable_zero_energy(p: LJParams, m_bound: int = 64) -> IntegrabilityVerdict:
    """Zero-energy integrability decision for the delta = 2*nu - 2 family.

    Decides through Martinet-Ramis on the Whittaker parameters; when the
    normal form exists (even nu) Kovacic's algorithm runs as well and the
    two verdicts must agree.
    """
    if p.energy != 0:
        raise NonzeroEnergy("the decision procedure covers zero energy only")
    if p.delta != 2 * p.nu - 2:
        raise WrongFamily(f"delta = {p.delta} but the family needs 2*nu-2 = {2 * p.nu - 2}")
    mr = martinet_ramis(lj_whittaker_params(p))
    witnesses = tuple(w for w in _witnesses(p) if abs(w[0]) <= m_bound)
    method = "martinet-ramis"
    if p.nu % 2 == 0 and p.delta % 2 == 0:
        try:
            verdict = kovacic.solve(lj_normal_form(p))
        except UnsupportedExtension:
            verdict = None
        if verdict is not None:
            if verdict.integrable != mr:
                raise AssertionError(
                    "internal disagreement: Kovacic says "
                    f"{verdict.integrable}, Martinet-Ramis says {mr} for {p}"
                )
            method = "both"
    return IntegrabilityVerdict(mr, witnesses, method)


def enumerate_integrable_A(
    B_bar: Fraction, C_bar: Fraction, nu: int, m_min: int, m_max: int
) -> list[FieldElem]:
    """Distinct A with A = +-sqrt(B)(+-sqrt(1+4C) + nu - 2 + (2nu-4)m) over
    the given m interval, sorted ascending.  Closed under negation."""
    if B_bar <= 0:
        raise ValueError("B_bar must be positive")
    if nu < 3:
        raise ValueError("nu must be >= 3")
    sqrt_b = sqrt_elem(FieldElem(Fraction(B_bar)))
    sqrt_c = sqrt_elem(ONE + FieldElem(4 * Fraction(C_bar)))
    values: set[FieldElem] = set()
    for m in range(m_min, m_max + 1):
        for s2 in (1, -1):
            inner = FieldElem(s2) * sqrt_c + FieldElem(nu - 2 + (2 * nu - 4) * m)
            for s1 in (1, -1):
                values.add(FieldElem(s1) * sqrt_b * inner)
    return sorted(values)
