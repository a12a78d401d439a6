"""Supersymmetric construction for the (2*nu-2)-nu family.

A monomial superpotential w(r) = -sqrt(B)/r^(nu-1) exists exactly when
A = (nu-1)*sqrt(B) (the shape condition); its partner potentials are
v_-/+ = w^2 -/+ w', with v_- the seeding Lennard-Jones potential, and the
zero-energy ground state is psi_0 = exp(-integral w dr).  This chain is
the independent cross-check of the Galoisian integrability results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ljgalois.closedform import ClosedForm
from ljgalois.errors import NonzeroEnergy, ShapeCondition
from ljgalois.exactalg.field import FieldElem, sqrt_elem
from ljgalois.exactalg.poly import Poly
from ljgalois.exactalg.ratfunc import RatFunc
from ljgalois.schrodinger import LJParams

SUSY_RATIO = math.sqrt(5.0 / 3.0) / 3.0  # hbar^2/(mu*eps*sigma^2) on the SUSY locus

ALPHA_12_6 = 4.0
ALPHA_10_6 = (25.0 / 6.0) * math.sqrt(5.0 / 3.0)

_FAMILIES = {"12-6": (6, 12, ALPHA_12_6), "10-6": (6, 10, ALPHA_10_6)}


@dataclass(frozen=True)
class SuperPotential:
    """w(r) = coefficient / r^exponent with coefficient^2 = B_bar."""

    coefficient: FieldElem
    exponent: int

    def __call__(self, r: float) -> float:
        return float(self.coefficient) / r**self.exponent

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(Poly.const(self.coefficient), Poly.x(self.exponent))

    def render(self) -> str:
        from ljgalois.exprparse import render_field_elem

        return f"({render_field_elem(self.coefficient)})/r^{self.exponent}"


@dataclass(frozen=True)
class PartnerPair:
    v_minus: RatFunc
    v_plus: RatFunc


@dataclass(frozen=True)
class MolecularParams:
    sigma: float
    eps_depth: float
    mass: float
    hbar: float = 1.0

    def __post_init__(self):
        if min(self.sigma, self.eps_depth, self.mass, self.hbar) <= 0:
            raise ValueError("molecular parameters must be strictly positive")


def superpotential_from_lj(
    nu: int, A_bar, B_bar, mirror: bool = False
) -> SuperPotential:
    """Monomial superpotential for the (2*nu-2)-nu potential.

    Exists iff A_bar = (nu-1)*sqrt(B_bar) exactly; the integration constant
    of the first-order matching is fixed to zero.  ``mirror=True`` flips to
    the +sqrt(B) branch (which swaps the two partners).
    """
    A_bar, B_bar = Fraction(A_bar), Fraction(B_bar)
    if A_bar <= 0 or B_bar <= 0:
        raise ValueError("A_bar and B_bar must be positive")
    sqrt_b = sqrt_elem(FieldElem(B_bar))
    if FieldElem(A_bar) != FieldElem(nu - 1) * sqrt_b:
        raise ShapeCondition(
            f"A_bar = {A_bar} but the superpotential shape needs "
            f"(nu-1)*sqrt(B_bar) = {FieldElem(nu - 1) * sqrt_b}; "
            "this is a shape constraint, not a Galoisian verdict"
        )
    coeff = sqrt_b if mirror else -sqrt_b
    return SuperPotential(coeff, nu - 1)


def partner_potentials(w: SuperPotential) -> PartnerPair:
    """v_-/+ = w^2 -/+ w', exactly."""
    w_rf = w.as_ratfunc()
    w_sq = w_rf * w_rf
    w_der = w_rf.derivative()
    return PartnerPair(w_sq - w_der, w_sq + w_der)


def ground_state(p: LJParams) -> ClosedForm:
    """Zero-energy ground state psi_0(r) = exp(-sqrt(B)/((nu-2) r^(nu-2))).

    Requires the delta = 2(nu-1) family, the shape condition, and zero
    energy.  The result evaluates numerically and renders symbolically.
    """
    if p.energy != 0:
        raise NonzeroEnergy("the ground state construction is at zero energy")
    if p.delta != 2 * (p.nu - 1):
        raise ShapeCondition(
            f"delta = {p.delta}, superpotential family needs 2*(nu-1) = {2 * (p.nu - 1)}"
        )
    w = superpotential_from_lj(p.nu, p.A_bar, p.B_bar)
    # psi_0 = exp(-integral w dr); w = c/r^(nu-1) integrates to -c/((nu-2) r^(nu-2))
    expo = RatFunc(
        Poly.const(w.coefficient / FieldElem(p.nu - 2)), Poly.x(p.nu - 2)
    )
    return ClosedForm.make(Poly.const(1), (), expo, "r")


def de_boer_parameter(m: MolecularParams) -> float:
    """Lambda = hbar / (sigma * sqrt(mass * eps))."""
    return m.hbar / (m.sigma * math.sqrt(m.mass * m.eps_depth))


def susy_condition_residual(m: MolecularParams) -> float:
    """hbar^2/(mass*eps*sigma^2) - (1/3)sqrt(5/3); zero iff the molecular
    parameters sit on the supersymmetric locus of the 10-6 family."""
    lam_sq = m.hbar**2 / (m.mass * m.eps_depth * m.sigma**2)
    return lam_sq - SUSY_RATIO


def molecular_to_AB(m: MolecularParams, family: str) -> tuple[float, float]:
    """(A_bar, B_bar) = (2*mass*alpha*eps*sigma^nu/hbar^2, same with delta)."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; use '12-6' or '10-6'")
    nu, delta, alpha = _FAMILIES[family]
    scale = 2.0 * m.mass * alpha * m.eps_depth / m.hbar**2
    return scale * m.sigma**nu, scale * m.sigma**delta
