"""Closed-form solution expressions.

A :class:`ClosedForm` is an exact product

    poly(x) * prod_i (x - c_i)^(e_i) * exp(R(x))

with the polynomial, the power centers/exponents and the rational
exponent argument all held exactly.  This is rich enough to hold every
first solution produced by the algorithm's case 1/2 output (the integral
of a rational function splits into power factors for the simple-pole
residues and a rational remainder for everything else) as well as the
zero-energy ground states of the supersymmetric construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ljgalois.errors import UnsupportedSolution
from ljgalois.exactalg.field import FieldElem, ONE, ZERO
from ljgalois.exactalg.poly import Poly
from ljgalois.exactalg.ratfunc import RatFunc, laurent_at_pole, linear_roots


@dataclass(frozen=True)
class ClosedForm:
    poly: Poly
    powers: tuple[tuple[FieldElem, FieldElem], ...]  # ((center, exponent), ...)
    exp_arg: RatFunc
    var: str = "x"

    @staticmethod
    def one(var: str = "x") -> "ClosedForm":
        return ClosedForm(Poly.const(1), (), RatFunc.const(0), var)

    @staticmethod
    def make(poly: Poly, powers, exp_arg: RatFunc, var: str = "x") -> "ClosedForm":
        merged: dict[FieldElem, FieldElem] = {}
        for center, expo in powers:
            merged[center] = merged.get(center, ZERO) + expo
        canon = tuple(
            sorted(
                ((c, e) for c, e in merged.items() if not e.is_zero),
                key=lambda ce: (ce[0].a, ce[0].b),
            )
        )
        return ClosedForm(poly, canon, exp_arg, var)

    # -- algebra -----------------------------------------------------------

    def times_power(self, center, exponent) -> "ClosedForm":
        center = center if isinstance(center, FieldElem) else FieldElem(center)
        exponent = exponent if isinstance(exponent, FieldElem) else FieldElem(exponent)
        return ClosedForm.make(
            self.poly, self.powers + ((center, exponent),), self.exp_arg, self.var
        )

    def power(self, k: int) -> "ClosedForm":
        """Integer power; the polynomial prefactor must be trivial for k < 0."""
        if k < 0 and self.poly.degree > 0:
            # fold the polynomial into power factors first (needs its roots)
            base = self._polyfree()
            return base.power(k)
        poly = self.poly**k if k >= 0 else Poly.const(self.poly.coeff(0) ** k)
        powers = tuple((c, e * FieldElem(k)) for c, e in self.powers)
        return ClosedForm.make(poly, powers, self.exp_arg * k, self.var)

    def _polyfree(self) -> "ClosedForm":
        if self.poly.degree <= 0:
            return self
        factors = linear_roots(self.poly)
        powers = list(self.powers) + [
            (root, FieldElem(mult)) for root, mult in factors
        ]
        return ClosedForm.make(
            Poly.const(self.poly.lead), tuple(powers), self.exp_arg, self.var
        )

    def subst_square(self, new_var: str = "r") -> "ClosedForm":
        """Substitute x = r^2.  Supported when all power centers are 0."""
        for center, _ in self.powers:
            if not center.is_zero:
                raise UnsupportedSolution(
                    "square substitution with a nonzero power center"
                )
        poly = Poly.from_terms(
            {2 * i: self.poly.coeffs[i] for i in range(len(self.poly.coeffs))}
        )
        powers = tuple((ZERO, e * FieldElem(2)) for _, e in self.powers)
        return ClosedForm.make(poly, powers, self.exp_arg.subst_square(), new_var)

    # -- evaluation / comparison -------------------------------------------

    def __call__(self, x: float) -> float:
        out = self.poly(float(x))
        for center, expo in self.powers:
            out *= (float(x) - float(center)) ** float(expo)
        return out * math.exp(self.exp_arg(float(x)))

    def log_derivative_at(self, x: float) -> float:
        """(d/dx log self)(x) = poly'/poly + sum e/(x-c) + exp_arg'(x)."""
        x = float(x)
        out = self.exp_arg.derivative()(x)
        if self.poly.degree > 0:
            out += self.poly.derivative()(x) / self.poly(x)
        for center, expo in self.powers:
            out += float(expo) / (x - float(center))
        return out

    def __eq__(self, other):
        if not isinstance(other, ClosedForm):
            return NotImplemented
        return (
            self.poly == other.poly
            and self.powers == other.powers
            and self.exp_arg == other.exp_arg
        )

    def __hash__(self):
        return hash((self.poly, self.powers, self.exp_arg))

    # -- display -----------------------------------------------------------

    def render(self, var: str | None = None) -> str:
        from ljgalois.exprparse import render_poly, render_ratfunc, render_field_elem

        v = var or self.var
        parts: list[str] = []
        if self.poly != Poly.const(1):
            p = render_poly(self.poly, v)
            parts.append(f"({p})" if ("+" in p or " - " in p) else p)
        for center, expo in self.powers:
            base = v if center.is_zero else f"({v} - {render_field_elem(center)})"
            e = render_field_elem(expo)
            parts.append(f"{base}^({e})" if e != "1" else base)
        if not self.exp_arg.is_zero:
            parts.append(f"exp({render_ratfunc(self.exp_arg, v)})")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.render()


def integrate_ratfunc(omega: RatFunc) -> tuple[list[tuple[FieldElem, FieldElem]], RatFunc]:
    """Exact antiderivative of a rational function.

    Splits ``integral omega dx`` into logarithmic parts, returned as
    (center, residue) pairs meaning ``residue * log(x - center)``, plus a
    rational remainder.  Requires the denominator to split into linear
    factors over the working field.
    """
    logs: list[tuple[FieldElem, FieldElem]] = []
    rational = RatFunc.const(0)

    quotient, rem = omega.num.divmod(omega.den)
    # polynomial part integrates termwise
    if not quotient.is_zero:
        terms = {
            i + 1: quotient.coeffs[i] / FieldElem(i + 1)
            for i in range(len(quotient.coeffs))
        }
        rational = rational + RatFunc(Poly.from_terms(terms))
    frac = RatFunc(rem, omega.den)
    if frac.is_zero:
        return logs, rational
    for root, mult in linear_roots(frac.den):
        lead, series = laurent_at_pole(frac, root, mult)
        # series[i] is the coefficient of (x-c)^(-mult+i)
        for i in range(mult):
            k = -mult + i
            coeff = series[i]
            if coeff.is_zero:
                continue
            if k == -1:
                logs.append((root, coeff))
            else:
                # integral of (x-c)^k is (x-c)^(k+1)/(k+1)
                lin = Poly([-root, ONE])
                rational = rational + RatFunc(
                    Poly.const(coeff / FieldElem(k + 1)), lin ** (-(k + 1))
                )
    return logs, rational


def exp_integral(omega: RatFunc, var: str = "x", prefactor: Poly | None = None) -> ClosedForm:
    """Build P * exp(integral omega) as a ClosedForm."""
    logs, rational = integrate_ratfunc(omega)
    return ClosedForm.make(
        prefactor if prefactor is not None else Poly.const(1),
        tuple((c, e) for c, e in logs),
        rational,
        var,
    )


@dataclass(frozen=True)
class QuadratureExpr:
    """Display-only expression  first * Integral(integrand, var).

    Nothing is evaluated; this is the shape of a reduction-of-order second
    solution zeta_1 * integral dx / zeta_1^2.
    """

    first: ClosedForm
    integrand: ClosedForm
    var: str = "x"

    def render(self) -> str:
        return (
            f"{self.first.render()} * Integral({self.integrand.render()}, {self.var})"
        )

    def __str__(self):
        return self.render()
