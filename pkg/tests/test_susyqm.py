import math
from fractions import Fraction as F

import pytest

from ljgalois.closedform import ClosedForm
from ljgalois.errors import NonzeroEnergy, ShapeCondition
from ljgalois.exactalg.field import fe
from ljgalois.exactalg.poly import Poly
from ljgalois.exprparse import parse_expression as pe
from ljgalois.kovacic import solve
from ljgalois.schrodinger import LJParams, lj_normal_form
from ljgalois.susyqm import (
    ALPHA_10_6,
    SUSY_RATIO,
    MolecularParams,
    de_boer_parameter,
    ground_state,
    molecular_to_AB,
    partner_potentials,
    superpotential_from_lj,
    susy_condition_residual,
)

GRID = [0.5 + 2.5 * i / 49 for i in range(50)]


def test_superpotential_examples():
    w = superpotential_from_lj(6, 5, 1)
    assert w.coefficient == fe(-1) and w.exponent == 5
    with pytest.raises(ShapeCondition) as exc:
        superpotential_from_lj(6, 3, 1)
    assert "not a Galoisian verdict" in str(exc.value)
    assert superpotential_from_lj(6, 10, 4).coefficient == fe(-2)
    # mirror branch flips the sign and swaps the partners
    wm = superpotential_from_lj(6, 5, 1, mirror=True)
    assert wm.coefficient == fe(1)
    flipped = partner_potentials(wm)
    straight = partner_potentials(w)
    assert flipped.v_minus == straight.v_plus
    assert flipped.v_plus == straight.v_minus


def test_partner_potentials_examples():
    pair = partner_potentials(superpotential_from_lj(6, 5, 1))
    assert pair.v_minus == pe("1/x^10 - 5/x^6")
    assert pair.v_plus == pe("1/x^10 + 5/x^6")
    pair = partner_potentials(superpotential_from_lj(6, 10, 4))
    assert pair.v_minus == pe("4/x^10 - 10/x^6")


def test_v_minus_round_trips_through_effective_potential():
    from ljgalois.schrodinger import effective_potential

    pair = partner_potentials(superpotential_from_lj(6, 5, 1))
    assert effective_potential(LJParams(6, 10, 5, 1, 0)) == pair.v_minus


def test_riccati_identities_exact():
    for nu, a, b in ((6, 5, 1), (6, 10, 4), (4, 6, 4), (5, 12, 9)):
        w = superpotential_from_lj(nu, a, b)
        w_rf = w.as_ratfunc()
        pair = partner_potentials(w)
        assert pair.v_minus + w_rf.derivative() == w_rf * w_rf
        assert pair.v_plus - w_rf.derivative() == w_rf * w_rf


def test_ground_state_closed_form():
    psi = ground_state(LJParams(6, 10, 5, 1, 0))
    assert psi == ClosedForm.make(Poly.const(1), (), pe("-1/(4*x^4)"), "r")
    assert abs(psi(1.0) - math.exp(-0.25)) < 1e-15
    assert abs(psi(1.0) - 0.7788007831) < 1e-9
    # limits: -> 1 at infinity, -> 0 at the origin
    assert abs(psi(1e6) - 1.0) < 1e-12
    assert psi(0.05) < 1e-170
    with pytest.raises(NonzeroEnergy):
        ground_state(LJParams(6, 10, 5, 1, 0, energy=1))
    with pytest.raises(ShapeCondition):
        ground_state(LJParams(6, 10, 3, 1, 0))
    with pytest.raises(ShapeCondition):
        ground_state(LJParams(6, 12, 5, 1, 0))


def test_ground_state_solves_schrodinger_by_finite_differences():
    # psi'' = v_minus * psi with a central second difference, h = 1e-4;
    # the ratio form exp(E(r+h) - E(r)) keeps the difference fully accurate
    p = LJParams(6, 10, 5, 1, 0)
    psi = ground_state(p)
    v_minus = partner_potentials(superpotential_from_lj(6, 5, 1)).v_minus
    h = 1e-4
    for r in GRID:
        e0 = psi.exp_arg(r)
        d2 = (
            math.expm1(psi.exp_arg(r + h) - e0)
            + math.expm1(psi.exp_arg(r - h) - e0)
        ) / h**2 * psi(r)
        expected = v_minus(r) * psi(r)
        assert abs(d2 - expected) <= 1e-6 * abs(expected), r


def test_superpotential_is_minus_log_derivative():
    w = superpotential_from_lj(6, 5, 1)
    psi = ground_state(LJParams(6, 10, 5, 1, 0))
    for r in GRID:
        assert abs(-psi.log_derivative_at(r) - w(r)) <= 1e-8 * abs(w(r))


def test_kovacic_cross_validation_A5():
    # the case-1 solution in z, unwound through u = Phi/z^(1/4) and z = r^2,
    # must equal the ground state both symbolically and numerically
    p = LJParams(6, 10, 5, 1, 0)
    verdict = solve(lj_normal_form(p))
    assert verdict.integrable and verdict.solution.case_id == 1
    phi_z = verdict.solution.display("z")
    u = phi_z.times_power(0, F(-1, 4)).subst_square("r")
    psi = ground_state(p)
    assert u == psi
    for r in GRID:
        assert abs(u(r) - psi(r)) <= 1e-12


def test_kovacic_cross_validation_A3():
    # A = 3: integrable but outside the superpotential shape; the unwound
    # solution is r * exp(-1/(4 r^4))
    p = LJParams(6, 10, 3, 1, 0)
    verdict = solve(lj_normal_form(p))
    assert verdict.integrable
    u = verdict.solution.display("z").times_power(0, F(-1, 4)).subst_square("r")
    expected = ClosedForm.make(
        Poly.const(1), ((fe(0), fe(1)),), pe("-1/(4*x^4)"), "r"
    )
    assert u == expected
    for r in GRID:
        assert abs(u(r) - r * math.exp(-1 / (4 * r**4))) <= 1e-12


def test_ground_state_exponent_round_trips_through_parser():
    from ljgalois.exprparse import parse_expression

    psi = ground_state(LJParams(6, 10, 5, 1, 0))
    text = psi.render("x")
    assert text.startswith("exp(") and text.endswith(")")
    assert parse_expression(text[4:-1]) == psi.exp_arg


def test_de_boer_parameter():
    assert de_boer_parameter(MolecularParams(1, 1, 1, 1)) == 1.0
    assert de_boer_parameter(MolecularParams(2, 1, 1, 1)) == 0.5
    on_locus = MolecularParams(1, 1, 1, math.sqrt(SUSY_RATIO))
    assert abs(de_boer_parameter(on_locus) - 0.6559) < 1e-4


def test_susy_condition_residual():
    on_locus = MolecularParams(1, 1, 1, math.sqrt(SUSY_RATIO))
    assert abs(susy_condition_residual(on_locus)) < 1e-12
    assert abs(SUSY_RATIO - 0.430331482911935) < 1e-12
    unit = MolecularParams(1, 1, 1, 1)
    assert abs(susy_condition_residual(unit) - (1 - SUSY_RATIO)) < 1e-15
    # doubling sigma divides the first term by 4
    doubled = MolecularParams(2, 1, 1, 1)
    assert abs(
        susy_condition_residual(doubled) - (0.25 - SUSY_RATIO)
    ) < 1e-15


def test_molecular_to_AB():
    a, b = molecular_to_AB(MolecularParams(1, 1, 1, 1), "10-6")
    assert abs(a - 2 * ALPHA_10_6) < 1e-14 and abs(a - 10.75829) < 1e-5
    assert a == b  # sigma = 1 collapses the powers
    a, b = molecular_to_AB(MolecularParams(1, 1, 1, 1), "12-6")
    assert (a, b) == (8.0, 8.0)
    # on the SUSY locus with sigma = 1: A/sqrt(B) = 5
    a, b = molecular_to_AB(MolecularParams(1, 1, 1, math.sqrt(SUSY_RATIO)), "10-6")
    assert abs(a / math.sqrt(b) - 5.0) < 1e-12


def test_shape_condition_iff_susy_residual_vanishes():
    # float-level bridge: molecular parameters sit on the SUSY locus exactly
    # when the derived (A, B) satisfy A/sqrt(B) = nu - 1 = 5
    for hbar_sq_scale in (1.0, 0.9, 1.0000001, SUSY_RATIO / 0.43, 2.0):
        hbar = math.sqrt(SUSY_RATIO * hbar_sq_scale)
        for sigma in (0.5, 1.0, 2.0):
            m = MolecularParams(sigma, 1.0, 1.0 / sigma**2, hbar)
            on_locus = abs(susy_condition_residual(m)) <= 1e-9 * SUSY_RATIO
            a, b = molecular_to_AB(m, "10-6")
            shape_ok = abs(a / math.sqrt(b) - 5.0) <= 5e-8
            assert on_locus == shape_ok, (hbar_sq_scale, sigma)
    # the exact chain: scale = 2 mu alpha eps / hbar^2 = 25 on the locus with
    # sigma = 1 gives the exact instance (A, B) = (25, 25)
    w = superpotential_from_lj(6, 25, 25)
    assert w.coefficient == fe(-5)
