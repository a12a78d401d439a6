import math

import pytest

from ljgalois.errors import NoConvergence, NonPositiveRadius, ShapeCondition
from ljgalois.schrodinger import LJParams
from ljgalois.statmech import (
    PotentialSpec,
    QuadratureConfig,
    b2_power_law,
    boyle_temperature,
    dimensionless_form,
    potential_curve,
    second_virial,
    virial_table,
    wavefunction_curve,
)
from ljgalois.susyqm import SUSY_RATIO, MolecularParams

from oracles import b2_oracle

CFG = QuadratureConfig()


def test_potential_spec_geometry():
    s12 = PotentialSpec.make("12-6")
    s10 = PotentialSpec.make("10-6")
    assert s12.alpha_shape == 4.0
    assert abs(s10.alpha_shape - (25 / 6) * math.sqrt(5 / 3)) < 1e-14
    assert s12.reduced(1.0) == 0.0
    assert abs(s12.reduced(2 ** (1 / 6)) + 1.0) < 1e-10
    assert abs(s10.reduced((5 / 3) ** 0.25) + 1.0) < 1e-10
    gen = PotentialSpec.make("general", nu=7, delta=13)
    r_star = (13 / 7) ** (1 / 6)
    assert gen.reduced(1.0) == 0.0
    assert abs(gen.reduced(r_star) + 1.0) < 1e-10


def test_potential_spec_validation():
    with pytest.raises(ValueError):
        PotentialSpec.make("9-3")
    with pytest.raises(ValueError):
        PotentialSpec.make("general", nu=3, delta=6)  # B2 tail would diverge
    with pytest.raises(ValueError):
        PotentialSpec.make("12-6", sigma=-1.0)


def test_potential_curve():
    s12 = PotentialSpec.make("12-6", sigma=2.0)
    samples = potential_curve(s12, [2.0, 2.0 * 2 ** (1 / 6), 6.0])
    assert samples[0] == (1.0, 0.0)
    assert abs(samples[1][1] + 1.0) < 1e-10
    with pytest.raises(NonPositiveRadius):
        potential_curve(s12, [0.0])


def test_wavefunction_curve():
    p = LJParams(6, 10, 5, 1, 0)
    samples = wavefunction_curve(p, [1.0, 3.0])
    assert abs(samples[0][1] - math.exp(-0.25)) < 1e-15
    assert abs(samples[1][1] - 0.996918) < 1e-6
    values = [v for _, v in wavefunction_curve(p, [0.2 + 0.1 * i for i in range(10)])]
    assert values == sorted(values)  # monotone growth away from the origin
    with pytest.raises(ShapeCondition):
        wavefunction_curve(LJParams(6, 10, 4, 1, 0), [1.0])


def test_b2_zero_potential():
    assert b2_power_law([], 1.0, CFG) == (0.0, 0.0)


def test_b2_rejects_attractive_core():
    with pytest.raises(ValueError):
        b2_power_law([(-1.0, 12)], 1.0, CFG)
    with pytest.raises(ValueError):
        b2_power_law([(1.0, 3)], 1.0, CFG)  # divergent tail


def test_b2_pure_repulsive_gamma_closed_form():
    # independent special-function oracle: B2 = (2 pi/3) Gamma(3/4) (eps/kT)^(1/4)
    for t in (1.0, 2.5):
        value, err = b2_power_law([(1.0, 12)], t, CFG)
        exact = (2 * math.pi / 3) * math.gamma(0.75) * t ** (-0.25)
        assert abs(value - exact) <= 1e-8 * exact, t


def test_b2_against_simpson_oracle():
    s12 = PotentialSpec.make("12-6")
    s10 = PotentialSpec.make("10-6")
    for spec in (s12, s10):
        for t in (0.5, 1.0, 5.0):
            value, err = second_virial(spec, t, CFG)
            oracle = b2_oracle(spec.alpha_shape, spec.nu, spec.delta, t)
            assert abs(value - oracle) <= 1e-6 * abs(oracle), (spec.family, t)


def test_b2_convergence_on_refinement():
    s12 = PotentialSpec.make("12-6")
    s10 = PotentialSpec.make("10-6")
    for spec in (s12, s10):
        for t in (0.4, 0.9, 1.7, 3.1, 8.0):
            coarse, err = second_virial(spec, t, CFG)
            fine, _ = second_virial(
                spec, t, QuadratureConfig(rel_tol=CFG.rel_tol / 2)
            )
            assert abs(fine - coarse) <= max(err, 1e-13), (spec.family, t)


def test_b2_no_convergence_budget():
    with pytest.raises(NoConvergence):
        second_virial(
            PotentialSpec.make("12-6"),
            1.0,
            QuadratureConfig(rel_tol=1e-13, max_subdivisions=1),
        )


def test_tail_second_order_bound():
    cfg = CFG
    for t in (0.5, 1.0, 5.0):
        spec = PotentialSpec.make("12-6")
        b2, err = second_virial(spec, t, cfg)
        budget = cfg.tail_tol * t / 2
        r_cut = max(
            (spec.alpha_shape / budget) ** (1.0 / spec.delta),
            (spec.alpha_shape / budget) ** (1.0 / spec.nu),
            1.0,
        )
        w_cut = abs(spec.reduced(r_cut)) / t
        second_order = 0.5 * w_cut**2 * r_cut**3 / (2 * spec.nu - 3)
        assert second_order <= cfg.rel_tol * abs(b2), t


def test_virial_table_and_csv():
    s12 = PotentialSpec.make("12-6")
    s10 = PotentialSpec.make("10-6")
    grid = [0.5, 1.0, 2.0, 5.0]
    table = virial_table(s12, s10, grid, CFG)
    assert table.csv_header() == "T_reduced,B2_12_6,err_12_6,B2_10_6,err_10_6"
    # low-temperature closeness: the two families agree better at kT = 0.5
    rows = {row[0]: row for row in table.rows}
    low, high = rows[0.5], rows[5.0]
    rel_low = abs(low[1] - low[3]) / abs(low[1])
    rel_high = abs(high[1] - high[3]) / abs(high[1])
    assert rel_low < rel_high
    assert low[1] < 0 and low[3] < 0
    # monotone increase with temperature for both potentials
    b1 = [row[1] for row in table.rows]
    b2 = [row[3] for row in table.rows]
    assert b1 == sorted(b1) and b2 == sorted(b2)
    # err column stays within the relative tolerance away from the zero
    for row in table.rows:
        if abs(row[1]) > 0.1:
            assert row[2] <= CFG.rel_tol * abs(row[1]) * 10
    # CSV round-trips at full precision
    text = table.to_csv()
    line = text.splitlines()[1].split(",")
    assert float(line[1]) == table.rows[0][1]


def test_virial_table_parallel_matches_serial():
    s12 = PotentialSpec.make("12-6")
    s10 = PotentialSpec.make("10-6")
    grid = [0.5, 1.0, 2.0]
    serial = virial_table(s12, s10, grid, CFG, jobs=1)
    parallel = virial_table(s12, s10, grid, CFG, jobs=3)
    assert serial == parallel


def test_boyle_point_bracket():
    t_boyle = boyle_temperature(PotentialSpec.make("12-6"), (3.3, 3.5))
    assert 3.3 < t_boyle < 3.5


def test_dimensionless_form():
    m = MolecularParams(1, 1, 1, math.sqrt(SUSY_RATIO))
    lam, v_tilde = dimensionless_form(m, "10-6")
    assert abs(lam**2 - 0.4303) < 1e-4
    assert v_tilde.reduced(1.0) == 0.0
    assert abs(v_tilde.reduced((5 / 3) ** 0.25) + 1.0) < 1e-10
