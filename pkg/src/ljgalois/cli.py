"""Command-line entry point.

Subcommands: kovacic, lj analyze, lj parametric, susy, virial, curves,
whittaker, bessel.  JSON goes to stdout; tables are CSV.  Exit codes:
0 success, 1 usage or syntax error, 2 unable to decide within the working
field, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from ljgalois import kovacic, schrodinger, statmech, susyqm
from ljgalois.errors import (
    ExprSyntaxError,
    LjgError,
    ShapeCondition,
    UnableToDecide,
)
from ljgalois.exactalg.field import fe
from ljgalois.exprparse import parse_expression, render_field_elem, render_ratfunc
from ljgalois.kovacic import KovacicVerdict
from ljgalois.schrodinger import LJParams, WhittakerParams


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be rmin:rmax:n")
    rmin, rmax, n = float(parts[0]), float(parts[1]), int(parts[2])
    if n < 2 or rmax <= rmin:
        raise argparse.ArgumentTypeError("grid needs rmax > rmin and n >= 2")
    return rmin, rmax, n


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def _logspace(lo: float, hi: float, n: int) -> list[float]:
    if lo <= 0:
        raise ValueError("log grid needs positive endpoints")
    return [math.exp(v) for v in _linspace(math.log(lo), math.log(hi), n)]


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ljgalois")
    sub = top.add_subparsers(dest="command", required=True)

    p_kov = sub.add_parser("kovacic", help="run Kovacic's algorithm on y'' = r*y")
    p_kov.add_argument("--r", required=True, help="rational expression in x")
    fmt = p_kov.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--text", action="store_true")

    p_lj = sub.add_parser("lj", help="Lennard-Jones analyses")
    lj_sub = p_lj.add_subparsers(dest="lj_command", required=True)

    p_an = lj_sub.add_parser("analyze", help="integrability of one L-J problem")
    p_an.add_argument("--nu", type=int, required=True)
    p_an.add_argument("--delta", type=int, required=True)
    p_an.add_argument("--A", type=_fraction, required=True)
    p_an.add_argument("--B", type=_fraction, required=True)
    p_an.add_argument("--C", type=_fraction, default=Fraction(0))
    p_an.add_argument("--energy", type=_fraction, default=Fraction(0))
    p_an.add_argument("--formal", action="store_true",
                      help="lift the positivity constraints on A, B, C")

    p_par = lj_sub.add_parser("parametric", help="integrable A values")
    p_par.add_argument("--nu", type=int, required=True)
    p_par.add_argument("--B", type=_fraction, required=True)
    p_par.add_argument("--C", type=_fraction, default=Fraction(0))
    p_par.add_argument("--m-min", type=int, required=True)
    p_par.add_argument("--m-max", type=int, required=True)

    p_susy = sub.add_parser("susy", help="superpotential and ground state")
    p_susy.add_argument("--nu", type=int, required=True)
    p_susy.add_argument("--A", type=_fraction, required=True)
    p_susy.add_argument("--B", type=_fraction, required=True)
    p_susy.add_argument("--grid", type=_grid, default=None)

    p_vir = sub.add_parser("virial", help="B2(T) table for two families")
    p_vir.add_argument("--family1", default="12-6")
    p_vir.add_argument("--family2", default="10-6")
    p_vir.add_argument("--tmin", type=float, required=True)
    p_vir.add_argument("--tmax", type=float, required=True)
    p_vir.add_argument("--steps", type=int, required=True)
    p_vir.add_argument("--log", action="store_true")
    p_vir.add_argument("--out", default=None)
    p_vir.add_argument("--jobs", type=int, default=1)
    p_vir.add_argument("--plot", default=None, help="also render a PNG figure")

    p_cur = sub.add_parser("curves", help="potential / wavefunction samples")
    cur_sub = p_cur.add_subparsers(dest="curve_kind", required=True)
    p_pot = cur_sub.add_parser("potential")
    p_pot.add_argument("--family", default="12-6")
    p_pot.add_argument("--nu", type=int, default=None)
    p_pot.add_argument("--delta", type=int, default=None)
    p_pot.add_argument("--sigma", type=float, default=1.0)
    p_pot.add_argument("--eps", type=float, default=1.0)
    p_pot.add_argument("--grid", type=_grid, required=True)
    p_pot.add_argument("--out", default=None)
    p_pot.add_argument("--plot", default=None)
    p_wf = cur_sub.add_parser("wavefunction")
    p_wf.add_argument("--nu", type=int, required=True)
    p_wf.add_argument("--delta", type=int, required=True)
    p_wf.add_argument("--A", type=_fraction, required=True)
    p_wf.add_argument("--B", type=_fraction, required=True)
    p_wf.add_argument("--grid", type=_grid, required=True)
    p_wf.add_argument("--out", default=None)
    p_wf.add_argument("--plot", default=None)

    p_wh = sub.add_parser("whittaker", help="Whittaker integrability test")
    p_wh.add_argument("--kappa", type=_fraction, required=True)
    p_wh.add_argument("--mu", type=_fraction, required=True)

    p_be = sub.add_parser("bessel", help="Bessel integrability test")
    p_be.add_argument("--n", type=_fraction, required=True)

    return top


# ---------------------------------------------------------------------------
# verdict serialization
# ---------------------------------------------------------------------------


def verdict_to_json(verdict: KovacicVerdict, var: str = "x") -> dict:
    """Schema: {"case": 1|2|3|4, "n": int?, "omega": str?, "P": [str]?,
    "solution": str?, "witness": object?}."""
    if not verdict.integrable:
        return {"case": 4, "witness": verdict.witness}
    sol = verdict.solution
    out: dict = {"case": sol.case_id, "n": sol.n}
    if sol.omega is not None:
        out["omega"] = render_ratfunc(sol.omega, var)
    if sol.prefactor is not None:
        out["P"] = [render_field_elem(c) for c in sol.prefactor.coeffs]
    if sol.case_id in (1, 2):
        out["solution"] = sol.display(var).render()
    else:
        out["solution"] = (
            f"exp(Integral(w, {var})) with w a degree-{sol.m} root of "
            + sol.minpoly_render(var)
        )
    return out


def _verdict_text(verdict: KovacicVerdict, var: str = "x") -> str:
    data = verdict_to_json(verdict, var)
    if data["case"] == 4:
        lines = ["case 4: not integrable (no Liouvillian solutions)"]
        for case, why in data["witness"].items():
            lines.append(f"  {case}: {why}")
        return "\n".join(lines)
    lines = [f"case {data['case']}: integrable"]
    if "omega" in data:
        lines.append(f"  omega = {data['omega']}")
    if "P" in data:
        lines.append(f"  P coefficients (deg 0..n) = {data['P']}")
    lines.append(f"  zeta_1 = {data['solution']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------


def _cmd_kovacic(args) -> int:
    r = parse_expression(args.r)
    verdict = kovacic.solve(r)
    if verdict.integrable and not kovacic.verify(r, verdict.solution):
        raise AssertionError("solution failed exact verification")
    if args.text:
        print(_verdict_text(verdict))
    else:
        print(json.dumps(verdict_to_json(verdict), indent=2))
    return 0


def _cmd_lj_analyze(args) -> int:
    p = LJParams(args.nu, args.delta, args.A, args.B, args.C, args.energy,
                 formal=args.formal)
    out: dict = {
        "params": {
            "nu": p.nu,
            "delta": p.delta,
            "A": str(p.A_bar),
            "B": str(p.B_bar),
            "C": str(p.C_bar),
            "energy": str(p.energy),
        }
    }
    methods = []
    verdicts = []

    if p.nu % 2 == 0 and p.delta % 2 == 0:
        normal_form = schrodinger.lj_normal_form(p)
        verdict = kovacic.solve(normal_form)
        kov = verdict_to_json(verdict, "z")
        kov["variable"] = "z"
        kov["normal_form"] = render_ratfunc(normal_form, "z")
        out["kovacic"] = kov
        methods.append("kovacic")
        verdicts.append(verdict.integrable)

    if p.delta == 2 * p.nu - 2 and p.energy == 0:
        w = schrodinger.lj_whittaker_params(p)
        iv = schrodinger.integrable_zero_energy(p)
        out["martinet_ramis"] = {
            "kappa": render_field_elem(w.kappa),
            "mu": render_field_elem(w.mu),
            "integrable": iv.integrable,
            "witnesses": [list(t) for t in iv.witnesses],
        }
        methods.append("martinet-ramis")
        verdicts.append(iv.integrable)
        try:
            psi = susyqm.ground_state(p)
            out["ground_state"] = psi.render("r")
            out["superpotential"] = susyqm.superpotential_from_lj(
                p.nu, p.A_bar, p.B_bar
            ).render()
        except (ShapeCondition, ValueError) as exc:
            out["shape_condition"] = str(exc)

    if not verdicts:
        raise UnableToDecide(
            "no decision route applies: exponents are odd (no z = r^2 normal "
            "form) and delta != 2*nu - 2 (outside the Whittaker family)"
        )
    if len(set(verdicts)) > 1:
        raise AssertionError(f"methods disagree: {dict(zip(methods, verdicts))}")
    out["integrable"] = verdicts[0]
    out["methods"] = "both" if len(methods) == 2 else methods[0]
    print(json.dumps(out, indent=2))
    return 0


def _cmd_lj_parametric(args) -> int:
    values = schrodinger.enumerate_integrable_A(
        args.B, args.C, args.nu, args.m_min, args.m_max
    )
    payload = [
        int(v.a) if v.is_integer() else render_field_elem(v) for v in values
    ]
    print(json.dumps(payload))
    return 0


def _cmd_susy(args) -> int:
    out: dict = {"nu": args.nu, "A": str(args.A), "B": str(args.B)}
    try:
        w = susyqm.superpotential_from_lj(args.nu, args.A, args.B)
    except ShapeCondition as exc:
        out["shape_condition_holds"] = False
        out["detail"] = str(exc)
        print(json.dumps(out, indent=2))
        return 0
    pair = susyqm.partner_potentials(w)
    p = LJParams(args.nu, 2 * (args.nu - 1), args.A, args.B)
    psi = susyqm.ground_state(p)
    out.update(
        {
            "shape_condition_holds": True,
            "superpotential": w.render(),
            "v_minus": render_ratfunc(pair.v_minus, "r"),
            "v_plus": render_ratfunc(pair.v_plus, "r"),
            "ground_state": psi.render("r"),
        }
    )
    if args.grid is not None:
        lo, hi, n = args.grid
        out["samples"] = [[r, psi(r)] for r in _linspace(lo, hi, n)]
    print(json.dumps(out, indent=2))
    return 0


def _cmd_virial(args) -> int:
    spec1 = statmech.PotentialSpec.make(args.family1)
    spec2 = statmech.PotentialSpec.make(args.family2)
    grid = (_logspace if args.log else _linspace)(args.tmin, args.tmax, args.steps)
    table = statmech.virial_table(
        spec1, spec2, grid, statmech.QuadratureConfig(), jobs=max(1, args.jobs)
    )
    csv_text = table.to_csv()
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.plot:
        from ljgalois.plotting import plot_virial

        plot_virial(table, args.plot, log_x=args.log)
    return 0


def _cmd_curves(args) -> int:
    lo, hi, n = args.grid
    grid = _linspace(lo, hi, n)
    if args.curve_kind == "potential":
        spec = statmech.PotentialSpec.make(
            args.family, args.sigma, args.eps, nu=args.nu, delta=args.delta
        )
        samples = statmech.potential_curve(spec, grid)
        header = "r_over_sigma,v_over_eps"
        xlabel, ylabel = r"$r/\sigma$", r"$V/\epsilon$"
        label = spec.family
    else:
        p = LJParams(args.nu, args.delta, args.A, args.B)
        samples = statmech.wavefunction_curve(p, grid)
        header = "r,psi0"
        xlabel, ylabel = "r", r"$\psi_0(r)$"
        label = f"A={args.A}, B={args.B}"
    lines = [header] + [f"{x:.17g},{y:.17g}" for x, y in samples]
    csv_text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.plot:
        from ljgalois.plotting import plot_samples

        plot_samples(samples, args.plot, xlabel, ylabel, label)
    return 0


def _cmd_whittaker(args) -> int:
    w = WhittakerParams(fe(args.kappa), fe(args.mu))
    r = schrodinger.whittaker_r(w)
    mr = schrodinger.martinet_ramis(w)
    verdict = kovacic.solve(r)
    if verdict.integrable != mr:
        raise AssertionError(
            f"Kovacic ({verdict.integrable}) and Martinet-Ramis ({mr}) disagree"
        )
    out = {
        "kappa": str(args.kappa),
        "mu": str(args.mu),
        "r": render_ratfunc(r),
        "integrable": mr,
        "kovacic": verdict_to_json(verdict),
    }
    print(json.dumps(out, indent=2))
    return 0


def _cmd_bessel(args) -> int:
    print(
        json.dumps(
            {"n": str(args.n), "integrable": schrodinger.bessel_integrable(args.n)}
        )
    )
    return 0


_DISPATCH = {
    "kovacic": _cmd_kovacic,
    "susy": _cmd_susy,
    "virial": _cmd_virial,
    "curves": _cmd_curves,
    "whittaker": _cmd_whittaker,
    "bessel": _cmd_bessel,
}


def run(argv: list[str]) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 1
    try:
        if args.command == "lj":
            if args.lj_command == "analyze":
                return _cmd_lj_analyze(args)
            return _cmd_lj_parametric(args)
        return _DISPATCH[args.command](args)
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 1
    except UnableToDecide as exc:
        print(f"unable to decide: {exc}", file=sys.stderr)
        return 2
    except (LjgError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
