"""Floating-point physics layer: potential curves, zero-energy wave
functions, and second virial coefficients B2(T) by adaptive quadrature.

Everything works in reduced units: sigma is the length unit, the well
depth eps the energy unit, and temperatures enter as kT/eps.  B2 values
are reported in units of sigma^3.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from scipy.integrate import quad

from ljgalois.errors import NoConvergence, NonPositiveRadius
from ljgalois.schrodinger import LJParams
from ljgalois.susyqm import MolecularParams, de_boer_parameter, ground_state

TWO_PI = 2.0 * math.pi


def _shape_alpha(nu: int, delta: int) -> float:
    """Well-depth normalization: alpha * ((sigma/r)^delta - (sigma/r)^nu)
    attains exactly -1 at its minimum r* = (delta/nu)^(1/(delta-nu)) sigma."""
    return delta / (delta - nu) * (delta / nu) ** (nu / (delta - nu))


@dataclass(frozen=True)
class PotentialSpec:
    """A two-term power-law potential with unit well depth geometry."""

    family: str
    nu: int
    delta: int
    sigma: float
    eps_depth: float
    alpha_shape: float

    @staticmethod
    def make(family: str, sigma: float = 1.0, eps_depth: float = 1.0,
             nu: int | None = None, delta: int | None = None) -> "PotentialSpec":
        if family == "12-6":
            nu, delta = 6, 12
        elif family == "10-6":
            nu, delta = 6, 10
        elif family == "general":
            if nu is None or delta is None:
                raise ValueError("general family needs nu and delta")
            if not (0 < nu < delta) or nu <= 3:
                raise ValueError("need 3 < nu < delta for a finite B2")
        else:
            raise ValueError(f"unknown family {family!r}")
        if sigma <= 0 or eps_depth <= 0:
            raise ValueError("sigma and eps_depth must be positive")
        spec = PotentialSpec(family, nu, delta, sigma, eps_depth,
                             _shape_alpha(nu, delta))
        spec._check_geometry()
        return spec

    def _check_geometry(self):
        if self.reduced(1.0) != 0.0:
            raise AssertionError("potential must vanish exactly at r = sigma")
        r_star = (self.delta / self.nu) ** (1.0 / (self.delta - self.nu))
        depth = self.reduced(r_star)
        if abs(depth + 1.0) > 1e-10:
            raise AssertionError(f"well depth {depth} differs from -1")

    def reduced(self, x: float) -> float:
        """V(sigma*x)/eps in the common-factor form u^nu (u^(delta-nu) - 1),
        so the zero crossing at x = 1 is exact."""
        u = 1.0 / x
        return self.alpha_shape * u**self.nu * (u ** (self.delta - self.nu) - 1.0)

    def __call__(self, r: float) -> float:
        """V(r) in energy units eps_depth."""
        return self.eps_depth * self.reduced(r / self.sigma)


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-9
    overflow_threshold: float = 700.0
    tail_tol: float = 1e-8
    max_subdivisions: int = 2000

    def __post_init__(self):
        if min(self.rel_tol, self.overflow_threshold, self.tail_tol) <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions <= 0:
            raise ValueError("max_subdivisions must be positive")


@dataclass(frozen=True)
class VirialTable:
    label_1: str
    label_2: str
    rows: tuple[tuple[float, float, float, float, float], ...]
    # rows of (T_reduced, B2_1, err_1, B2_2, err_2); T strictly increasing

    def csv_header(self) -> str:
        def tag(label: str) -> str:
            return label.replace("-", "_")

        return (
            f"T_reduced,B2_{tag(self.label_1)},err_{tag(self.label_1)},"
            f"B2_{tag(self.label_2)},err_{tag(self.label_2)}"
        )

    def to_csv(self) -> str:
        lines = [self.csv_header()]
        for row in self.rows:
            lines.append(",".join(f"{x:.17g}" for x in row))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------


def potential_curve(
    spec: PotentialSpec, r_grid: list[float]
) -> list[tuple[float, float]]:
    """(r/sigma, V(r)/eps) samples."""
    out = []
    for r in r_grid:
        if r <= 0:
            raise NonPositiveRadius(f"grid point r = {r}")
        out.append((r / spec.sigma, spec.reduced(r / spec.sigma)))
    return out


def wavefunction_curve(
    p: LJParams, r_grid: list[float]
) -> list[tuple[float, float]]:
    """(r, psi_0(r)) samples of the zero-energy ground state."""
    psi = ground_state(p)
    out = []
    for r in r_grid:
        if r <= 0:
            raise NonPositiveRadius(f"grid point r = {r}")
        out.append((r, psi(r)))
    return out


# ---------------------------------------------------------------------------
# second virial coefficient
# ---------------------------------------------------------------------------


def b2_power_law(
    terms: list[tuple[float, int]], T_reduced: float, cfg: QuadratureConfig
) -> tuple[float, float]:
    """B2 for a reduced potential v(x) = sum c_i x^(-k_i) (x = r/sigma,
    energies in eps).  Returns (B2, err) in units of sigma^3.

    Splits [0, inf) into a hard core (where v/kT exceeds the overflow
    threshold the integrand is x^2 to machine precision), an adaptive
    middle region, and an analytic first-order power-law tail.
    """
    if T_reduced <= 0:
        raise ValueError("T_reduced must be positive")
    if not terms:
        return 0.0, 0.0
    if min(k for _, k in terms) <= 3:
        raise ValueError("tail exponents must exceed 3 for a convergent B2")
    stiff = max(terms, key=lambda ck: ck[1])
    if stiff[0] <= 0:
        raise ValueError("the stiffest power term must be repulsive")

    def v(x: float) -> float:
        return sum(c * x ** (-k) for c, k in terms)

    thr = cfg.overflow_threshold * T_reduced

    # hard-core radius: v monotonically explodes as x -> 0+ when the
    # stiffest term is repulsive; otherwise there is no core
    r0 = 0.0
    x_probe = 1e-6
    if v(x_probe) > thr:
        lo, hi = x_probe, 1.0
        while v(hi) > thr:
            hi *= 2.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if v(mid) > thr:
                lo = mid
            else:
                hi = mid
        r0 = 0.5 * (lo + hi)

    # cutoff where every term satisfies |c| x^-k < tail_tol * T / #terms
    budget = cfg.tail_tol * T_reduced / len(terms)
    r_cut = max((abs(c) / budget) ** (1.0 / k) for c, k in terms)
    r_cut = max(r_cut, r0 * 2.0, 1.0)

    def integrand(x: float) -> float:
        if x <= 0.0:
            return 0.0
        w = v(x) / T_reduced
        if w > cfg.overflow_threshold:
            return x * x
        return (1.0 - math.exp(-w)) * x * x

    res = quad(
        integrand,
        r0,
        r_cut,
        epsabs=1e-15,
        epsrel=cfg.rel_tol,
        limit=cfg.max_subdivisions,
        full_output=1,
    )
    if len(res) > 3:
        raise NoConvergence(
            f"adaptive quadrature failed at T* = {T_reduced}: {res[3]}"
        )
    middle, abserr = res[0], res[1]

    core = r0**3 / 3.0
    # first-order tail: integral of (v/kT) x^2 dx from r_cut to infinity
    tail = sum(c * r_cut ** (3 - k) / (k - 3) for c, k in terms) / T_reduced
    # bound on the discarded second-order term, (1/2) integral (v/kT)^2 x^2
    amax = sum(abs(c) * r_cut ** (-k) for c, k in terms) / T_reduced
    kmin = min(k for _, k in terms)
    tail2 = 0.5 * amax**2 * r_cut**3 / (2 * kmin - 3)

    b2 = TWO_PI * (core + middle + tail)
    err = TWO_PI * (abserr + tail2)
    return b2, err


def second_virial(
    spec: PotentialSpec, T_reduced: float, cfg: QuadratureConfig | None = None
) -> tuple[float, float]:
    """B2(T) = 2 pi integral (1 - exp(-v/kT)) r^2 dr, in units of sigma^3."""
    cfg = cfg or QuadratureConfig()
    terms = [(spec.alpha_shape, spec.delta), (-spec.alpha_shape, spec.nu)]
    return b2_power_law(terms, T_reduced, cfg)


def virial_table(
    spec_1: PotentialSpec,
    spec_2: PotentialSpec,
    T_grid: list[float],
    cfg: QuadratureConfig | None = None,
    jobs: int = 1,
) -> VirialTable:
    """Aligned B2 rows for two potentials sharing sigma and eps."""
    if (spec_1.sigma, spec_1.eps_depth) != (spec_2.sigma, spec_2.eps_depth):
        raise ValueError("both potentials must share sigma and eps_depth")
    if sorted(T_grid) != list(T_grid) or len(set(T_grid)) != len(T_grid):
        raise ValueError("temperature grid must be strictly increasing")
    cfg = cfg or QuadratureConfig()

    def row(t: float) -> tuple[float, float, float, float, float]:
        b1, e1 = second_virial(spec_1, t, cfg)
        b2, e2 = second_virial(spec_2, t, cfg)
        return (t, b1, e1, b2, e2)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = tuple(pool.map(row, T_grid))
    else:
        rows = tuple(row(t) for t in T_grid)
    return VirialTable(spec_1.family, spec_2.family, rows)


def boyle_temperature(
    spec: PotentialSpec,
    bracket: tuple[float, float] = (2.0, 6.0),
    cfg: QuadratureConfig | None = None,
    tol: float = 1e-6,
) -> float:
    """Temperature with B2 = 0, located by bisection."""
    cfg = cfg or QuadratureConfig()
    lo, hi = bracket
    f_lo = second_virial(spec, lo, cfg)[0]
    f_hi = second_virial(spec, hi, cfg)[0]
    if f_lo * f_hi > 0:
        raise ValueError(f"B2 does not change sign on {bracket}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if second_virial(spec, mid, cfg)[0] * f_lo > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def dimensionless_form(
    m: MolecularParams, family: str
) -> tuple[float, PotentialSpec]:
    """De Boer parameter Lambda plus the dimensionless potential V/eps as a
    function of r/sigma (a unit PotentialSpec of the family)."""
    lam = de_boer_parameter(m)
    return lam, PotentialSpec.make(family)
