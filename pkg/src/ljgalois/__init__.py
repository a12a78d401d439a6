"""Liouvillian integrability of radial Schrodinger equations with
generalized Lennard-Jones potentials.

Subpackages / modules:
  exactalg    exact arithmetic over Q(sqrt(d)): scalars, polynomials,
              rational functions, pole analysis, Laurent heads
  kovacic     Kovacic's algorithm (cases 1-4) with exact verification
  schrodinger potentials, normal forms, Whittaker / Martinet-Ramis /
              parametric integrability decisions
  susyqm      superpotentials, partner potentials, zero-energy ground states
  statmech    potential curves and second virial coefficients
  cli         command-line interface (also exposed as the ljgalois script)
"""

from ljgalois.exactalg import FieldElem, Poly, RatFunc
from ljgalois.kovacic import KovacicVerdict, solve, verify
from ljgalois.schrodinger import (
    IntegrabilityVerdict,
    LJParams,
    WhittakerParams,
    integrable_zero_energy,
    lj_normal_form,
    martinet_ramis,
)
from ljgalois.susyqm import MolecularParams, SuperPotential, ground_state
from ljgalois.statmech import PotentialSpec, QuadratureConfig, second_virial

__version__ = "0.1.0"

__all__ = [
    "FieldElem",
    "Poly",
    "RatFunc",
    "KovacicVerdict",
    "solve",
    "verify",
    "IntegrabilityVerdict",
    "LJParams",
    "WhittakerParams",
    "integrable_zero_energy",
    "lj_normal_form",
    "martinet_ramis",
    "MolecularParams",
    "SuperPotential",
    "ground_state",
    "PotentialSpec",
    "QuadratureConfig",
    "second_virial",
]
