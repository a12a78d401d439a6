"""Exception hierarchy shared by all modules.

``UnableToDecide`` and its subclasses form a distinct channel from an
ordinary "no" answer: they mean the computation left the supported
coefficient field (or pole structure), so neither integrability nor
non-integrability has been established.  The CLI maps this channel to
exit code 2.
"""


class LjgError(Exception):
    """Base class for all errors raised by this package."""


class UnableToDecide(LjgError):
    """The question cannot be settled within the working field Q(sqrt(d))."""


class UnsupportedExtension(UnableToDecide):
    """A second, incompatible square root would be required."""


class UnsupportedPoles(UnableToDecide):
    """A denominator has an irreducible factor of degree >= 2 over Q(sqrt(d))."""


class Undecidable(UnableToDecide):
    """Membership test with irrational parameters."""


class ZeroDenominator(LjgError):
    """Denominator polynomial is identically zero."""


class ZeroFunction(LjgError):
    """Operation undefined for the zero rational function."""


class OddOrder(LjgError):
    """Square-root Laurent head requires an even pole order."""


class OddExponent(LjgError):
    """The z = r^2 substitution requires even potential exponents."""


class NonzeroEnergy(LjgError):
    """Operation is defined for zero energy only."""


class WrongFamily(LjgError):
    """Parameters fall outside the delta = 2*nu - 2 family."""


class ShapeCondition(LjgError):
    """A_bar != (nu - 1) * sqrt(B_bar): no monomial superpotential exists.

    Distinct from non-integrability: e.g. A = 3*sqrt(B) at nu = 6 is
    integrable yet admits no superpotential of this shape.
    """


class NonPositiveRadius(LjgError):
    """Radial samples must have r > 0."""


class NoConvergence(LjgError):
    """Quadrature subdivision budget exhausted before reaching tolerance."""


class UnsupportedSolution(LjgError):
    """Requested manipulation is not defined for this solution kind."""


class ExprSyntaxError(LjgError):
    """Expression text does not match the grammar."""

    def __init__(self, position: int, expected: tuple[str, ...], found: str):
        self.position = position
        self.expected = expected
        self.found = found
        exp = " or ".join(expected)
        super().__init__(f"at position {position}: expected {exp}, found {found!r}")
