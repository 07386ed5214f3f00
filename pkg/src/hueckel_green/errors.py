"""Typed errors raised across the package.

Every error carries an ``exit_code`` used by the command line front end:
3 for ordinary domain errors, 4 for singular matrices/lattices, 5 for an
exhausted search budget.
"""

from __future__ import annotations


class HueckelError(Exception):
    """Base class for all domain errors raised by this package."""

    exit_code = 3


class AlternatingOddN(HueckelError):
    """Bond-alternating couplings require an even number of sites."""


class CycleTooSmall(HueckelError):
    """A simple cycle needs at least three sites."""


class UnsupportedCouplings(HueckelError):
    """Operation is defined for the uniform chain (both couplings equal one)."""


class EnergyAtPole(HueckelError):
    """Requested energy coincides with an eigenvalue; the principal-value
    sum is undefined pointwise."""


class IndexOutOfRange(HueckelError):
    """Site index outside 1..N."""


class ZeroCoupling(HueckelError):
    """Closed forms divide by the couplings; zero is not allowed."""


class TooLarge(HueckelError):
    """Request exceeds the configured memory guard."""


class NotSingular(HueckelError):
    """Kernel requested for a matrix that is invertible."""


class NotSymmetric(HueckelError):
    """Symmetric eigensolver fed a non-symmetric matrix."""


class NearSingularAngle(HueckelError):
    """Closed-form trigonometric sum evaluated too close to a pole of the
    formula (sin(theta/2) ~ 0)."""


class DegenerateAngle(HueckelError):
    """Sine-ratio identity evaluated where both sines vanish."""


class SingularMatrix(HueckelError):
    """Exactly singular matrix.

    ``case`` is a short machine-readable tag ("N odd", "N=4k",
    "alternating denominator", or a symbol index for circulants); extra
    diagnostics may ride along (``n``, ``theta`` for the tridiagonal
    engine, ``index`` for a vanishing circulant symbol value).
    """

    exit_code = 4

    def __init__(self, case: str, *, n: int | None = None, theta=None,
                 index: int | None = None):
        self.case = case
        self.n = n
        self.theta = theta
        self.index = index
        super().__init__(f"singular: {case}")


class NumericallySingular(HueckelError):
    """LU pivot collapsed (or the condition estimate blew past 1e12)."""

    exit_code = 4

    def __init__(self, pivot_index: int):
        self.pivot_index = pivot_index
        super().__init__(f"singular: numeric pivot {pivot_index}")


class SingularLattice(HueckelError):
    """The d-dimensional Green's function does not exist.

    ``witness`` is a tuple of mode numbers whose cosine sum vanishes,
    when the search oracle found one within budget.
    """

    exit_code = 4

    def __init__(self, dim: int, n: int, witness=None):
        self.dim = dim
        self.n = n
        self.witness = witness
        super().__init__(f"singular: lattice d={dim} n={n}")


class BudgetExhausted(HueckelError):
    """Witness search ran out of nodes before exhausting the space."""

    exit_code = 5
