"""Closed-form zero-energy Green's functions, O(1) per entry.

The sign convention is G = -H^{-1} everywhere: every function in this
module returns Green's function entries, i.e. the *negated* inverse of the
corresponding Hamiltonian.  Entries use 1-based site indices; formulas
stated for one ordering of (r, s) are extended by the symmetry
G(r, s) = G(s, r), canonicalizing to r >= s first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import ChainSpec, Topology
from .circulant import cyclic_inverse_first_column
from .errors import (CycleTooSmall, IndexOutOfRange, SingularMatrix,
                     UnsupportedCouplings, ZeroCoupling)
from .exact import ExactMatrix, Rational
from .trig import direct_green_sum

_ZERO = Fraction(0)


@dataclass(frozen=True)
class GreenEntryQuery:
    """A single Green's function entry request: which chain, which sites."""

    spec: ChainSpec
    r: int
    s: int

    def __post_init__(self):
        if not (1 <= self.r <= self.spec.n_sites
                and 1 <= self.s <= self.spec.n_sites):
            raise IndexOutOfRange(
                f"({self.r}, {self.s}) outside 1..{self.spec.n_sites}")


def det_open(n: int) -> int:
    """Determinant of the uniform open chain: (-1)^(N/2) for even N, else 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2:
        return 0
    return -1 if (n // 2) % 2 else 1


def _sign_pm(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def green_open(q: GreenEntryQuery) -> Rational:
    """Uniform open chain, N even: entries are 0 or +-1.

    Nonzero exactly when r and s have opposite parity and the even index
    exceeds the odd one, with value (-1)^((r+s-1)/2); all same-parity
    entries vanish (alternancy).
    """
    spec = q.spec
    if not spec.is_uniform:
        raise UnsupportedCouplings("green_open needs unit couplings")
    if spec.n_sites % 2:
        raise SingularMatrix("N odd", n=spec.n_sites)
    r, s = q.r, q.s
    if (r + s) % 2 == 0:
        return _ZERO
    even, odd = (r, s) if r % 2 == 0 else (s, r)
    if even < odd:
        return _ZERO
    return Fraction(_sign_pm((r + s - 1) // 2))


def green_bond_alternating(q: GreenEntryQuery) -> Rational:
    """Open chain with alternating couplings beta, alpha, beta, ...

    Two-branch closed form with (alpha/beta) powers and parity brackets;
    reduces to `green_open` when both couplings are one.
    """
    spec = q.spec
    if spec.topology is not Topology.OPEN:
        raise UnsupportedCouplings("open-chain formula")
    if spec.n_sites % 2:
        raise SingularMatrix("N odd", n=spec.n_sites)
    beta, alpha = spec.coupling_odd, spec.coupling_even
    if beta == 0 or alpha == 0:
        raise ZeroCoupling("couplings must be nonzero")
    r, s = max(q.r, q.s), min(q.r, q.s)   # canonicalize to r >= s
    if r % 2 or s % 2 == 0:
        return _ZERO   # parity brackets {1-(-1)^s}{1+(-1)^r} vanish
    ratio = alpha / beta
    return (_sign_pm((r + s - 1) // 2) / beta) * ratio ** ((r - s - 1) // 2)


def green_cyclic(q: GreenEntryQuery) -> Rational:
    """Uniform cycle, N not a multiple of 4: entries are 0 or +-1/2.

    The inverse is circulant, so the entry only depends on (r - s) mod N;
    negate the first column of the inverse to get G.
    """
    spec = q.spec
    if spec.topology is not Topology.CYCLIC:
        raise UnsupportedCouplings("cyclic formula")
    if not spec.is_uniform:
        raise UnsupportedCouplings("green_cyclic needs unit couplings")
    n = spec.n_sites
    if n < 3:
        raise CycleTooSmall("cyclic Green's function needs N >= 3")
    if n % 4 == 0:
        raise SingularMatrix("N=4k", n=n)
    column = cyclic_inverse_first_column(n).first_column
    return -column[(q.r - q.s) % n]


def green_cyclic_bond_alternating(q: GreenEntryQuery) -> Rational:
    """Cycle with alternating couplings (N even, N >= 4).

    Four-term closed form; the two geometric denominators
    1 - (-alpha/beta)^(N/2) and 1 - (-beta/alpha)^(N/2) are checked
    exactly and reproduce the N = 4k singularity at equal couplings.
    """
    spec = q.spec
    if spec.topology is not Topology.CYCLIC:
        raise UnsupportedCouplings("cyclic formula")
    n = spec.n_sites
    if n % 2:
        raise SingularMatrix("N odd", n=n)
    if n < 4:
        raise CycleTooSmall("cyclic bond alternation needs N >= 4")
    beta, alpha = spec.coupling_odd, spec.coupling_even
    if beta == 0 or alpha == 0:
        raise ZeroCoupling("couplings must be nonzero")
    half = n // 2
    den_ab = 1 - (-alpha / beta) ** half
    den_ba = 1 - (-beta / alpha) ** half
    if den_ab == 0 or den_ba == 0:
        case = "N=4k" if alpha == beta else "alternating denominator"
        raise SingularMatrix(case, n=n)
    r, s = q.r, q.s
    shift = (r - s - 1) if r > s else (n + r - s - 1)
    total = _ZERO
    if r % 2 == 0 and s % 2 == 1:
        total += (-alpha / beta) ** (shift // 2) / (beta * den_ab)
    if r % 2 == 1 and s % 2 == 0:
        total += (-beta / alpha) ** (shift // 2) / (alpha * den_ba)
    return -total


def green_entry(q: GreenEntryQuery) -> Rational:
    """Dispatch to the applicable closed form for this chain spec."""
    spec = q.spec
    if spec.topology is Topology.OPEN:
        if spec.is_uniform:
            return green_open(q)
        return green_bond_alternating(q)
    if spec.is_uniform:
        return green_cyclic(q)
    return green_cyclic_bond_alternating(q)


def green_matrix(spec: ChainSpec) -> ExactMatrix:
    """Assemble the full Green's function matrix from the closed forms."""
    n = spec.n_sites
    entries = [green_entry(GreenEntryQuery(spec, r, s))
               for r in range(1, n + 1) for s in range(1, n + 1)]
    return ExactMatrix(n, n, entries)


def harmonic_sum_identity_check(n: int, r: int, s: int) -> tuple[float, Rational]:
    """Both sides of the harmonic-sum identity for the open chain.

    Returns the direct float evaluation of
    -(1/(N+1)) sum_k sin(r k w) sin(s k w) / cos(k w) alongside the exact
    closed-form value (the 0 / +-1 pattern), ready for comparison.
    """
    if n % 2:
        raise SingularMatrix("N odd", n=n)
    spec = ChainSpec(Topology.OPEN, n)
    exact = green_open(GreenEntryQuery(spec, r, s))
    return direct_green_sum(n, r, s), exact
