"""Bond alternation: exact rational Green's functions for beta/alpha chains.

With alternating couplings the closed forms become rational functions of
the coupling ratio.  Everything stays exact: the closed form reproduces
the exact inverse of the built Hamiltonian entry by entry.
"""

from fractions import Fraction

from hueckel_green import (ChainSpec, Topology, build_hamiltonian,
                           green_matrix, inverse_exact)

beta, alpha = Fraction(2), Fraction(1, 3)

for topology in (Topology.OPEN, Topology.CYCLIC):
    n = 6
    spec = ChainSpec(topology, n, coupling_odd=beta, coupling_even=alpha)
    g = green_matrix(spec)
    exact = -inverse_exact(build_hamiltonian(spec))
    print(f"{topology.value} chain, N={n}, beta={beta}, alpha={alpha}:")
    for row in g.to_lists():
        print("  " + "  ".join(f"{str(x):>7}" for x in row))
    print("  matches exact inverse:", g == exact)
    print()

print("uniform limit beta = alpha = 1 recovers the 0/+-1 and 0/+-1/2 patterns:")
for topology in (Topology.OPEN, Topology.CYCLIC):
    spec_alt = ChainSpec(topology, 6, coupling_odd=1, coupling_even=1)
    spec_uni = ChainSpec(topology, 6)
    print(f"  {topology.value}: {green_matrix(spec_alt) == green_matrix(spec_uni)}")
