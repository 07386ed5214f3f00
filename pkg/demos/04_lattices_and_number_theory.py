"""Lattices: when does the d-dimensional Green's function exist?

The hypercubic Hamiltonian is a Kronecker sum of chains, so its spectrum
is every sum of d chain eigenvalues.  A zero eigenvalue is a vanishing sum
of cosines, which is a number-theory question: for n = N+1 odd the answer
depends on the smallest prime divisor of n.  The predicate is exact; the
witness search backs it with explicit vanishing sums.
"""

import numpy as np

from hueckel_green import (InvertibilityQuery, LatticeSpec,
                           build_lattice_hamiltonian, find_vanishing_witness,
                           is_invertible, lattice_green_matrix,
                           lattice_spectrum, smallest_prime_divisor)

print("existence of G_d for a few (d, N):")
for d, n_sites in ((1, 6), (2, 6), (3, 4), (3, 8), (3, 24), (5, 6)):
    n = n_sites + 1
    query = InvertibilityQuery(d, n)
    verdict = is_invertible(query)
    note = f"smallest prime divisor of {n} is {smallest_prime_divisor(n)}"
    print(f"  d={d}, N={n_sites:2d}: invertible={verdict}  ({note})")
    if not verdict:
        witness = find_vanishing_witness(query)
        if witness:
            print(f"       vanishing cosine sum at k = {witness.ks}")

print("\nd=3, N=4 (n=5 prime): assemble G_3 and check H G = -I")
spec = LatticeSpec(3, 4)
H = build_lattice_hamiltonian(spec).to_float()
G = lattice_green_matrix(spec)
print("  residual ||H G + I||_inf =", np.max(np.abs(H @ G + np.eye(64))))

print("\nd=2 always fails: the N x N eigenvalue grid has exactly N zeros")
for n_sites in (3, 5, 8):
    lam = lattice_spectrum(LatticeSpec(2, n_sites))
    print(f"  N={n_sites}: zeros on the diagonal = {int(np.sum(np.abs(lam) < 1e-9))}")
