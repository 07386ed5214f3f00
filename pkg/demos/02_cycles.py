"""Cycles: determinants -1/2/0/-4, kernels at N = 4k, and +-1/2 inverses.

The cycle Hamiltonian is circulant.  Its determinant depends only on
N mod 4; when N is a multiple of 4 the kernel is spanned by two repeating
4-vectors, and otherwise the inverse is a circulant with entries 0, +-1/2
whose first column follows one of three repeating patterns.
"""

from hueckel_green import (ChainSpec, Topology, build_hamiltonian,
                           cyclic_inverse_first_column, cyclic_kernel_basis,
                           det_cyclic, det_fraction_free, mat_vec,
                           symbol_factorization_inverse)

print("determinant table (closed form vs fraction-free elimination):")
for n in range(3, 13):
    h = build_hamiltonian(ChainSpec(Topology.CYCLIC, n))
    print(f"  N={n:2d}: {det_cyclic(n):3d}  (exact: {det_fraction_free(h)})")

print("\nkernel for N = 8 (4k):")
h = build_hamiltonian(ChainSpec(Topology.CYCLIC, 8))
for v in cyclic_kernel_basis(8):
    image = mat_vec(h, [x * 1 for x in map(int, v)])
    print(f"  v = {v},  H v = {[str(x) for x in image]}")

print("\nfirst column of the inverse, both derivations:")
for n in (5, 6, 7):
    rec = cyclic_inverse_first_column(n).first_column
    sym = symbol_factorization_inverse(n).first_column
    assert rec == sym
    print(f"  N={n}: {[str(x) for x in rec]}")
print("patterns repeat with period 4: (1,1,-1,-1)/2, (0,1,0,-1)/2, (-1,1,1,-1)/2")
