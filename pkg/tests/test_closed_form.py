"""Closed-form Green's functions against paper patterns and exact oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hueckel_green import (ChainSpec, CycleTooSmall, ExactMatrix,
                           GreenEntryQuery, SingularMatrix, Topology,
                           ZeroCoupling, build_hamiltonian, det_fraction_free,
                           det_open, green_bond_alternating, green_cyclic,
                           green_cyclic_bond_alternating, green_entry,
                           green_matrix, green_open,
                           harmonic_sum_identity_check)

from oracles import cofactor_inverse, gauss_jordan_inverse

F = Fraction

# The 6x6 alternating-sign pattern of the uniform open-chain Green's matrix.
PATTERN_SIX = [
    [0, -1, 0, 1, 0, -1],
    [-1, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 1],
    [1, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, -1],
    [-1, 0, 1, 0, -1, 0],
]


def open_query(n, r, s, beta=1, alpha=1):
    spec = ChainSpec(Topology.OPEN, n, coupling_odd=beta, coupling_even=alpha)
    return GreenEntryQuery(spec, r, s)


def cyclic_query(n, r, s, beta=1, alpha=1):
    spec = ChainSpec(Topology.CYCLIC, n, coupling_odd=beta, coupling_even=alpha)
    return GreenEntryQuery(spec, r, s)


@pytest.mark.parametrize("n,expected", [(2, -1), (4, 1), (5, 0), (200, 1)])
def test_det_open_table(n, expected):
    assert det_open(n) == expected


def test_det_open_matches_fraction_free():
    for n in range(1, 21):
        h = build_hamiltonian(ChainSpec(Topology.OPEN, n))
        assert det_open(n) == det_fraction_free(h)


@pytest.mark.parametrize("r,s,expected", [(2, 1, -1), (4, 1, 1), (3, 5, 0)])
def test_green_open_entries(r, s, expected):
    assert green_open(open_query(6, r, s)) == expected


def test_green_open_six_site_pattern():
    g = green_matrix(ChainSpec(Topology.OPEN, 6))
    assert g.to_lists() == PATTERN_SIX


def test_green_open_odd_is_singular():
    with pytest.raises(SingularMatrix) as err:
        green_open(open_query(5, 1, 2))
    assert err.value.case == "N odd"


@settings(max_examples=80)
@given(n=st.integers(1, 50), r=st.integers(1, 100), s=st.integers(1, 100))
def test_green_open_symmetry_and_alternancy(n, r, s):
    n = 2 * n
    r = (r - 1) % n + 1
    s = (s - 1) % n + 1
    value = green_open(open_query(n, r, s))
    assert value == green_open(open_query(n, s, r))
    if (r + s) % 2 == 0:
        assert value == 0
    else:
        assert value in (-1, 0, 1)


def test_green_bond_alternating_two_sites():
    # invert [[0,2],[2,0]] directly: inverse (2,1) entry is 1/2, G = -1/2
    assert green_bond_alternating(open_query(2, 2, 1, beta=2, alpha=7)) == F(-1, 2)


def test_green_bond_alternating_uniform_reduction():
    for r in range(1, 5):
        for s in range(1, 5):
            assert (green_bond_alternating(open_query(4, r, s))
                    == green_open(open_query(4, r, s)))


def test_green_bond_alternating_same_parity_zero():
    assert green_bond_alternating(open_query(4, 3, 3, beta=3, alpha=5)) == 0


def test_green_bond_alternating_zero_coupling():
    with pytest.raises(ZeroCoupling):
        green_bond_alternating(open_query(4, 2, 1, beta=0, alpha=0))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_green_bond_alternating_matches_cofactor_oracle(data):
    n = 2 * data.draw(st.integers(1, 3), label="half_n")
    beta = data.draw(st.builds(F, st.integers(1, 4), st.integers(1, 3)))
    alpha = data.draw(st.builds(F, st.integers(1, 4), st.integers(1, 3)))
    spec = ChainSpec(Topology.OPEN, n, coupling_odd=beta, coupling_even=alpha)
    inv = cofactor_inverse(build_hamiltonian(spec).to_lists())
    expected = [[-x for x in row] for row in inv]
    assert green_matrix(spec).to_lists() == expected


@pytest.mark.parametrize("n,r,s,expected", [
    (5, 1, 1, F(-1, 2)),
    (6, 2, 1, F(-1, 2)),
    (6, 1, 1, 0),
])
def test_green_cyclic_entries(n, r, s, expected):
    assert green_cyclic(cyclic_query(n, r, s)) == expected


def test_green_cyclic_multiple_of_four_singular():
    with pytest.raises(SingularMatrix) as err:
        green_cyclic(cyclic_query(8, 1, 1))
    assert err.value.case == "N=4k"


def test_green_cyclic_identity_exact():
    for n in (5, 6, 7, 11):
        spec = ChainSpec(Topology.CYCLIC, n)
        product = build_hamiltonian(spec) @ (-green_matrix(spec))
        assert product == ExactMatrix.identity(n)


def test_green_cyclic_alternating_uniform_entry():
    assert green_cyclic_bond_alternating(cyclic_query(6, 2, 1)) == F(-1, 2)


def test_green_cyclic_alternating_uniform_four_singular():
    with pytest.raises(SingularMatrix) as err:
        green_cyclic_bond_alternating(cyclic_query(4, 2, 1))
    assert err.value.case == "N=4k"


def test_green_cyclic_alternating_four_sites_oracle():
    # H has bonds beta=1, alpha=2 and corner alpha: cofactor inversion of
    # [[0,1,0,2],[1,0,2,0],[0,2,0,1],[2,0,1,0]] gives column (0,-1/3,0,2/3),
    # so G(2,1) = +1/3.
    q = cyclic_query(4, 2, 1, beta=1, alpha=2)
    inv = cofactor_inverse(build_hamiltonian(q.spec).to_lists())
    assert inv[1][0] == F(-1, 3)
    assert green_cyclic_bond_alternating(q) == F(1, 3)
    assert green_cyclic_bond_alternating(q) == -inv[1][0]


def test_green_cyclic_alternating_two_sites_rejected():
    with pytest.raises(CycleTooSmall):
        green_cyclic_bond_alternating(cyclic_query(2, 1, 2, beta=2, alpha=3))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_green_cyclic_alternating_matches_gauss_jordan(data):
    n = 2 * data.draw(st.integers(2, 5), label="half_n")
    beta = data.draw(st.builds(F, st.integers(1, 4), st.integers(1, 3)))
    alpha = data.draw(st.builds(F, st.integers(1, 4), st.integers(1, 3)))
    spec = ChainSpec(Topology.CYCLIC, n, coupling_odd=beta, coupling_even=alpha)
    try:
        g = green_matrix(spec)
    except SingularMatrix:
        assert det_fraction_free(build_hamiltonian(spec)) == 0
        return
    inv = gauss_jordan_inverse(build_hamiltonian(spec).to_lists())
    assert g.to_lists() == [[-x for x in row] for row in inv]


def test_vanishing_denominator_matches_exact_singularity():
    # alpha = -beta kills both geometric denominators; the matrix really is
    # singular
    spec = ChainSpec(Topology.CYCLIC, 6, coupling_odd=2, coupling_even=-2)
    with pytest.raises(SingularMatrix) as err:
        green_matrix(spec)
    assert err.value.case == "alternating denominator"
    assert det_fraction_free(build_hamiltonian(spec)) == 0


def test_green_entry_dispatch():
    assert green_entry(open_query(6, 2, 1)) == -1
    assert green_entry(cyclic_query(6, 2, 1)) == F(-1, 2)
    assert green_entry(open_query(2, 2, 1, beta=2, alpha=7)) == F(-1, 2)
    assert green_entry(cyclic_query(4, 2, 1, beta=1, alpha=2)) == F(1, 3)


@pytest.mark.parametrize("n,r,s,expected_float,expected_exact", [
    (2, 1, 2, -1.0, -1),
    (6, 2, 4, 0.0, 0),
    (6, 4, 1, 1.0, 1),
])
def test_harmonic_sum_identity_examples(n, r, s, expected_float, expected_exact):
    float_side, exact_side = harmonic_sum_identity_check(n, r, s)
    assert exact_side == expected_exact
    assert float_side == pytest.approx(expected_float, abs=1e-10)
    assert abs(float_side - float(exact_side)) <= 1e-9


def test_harmonic_sum_rejects_odd():
    with pytest.raises(SingularMatrix):
        harmonic_sum_identity_check(5, 1, 2)


@pytest.mark.parametrize("n", [2, 10, 40])
def test_open_identity_and_uniform_reduction(n):
    spec = ChainSpec(Topology.OPEN, n)
    g = green_matrix(spec)
    assert (build_hamiltonian(spec) @ (-g)) == ExactMatrix.identity(n)
    spec_alt = ChainSpec(Topology.OPEN, n, coupling_odd=1, coupling_even=1)
    assert green_matrix(spec_alt) == g
