"""Builders, analytic eigensystems and the spectral resolvent."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hueckel_green import (AlternatingOddN, ChainSpec, CycleTooSmall,
                           EnergyAtPole, ExactMatrix, GreenEntryQuery,
                           IndexOutOfRange, Topology, UnsupportedCouplings,
                           analytic_eigensystem, build_hamiltonian,
                           green_matrix, green_open, spectral_resolvent_entry,
                           transmission_proxy)

from oracles import cofactor_inverse


def test_build_open_three_sites():
    h = build_hamiltonian(ChainSpec(Topology.OPEN, 3))
    assert h.to_lists() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


def test_build_cycle_six_sites_has_corners():
    h = build_hamiltonian(ChainSpec(Topology.CYCLIC, 6))
    rows = h.to_lists()
    assert rows[0][5] == 1 and rows[5][0] == 1
    assert rows[0][1] == 1 and rows[4][5] == 1
    assert all(rows[i][i] == 0 for i in range(6))


def test_build_alternating_pattern():
    h = build_hamiltonian(ChainSpec(Topology.OPEN, 4, coupling_odd=2, coupling_even=3))
    assert h.to_lists() == [[0, 2, 0, 0], [2, 0, 3, 0], [0, 3, 0, 2], [0, 0, 2, 0]]


def test_degenerate_two_site_cycle_is_single_edge():
    h = build_hamiltonian(ChainSpec(Topology.CYCLIC, 2))
    assert h.to_lists() == [[0, 1], [1, 0]]


def test_build_rejects_alternating_odd_n():
    with pytest.raises(AlternatingOddN):
        ChainSpec(Topology.OPEN, 5, coupling_odd=1, coupling_even=2)


def test_build_rejects_one_site_cycle():
    with pytest.raises(CycleTooSmall):
        ChainSpec(Topology.CYCLIC, 1)


def test_float_couplings_rejected():
    with pytest.raises(TypeError):
        ChainSpec(Topology.OPEN, 4, coupling_odd=0.5)


@given(n=st.integers(1, 40),
       topology=st.sampled_from([Topology.OPEN, Topology.CYCLIC]))
def test_hamiltonian_symmetric_zero_diagonal(n, topology):
    if topology is Topology.CYCLIC and n < 2:
        n = 2
    h = build_hamiltonian(ChainSpec(topology, n))
    assert h.is_symmetric()
    assert all(h.get(i, i) == 0 for i in range(n))


def test_eigenvalues_two_sites():
    system = analytic_eigensystem(ChainSpec(Topology.OPEN, 2))
    assert np.allclose(system.eigenvalues, [1.0, -1.0])


def test_eigenvalue_single_site():
    system = analytic_eigensystem(ChainSpec(Topology.OPEN, 1))
    assert abs(system.eigenvalues[0]) < 1e-15


def test_cyclic_six_contains_band_edges():
    system = analytic_eigensystem(ChainSpec(Topology.CYCLIC, 6))
    assert system.eigenvalues[0] == pytest.approx(2.0, abs=1e-12)
    assert system.eigenvalues[3] == pytest.approx(-2.0, abs=1e-12)


def test_eigensystem_rejects_alternating():
    with pytest.raises(UnsupportedCouplings):
        analytic_eigensystem(ChainSpec(Topology.OPEN, 4, coupling_odd=2, coupling_even=2))


@pytest.mark.parametrize("topology", [Topology.OPEN, Topology.CYCLIC])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 13, 34, 100, 251, 500])
def test_eigensystem_residual_and_norms(topology, n):
    if topology is Topology.CYCLIC and n < 3:
        pytest.skip("cycle needs three sites")
    spec = ChainSpec(topology, n)
    system = analytic_eigensystem(spec)
    h = build_hamiltonian(spec).to_float()
    residual = np.max(np.abs(h @ system.eigenvectors
                             - system.eigenvectors * system.eigenvalues))
    assert residual <= 1e-10
    norms = np.linalg.norm(system.eigenvectors, axis=0)
    assert np.max(np.abs(norms - 1.0)) <= 1e-12


@settings(max_examples=60)
@given(n=st.integers(1, 500))
def test_open_eigenvalue_pairing(n):
    lam = analytic_eigensystem(ChainSpec(Topology.OPEN, n)).eigenvalues
    paired = lam + lam[::-1]
    assert np.max(np.abs(paired)) <= 1e-12


def test_resolvent_two_sites_off_diagonal():
    # Oracle: eigenpairs are C = sqrt(2/3) sin(r k pi/3), eps = (1, -1);
    # the two-term sum C_11 C_21/(0-1) + C_12 C_22/(0+1) = -1/2 - 1/2 = -1,
    # which equals G(1,2) of the closed form.
    spec = ChainSpec(Topology.OPEN, 2)
    value = spectral_resolvent_entry(spec, 1, 2, 0.0)
    assert value == pytest.approx(-1.0, abs=1e-12)
    assert value == pytest.approx(float(green_open(GreenEntryQuery(spec, 1, 2))),
                                  abs=1e-12)


def test_resolvent_two_sites_diagonal_cancels():
    assert spectral_resolvent_entry(ChainSpec(Topology.OPEN, 2), 1, 1, 0.0) \
        == pytest.approx(0.0, abs=1e-14)


def test_resolvent_pole_for_odd_chain():
    with pytest.raises(EnergyAtPole):
        spectral_resolvent_entry(ChainSpec(Topology.OPEN, 3), 1, 2, 0.0)


def test_resolvent_pole_near_eigenvalue():
    with pytest.raises(EnergyAtPole):
        spectral_resolvent_entry(ChainSpec(Topology.OPEN, 2), 1, 2, 1.0 + 5e-10)


@pytest.mark.parametrize("n", [2, 6, 20, 50, 200])
def test_resolvent_at_zero_matches_closed_form(n):
    spec = ChainSpec(Topology.OPEN, n)
    g = green_matrix(spec)
    rng = np.random.default_rng(7)
    pairs = {(1, 1), (1, n), (n // 2, n // 2 + 1)}
    pairs.update((int(rng.integers(1, n + 1)), int(rng.integers(1, n + 1)))
                 for _ in range(20))
    for r, s in sorted(pairs):
        want = float(g.get(r - 1, s - 1))
        assert spectral_resolvent_entry(spec, r, s, 0.0) == pytest.approx(
            want, abs=1e-9)


def test_resolvent_away_from_zero_matches_dense_resolvent():
    spec = ChainSpec(Topology.OPEN, 8)
    h = build_hamiltonian(spec).to_float()
    energy = 0.35
    dense = np.linalg.inv(energy * np.eye(8) - h)
    for r, s in ((1, 1), (2, 7), (4, 4)):
        assert spectral_resolvent_entry(spec, r, s, energy) == pytest.approx(
            dense[r - 1, s - 1], abs=1e-10)


def test_transmission_from_closed_form_matrix():
    g = green_matrix(ChainSpec(Topology.OPEN, 6))
    assert transmission_proxy(g, 1, 2) == 1
    assert transmission_proxy(g, 1, 3) == 0


def test_transmission_alternating_quarter():
    # Oracle: invert [[0,2],[2,0]] directly; G = -inverse has G(2,1) = -1/2.
    spec = ChainSpec(Topology.OPEN, 2, coupling_odd=2, coupling_even=1)
    h = build_hamiltonian(spec)
    inv = cofactor_inverse(h.to_lists())
    g = ExactMatrix.from_rows([[-x for x in row] for row in inv])
    assert g.get(1, 0) == Fraction(-1, 2)
    assert transmission_proxy(g, 2, 1) == Fraction(1, 4)


def test_transmission_index_out_of_range():
    g = green_matrix(ChainSpec(Topology.OPEN, 4))
    with pytest.raises(IndexOutOfRange):
        transmission_proxy(g, 0, 1)
    with pytest.raises(IndexOutOfRange):
        transmission_proxy(g, 1, 5)
