"""Cross-method verification suites.

Each check pits at least two independent routes against each other (closed
form vs. engine, exact vs. float, predicate vs. exhaustive search) and
reports a worst residual.  Exact comparisons report 0.0 on success and 1.0
on any mismatch.  Checks run in a fixed order and all randomness flows
from the seed, so reports are byte-reproducible.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np

from . import closed_form, trig
from .chains import ChainSpec, Topology, build_hamiltonian
from .circulant import (cyclic_inverse_first_column, cyclic_kernel_basis,
                        det_cyclic, symbol_factorization_inverse)
from .closed_form import GreenEntryQuery, green_matrix
from .errors import SingularMatrix
from .exact import ExactMatrix, det_fraction_free, inverse_exact, mat_vec
from .lattice import (LatticeSpec, build_lattice_hamiltonian,
                      lattice_green_matrix, lattice_spectrum)
from .oracle import lu_inverse, symmetric_eigenvalues
from .tridiagonal import TridiagonalSpec, usmani_inverse
from .vanishing_sums import (InvertibilityQuery, cosine_sum_is_zero_exact,
                             find_vanishing_witness, is_invertible,
                             roots_of_unity_sum_is_zero,
                             smallest_prime_divisor)

SUITES = ("open", "cyclic", "alternating", "lattice", "numbertheory", "trig")

_ZERO = Fraction(0)
_ALLOWED_OPEN = {Fraction(-1), _ZERO, Fraction(1)}
_ALLOWED_CYCLIC = {Fraction(-1, 2), _ZERO, Fraction(1, 2)}


def _check(check_id: str, passed: bool, residual: float = 0.0) -> dict:
    return {"id": check_id, "passed": bool(passed), "residual": float(residual)}


def _exact(check_id: str, ok: bool) -> dict:
    return _check(check_id, ok, 0.0 if ok else 1.0)


def _open_identity_holds(g: ExactMatrix) -> bool:
    """H1 (-G) = I checked exactly, using the tridiagonal structure of H1."""
    n = g.rows
    m = [[-x for x in g.row(i)] for i in range(n)]
    for i in range(n):
        above = m[i - 1] if i > 0 else [_ZERO] * n
        below = m[i + 1] if i + 1 < n else [_ZERO] * n
        for j in range(n):
            want = 1 if i == j else 0
            if above[j] + below[j] != want:
                return False
    return True


def _cyclic_identity_holds(g: ExactMatrix) -> bool:
    n = g.rows
    m = [[-x for x in g.row(i)] for i in range(n)]
    for i in range(n):
        up, down = m[(i - 1) % n], m[(i + 1) % n]
        for j in range(n):
            if up[j] + down[j] != (1 if i == j else 0):
                return False
    return True


def suite_open(max_n: int, rng: random.Random) -> list[dict]:
    sizes = range(2, max_n + 1, 2)
    vs_usmani = identity = entries = True
    vs_numeric = 0.0
    harmonic = 0.0
    for n in sizes:
        spec = ChainSpec(Topology.OPEN, n)
        g = green_matrix(spec)
        vs_usmani &= (-usmani_inverse(TridiagonalSpec.from_chain(spec))) == g
        identity &= _open_identity_holds(g)
        entries &= set(g._data) <= _ALLOWED_OPEN
        gf = g.to_float()
        vs_numeric = max(vs_numeric, float(np.max(np.abs(
            -lu_inverse(build_hamiltonian(spec).to_float()) - gf))))
        harmonic = max(harmonic, float(np.max(np.abs(
            trig.direct_green_matrix(n) - gf))))
    n = max(2, max_n - max_n % 2)
    semi = _semiseparable_upper(green_matrix(ChainSpec(Topology.OPEN, n)))
    return [
        _exact("open.closed_vs_usmani", vs_usmani),
        _exact("open.identity", identity),
        _exact("open.entries_pm1", entries),
        _check("open.vs_numeric", vs_numeric <= 1e-10, vs_numeric),
        _check("open.harmonic_sum", harmonic <= 1e-9, harmonic),
        _exact("open.semiseparable", semi),
    ]


def _semiseparable_upper(g: ExactMatrix) -> bool:
    """Every 2x2 minor taken on-or-above the diagonal vanishes."""
    n = g.rows
    for i1 in range(n):
        for i2 in range(i1 + 1, n):
            for j1 in range(i2, n):
                for j2 in range(j1 + 1, n):
                    if (g.get(i1, j1) * g.get(i2, j2)
                            != g.get(i1, j2) * g.get(i2, j1)):
                        return False
    return True


def suite_cyclic(max_n: int, rng: random.Random) -> list[dict]:
    routes = identity = pattern = symmetric = True
    for n in range(3, max_n + 1):
        if n % 4 == 0:
            continue
        rec = cyclic_inverse_first_column(n)
        routes &= symbol_factorization_inverse(n).first_column == rec.first_column
        g = ExactMatrix.from_rows(
            [[-rec.first_column[(r - s) % n] for s in range(n)] for r in range(n)])
        identity &= _cyclic_identity_holds(g)
        pattern &= _cyclic_pattern_holds(n, rec.first_column)
        symmetric &= rec.is_symmetric
    dets = all(det_cyclic(n) == det_fraction_free(
        build_hamiltonian(ChainSpec(Topology.CYCLIC, n)))
        for n in range(2, min(max_n, 64) + 1))
    kernels = True
    for n in range(4, max_n + 1, 4):
        h = build_hamiltonian(ChainSpec(Topology.CYCLIC, n))
        for v in cyclic_kernel_basis(n):
            kernels &= all(x == 0 for x in mat_vec(h, [Fraction(c) for c in v]))
    return [
        _exact("cyclic.recurrence_vs_symbol", routes),
        _exact("cyclic.identity", identity),
        _exact("cyclic.mod4_patterns", pattern),
        _exact("cyclic.symmetric_circulant", symmetric),
        _exact("cyclic.det_table", dets),
        _exact("cyclic.kernel", kernels),
    ]


_DIAG_PATTERNS = {1: (1, 1, -1, -1), 2: (0, 1, 0, -1), 3: (-1, 1, 1, -1)}


def _cyclic_pattern_holds(n: int, column) -> bool:
    base = _DIAG_PATTERNS[n % 4]
    if set(column) - _ALLOWED_CYCLIC:
        return False
    return all(2 * column[k] == base[k % 4] for k in range(n))


def _random_coupling(rng: random.Random) -> Fraction:
    num = rng.choice([x for x in range(-5, 6) if x])
    return Fraction(num, rng.randint(1, 5))


def suite_alternating(max_n: int, rng: random.Random) -> list[dict]:
    open_ok = cyclic_ok = True
    for _ in range(100):
        beta, alpha = _random_coupling(rng), _random_coupling(rng)
        n_open = 2 * rng.randint(1, max(1, max_n // 2))
        spec = ChainSpec(Topology.OPEN, n_open, beta, alpha)
        open_ok &= green_matrix(spec) == -inverse_exact(build_hamiltonian(spec))
        n_cyc = 2 * rng.randint(2, max(2, max_n // 2))
        spec = ChainSpec(Topology.CYCLIC, n_cyc, beta, alpha)
        try:
            g = green_matrix(spec)
        except SingularMatrix:
            continue    # vanishing geometric denominator: genuinely singular
        cyclic_ok &= g == -inverse_exact(build_hamiltonian(spec))
    reduce_open = all(
        green_matrix(ChainSpec(Topology.OPEN, n, 1, 1))
        == green_matrix(ChainSpec(Topology.OPEN, n))
        for n in range(2, max_n + 1, 2))
    reduce_cyclic = True
    for n in range(6, max_n + 1, 4):
        uniform = green_matrix(ChainSpec(Topology.CYCLIC, n))
        alt = ExactMatrix.from_rows(
            [[closed_form.green_cyclic_bond_alternating(
                GreenEntryQuery(ChainSpec(Topology.CYCLIC, n), r, s))
              for s in range(1, n + 1)] for r in range(1, n + 1)])
        reduce_cyclic &= alt == uniform
    return [
        _exact("alternating.open_vs_exact_inverse", open_ok),
        _exact("alternating.cyclic_vs_exact_inverse", cyclic_ok),
        _exact("alternating.uniform_reduction_open", reduce_open),
        _exact("alternating.uniform_reduction_cyclic", reduce_cyclic),
    ]


def suite_lattice(max_n: int, rng: random.Random) -> list[dict]:
    spectrum = 0.0
    for d in (1, 2, 3):
        for n in range(2, min(max_n, 6) + 1):
            spec = LatticeSpec(d, n)
            analytic = np.sort(lattice_spectrum(spec).ravel())
            numeric = symmetric_eigenvalues(build_lattice_hamiltonian(spec).to_float())
            spectrum = max(spectrum, float(np.max(np.abs(analytic - numeric))))
    zeros_ok = all(
        int(np.sum(np.abs(lattice_spectrum(LatticeSpec(2, n))) < 1e-9)) == n
        for n in range(1, min(max_n, 30) + 1))
    residual = 0.0
    for d, n in ((3, 2), (3, 4), (1, max(2, min(max_n, 20) // 2 * 2))):
        spec = LatticeSpec(d, n)
        h = build_lattice_hamiltonian(spec).to_float()
        g = lattice_green_matrix(spec)
        residual = max(residual, float(np.max(np.abs(
            h @ g + np.eye(spec.total_sites)))))
    reduction = 0.0
    for n in range(2, min(max_n, 50) + 1, 2):
        g1 = lattice_green_matrix(LatticeSpec(1, n))
        gc = green_matrix(ChainSpec(Topology.OPEN, n)).to_float()
        reduction = max(reduction, float(np.max(np.abs(g1 - gc))))
    return [
        _check("lattice.spectrum_vs_numeric", spectrum <= 1e-8, spectrum),
        _exact("lattice.d2_zero_count", zeros_ok),
        _check("lattice.green_residual", residual <= 1e-8, residual),
        _check("lattice.d1_reduction", reduction <= 1e-10, reduction),
    ]


def suite_numbertheory(max_n: int, rng: random.Random) -> list[dict]:
    agree = sound = True
    float_worst = 0.0
    for d in (1, 3, 5, 7):
        cap = min(max_n, 21 if d == 7 else 45)
        for n in range(3, cap + 1, 2):
            query = InvertibilityQuery(d, n)
            witness = find_vanishing_witness(query)
            agree &= is_invertible(query) == (witness is None)
            if witness is not None:
                sound &= cosine_sum_is_zero_exact(n, witness.ks)
                value = abs(sum(math.cos(k * math.pi / n) for k in witness.ks))
                float_worst = max(float_worst, value)
    evens = all(
        find_vanishing_witness(InvertibilityQuery(d, n)) is not None
        for n in range(2, min(max_n, 30) + 1, 2) for d in (1, 2, 3))
    pairs = all(
        find_vanishing_witness(InvertibilityQuery(2, n)) is not None
        for n in range(3, min(max_n, 30) + 1))
    primes = all(
        roots_of_unity_sum_is_zero(p, range(p))
        for p in range(2, 51) if smallest_prime_divisor(p) == p)
    ranks = True
    for d in (1, 2, 3):
        for n_sites in range(1, 5):
            h = build_lattice_hamiltonian(LatticeSpec(d, n_sites)).to_float()
            eigs = symmetric_eigenvalues(h)
            singular = bool(np.min(np.abs(eigs)) < 1e-9)
            ranks &= is_invertible(InvertibilityQuery(d, n_sites + 1)) == (not singular)
    return [
        _exact("numbertheory.predicate_vs_search", agree),
        _check("numbertheory.witness_soundness", sound and float_worst <= 1e-12,
               float_worst),
        _exact("numbertheory.even_cases_have_witnesses", evens and pairs),
        _exact("numbertheory.prime_symmetric_sums", primes),
        _exact("numbertheory.matrix_rank_agreement", ranks),
    ]


def suite_trig(max_n: int, rng: random.Random) -> list[dict]:
    grid_worst = 0.0
    thetas = [0.01 + (math.pi - 0.02) * i / 19 for i in range(20)]
    for nprime in range(1, 51):
        for theta in thetas:
            direct_c = trig.kahan_sum(math.cos(m * theta) for m in range(nprime + 1))
            direct_s = trig.kahan_sum(math.sin(m * theta) for m in range(nprime + 1))
            grid_worst = max(grid_worst,
                             abs(trig.sum_cos(nprime, theta) - direct_c),
                             abs(trig.sum_sin(nprime, theta) - direct_s))
    ratio_ok = True
    for n in range(2, min(max_n, 100) + 1, 2):
        for k in range(1, 3 * n + 1):
            if k % (n + 1) == 0:
                continue
            ratio_ok &= trig.sine_ratio_sign(n, k) == (1 if k % 2 else -1)
    parity_worst = 0.0
    for n in range(2, max_n + 1, 2):
        for q in range(1, n // 2 + 1):
            parity_worst = max(parity_worst, abs(trig.parity_zero_sum(n, q)))
    direct_worst = 0.0
    for n in range(2, max_n + 1, 2):
        diff = np.abs(trig.direct_green_matrix(n)
                      - green_matrix(ChainSpec(Topology.OPEN, n)).to_float())
        direct_worst = max(direct_worst, float(np.max(diff)))
    return [
        _check("trig.closed_sums", grid_worst <= 1e-11, grid_worst),
        _exact("trig.sine_ratio", ratio_ok),
        _check("trig.parity_zero", parity_worst <= 1e-10, parity_worst),
        _check("trig.direct_vs_closed", direct_worst <= 1e-9, direct_worst),
    ]


_SUITE_RUNNERS = {
    "open": suite_open,
    "cyclic": suite_cyclic,
    "alternating": suite_alternating,
    "lattice": suite_lattice,
    "numbertheory": suite_numbertheory,
    "trig": suite_trig,
}


def run_suite(suite: str, max_n: int, seed: int) -> list[dict]:
    """Run one suite (or "all") and return its ordered check results."""
    names = SUITES if suite == "all" else (suite,)
    results: list[dict] = []
    for name in names:
        rng = random.Random(seed)
        results.extend(_SUITE_RUNNERS[name](max_n, rng))
    return results
