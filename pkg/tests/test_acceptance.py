"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py`` for a plain summary.
"""

import sys
import time

import numpy as np
import pytest

import oracles
from qudit_concurrence import (
    DensityMatrix,
    PureState,
    catalog_state,
    check_secular,
    concurrence_vector_mixed,
    concurrence_vector_pure,
    entropy_bounds,
    entropy_from_norm_qubit,
    entropy_from_norm_qutrit,
    entropy_report,
    verify_commutators,
    build_ladder_set,
    positive_roots,
    werner,
)
from qudit_concurrence.entropy import entropy_envelope
from qudit_concurrence.subspace import edge_scan, enclosed_volume, surface_radius, SubspaceBasis

W = np.exp(2j * np.pi / 3)
T = 2 / 3

# concurrence vectors as printed for the named states
REFERENCE_VECTORS = {
    "su3.phi1": (T, 0, 0, 0, T, 0, 0, 0, T),
    "su3.phi2": (T * W.conjugate(), 0, 0, 0, T, 0, 0, 0, T * W),
    "su3.phi3": (T * W, 0, 0, 0, T, 0, 0, 0, T * W.conjugate()),
    "su3.psi+1": (-1, 0, 0, 0, 0, 0, 0, 0, 0),
    "su3.psi-1": (1, 0, 0, 0, 0, 0, 0, 0, 0),
    "su3.psi+2": (0, 0, 0, 0, -1, 0, 0, 0, 0),
    "su3.psi-2": (0, 0, 0, 0, 1, 0, 0, 0, 0),
    "su3.psi+3": (0, 0, 0, 0, 0, 0, 0, 0, -1),
    "su3.psi-3": (0, 0, 0, 0, 0, 0, 0, 0, 1),
    "su3.phi4": (0, T, 0, 0, 0, -T, -T, 0, 0),
    "so3.chi+1": (-1, 0, 0, 0, 0, 0, 0, 0, 0),
    "so3.chi-1": (1, 0, 0, 0, 0, 0, 0, 0, 0),
    "so3.chi+m1": (0, 0, 0, 0, -1, 0, 0, 0, 0),
    "so3.chi-m1": (0, 0, 0, 0, 1, 0, 0, 0, 0),
    "so3.chi-0": (0, 0, 0, 0, 0, 0, 0, 0, 1),
    "so3.chi+0": (0, -T, 0, -T, 0, 0, 0, 0, -1 / 3),
    "so3.chi00": (0, T, 0, T, 0, 0, 0, 0, -T),
    "so3.phi+": (0, 0, 0, 0, 0, 0, 0, 0, 1),
    "so3.phi-": (0, 0, 0, 0, 0, 0, 0, 0, -1),
}

RESULTS = {}


def report(capsys, number, ok, detail, elapsed):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}  [{elapsed:.2f}s]"
    RESULTS[number] = ok
    with capsys.disabled():
        print("\n" + line)
    return ok


def _entangled_coeffs(rng, n):
    """Random n x n state with Schmidt coefficients sorted and the second >= 0.1."""
    while True:
        k = rng.uniform(0, 1, size=n)
        k = np.sort(k / np.linalg.norm(k))[::-1]
        if k[1] >= 0.1:
            break
    u = oracles.random_unitary(rng, n)
    v = oracles.random_unitary(rng, n)
    return u @ np.diag(k) @ v.T


def test_criterion_01_algebra(capsys):
    t0 = time.perf_counter()
    worst = 0.0
    counts_ok = True
    for n in range(2, 9):
        rep = verify_commutators(build_ladder_set(n))
        worst = max(worst, rep.max_residual)
        counts_ok &= len(positive_roots(n)) == n * (n - 1) // 2
    dt = time.perf_counter() - t0
    ok = worst == 0.0 and counts_ok and dt < 1.0
    report(capsys, 1, ok, f"max residual {worst:.1e}, root counts {'ok' if counts_ok else 'wrong'}", dt)
    assert ok


def test_criterion_02_reference_vectors(capsys):
    t0 = time.perf_counter()
    worst = 0.0
    for name, expected in REFERENCE_VECTORS.items():
        got = concurrence_vector_pure(catalog_state(name)).components
        worst = max(worst, float(np.max(np.abs(got - np.array(expected)))))
    dt = time.perf_counter() - t0
    ok = worst < 1e-12 and dt < 1.0
    report(capsys, 2, ok, f"{len(REFERENCE_VECTORS)} vectors, max deviation {worst:.1e}", dt)
    assert ok


def test_criterion_03_reference_norms(capsys):
    t0 = time.perf_counter()
    cases = [(f"su3.phi{k}", 4 / 3) for k in range(1, 10)]
    cases += [("so3.chi00", 4 / 3)]
    cases += [(f"so3.chi-{j}", 1.0) for j in ("1", "0", "m1")]
    worst = max(abs(concurrence_vector_pure(catalog_state(n)).norm_sq - v) for n, v in cases)
    dt = time.perf_counter() - t0
    ok = worst < 1e-12
    report(capsys, 3, ok, f"{len(cases)} norms, max deviation {worst:.1e}", dt)
    assert ok


def test_criterion_04_minor_spectral_identities(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(4)
    worst = 0.0
    for shape in [(2, 2), (2, 3), (3, 3), (4, 4)]:
        for _ in range(100):
            a = oracles.random_coeffs(rng, *shape)
            c2 = concurrence_vector_pure(PureState(a)).norm_sq
            worst = max(worst, abs(c2 - oracles.minors_norm_sq(a)),
                        abs(c2 - oracles.spectral_norm_sq(a)))
    dt = time.perf_counter() - t0
    ok = worst < 1e-10 and dt < 5.0
    report(capsys, 4, ok, f"400 states, max deviation {worst:.1e}", dt)
    assert ok


def test_criterion_05_wootters_reduction(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(100):
        rho = oracles.random_density(rng, 4, rank=int(rng.integers(1, 5)))
        got = concurrence_vector_mixed(DensityMatrix(rho, 2, 2)).norm
        worst = max(worst, abs(got - oracles.wootters_concurrence(rho)))
    werner_worst = 0.0
    for p in (0.0, 0.2, 1 / 3, 0.5, 0.8, 1.0):
        got = concurrence_vector_mixed(werner(p)).norm
        werner_worst = max(werner_worst, abs(got - oracles.werner_concurrence(p)))
    dt = time.perf_counter() - t0
    ok = worst < 1e-8 and werner_worst < 1e-8 and dt < 10.0
    report(capsys, 5, ok, f"random max dev {worst:.1e}, Werner max dev {werner_worst:.1e}", dt)
    assert ok


def test_criterion_06_entropy_relations(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    qubit_dev = 0.0
    for _ in range(50):
        a = oracles.random_coeffs(rng, 2, 3)
        ps = PureState(a)
        exact = oracles.von_neumann_bits(np.linalg.eigvalsh(a @ a.conj().T))
        qubit_dev = max(qubit_dev, abs(entropy_from_norm_qubit(concurrence_vector_pure(ps).norm) - exact))
    qutrit_dev = 0.0
    for _ in range(50):
        a = oracles.random_coeffs(rng, 3, 3)
        ps = PureState(a)
        rho_b = a.conj().T @ a
        exact = oracles.von_neumann_bits(np.linalg.eigvalsh(rho_b))
        det_b = float(np.linalg.det(rho_b).real)
        got = entropy_from_norm_qutrit(concurrence_vector_pure(ps).norm, det_b)
        qutrit_dev = max(qutrit_dev, abs(got - exact))
    linear_dev = 0.0
    secular = 0.0
    for _ in range(100):
        ps = PureState(oracles.random_coeffs(rng, 3, 3))
        linear_dev = max(linear_dev, abs(entropy_report(ps).linear - concurrence_vector_pure(ps).norm_sq / 2))
        secular = max(secular, check_secular(ps))
    for shape in [(2, 2), (2, 3), (3, 3)]:
        for _ in range(20):
            secular = max(secular, check_secular(PureState(oracles.random_coeffs(rng, *shape))))
    dt = time.perf_counter() - t0
    ok = qubit_dev < 1e-10 and qutrit_dev < 1e-8 and linear_dev < 1e-10 and secular < 1e-10
    report(capsys, 6, ok, f"qubit {qubit_dev:.1e}, qutrit {qutrit_dev:.1e}, "
                  f"linear {linear_dev:.1e}, secular {secular:.1e}", dt)
    assert ok


def test_criterion_07_entropy_endpoints(capsys):
    t0 = time.perf_counter()
    lo0, hi0 = entropy_bounds(0.0)
    lo1, hi1 = entropy_bounds(np.sqrt(4 / 3))
    env = entropy_envelope(np.linspace(0, np.sqrt(4 / 3), 50))
    monotone = bool(np.all(np.diff(env[:, 1]) >= -1e-12) and np.all(np.diff(env[:, 2]) >= -1e-12))
    dev = max(abs(lo0), abs(hi0), abs(lo1 - np.log2(3)), abs(hi1 - np.log2(3)))
    dt = time.perf_counter() - t0
    ok = dev < 1e-6 and monotone
    report(capsys, 7, ok, f"endpoint dev {dev:.1e}, envelope {'monotone' if monotone else 'not monotone'}", dt)
    assert ok


def test_criterion_08_volumes(capsys):
    t0 = time.perf_counter()
    checks = []
    times = []
    for basis, target, kind, tol in [
        ("su3.psi-", 4 * np.pi / 3, "abs", 1e-4),
        ("so3.pentad", 3.18868, "abs", 5e-3),
        ("so3.singlet-phi", 2.75916, "abs", 5e-3),
        ("su3.phi", 4 * np.pi / 3 * 1.135, "rel", 1e-2),
    ]:
        s = time.perf_counter()
        v = enclosed_volume(SubspaceBasis.from_catalog(basis), 400, 400)
        times.append(time.perf_counter() - s)
        err = abs(v - target) if kind == "abs" else abs(v - target) / target
        checks.append((basis, v, err < tol))
    dt = time.perf_counter() - t0
    ok = all(c[2] for c in checks) and max(times) < 30.0
    detail = ", ".join(f"{b}={v:.6f}" for b, v, _ in checks)
    report(capsys, 8, ok, detail, dt)
    assert ok


def test_criterion_09_edge_detection(capsys):
    t0 = time.perf_counter()
    scan = edge_scan()
    target = np.array([np.sqrt(2) / 3, 1 / 3])
    hits = [z for z in scan.zeros if np.allclose(np.abs(z[:2]), target, atol=1e-6)]
    r = float(surface_radius(SubspaceBasis.from_catalog("su3.phi"),
                             np.arccos(1 / np.sqrt(3)), np.pi / 4))
    dt = time.perf_counter() - t0
    ok = len(hits) > 0 and hits[0][2] < 1e-8 and r < 1e-10
    detail = (f"zero at p={hits[0][0]:.7f}, q={hits[0][1]:.7f}, |C|={hits[0][2]:.1e}; "
              if hits else "no zero found; ")
    report(capsys, 9, ok, detail + f"r(phi1+phi2+phi3)={r:.1e}", dt)
    assert ok


def test_criterion_10_separability_gate(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(10)
    shapes = [(2, 2), (2, 3), (3, 3), (4, 4)]
    worst_product = 0.0
    for k in range(100):
        a = oracles.random_product_coeffs(rng, *shapes[k % 4])
        worst_product = max(worst_product, concurrence_vector_pure(PureState(a)).norm_sq)
    least_entangled = np.inf
    for k in range(100):
        a = _entangled_coeffs(rng, 2 + k % 3)
        least_entangled = min(least_entangled, concurrence_vector_pure(PureState(a)).norm_sq)
    dt = time.perf_counter() - t0
    ok = worst_product < 1e-20 and least_entangled > 1e-3
    report(capsys, 10, ok, f"product max {worst_product:.1e}, entangled min {least_entangled:.1e}", dt)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
