"""Acceptance suite: every criterion asserted at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion.
"""

import subprocess
import sys
import time
from fractions import Fraction

from convpow.kernel import SplineKernel, alternating_binomial
from convpow.oracle import compare, numeric_convolution_power
from convpow.piecewise import PiecewisePoly, box, continuity_order
from convpow.polynomial import Poly
from convpow.splinespace import (
    Partition,
    build_basis,
    check_independence,
    partition_of_unity,
    plateau_pieces,
)


def report(name: str, ok: bool, detail: str = "") -> None:
    suffix = f"  [{detail}]" if detail else ""
    print(f"{name}: {'PASS' if ok else 'FAIL'}{suffix}")
    assert ok, name


def kernel_pw(n: int, d: int = 0) -> PiecewisePoly:
    return SplineKernel.of_power(n).to_piecewise(d)


def test_criterion_1_triangle_pieces():
    start = time.perf_counter()
    expected = PiecewisePoly.from_pieces([0, 1, 2], [Poly.of(0, 1), Poly.of(1, -1)])
    ok = kernel_pw(2) == expected
    elapsed = time.perf_counter() - start
    report(
        "criterion 1 (triangle equals the explicit pieces, < 10 ms)",
        ok and elapsed < 0.010,
        f"{elapsed * 1000:.2f} ms",
    )


def test_criterion_2_recursion_equals_iterated_convolution():
    start = time.perf_counter()
    iterated = box(0, 1)
    ok = True
    for n in range(2, 9):
        iterated = iterated.convolve_with_box(0, 1)
        ok = ok and iterated == kernel_pw(n)
    elapsed = time.perf_counter() - start
    report(
        "criterion 2 (recursion equals iterated convolution, n <= 8, < 1 s)",
        ok and elapsed < 1.0,
        f"{elapsed:.3f} s",
    )


def test_criterion_3_derivative_difference_identity():
    ok = True
    for n in range(2, 13):
        previous = kernel_pw(n - 1)
        ok = ok and kernel_pw(n, 1) == previous - previous.translate(1)
    report("criterion 3 (derivative is difference of translates, n = 2..12)", ok)


def test_criterion_4_top_derivative_alternating_pascal():
    ok = True
    for n in range(2, 13):
        expected = tuple(Poly.of(alternating_binomial(n - 1, k)) for k in range(n))
        ok = ok and kernel_pw(n, n - 1).pieces == expected
    report("criterion 4 (top derivative is the alternating Pascal row, n = 2..12)", ok)


def test_criterion_5_kernel_properties():
    ok = True
    for n in range(1, 31):
        f = kernel_pw(n)
        ok = ok and f.mass() == 1
        ok = ok and all(f(Fraction(j, 16)) >= 0 for j in range(16 * n + 1))
        ok = ok and f.reflect(n) == f
        if n >= 2:
            ok = ok and continuity_order(f, n - 2, include_ends=True) == n - 2
    report("criterion 5 (integral one, nonnegative, symmetric, C^(n-2), n = 1..30)", ok)


def test_criterion_6_partition_of_unity():
    ok = True
    for n in range(2, 11):
        unity = partition_of_unity(SplineKernel.of_power(n), n)
        plateau = plateau_pieces(unity, n - 1, n)
        ok = ok and plateau == (Poly.of(1),)
    report("criterion 6 (n translates sum to the constant 1 on the plateau, n = 2..10)", ok)


def test_criterion_7_oracle_agreement():
    worst = 0.0
    for n in range(2, 9):
        deviation = compare(kernel_pw(n), numeric_convolution_power(n, Fraction(1, 256)))
        worst = max(worst, deviation)
    ok = worst <= 1e-2
    ratios = []
    for n in (3, 4):
        coarse = compare(kernel_pw(n), numeric_convolution_power(n, Fraction(1, 256)))
        fine = compare(kernel_pw(n), numeric_convolution_power(n, Fraction(1, 512)))
        ratios.append(coarse / fine)
    ok = ok and all(r >= 1.8 for r in ratios)
    report(
        "criterion 7 (oracle deviation <= 1e-2 for n = 2..8; halving ratio >= 1.8)",
        ok,
        f"worst dev {worst:.2e}, ratios {', '.join(f'{r:.2f}' for r in ratios)}",
    )


def test_criterion_8_performance(tmp_path):
    start = time.perf_counter()
    plot = subprocess.run(
        [
            sys.executable, "-m", "convpow", "plot",
            "-n", "30", "-d", "0,1,2", "--samples", "64", "-o", str(tmp_path),
        ],
        capture_output=True,
        text=True,
    )
    plot_elapsed = time.perf_counter() - start
    start = time.perf_counter()
    matrix = subprocess.run(
        [sys.executable, "-m", "convpow", "matrix", "-n", "100", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    matrix_elapsed = time.perf_counter() - start
    ok = (
        plot.returncode == 0
        and plot_elapsed <= 5.0
        and matrix.returncode == 0
        and matrix_elapsed <= 10.0
        and len(matrix.stdout.strip().splitlines()) == 100
    )
    report(
        "criterion 8 (plot n=30 within 5 s; matrix n=100 within 10 s)",
        ok,
        f"plot {plot_elapsed:.2f} s, matrix {matrix_elapsed:.2f} s",
    )

    # figure-shape smoke test: the emitted n=30 data peaks at x = 15 with a
    # strictly monotone rise before it
    rows = [
        tuple(map(float, line.split()))
        for line in (tmp_path / "convpow_n30_d0.dat").read_text().splitlines()
    ]
    peak_index = max(range(len(rows)), key=lambda i: rows[i][1])
    smoke = rows[peak_index][0] == 15.0 and all(
        rows[i][1] < rows[i + 1][1] for i in range(peak_index)
    )
    report("criterion 8 smoke (n=30 data peaks at x=15, monotone rise before)", smoke)


def test_criterion_9_spline_basis():
    start = time.perf_counter()
    basis = build_basis(Partition.of(range(5)), SplineKernel.of_power(3))
    ok = len(basis.elements) == 4
    ok = ok and all(e.mass() == 1 for e in basis.elements)
    rep = check_independence(basis)
    ok = ok and rep.independent and rep.gram_determinant != 0
    ok = ok and all(
        continuity_order(e, 2, include_ends=True) == 2 for e in basis.elements
    )
    elapsed = time.perf_counter() - start
    report(
        "criterion 9 (4 unit-integral C^2 elements, nonzero Gram determinant, < 2 s)",
        ok and elapsed < 2.0,
        f"det {rep.gram_determinant}, {elapsed:.3f} s",
    )
