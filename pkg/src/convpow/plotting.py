"""Plot outputs: sampled data files, a gnuplot script, and a rendered figure.

The data files hold exact values printed as decimals; the gnuplot script
references them but is never executed by this package.  A matplotlib render
of the same data is written alongside so the report is viewable without
gnuplot installed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .kernel import SplineKernel


@dataclass(frozen=True)
class PlotJob:
    n: int
    derivative_orders: tuple[int, ...]
    samples_per_unit: int
    output_dir: Path
    render_figure: bool = True

    def __post_init__(self) -> None:
        if not self.derivative_orders:
            raise ValueError("need at least one derivative order")
        bad = [d for d in self.derivative_orders if not 0 <= d <= self.n - 1]
        if bad:
            raise ValueError(f"derivative order {bad[0]} out of range 0..{self.n - 1}")
        if self.samples_per_unit < 2:
            raise ValueError("need at least 2 samples per unit interval")
        object.__setattr__(self, "output_dir", Path(self.output_dir))


def sample_rows(kernel: SplineKernel, d: int, samples_per_unit: int) -> list[tuple[float, float]]:
    """Exact values of the d-th derivative on the uniform grid, as floats."""
    f = kernel.to_piecewise(d)
    rows = []
    for j in range(kernel.n * samples_per_unit + 1):
        x = Fraction(j, samples_per_unit)
        rows.append((float(x), float(f(x))))
    return rows


def data_file_name(n: int, d: int) -> str:
    return f"convpow_n{n}_d{d}.dat"


def script_file_name(n: int) -> str:
    return f"convpow_n{n}.gp"


def figure_file_name(n: int) -> str:
    return f"convpow_n{n}.png"


def write_data_file(path: Path, rows: list[tuple[float, float]]) -> None:
    lines = [f"{x:.15g} {y:.15g}" for x, y in rows]
    path.write_text("\n".join(lines) + "\n")


def write_gnuplot_script(path: Path, n: int, orders: tuple[int, ...]) -> None:
    plots = ", \\\n  ".join(
        f'"{data_file_name(n, d)}" using 1:2 with lines title "derivative {d}"'
        for d in orders
    )
    script = (
        f'set title "convolution power n = {n}"\n'
        'set xlabel "x"\n'
        'set ylabel "value"\n'
        "set grid\n"
        f"plot \\\n  {plots}\n"
    )
    path.write_text(script)


def render_figure(path: Path, n: int, sampled: dict[int, list[tuple[float, float]]]) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 5))
    for d, rows in sampled.items():
        xs = [r[0] for r in rows]
        ys = [r[1] for r in rows]
        ax.plot(xs, ys, label=f"derivative {d}")
    ax.set_title(f"convolution power n = {n}")
    ax.set_xlabel("x")
    ax.set_ylabel("value")
    ax.grid(True)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def run_plot_job(job: PlotJob) -> list[Path]:
    """Write all plot outputs; returns the created paths."""
    kernel = SplineKernel.of_power(job.n)
    job.output_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    sampled: dict[int, list[tuple[float, float]]] = {}
    for d in job.derivative_orders:
        rows = sample_rows(kernel, d, job.samples_per_unit)
        sampled[d] = rows
        path = job.output_dir / data_file_name(job.n, d)
        write_data_file(path, rows)
        written.append(path)
    script = job.output_dir / script_file_name(job.n)
    write_gnuplot_script(script, job.n, job.derivative_orders)
    written.append(script)
    if job.render_figure:
        figure = job.output_dir / figure_file_name(job.n)
        render_figure(figure, job.n, sampled)
        written.append(figure)
    return written
