"""Command-line front end: a thin client over the core package.

Every command is deterministic (no randomness anywhere) and emits
byte-identical output for identical invocations.  CSV is the default
format; --format json mirrors the same columns as named fields with
numerically identical content.

System-size caps are read from the environment at invocation time:
SPINCHAIN_MAX_N bounds every command (default 14), SPINCHAIN_MAX_FULL_N
bounds full 2^N builds separately.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

import click

from . import __version__
from .basis import enumerate_sector
from .errors import DomainError, SpinChainError
from .formats import (
    crossings_rows,
    phase_rows,
    rows_to_csv,
    rows_to_json,
    spectrum_rows,
    sweep_rows,
    table1_rows,
    truncate6,
)
from .hamiltonian import build_sector_hamiltonian, coordinate_dump
from .model import ChainSpec, PathSpec, instantiate_path, make_xxx_chain, parse_model_file
from .observables import ground_state_report
from .spectrum import crossing_points, ferro_check, phase_boundaries, sector_minima, sweep

DEFAULT_MAX_N = 14
TABLE_RANGE = range(2, 13)


def _max_sites() -> int:
    env = os.environ.get("SPINCHAIN_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def _check_cap(n_sites: int) -> int:
    cap = _max_sites()
    if not 2 <= n_sites <= cap:
        raise click.ClickException(
            f"N={n_sites} outside supported range [2, {cap}] "
            "(set SPINCHAIN_MAX_N to raise the cap)"
        )
    return n_sites


def _load_model(model_path: str) -> ChainSpec:
    text = Path(model_path).read_text(encoding="utf-8")
    return parse_model_file(text)


def _xxx_like_sites(spec: ChainSpec) -> int:
    """Site count of a spec shaped like the uniform periodic chain.

    Path commands overwrite couplings along J = 1-t, h = t, so the model
    file only pins the system shape; anything but the ring preset shape is
    rejected to avoid silently discarding structure.
    """
    n = spec.n_sites
    ring = {(i, (i + 1) % n) for i in range(n)}
    got = {(b.i, b.j) for b in spec.bonds}
    ring_shaped = len(spec.bonds) == n and got == ring
    uniform_bonds = len({(b.jx, b.jy, b.jz) for b in spec.bonds}) == 1
    uniform_field = len(set(spec.hz)) == 1
    isotropic = all(b.jx == b.jy == b.jz for b in spec.bonds)
    if not (spec.periodic and ring_shaped and uniform_bonds and uniform_field and isotropic):
        raise DomainError(
            "path commands need the uniform periodic chain preset; "
            "this model has custom structure (use dump-matrix for it)"
        )
    return n


def _resolve_sites(n_sites: int | None, model: str | None) -> int:
    if (n_sites is None) == (model is None):
        raise click.ClickException("exactly one of --N and --model is required")
    if model is not None:
        n_sites = _xxx_like_sites(_load_model(model))
    return _check_cap(n_sites)


def _emit(text: str, out_path: str | None):
    if out_path is None:
        click.echo(text, nl=False)
    else:
        Path(out_path).write_text(text, encoding="utf-8")


def _render(header, rows, fmt: str) -> str:
    return rows_to_csv(header, rows) if fmt == "csv" else rows_to_json(header, rows)


def _parse_grid(spec: str) -> list[float]:
    try:
        lo_s, hi_s, step_s = spec.split(":")
        lo, hi, step = float(lo_s), float(hi_s), float(step_s)
    except ValueError:
        raise click.ClickException(f"grid must be lo:hi:step, got {spec!r}")
    if not (lo < hi and step > 0):
        raise click.ClickException(f"grid requires lo < hi and step > 0, got {spec!r}")
    if lo < 0.0 or hi > 1.0:
        raise click.ClickException("grid values must lie in [0, 1]")
    count = int((hi - lo) / step + 1e-9)
    values = [lo + i * step for i in range(count + 1)]
    return [min(v, hi) for v in values]


fmt_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
    show_default=True, help="Output format.",
)
out_option = click.option("--out", "out_path", type=click.Path(), default=None,
                          help="Write to a file instead of stdout.")
n_option = click.option("--N", "n_sites", type=int, default=None, help="Site count.")
model_option = click.option("--model", "model", type=click.Path(exists=True),
                            default=None, help="Model-spec JSON file.")


@click.group()
@click.version_option(version=__version__, prog_name="spinchain")
def cli():
    """Exact diagonalization toolkit for periodic spin-1/2 chains."""


@cli.command()
@n_option
@model_option
@click.option("--table1", is_flag=True, help="Emit rows for every N from 2 to 12.")
@fmt_option
@out_option
def crossings(n_sites, model, table1, fmt, out_path):
    """Ground-state level crossings on the coupling-field path."""
    try:
        if table1:
            cap = _max_sites()
            per_system = []
            for n in TABLE_RANGE:
                if n > cap:
                    raise click.ClickException(
                        f"table needs N up to 12 but the cap is {cap}"
                    )
                per_system.append((n, crossing_points(sector_minima(n))))
            header, rows = table1_rows(per_system)
        else:
            n = _resolve_sites(n_sites, model)
            header, rows = crossings_rows(n, crossing_points(sector_minima(n)))
        _emit(_render(header, rows, fmt), out_path)
    except SpinChainError as exc:
        raise click.ClickException(str(exc)) from exc


@cli.command(name="sweep")
@n_option
@model_option
@click.option("--grid", "grid", default="0:1:0.001", show_default=True,
              help="t grid as lo:hi:step.")
@fmt_option
@out_option
def sweep_cmd(n_sites, model, grid, fmt, out_path):
    """Sector lines and ground envelope over a t grid (figure data)."""
    try:
        n = _resolve_sites(n_sites, model)
        rows = sweep(n, _parse_grid(grid))
        header, cells = sweep_rows(rows)
        _emit(_render(header, cells, fmt), out_path)
    except SpinChainError as exc:
        raise click.ClickException(str(exc)) from exc


@cli.command(name="phase-table")
@n_option
@model_option
@fmt_option
@out_option
def phase_table(n_sites, model, fmt, out_path):
    """Ground-state phase records between crossings, highest t first."""
    try:
        n = _resolve_sites(n_sites, model)
        bounds = phase_boundaries(sector_minima(n))
        reports = []
        for lo, hi in zip(bounds[:-1], bounds[1:]):
            midpoint = 0.5 * (lo + hi)
            reports.extend(ground_state_report(n, midpoint))
        reports.reverse()
        header, rows = phase_rows(n, reports)
        _emit(_render(header, rows, fmt), out_path)
    except SpinChainError as exc:
        raise click.ClickException(str(exc)) from exc


@cli.command()
@n_option
@model_option
@click.option("--t", "t", type=float, default=None,
              help="Also evaluate each sector line at this t.")
@fmt_option
@out_option
def spectrum(n_sites, model, t, fmt, out_path):
    """Per-sector minima e_k and the line coefficients they induce."""
    try:
        n = _resolve_sites(n_sites, model)
        if t is not None and not 0.0 <= t <= 1.0:
            raise click.ClickException(f"t must lie in [0, 1], got {t}")
        header, rows = spectrum_rows(sector_minima(n), t)
        _emit(_render(header, rows, fmt), out_path)
    except SpinChainError as exc:
        raise click.ClickException(str(exc)) from exc


@cli.command()
@n_option
@model_option
@click.option("--t", "t", type=float, required=True, help="Control value in [0, 1].")
@fmt_option
@out_option
def eta(n_sites, model, t, fmt, out_path):
    """Entanglement measure of the ground state at t (one line per member)."""
    try:
        n = _resolve_sites(n_sites, model)
        reports = ground_state_report(n, t)
        if fmt == "csv":
            lines = []
            for rep in reports:
                lines.extend(f"{value:.6f}" for value in rep.eta_values)
            _emit("\n".join(lines) + "\n", out_path)
        else:
            payload = [
                {
                    "sector": rep.sector,
                    "S": rep.total_spin,
                    "S0": rep.s0,
                    "degeneracy": rep.degeneracy,
                    "eta": [json.loads(f"{v:.6f}") for v in rep.eta_values],
                    "t_interval": [json.loads(truncate6(b)) for b in rep.t_interval],
                    "at_crossing": rep.at_crossing,
                }
                for rep in reports
            ]
            _emit(json.dumps(payload, indent=2) + "\n", out_path)
    except SpinChainError as exc:
        raise click.ClickException(str(exc)) from exc


@cli.command(name="ferro-check")
@n_option
@model_option
def ferro(n_sites, model):
    """Verify the ferromagnetic path has no ground-state crossing."""
    try:
        n = _resolve_sites(n_sites, model)
        if ferro_check(n):
            click.echo("no crossings")
        else:
            raise click.ClickException("crossings detected on the ferromagnetic path")
    except SpinChainError as exc:
        raise click.ClickException(str(exc)) from exc


@cli.command(name="dump-matrix")
@n_option
@model_option
@click.option("--k", "n_particles", type=int, required=True, help="Sector particle number.")
@click.option("--t", "t", type=float, default=None,
              help="Path point for --N runs (default 0).")
@out_option
def dump_matrix(n_sites, model, n_particles, t, out_path):
    """Coordinate-format dump of one sector Hamiltonian."""
    try:
        if model is not None:
            if n_sites is not None:
                raise click.ClickException("exactly one of --N and --model is required")
            if t is not None:
                raise click.ClickException("--t applies to --N runs, not model files")
            spec = _load_model(model)
            _check_cap(spec.n_sites)
        else:
            if n_sites is None:
                raise click.ClickException("exactly one of --N and --model is required")
            _check_cap(n_sites)
            path_t = 0.0 if t is None else t
            template = make_xxx_chain(n_sites, 1.0, 0.0)
            spec = instantiate_path(template, PathSpec("xxx_path", path_t))
        basis = enumerate_sector(spec.n_sites, n_particles)
        matrix = build_sector_hamiltonian(spec, basis)
        _emit(coordinate_dump(matrix, spec.n_sites, n_particles), out_path)
    except SpinChainError as exc:
        raise click.ClickException(str(exc)) from exc


def main():
    cli(prog_name="spinchain")


if __name__ == "__main__":
    main()
