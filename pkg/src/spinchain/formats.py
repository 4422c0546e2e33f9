"""CSV and JSON emitters shared by the CLI and the HTTP service.

Crossing values are printed truncated to 6 decimals (2/3 prints as
0.666666, not 0.666667), matching the published-table comparison mode;
all other energies carry 12 significant digits.  Every cell is
canonicalized once, so the CSV string and the JSON number agree exactly.
"""

from __future__ import annotations

import json
import math

from .observables import GroundStateReport
from .spectrum import CrossingPoint, PathSpectrum, SweepRow

__all__ = [
    "truncate6",
    "sig12",
    "crossings_rows",
    "table1_rows",
    "spectrum_rows",
    "sweep_rows",
    "phase_rows",
    "rows_to_csv",
    "rows_to_json",
]


def truncate6(x: float) -> str:
    """Decimal truncation (not rounding) to 6 places; x must be >= 0.

    A sub-ulp guard absorbs binary representation error so exact decimals
    like 0.6 (stored as 0.59999999999999998) print as themselves; 2/3
    still truncates to 0.666666.
    """
    q = math.floor(x * 1e6 + 1e-6)
    return f"{q // 1000000}.{q % 1000000:06d}"


def sig12(x: float) -> str:
    return f"{x:.12g}"


def _cell(text: str):
    """Canonical (csv string, json value) pair for one numeric cell."""
    return text, json.loads(text)


def crossings_rows(n_sites: int, crossings: list[CrossingPoint]):
    """Rows for the crossings table: N,label,i,iplus1,tc."""
    header = ["N", "label", "i", "iplus1", "tc"]
    rows = []
    for c in crossings:
        rows.append(
            [
                (str(n_sites), n_sites),
                (str(c.label), c.label),
                (str(c.lower_sector), c.lower_sector),
                (str(c.upper_sector), c.upper_sector),
                _cell(truncate6(c.t)),
            ]
        )
    return header, rows


def table1_rows(per_system: list[tuple[int, list[CrossingPoint]]]):
    """One row per N with its crossings in ascending label order, blank-padded."""
    width = max((len(cps) for _, cps in per_system), default=0)
    header = ["N"] + [f"tc{j + 1}" for j in range(width)]
    rows = []
    for n_sites, cps in per_system:
        cells = [(str(n_sites), n_sites)]
        cells += [_cell(truncate6(c.t)) for c in cps]
        cells += [("", None)] * (width - len(cps))
        rows.append(cells)
    return header, rows


def spectrum_rows(ps: PathSpectrum, t: float | None = None):
    """Rows for the per-sector lines: k,e,slope,intercept[,E_at_t]."""
    header = ["k", "e", "slope", "intercept"]
    if t is not None:
        header.append("E_at_t")
    rows = []
    for k in range(ps.sectors):
        row = [
            (str(k), k),
            _cell(sig12(ps.minima[k])),
            _cell(sig12(ps.slope(k))),
            _cell(sig12(ps.intercept(k))),
        ]
        if t is not None:
            row.append(_cell(sig12(ps.value(k, t))))
        rows.append(row)
    return header, rows


def sweep_rows(rows: list[SweepRow]):
    """Rows for the sweep table: t,Emin,kstar,E0,E1,..."""
    sectors = len(rows[0].sector_energies) if rows else 0
    header = ["t", "Emin", "kstar"] + [f"E{k}" for k in range(sectors)]
    out = []
    for r in rows:
        cells = [
            _cell(sig12(r.t)),
            _cell(sig12(r.envelope)),
            (str(r.argmin_sector), r.argmin_sector),
        ]
        cells += [_cell(sig12(e)) for e in r.sector_energies]
        out.append(cells)
    return header, out


def phase_rows(n_sites: int, reports: list[GroundStateReport]):
    """Rows for the phase table: N,t_lo,t_hi,k,S,S0,degeneracy,eta_member1,eta_member2."""
    header = ["N", "t_lo", "t_hi", "k", "S", "S0", "degeneracy", "eta_member1", "eta_member2"]
    rows = []
    for rep in reports:
        etas = list(rep.eta_values) + [None, None]
        rows.append(
            [
                (str(n_sites), n_sites),
                _cell(truncate6(rep.t_interval[0])),
                _cell(truncate6(rep.t_interval[1])),
                (str(rep.sector), rep.sector),
                _cell(f"{rep.total_spin:g}"),
                _cell(f"{rep.s0:g}"),
                (str(rep.degeneracy), rep.degeneracy),
                _cell(f"{etas[0]:.6f}"),
                ("", None) if etas[1] is None else _cell(f"{etas[1]:.6f}"),
            ]
        )
    return header, rows


def rows_to_csv(header: list[str], rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell[0] for cell in row))
    return "\n".join(lines) + "\n"


def rows_to_json(header: list[str], rows) -> str:
    records = [
        {name: cell[1] for name, cell in zip(header, row)} for row in rows
    ]
    return json.dumps(records, indent=2) + "\n"
