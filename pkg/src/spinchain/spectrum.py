"""Sector ground-energy lines, level crossings, and the ground envelope.

The one-parameter family of interest interpolates the isotropic
antiferromagnet against a uniform longitudinal field,

    H(t) = (1 - t) * H_J + t * sum_i (n_i - 1/2),        0 <= t <= 1.

Why the crossings come out in closed form: within the magnetization
sector k every basis state carries the same total occupation, so the
field operator restricted to the sector is the scalar (k - N/2) times the
identity.  The sector ground energy along the path is therefore the
affine function

    E_k(t) = (1 - t) * e_k + t * (k - N/2),

with e_k the sector minimum of the unit-coupling, zero-field chain
(computed once per N and reused for every t).  Adjacent lines cross where
a linear equation balances:

    t_c(i) = delta_i / (1 + delta_i),       delta_i = e_i - e_{i+1},

one crossing per adjacent pair with delta_i > 0.  A scan-based root
finder is kept in the test suite as an independent oracle; it must agree
with the closed form to 1e-10.

The ground state is the pointwise minimum over k = 0..floor(N/2) of these
lines: a concave, piecewise-linear envelope whose kinks are first-order
ground-state changes.  Sectors above floor(N/2) are spin-flip mirrors
with the field sign reversed and never reach the envelope on this path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .basis import enumerate_sector
from .eigen import sym_eigenvalues
from .errors import DomainError
from .hamiltonian import build_sector_hamiltonian
from .model import make_xxx_chain

__all__ = [
    "PathSpectrum",
    "CrossingPoint",
    "SweepRow",
    "sector_minima",
    "crossing_points",
    "ground_envelope",
    "sweep",
    "ferro_check",
    "phase_boundaries",
]


@dataclass(frozen=True)
class PathSpectrum:
    """Per-sector minima e_k of the coupling part and the induced lines."""

    n_sites: int
    minima: tuple[float, ...]

    @property
    def sectors(self) -> int:
        """Number of lines, floor(N/2) + 1."""
        return len(self.minima)

    def intercept(self, k: int) -> float:
        return self.minima[k]

    def slope(self, k: int) -> float:
        return (k - self.n_sites / 2.0) - self.minima[k]

    def value(self, k: int, t: float) -> float:
        """E_k(t) = (1 - t) e_k + t (k - N/2)."""
        return (1.0 - t) * self.minima[k] + t * (k - self.n_sites / 2.0)


@dataclass(frozen=True)
class CrossingPoint:
    """Intersection of the sector lines i and i + 1.

    ``label`` follows the superscript convention floor(N/2) - i, so labels
    increase with t and label floor(N/2) is the crossing into the
    fully-polarized sector.
    """

    lower_sector: int
    t: float
    label: int

    @property
    def upper_sector(self) -> int:
        return self.lower_sector + 1


@lru_cache(maxsize=128)
def _sector_minima_cached(n_sites: int, coupling: float) -> tuple[float, ...]:
    spec = make_xxx_chain(n_sites, coupling, 0.0)
    out = []
    for k in range(n_sites // 2 + 1):
        h = build_sector_hamiltonian(spec, enumerate_sector(n_sites, k))
        out.append(float(sym_eigenvalues(h)[0]))
    return tuple(out)


def sector_minima(n_sites: int, coupling: float = 1.0) -> PathSpectrum:
    """Minimum energy of each sector k = 0..floor(N/2) at J = coupling, h = 0.

    The vacuum entry is exactly N/4 * coupling (every bond contributes
    (-1/2)(-1/2)).  Results are cached per (N, coupling).
    """
    if n_sites < 2:
        raise DomainError(f"n_sites must be >= 2, got {n_sites}")
    return PathSpectrum(n_sites, _sector_minima_cached(n_sites, float(coupling)))


def crossing_points(ps: PathSpectrum) -> list[CrossingPoint]:
    """Closed-form crossings of adjacent sector lines, ascending in t.

    Pairs with delta_i <= 0 have no crossing in (0, 1) and are skipped;
    on the antiferromagnetic path every pair crosses, on the
    ferromagnetic path none do.
    """
    half = ps.sectors - 1
    out = []
    for i in range(half):
        delta = ps.minima[i] - ps.minima[i + 1]
        # numerically-zero gaps are degenerate lines, not interior crossings
        tol = 1e-12 * max(1.0, abs(ps.minima[i]), abs(ps.minima[i + 1]))
        if delta <= tol:
            continue
        out.append(CrossingPoint(i, delta / (1.0 + delta), half - i))
    out.sort(key=lambda c: c.t)
    return out


def ground_envelope(ps: PathSpectrum, t: float) -> tuple[float, tuple[int, ...]]:
    """Envelope value and the argmin sector(s) at t.

    Exactly at a crossing both tied sectors are reported (ascending k);
    ties are detected at relative tolerance 1e-12.
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must lie in [0, 1], got {t}")
    values = [ps.value(k, t) for k in range(ps.sectors)]
    emin = min(values)
    tol = 1e-12 * max(1.0, abs(emin))
    sectors = tuple(k for k, v in enumerate(values) if v <= emin + tol)
    return emin, sectors


@dataclass(frozen=True)
class SweepRow:
    t: float
    sector_energies: tuple[float, ...]
    envelope: float
    argmin_sector: int


def sweep(n_sites: int, t_grid: Iterable[float]) -> list[SweepRow]:
    """Evaluate all sector lines and the envelope on a grid.

    At a tie the smallest tied sector is reported in ``argmin_sector``
    (deterministic; the full tie set is available via ground_envelope).
    """
    ps = sector_minima(n_sites)
    rows = []
    for t in t_grid:
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"grid value {t} outside [0, 1]")
        energies = tuple(ps.value(k, t) for k in range(ps.sectors))
        emin, sectors = ground_envelope(ps, t)
        rows.append(SweepRow(t, energies, emin, sectors[0]))
    return rows


def ferro_check(n_sites: int, grid_points: int = 1001) -> bool:
    """True iff the ferromagnetic path J = -(1 - t), h = t keeps one sector
    minimal over a uniform [0, 1] grid (no ground-state crossing).

    Envelope ties count as holding the sector: at t = 0 the aligned
    multiplet makes every line coincide, so the check asks for a common
    member of the tie sets rather than a literal argmin match.
    """
    ps = sector_minima(n_sites, coupling=-1.0)
    common: set[int] | None = None
    for t in np.linspace(0.0, 1.0, grid_points):
        _, sectors = ground_envelope(ps, float(t))
        common = set(sectors) if common is None else common & set(sectors)
        if not common:
            return False
    return True


def phase_boundaries(ps: PathSpectrum) -> list[float]:
    """Interval edges [0, t_c..., 1] cut by the ascending crossings."""
    return [0.0] + [c.t for c in crossing_points(ps)] + [1.0]
