"""Fixed-magnetization occupancy bases and rank/unrank maps.

A basis state is an N-bit mask: bit i set means a boson (spin up) at site
i, the all-zero mask is the vacuum with every spin down, so the
z-magnetization of a k-particle state is k - N/2.  A sector holds the
C(N, k) masks with exactly k bits set, ordered by increasing integer
value; the order is pure integer arithmetic, deterministic on every
platform.  Masks fit a 64-bit word (N <= 64 structurally; the dense
eigensolve is the practical bound long before that).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import DomainError

__all__ = ["SectorBasis", "SectorVector", "enumerate_sector", "mask_string"]


def _masks_ascending(n_sites: int, n_particles: int) -> tuple[int, ...]:
    # Gosper's hack walks the k-subsets in increasing integer order.
    if n_particles == 0:
        return (0,)
    out = []
    m = (1 << n_particles) - 1
    limit = 1 << n_sites
    while m < limit:
        out.append(m)
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r
    return tuple(out)


@dataclass(frozen=True, eq=False)
class SectorBasis:
    """Ordered occupancy masks of one magnetization sector."""

    n_sites: int
    n_particles: int
    states: tuple[int, ...]
    _rank_of: dict = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.states)

    def rank(self, mask: int) -> int:
        """Dense index of a mask; inverse of ``unrank``."""
        if mask.bit_count() != self.n_particles:
            raise DomainError(
                f"mask {mask:#x} has {mask.bit_count()} particles, sector holds "
                f"{self.n_particles}"
            )
        try:
            return self._rank_of[mask]
        except KeyError:
            raise DomainError(f"mask {mask:#x} not in sector") from None

    def unrank(self, r: int) -> int:
        """Mask at dense index r; inverse of ``rank``."""
        if not 0 <= r < self.dim:
            raise DomainError(f"index {r} out of range for dim {self.dim}")
        return self.states[r]


def enumerate_sector(n_sites: int, n_particles: int) -> SectorBasis:
    """All C(N, k) occupancy masks with k particles, ascending."""
    if n_sites < 1:
        raise DomainError(f"n_sites must be >= 1, got {n_sites}")
    if not 0 <= n_particles <= n_sites:
        raise DomainError(
            f"n_particles must lie in [0, {n_sites}], got {n_particles}"
        )
    states = _masks_ascending(n_sites, n_particles)
    assert len(states) == comb(n_sites, n_particles)
    return SectorBasis(
        n_sites, n_particles, states, {m: r for r, m in enumerate(states)}
    )


def mask_string(basis: SectorBasis, mask: int) -> str:
    """Occupancy string with site 1 leftmost (1-based display convention)."""
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(basis.n_sites))


@dataclass(frozen=True, eq=False)
class SectorVector:
    """Real amplitude vector over one sector basis."""

    basis: SectorBasis
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != (self.basis.dim,):
            raise DomainError(
                f"coefficient shape {c.shape} does not match sector dim {self.basis.dim}"
            )
        if not np.all(np.isfinite(c)):
            raise DomainError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))
