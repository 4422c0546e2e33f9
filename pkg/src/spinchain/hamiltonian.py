"""Dense Hamiltonian assembly in the occupancy-mask representation.

Hard-core bosons carry no fermionic string: a hop across bond (i, j) has
matrix element jx/2 with no sign factor, whatever the occupations in
between, and the hard-core constraint is enforced structurally because
doubly-occupied monomials simply do not exist in the basis.  The constant
-1/2 shifts are kept exactly so absolute energies feed the crossing
arithmetic without offsets.  Repeated bonds accumulate additively.

Builders are pure functions of immutable inputs; distinct sectors may be
built concurrently.
"""

from __future__ import annotations

import os

import numpy as np

from .basis import SectorBasis
from .errors import DomainError, NotSectorConservingError, ResourceLimitError
from .model import ChainSpec

__all__ = [
    "build_sector_hamiltonian",
    "build_full_hamiltonian",
    "build_lowering_map",
    "symmetry_defect",
    "require_symmetric",
    "coordinate_dump",
]

DEFAULT_FULL_SPACE_CAP = 14


def symmetry_defect(a: np.ndarray) -> float:
    """max |A - A^T| relative to max(1, maxabs(A))."""
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 0.0)
    return float(np.max(np.abs(a - a.T))) / scale if a.size else 0.0


def require_symmetric(a: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix entries must be finite")
    if symmetry_defect(a) > tol:
        raise DomainError(f"matrix is not symmetric (defect {symmetry_defect(a):.3e})")
    return a


def build_sector_hamiltonian(spec: ChainSpec, basis: SectorBasis) -> np.ndarray:
    """Hamiltonian restricted to one magnetization sector.

    Diagonal: sum over bonds of jz (n_i - 1/2)(n_j - 1/2) plus the field
    term sum_i hz_i (n_i - 1/2).  Off-diagonal: jx/2 between masks that
    differ by moving one particle across a bond.  Requires jx == jy on
    every bond, otherwise magnetization is not conserved and the full
    2^N builder must be used.
    """
    if basis.n_sites != spec.n_sites:
        raise DomainError(
            f"basis is for N={basis.n_sites}, spec has N={spec.n_sites}"
        )
    if not spec.u1_symmetric:
        raise NotSectorConservingError(
            "model has a bond with jx != jy; magnetization sectors mix, "
            "use build_full_hamiltonian"
        )
    dim = basis.dim
    a = np.zeros((dim, dim))
    rank_of = basis.rank
    for r, m in enumerate(basis.states):
        diag = 0.0
        for b in spec.bonds:
            ni = (m >> b.i) & 1
            nj = (m >> b.j) & 1
            diag += b.jz * (ni - 0.5) * (nj - 0.5)
            if ni != nj:
                a[rank_of(m ^ ((1 << b.i) | (1 << b.j))), r] += 0.5 * b.jx
        for i, h in enumerate(spec.hz):
            if h != 0.0:
                diag += h * (((m >> i) & 1) - 0.5)
        a[r, r] = diag
    return a


def _full_space_cap(max_sites: int | None) -> int:
    if max_sites is not None:
        return max_sites
    env = os.environ.get("SPINCHAIN_MAX_FULL_N")
    return int(env) if env else DEFAULT_FULL_SPACE_CAP


def build_full_hamiltonian(spec: ChainSpec, max_sites: int | None = None) -> np.ndarray:
    """Hamiltonian over the full 2^N occupancy basis (mask = index).

    Per bond: hop amplitude (jx + jy)/4 when the two sites differ in
    occupation, pair create/annihilate amplitude (jx - jy)/4 when they
    agree (both flipped), and the jz diagonal.  Covers XY/XYZ couplings
    and arbitrary bond lists.
    """
    cap = _full_space_cap(max_sites)
    if spec.n_sites > cap:
        raise ResourceLimitError(
            f"full-space build for N={spec.n_sites} exceeds the cap of {cap} "
            "(set SPINCHAIN_MAX_FULL_N to raise it)"
        )
    dim = 1 << spec.n_sites
    a = np.zeros((dim, dim))
    for m in range(dim):
        diag = 0.0
        for b in spec.bonds:
            ni = (m >> b.i) & 1
            nj = (m >> b.j) & 1
            diag += b.jz * (ni - 0.5) * (nj - 0.5)
            flipped = m ^ ((1 << b.i) | (1 << b.j))
            if ni != nj:
                hop = 0.25 * (b.jx + b.jy)
                if hop != 0.0:
                    a[flipped, m] += hop
            else:
                pair = 0.25 * (b.jx - b.jy)
                if pair != 0.0:
                    a[flipped, m] += pair
        for i, h in enumerate(spec.hz):
            if h != 0.0:
                diag += h * (((m >> i) & 1) - 0.5)
        a[m, m] = diag
    return a


def build_lowering_map(source: SectorBasis, target: SectorBasis) -> np.ndarray:
    """Matrix of the total spin-lowering operator from sector k to k - 1.

    Entry [r', r] is 1 when target mask r' is source mask r with one
    occupied bit cleared; every column therefore holds exactly k unit
    entries.
    """
    if source.n_sites != target.n_sites:
        raise DomainError(
            f"mismatched site counts {source.n_sites} != {target.n_sites}"
        )
    if target.n_particles != source.n_particles - 1:
        raise DomainError(
            f"target sector must hold k-1={source.n_particles - 1} particles, "
            f"got {target.n_particles}"
        )
    out = np.zeros((target.dim, source.dim))
    for c, m in enumerate(source.states):
        rest = m
        while rest:
            bit = rest & -rest
            out[target.rank(m ^ bit), c] = 1.0
            rest ^= bit
    return out


def coordinate_dump(a: np.ndarray, n_sites: int, n_particles: int) -> str:
    """Coordinate text export: header ``dim N k``, then one nonzero
    upper-triangle triple ``r c value`` per line (0-based)."""
    lines = [f"{a.shape[0]} {n_sites} {n_particles}"]
    for r in range(a.shape[0]):
        for c in range(r, a.shape[1]):
            if a[r, c] != 0.0:
                lines.append(f"{r} {c} {a[r, c]:.17g}")
    return "\n".join(lines) + "\n"
