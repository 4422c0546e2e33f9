"""Independent verification machinery for the test suite.

Everything here deliberately avoids the package's occupancy-mask fast
paths: Hamiltonians come from Kronecker products of one-site spin
matrices, reduced density matrices from partial traces over the full
2^N space, and crossings from interval bisection on freshly built
matrices.  Site i lives on bit i of the basis index (site 0 is the
rightmost Kronecker factor), matching the package's mask convention.
"""

from __future__ import annotations

import numpy as np

from spinchain import (
    ChainSpec,
    SectorVector,
    build_sector_hamiltonian,
    enumerate_sector,
    make_xxx_chain,
)

SX = np.array([[0.0, 0.5], [0.5, 0.0]], dtype=complex)
SY = np.array([[0.0, 0.5j], [-0.5j, 0.0]], dtype=complex)
SZ = np.array([[-0.5, 0.0], [0.0, 0.5]], dtype=complex)
# Basis convention: index bit i = occupation of site i, so the one-site
# basis is (|0>, |1>) = (down, up): SZ = diag(-1/2, +1/2) and
# SX + i SY = [[0, 0], [1, 0]] raises down to up.


def site_operator(op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    left = np.eye(1 << (n_sites - site - 1), dtype=complex)
    right = np.eye(1 << site, dtype=complex)
    return np.kron(left, np.kron(op, right))


def oracle_full_hamiltonian(spec: ChainSpec) -> np.ndarray:
    """Spin-language build: sum over bonds of jx SxSx + jy SySy + jz SzSz
    plus the per-site longitudinal field."""
    n = spec.n_sites
    dim = 1 << n
    ham = np.zeros((dim, dim), dtype=complex)
    for b in spec.bonds:
        for coupling, op in ((b.jx, SX), (b.jy, SY), (b.jz, SZ)):
            if coupling != 0.0:
                ham += coupling * site_operator(op, b.i, n) @ site_operator(op, b.j, n)
    for i, h in enumerate(spec.hz):
        if h != 0.0:
            ham += h * site_operator(SZ, i, n)
    assert np.max(np.abs(ham.imag)) < 1e-14
    return ham.real


def oracle_casimir(n_sites: int) -> np.ndarray:
    """Total-spin Casimir S^2 over the full space."""
    dim = 1 << n_sites
    total = np.zeros((3, dim, dim), dtype=complex)
    for i in range(n_sites):
        for a, op in enumerate((SX, SY, SZ)):
            total[a] += site_operator(op, i, n_sites)
    s2 = sum(total[a] @ total[a] for a in range(3))
    assert np.max(np.abs(s2.imag)) < 1e-14
    return s2.real


def embed_sector_vector(v: SectorVector) -> np.ndarray:
    psi = np.zeros(1 << v.basis.n_sites)
    for r, mask in enumerate(v.basis.states):
        psi[mask] = v.coeffs[r]
    return psi


def oracle_one_site_rdm(psi: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """2x2 reduced density matrix by partial trace over all other sites."""
    tensor = psi.reshape([2] * n_sites)
    # reshape uses C order: axis 0 is the HIGHEST bit, so site i sits on
    # axis n_sites - 1 - i.
    axis = n_sites - 1 - site
    moved = np.moveaxis(tensor, axis, 0).reshape(2, -1)
    return moved @ moved.T


def oracle_eta(psi: np.ndarray, n_sites: int) -> float:
    """Site-averaged one-spin entropy from partial-trace density matrices,
    with the zero-term convention."""
    terms = []
    for site in range(n_sites):
        lam = np.linalg.eigvalsh(oracle_one_site_rdm(psi, site, n_sites))
        terms.append(float(-sum(p * np.log2(p) for p in lam if p > 1e-12)))
    if any(abs(term) < 1e-9 for term in terms):
        return 0.0
    return float(np.mean(terms))


def sector_min_at(n_sites: int, k: int, t: float) -> float:
    """Ground energy of the sector at path point t by literal rebuild,
    no line shortcut."""
    spec = make_xxx_chain(n_sites, 1.0 - t, t)
    h = build_sector_hamiltonian(spec, enumerate_sector(n_sites, k))
    return float(np.linalg.eigvalsh(h)[0])


def bisect_crossing(n_sites: int, i: int, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Bisection root of E_i(t) - E_{i+1}(t) with each side diagonalized
    from scratch; requires a sign change on [lo, hi]."""

    def gap(t: float) -> float:
        return sector_min_at(n_sites, i, t) - sector_min_at(n_sites, i + 1, t)

    f_lo, f_hi = gap(lo), gap(hi)
    assert f_lo * f_hi < 0, f"no sign change on [{lo}, {hi}] for N={n_sites}, i={i}"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = gap(mid)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)
