"""Ground-state characterization: one-site density matrices, the
site-averaged entanglement measure, total-spin identification, and
degeneracy accounting.

The entanglement measure of a normalized state is the site average of the
one-spin von Neumann entropies,

    eta = (1/N) * sum_i h2(p_i),      h2(p) = -p log2 p - (1-p) log2 (1-p),

where p_i is the occupation probability of site i, EXCEPT that eta is
defined to be exactly 0 whenever any single-site term vanishes (some p_i
is 0 or 1): a state with even one disentangled site does not count as
N-party entangled.  The base-2 logarithm normalizes a maximally mixed
one-site density matrix to entropy 1.

Within a fixed-magnetization sector the one-site density matrix is
diagonal, diag(1 - p_i, p_i): a fixed-k vector cannot mix the two
occupations of a single site, so the coherence vanishes identically.

Total spin S is identified through the total lowering operator: a state
it annihilates is lowest weight with S = |S0|; otherwise S solves
S(S+1) = <S^2> with <S^2> = ||S^- v||^2 + S0 (S0 - 1) evaluated entirely
in-sector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import SectorVector, enumerate_sector
from .eigen import default_degeneracy_tol, ground_eigs, sym_eigenvalues
from .errors import DegenerateInputError, DomainError, InconsistentStateError
from .hamiltonian import build_lowering_map, build_sector_hamiltonian
from .model import make_xxx_chain
from .spectrum import crossing_points, phase_boundaries, sector_minima

__all__ = [
    "OneSiteRDM",
    "GroundStateReport",
    "one_site_rdm",
    "occupation_profile",
    "eta",
    "total_spin",
    "gram_schmidt_pair",
    "ground_state_report",
    "degeneracy_profile",
]

NORMALIZATION_TOL = 1e-10
LOWEST_WEIGHT_TOL = 1e-8
ZERO_TERM_TOL = 1e-12
CROSSING_MATCH_TOL = 1e-12


@dataclass(frozen=True)
class OneSiteRDM:
    """2x2 reduced density matrix of a single site, diag(1-p, p) + coherence."""

    site: int
    p_up: float
    coherence: float = 0.0

    def matrix(self) -> np.ndarray:
        return np.array(
            [[1.0 - self.p_up, self.coherence], [self.coherence, self.p_up]]
        )


def _require_normalized(v: SectorVector) -> np.ndarray:
    c = v.coeffs
    nrm = float(np.linalg.norm(c))
    if abs(nrm - 1.0) > NORMALIZATION_TOL:
        raise DomainError(f"vector norm {nrm} deviates from 1 beyond {NORMALIZATION_TOL}")
    return c


def occupation_profile(v: SectorVector) -> np.ndarray:
    """p_i for every site; the profile sums to the particle number k."""
    c = _require_normalized(v)
    n = v.basis.n_sites
    p = np.zeros(n)
    for r, m in enumerate(v.basis.states):
        w = c[r] * c[r]
        if w == 0.0:
            continue
        rest = m
        while rest:
            bit = rest & -rest
            p[bit.bit_length() - 1] += w
            rest ^= bit
    return p


def one_site_rdm(v: SectorVector, site: int) -> OneSiteRDM:
    """One-site reduced density matrix of a normalized sector vector.

    The coherence is structurally zero in a fixed-k sector; it is kept as
    an explicit field so the type stays valid for states that do mix
    occupations.
    """
    if not 0 <= site < v.basis.n_sites:
        raise DomainError(f"site {site} out of range for N={v.basis.n_sites}")
    c = _require_normalized(v)
    occupied = np.fromiter(
        ((m >> site) & 1 for m in v.basis.states), dtype=float, count=v.basis.dim
    )
    return OneSiteRDM(site, float(np.dot(c * c, occupied)), 0.0)


def _entropy_term(p: float) -> float:
    if p <= ZERO_TERM_TOL or p >= 1.0 - ZERO_TERM_TOL:
        return 0.0
    return float(-(p * np.log2(p) + (1.0 - p) * np.log2(1.0 - p)))


def eta(v: SectorVector) -> float:
    """Site-averaged one-spin entropy, or 0 if any site term vanishes."""
    terms = [_entropy_term(float(p)) for p in occupation_profile(v)]
    if any(term == 0.0 for term in terms):
        return 0.0
    return float(np.mean(terms))


def _admissible_spins(s0: float, n_sites: int) -> list[float]:
    s = abs(s0)
    out = []
    while s <= n_sites / 2.0 + 1e-9:
        out.append(s)
        s += 1.0
    return out


def total_spin(v: SectorVector, lowering: np.ndarray | None = None) -> float:
    """Total-spin quantum number S of a normalized sector vector.

    ``lowering`` is the sector-k to sector-(k-1) map; it is built on the
    fly when omitted.  States annihilated by it are lowest weight with
    S = |S0|; otherwise S is recovered from <S^2> and must land within
    1e-6 of an admissible value in {|S0|, |S0|+1, ..., N/2}.
    """
    c = _require_normalized(v)
    n = v.basis.n_sites
    k = v.basis.n_particles
    s0 = k - n / 2.0
    if k == 0:
        return n / 2.0
    if lowering is None:
        lowering = build_lowering_map(v.basis, enumerate_sector(n, k - 1))
    lowered = lowering @ c
    drop = float(np.linalg.norm(lowered))
    if drop <= LOWEST_WEIGHT_TOL:
        return abs(s0)
    s_squared = drop * drop + s0 * (s0 - 1.0)
    s_est = 0.5 * (np.sqrt(1.0 + 4.0 * s_squared) - 1.0)
    for s in _admissible_spins(s0, n):
        if abs(s_est - s) <= 1e-6:
            return s
    raise InconsistentStateError(
        f"<S^2> = {s_squared} gives S = {s_est}, not near any admissible value "
        f"for S0 = {s0}, N = {n}"
    )


def gram_schmidt_pair(c1: SectorVector, c2: SectorVector) -> tuple[SectorVector, SectorVector]:
    """Orthogonalize c1 against a normalized c2, leaving c2 unchanged.

    Returns (normalized c1 - <c1,c2> c2, c2).  Parallel inputs are
    rejected.
    """
    if c1.basis is not c2.basis and c1.basis.states != c2.basis.states:
        raise DomainError("vectors must share a sector basis")
    _require_normalized(c2)
    overlap = float(np.dot(c1.coeffs, c2.coeffs))
    residual = c1.coeffs - overlap * c2.coeffs
    nrm = float(np.linalg.norm(residual))
    if nrm <= 1e-12 * max(1.0, float(np.linalg.norm(c1.coeffs))):
        raise DegenerateInputError("c1 is parallel to c2; nothing independent remains")
    return SectorVector(c1.basis, residual / nrm), c2


@dataclass(frozen=True, eq=False)
class GroundStateReport:
    """Ground-state record on one t-interval between adjacent crossings.

    ``degeneracy`` counts the ground multiplicity within the reported
    sector; the global count across sectors (4 at t = 0 for odd N, where
    the mirror sector contributes) is the business of
    ``degeneracy_profile``.  ``eta_values`` carries one entry per
    orthogonalized member; member-wise values inside a degenerate pair
    depend on the eigenvector basis and are reported as computed.
    """

    t: float
    t_interval: tuple[float, float]
    sector: int
    total_spin: float
    s0: float
    degeneracy: int
    eta_values: tuple[float, ...]
    at_crossing: bool
    members: tuple[SectorVector, ...]


def _sector_report(
    n_sites: int, t: float, k: int, interval: tuple[float, float], at_crossing: bool
) -> GroundStateReport:
    basis = enumerate_sector(n_sites, k)
    spec = make_xxx_chain(n_sites, 1.0 - t, t)
    h = build_sector_hamiltonian(spec, basis)
    _, mult, vecs = ground_eigs(h)
    members = [SectorVector(basis, vecs[:, j]) for j in range(mult)]
    if mult == 2:
        # Dense LAPACK output is already orthonormal; the explicit pass
        # guards member-wise reporting against solvers that are not.
        first, second = gram_schmidt_pair(members[0], members[1])
        members = [first, second]
    lowering = None
    if k >= 1:
        lowering = build_lowering_map(basis, enumerate_sector(n_sites, k - 1))
    spins = {total_spin(m, lowering) for m in members}
    if len(spins) != 1:
        raise InconsistentStateError(
            f"degenerate members disagree on S: {sorted(spins)} (N={n_sites}, k={k}, t={t})"
        )
    return GroundStateReport(
        t=t,
        t_interval=interval,
        sector=k,
        total_spin=spins.pop(),
        s0=k - n_sites / 2.0,
        degeneracy=mult,
        eta_values=tuple(eta(m) for m in members),
        at_crossing=at_crossing,
        members=tuple(members),
    )


def ground_state_report(n_sites: int, t: float) -> list[GroundStateReport]:
    """Ground-state records at control value t.

    Away from crossings the list holds a single record whose interval is
    the enclosing phase.  Exactly at a crossing the ground level is shared
    by two sectors and both records are returned, flagged ``at_crossing``.
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must lie in [0, 1], got {t}")
    ps = sector_minima(n_sites)
    crossings = crossing_points(ps)
    bounds = phase_boundaries(ps)
    half = ps.sectors - 1

    hit = next(
        (j for j, c in enumerate(crossings) if abs(t - c.t) <= CROSSING_MATCH_TOL), None
    )
    if hit is not None:
        below = half - hit
        return [
            _sector_report(n_sites, t, below, (bounds[hit], bounds[hit + 1]), True),
            _sector_report(n_sites, t, below - 1, (bounds[hit + 1], bounds[hit + 2]), True),
        ]
    j = 0
    while j + 1 < len(bounds) - 1 and t >= bounds[j + 1]:
        j += 1
    return [_sector_report(n_sites, t, half - j, (bounds[j], bounds[j + 1]), False)]


def degeneracy_profile(
    n_sites: int, t_samples: list[float]
) -> list[tuple[float, int]]:
    """Global ground multiplicity of H(t) at each sample.

    Counts eigenvalues within the degeneracy tolerance of the global
    minimum across ALL sectors k = 0..N, so mirror sectors above
    floor(N/2) contribute where they must (the 4-fold odd-N point at
    t = 0, the doubling at crossings).
    """
    spec = make_xxx_chain(n_sites, 1.0, 0.0)
    spectra = [
        sym_eigenvalues(build_sector_hamiltonian(spec, enumerate_sector(n_sites, k)))
        for k in range(n_sites + 1)
    ]
    out = []
    for t in t_samples:
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"t must lie in [0, 1], got {t}")
        shifted = [
            (1.0 - t) * vals + t * (k - n_sites / 2.0)
            for k, vals in enumerate(spectra)
        ]
        gmin = min(float(v[0]) for v in shifted)
        tol = default_degeneracy_tol(gmin)
        count = sum(int(np.sum(v <= gmin + tol)) for v in shifted)
        out.append((t, count))
    return out
