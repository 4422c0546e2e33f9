"""Chain specifications: bonds, fields, presets, and the control path.

All models live in the hard-core boson picture: spin up at site i is a
boson at site i, spin operators map onto boson operators with no fermionic
string, and the Hamiltonian of a bond (i, j) reads

    jx/2 * (hop i<->j)  +  jz * (n_i - 1/2)(n_j - 1/2)      for jx == jy

plus a per-site longitudinal field  hz_i * (n_i - 1/2).  The uniform-chain
preset transcribes the periodic sum over i = 1..N literally, so N = 2
produces the bond list {(0,1), (1,0)}: the one physical bond of a 2-ring
counted twice.  Builders accumulate repeated bonds additively, which is
what makes the closed-form crossing arithmetic exact down to N = 2.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import DomainError, InvalidSpecError, ModelParseError

__all__ = [
    "Bond",
    "ChainSpec",
    "PathSpec",
    "make_xxx_chain",
    "instantiate_path",
    "parse_model_file",
    "parse_model_document",
    "serialize_model",
]


@dataclass(frozen=True)
class Bond:
    """Exchange bond between sites i and j with per-axis couplings."""

    i: int
    j: int
    jx: float
    jy: float
    jz: float

    def __post_init__(self):
        if self.i == self.j:
            raise InvalidSpecError(f"bond ({self.i},{self.j}): sites must differ")
        if self.i < 0 or self.j < 0:
            raise InvalidSpecError(f"bond ({self.i},{self.j}): negative site index")
        for name in ("jx", "jy", "jz"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise InvalidSpecError(f"bond ({self.i},{self.j}): {name} must be finite")


@dataclass(frozen=True)
class ChainSpec:
    """Immutable description of a spin-1/2 chain.

    Site indices are 0-based internally; user-facing output is 1-based.
    Safe to share across concurrent workers.
    """

    n_sites: int
    periodic: bool
    bonds: tuple[Bond, ...]
    hz: tuple[float, ...]

    def __post_init__(self):
        if self.n_sites < 2:
            raise InvalidSpecError(f"n_sites must be >= 2, got {self.n_sites}")
        for b in self.bonds:
            if b.i >= self.n_sites or b.j >= self.n_sites:
                raise InvalidSpecError(
                    f"bond ({b.i},{b.j}): site index out of range for N={self.n_sites}"
                )
        if len(self.hz) != self.n_sites:
            raise InvalidSpecError(
                f"hz has {len(self.hz)} entries, expected {self.n_sites}"
            )
        for i, h in enumerate(self.hz):
            if not (isinstance(h, (int, float)) and math.isfinite(h)):
                raise InvalidSpecError(f"hz[{i}] must be finite")

    @property
    def u1_symmetric(self) -> bool:
        """True iff jx == jy on every bond, i.e. magnetization is conserved."""
        return all(b.jx == b.jy for b in self.bonds)


@dataclass(frozen=True)
class PathSpec:
    """One-parameter control path.

    ``xxx_path`` interpolates coupling J = 1 - t against uniform field
    h = t for t in [0, 1]; ``fixed`` leaves the template untouched.
    """

    mode: str
    t: float | None = None

    def __post_init__(self):
        if self.mode not in ("xxx_path", "fixed"):
            raise DomainError(f"unknown path mode {self.mode!r}")
        if self.mode == "xxx_path":
            if self.t is None or not (0.0 <= self.t <= 1.0):
                raise DomainError(f"xxx_path requires t in [0, 1], got {self.t}")


def make_xxx_chain(n_sites: int, coupling: float, field: float) -> ChainSpec:
    """Periodic nearest-neighbour chain with isotropic coupling and uniform field.

    Emits exactly ``n_sites`` bonds (i, i+1 mod N), including the doubled
    pair for N = 2.
    """
    if n_sites < 2:
        raise InvalidSpecError(f"n_sites must be >= 2, got {n_sites}")
    bonds = tuple(
        Bond(i, (i + 1) % n_sites, coupling, coupling, coupling)
        for i in range(n_sites)
    )
    return ChainSpec(n_sites, True, bonds, (field,) * n_sites)


def instantiate_path(template: ChainSpec, path: PathSpec) -> ChainSpec:
    """Concrete ChainSpec at the path point.

    For ``xxx_path`` the template only fixes the sites and bond graph:
    every bond coupling is set to 1 - t on all three axes and every site
    field to t.
    """
    if path.mode == "fixed":
        return template
    t = path.t
    j = 1.0 - t
    bonds = tuple(Bond(b.i, b.j, j, j, j) for b in template.bonds)
    return ChainSpec(template.n_sites, template.periodic, bonds, (t,) * template.n_sites)


# --- model document parsing -------------------------------------------------

_PRESET_KEYS = {"preset", "N", "J", "h"}
_EXPLICIT_KEYS = {"N", "periodic", "bonds", "hz"}
_BOND_KEYS = {"i", "j", "jx", "jy", "jz"}


def _reject_constant(token):
    raise ModelParseError(f"non-finite number {token!r} not allowed")


def _as_int(doc, key, where):
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ModelParseError(f"{where}{key}: expected an integer, got {v!r}")
    return v


def _as_float(doc, key, where):
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ModelParseError(f"{where}{key}: expected a number, got {v!r}")
    if not math.isfinite(v):
        raise ModelParseError(f"{where}{key}: must be finite")
    return float(v)


def parse_model_document(doc: dict) -> ChainSpec:
    """Validate a decoded model document (strict: unknown keys rejected)."""
    if not isinstance(doc, dict):
        raise ModelParseError(f"expected an object at top level, got {type(doc).__name__}")
    if "preset" in doc:
        unknown = set(doc) - _PRESET_KEYS
        if unknown:
            raise ModelParseError(f"unknown keys {sorted(unknown)} in preset document")
        if doc["preset"] != "xxx":
            raise ModelParseError(f"unknown preset {doc['preset']!r}")
        if "N" not in doc:
            raise ModelParseError("preset document requires N")
        n = _as_int(doc, "N", "")
        coupling = _as_float(doc, "J", "") if "J" in doc else 1.0
        field = _as_float(doc, "h", "") if "h" in doc else 0.0
        try:
            return make_xxx_chain(n, coupling, field)
        except InvalidSpecError as exc:
            raise ModelParseError(str(exc)) from exc

    unknown = set(doc) - _EXPLICIT_KEYS
    if unknown:
        raise ModelParseError(f"unknown keys {sorted(unknown)} in model document")
    for key in _EXPLICIT_KEYS:
        if key not in doc:
            raise ModelParseError(f"missing required key {key!r}")
    n = _as_int(doc, "N", "")
    if not isinstance(doc["periodic"], bool):
        raise ModelParseError(f"periodic: expected a boolean, got {doc['periodic']!r}")
    if not isinstance(doc["bonds"], list):
        raise ModelParseError("bonds: expected a list")
    if not isinstance(doc["hz"], list):
        raise ModelParseError("hz: expected a list")

    bonds = []
    for idx, entry in enumerate(doc["bonds"]):
        where = f"bonds[{idx}]."
        if not isinstance(entry, dict):
            raise ModelParseError(f"bonds[{idx}]: expected an object")
        unknown = set(entry) - _BOND_KEYS
        if unknown:
            raise ModelParseError(f"bonds[{idx}]: unknown keys {sorted(unknown)}")
        for key in _BOND_KEYS:
            if key not in entry:
                raise ModelParseError(f"bonds[{idx}]: missing key {key!r}")
        i = _as_int(entry, "i", where)
        j = _as_int(entry, "j", where)
        if not (0 <= i < n and 0 <= j < n):
            raise ModelParseError(f"bonds[{idx}]: site index out of range for N={n}")
        try:
            bonds.append(
                Bond(i, j, _as_float(entry, "jx", where), _as_float(entry, "jy", where),
                     _as_float(entry, "jz", where))
            )
        except InvalidSpecError as exc:
            raise ModelParseError(f"bonds[{idx}]: {exc}") from exc

    hz = []
    for idx, v in enumerate(doc["hz"]):
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            raise ModelParseError(f"hz[{idx}]: expected a finite number, got {v!r}")
        hz.append(float(v))

    try:
        return ChainSpec(n, doc["periodic"], tuple(bonds), tuple(hz))
    except InvalidSpecError as exc:
        raise ModelParseError(str(exc)) from exc


def parse_model_file(text: str) -> ChainSpec:
    """Parse a UTF-8 JSON model document; see ``parse_model_document``."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ModelParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_model_document(doc)


def serialize_model(spec: ChainSpec) -> dict:
    """Canonical explicit-form document; parse_model_document inverts it."""
    return {
        "N": spec.n_sites,
        "periodic": spec.periodic,
        "bonds": [
            {"i": b.i, "j": b.j, "jx": b.jx, "jy": b.jy, "jz": b.jz}
            for b in spec.bonds
        ],
        "hz": list(spec.hz),
    }
