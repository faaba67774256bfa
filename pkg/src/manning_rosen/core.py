"""Shared value types, unit systems and the key-value config format."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from pathlib import Path

HBAR_C_EV_ANGSTROM = 1973.29
AMU_TO_EV = 931.4941e6


class SpecError(ValueError):
    """Raised when a problem instance violates a field bound."""


@dataclass(frozen=True)
class UnitSystem:
    """Either atomic units (hbar = 1, mass carried explicitly) or eV / Angstrom / amu.

    In the spectroscopic system lengths are in Angstrom, masses in amu and
    energies in eV; ``hbar_c`` and ``amu_to_energy`` are overridable.
    """

    name: str = "atomic"
    hbar_c: float = HBAR_C_EV_ANGSTROM
    amu_to_energy: float = AMU_TO_EV

    def __post_init__(self):
        if self.name not in ("atomic", "ev_angstrom"):
            raise SpecError(f"unknown unit system {self.name!r}")

    @property
    def is_atomic(self) -> bool:
        return self.name == "atomic"

    @classmethod
    def atomic(cls) -> UnitSystem:
        return cls("atomic")

    @classmethod
    def spectroscopic(cls, hbar_c: float = HBAR_C_EV_ANGSTROM,
                      amu_to_energy: float = AMU_TO_EV) -> UnitSystem:
        return cls("ev_angstrom", hbar_c, amu_to_energy)

    @property
    def energy_unit(self) -> str:
        return "hartree" if self.is_atomic else "eV"

    @property
    def length_unit(self) -> str:
        return "bohr" if self.is_atomic else "angstrom"


ATOMIC = UnitSystem.atomic()
SPECTROSCOPIC = UnitSystem.spectroscopic()


@dataclass(frozen=True)
class PotentialSpec:
    """Parameters of one Manning-Rosen problem instance.

    ``A`` and ``alpha`` are dimensionless, ``b`` is the screening length in
    the unit system's length unit and ``mu`` the reduced mass (amu in the
    spectroscopic system).
    """

    A: float
    alpha: float
    b: float
    mu: float = 1.0
    units: UnitSystem = field(default=ATOMIC)

    def mirrored(self) -> PotentialSpec:
        """The same potential written with alpha -> 1 - alpha."""
        return replace(self, alpha=1.0 - self.alpha)

    def with_coupling(self, A: float) -> PotentialSpec:
        return replace(self, A=A)

    @property
    def energy_scale(self) -> float:
        return spectroscopic_energy_scale(self)

    @property
    def inv_b(self) -> float:
        return 1.0 / self.b


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    n: int
    l: int

    def __post_init__(self):
        for name in ("n", "l"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise SpecError(f"{name} must be an integer, got {v!r}")
            if v < 0:
                raise SpecError(f"{name} must be non-negative, got {v}")
            object.__setattr__(self, name, int(v))

    @property
    def principal(self) -> int:
        return self.n + self.l + 1


@dataclass(frozen=True)
class BoundState:
    """Energy and the dimensionless parameters of one bound level.

    ``norm`` is the radial normalization constant in 1/sqrt(length).
    """

    energy: float
    epsilon: float
    lambda_cap: float
    a_param: float
    norm: float


@dataclass(frozen=True)
class MoleculeRecord:
    name: str
    reduced_mass_amu: float

    def __post_init__(self):
        if not (math.isfinite(self.reduced_mass_amu) and self.reduced_mass_amu > 0):
            raise SpecError(f"{self.name}: reduced mass must be positive, "
                            f"got {self.reduced_mass_amu}")


def validate_spec(spec: PotentialSpec) -> PotentialSpec:
    """Return ``spec`` unchanged if every field is within bounds."""
    for name in ("A", "alpha", "b", "mu"):
        v = getattr(spec, name)
        if not isinstance(v, (int, float)) or not math.isfinite(v):
            raise SpecError(f"{name} must be finite, got {v!r}")
    if spec.b <= 0:
        raise SpecError(f"b must be positive, got {spec.b}")
    if spec.mu <= 0:
        raise SpecError(f"mu must be positive, got {spec.mu}")
    u = spec.units
    if not u.is_atomic:
        for name in ("hbar_c", "amu_to_energy"):
            v = getattr(u, name)
            if not (math.isfinite(v) and v > 0):
                raise SpecError(f"{name} must be positive and finite, got {v}")
    return spec


def spectroscopic_energy_scale(spec: PotentialSpec) -> float:
    """hbar^2 / (2 mu b^2) in the spec's unit system."""
    validate_spec(spec)
    u = spec.units
    if u.is_atomic:
        return 1.0 / (2.0 * spec.mu * spec.b ** 2)
    return u.hbar_c ** 2 / (2.0 * spec.mu * u.amu_to_energy * spec.b ** 2)


# -- key = value config ------------------------------------------------------

def parse_key_values(text: str) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment, blank lines are skipped."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpecError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise SpecError(f"line {lineno}: empty key")
        out[key] = value
    return out


def _float(kv: dict[str, str], key: str) -> float:
    try:
        return float(kv[key])
    except ValueError:
        raise SpecError(f"{key}: not a number: {kv[key]!r}") from None


def spec_from_mapping(kv: dict[str, str]) -> PotentialSpec:
    """Build a spec from config keys A, alpha, inv_b, mu / mu_amu, units."""
    units_name = kv.get("units", "atomic")
    if units_name == "atomic":
        units = ATOMIC
    elif units_name == "ev_angstrom":
        units = UnitSystem.spectroscopic(
            float(kv.get("hbar_c", HBAR_C_EV_ANGSTROM)),
            float(kv.get("amu_to_energy", AMU_TO_EV)),
        )
    else:
        raise SpecError(f"units must be 'atomic' or 'ev_angstrom', got {units_name!r}")
    missing = [k for k in ("A", "alpha", "inv_b") if k not in kv]
    if missing:
        raise SpecError(f"missing config keys: {', '.join(missing)}")
    mass_key = "mu_amu" if "mu_amu" in kv else "mu"
    mu = _float(kv, mass_key) if mass_key in kv else 1.0
    inv_b = _float(kv, "inv_b")
    if inv_b <= 0:
        raise SpecError(f"inv_b must be positive, got {inv_b}")
    spec = PotentialSpec(_float(kv, "A"), _float(kv, "alpha"), 1.0 / inv_b, mu, units)
    return validate_spec(spec)


def spec_to_config(spec: PotentialSpec) -> str:
    """Serialize to the key-value format read by :func:`load_spec`."""
    lines = [f"A = {spec.A!r}", f"alpha = {spec.alpha!r}", f"inv_b = {1.0 / spec.b!r}"]
    if spec.units.is_atomic:
        lines += [f"mu = {spec.mu!r}", "units = atomic"]
    else:
        lines += [f"mu_amu = {spec.mu!r}", "units = ev_angstrom",
                  f"hbar_c = {spec.units.hbar_c!r}",
                  f"amu_to_energy = {spec.units.amu_to_energy!r}"]
    return "\n".join(lines) + "\n"


def spec_from_config(text: str) -> PotentialSpec:
    return spec_from_mapping(parse_key_values(text))


def load_spec(path: str | Path) -> PotentialSpec:
    return spec_from_config(Path(path).read_text())
