"""Reduced masses of the tabulated diatomics and the table length calibration."""

from __future__ import annotations

import re
from pathlib import Path

from .core import (AMU_TO_EV, HBAR_C_EV_ANGSTROM, MoleculeRecord, PotentialSpec,
                   QuantumNumbers, SpecError, UnitSystem, parse_key_values)

# Tabulated "1/b" columns are dimensionless shape inputs (A = 2/column); the
# physical screening length is LENGTH_CALIBRATION_ANGSTROM / column.
LENGTH_CALIBRATION_ANGSTROM = 0.01

DEFAULT_MOLECULES = (
    MoleculeRecord("HCl", 0.9801045),
    MoleculeRecord("CH", 0.929931),
    MoleculeRecord("LiH", 0.8801221),
    MoleculeRecord("CO", 6.8606719),
)

ORBITAL_LETTERS = "spdfghik"


class MoleculeDatabase:
    """Read-only name -> MoleculeRecord lookup (case-insensitive)."""

    def __init__(self, records=DEFAULT_MOLECULES):
        self._records: dict[str, MoleculeRecord] = {}
        for rec in records:
            key = rec.name.lower()
            if key in self._records:
                raise SpecError(f"duplicate molecule {rec.name!r}")
            self._records[key] = rec

    def __getitem__(self, name: str) -> MoleculeRecord:
        try:
            return self._records[name.lower()]
        except KeyError:
            known = ", ".join(r.name for r in self._records.values())
            raise SpecError(f"unknown molecule {name!r} (known: {known})") from None

    def __contains__(self, name: str) -> bool:
        return name.lower() in self._records

    def __iter__(self):
        return iter(self._records.values())

    def __len__(self):
        return len(self._records)

    @property
    def records(self) -> list[MoleculeRecord]:
        return list(self._records.values())

    def updated(self, records) -> MoleculeDatabase:
        merged = {r.name.lower(): r for r in self.records}
        merged.update({r.name.lower(): r for r in records})
        return MoleculeDatabase(merged.values())

    @classmethod
    def from_config(cls, text: str, base: MoleculeDatabase | None = None) -> MoleculeDatabase:
        """``name = mass_amu`` lines, overriding or extending ``base``."""
        recs = [MoleculeRecord(k, float(v)) for k, v in parse_key_values(text).items()]
        return (base or cls()).updated(recs)

    @classmethod
    def load(cls, path: str | Path) -> MoleculeDatabase:
        return cls.from_config(Path(path).read_text())


MOLECULES = MoleculeDatabase()


def table_spec(molecule: str, column_inv_b: float, alpha: float,
               db: MoleculeDatabase = MOLECULES,
               calibration: float = LENGTH_CALIBRATION_ANGSTROM,
               hbar_c: float = HBAR_C_EV_ANGSTROM,
               amu_to_energy: float = AMU_TO_EV) -> PotentialSpec:
    """Spectroscopic spec for one cell of the molecular tables.

    A = 2 / column, and b = calibration / column in Angstrom.
    """
    if not column_inv_b > 0:
        raise SpecError(f"column value must be positive, got {column_inv_b}")
    rec = db[molecule]
    units = UnitSystem.spectroscopic(hbar_c, amu_to_energy)
    return PotentialSpec(2.0 / column_inv_b, alpha, calibration / column_inv_b,
                         rec.reduced_mass_amu, units)


def atomic_table_spec(column_inv_b: float, alpha: float, mu: float = 1.0) -> PotentialSpec:
    """Atomic-unit spec with b = 1/column and A = 2b."""
    b = 1.0 / column_inv_b
    return PotentialSpec(2.0 * b, alpha, b, mu)


_LABEL = re.compile(r"^\s*(\d+)\s*([a-zA-Z])\s*$")


def state_label_to_quantum_numbers(label: str) -> QuantumNumbers:
    """'2p' -> (n=0, l=1), '6g' -> (n=1, l=4): principal = n + l + 1."""
    m = _LABEL.match(label)
    if not m:
        raise SpecError(f"malformed state label {label!r}")
    principal, letter = int(m.group(1)), m.group(2).lower()
    if letter not in ORBITAL_LETTERS:
        raise SpecError(f"unknown orbital letter {letter!r} in {label!r}")
    l = ORBITAL_LETTERS.index(letter)
    if principal <= l:
        raise SpecError(f"{label!r}: principal number must exceed l={l}")
    return QuantumNumbers(principal - l - 1, l)


def quantum_numbers_to_label(q: QuantumNumbers) -> str:
    if q.l >= len(ORBITAL_LETTERS):
        raise SpecError(f"no letter for l={q.l}")
    return f"{q.principal}{ORBITAL_LETTERS[q.l]}"
