# -*- coding: utf-8 -*-
"""
Domain types: eigenvalue branches, disks, disk unions, field strengths and
sorted spectra.
"""

import math
from dataclasses import dataclass, field
from numbers import Real
from typing import Tuple

import numpy as np
import pandas as pd

from maglap.core.exceptions import InvalidParam, NonMagneticUnsupported


@dataclass(frozen=True, order=True)
class BranchId:
    """Radial index m >= 1 and angular momentum l of a branch lambda_{m,l}(B)."""
    m: int
    l: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise InvalidParam(f'radial index m must be a positive integer, got {self.m}')
        if int(self.l) != self.l:
            raise InvalidParam(f'angular momentum l must be an integer, got {self.l}')

    @property
    def b(self):
        """Kummer parameter |l| + 1 of the branch."""
        return abs(self.l) + 1

    @property
    def landau_offset(self):
        """l + |l| + 1, the Landau level of the lowest radial state in the sector."""
        return self.l + abs(self.l) + 1

    def limit(self):
        """Strong-field limit of lambda / B: l + |l| + 1 + 2(m - 1)."""
        return self.landau_offset + 2 * (self.m - 1)

    def flipped(self):
        return BranchId(self.m, -self.l)


@dataclass(frozen=True)
class Disk:
    radius: float

    def __post_init__(self):
        if not math.isfinite(self.radius) or not self.radius > 0:
            raise InvalidParam(f'disk radius must be finite and positive, got {self.radius}')

    @property
    def area(self):
        return math.pi * self.radius ** 2

    @property
    def perimeter(self):
        return 2 * math.pi * self.radius

    def z(self, field_strength):
        """Kummer argument B R^2 / 2."""
        return as_field(field_strength).value * self.radius ** 2 / 2


@dataclass(frozen=True)
class DiskSystem:
    """Finite disjoint union of disks.

    Positions are immaterial: the spectrum of the union is the multiset union
    of the spectra of its disks.
    """
    disks: Tuple[Disk, ...]

    def __post_init__(self):
        disks = tuple(as_disk(d) for d in self.disks)
        if not disks:
            raise InvalidParam('a disk system needs at least one disk')
        object.__setattr__(self, 'disks', disks)

    @classmethod
    def from_radii(cls, *radii):
        return cls(tuple(Disk(float(r)) for r in radii))

    @property
    def radii(self):
        return tuple(d.radius for d in self.disks)

    @property
    def total_area(self):
        return math.fsum(d.area for d in self.disks)

    @property
    def perimeter(self):
        return math.fsum(d.perimeter for d in self.disks)

    def __len__(self):
        return len(self.disks)

    def __iter__(self):
        return iter(self.disks)


@dataclass(frozen=True)
class FieldStrength:
    """Constant field strength B > 0.

    Use ``FieldStrength.normalize`` for signed input: a negative field is
    mapped to -B together with l -> -l.
    """
    value: float

    def __post_init__(self):
        if not isinstance(self.value, Real) or not math.isfinite(self.value):
            raise InvalidParam(f'field strength must be a finite real, got {self.value}')
        if self.value == 0:
            raise NonMagneticUnsupported(
                'B = 0 is the non-magnetic problem; use the finite-difference oracle for B -> 0 checks'
            )
        if self.value < 0:
            raise InvalidParam(f'FieldStrength needs B > 0, got {self.value}; use FieldStrength.normalize')

    @classmethod
    def normalize(cls, value, branch=None):
        """(FieldStrength(|B|), branch) with l flipped when B < 0."""
        if isinstance(value, FieldStrength):
            return value, branch
        if not isinstance(value, Real) or not math.isfinite(value):
            raise InvalidParam(f'field strength must be a finite real, got {value}')
        if value < 0:
            return cls(-float(value)), (branch.flipped() if branch is not None else None)
        return cls(float(value)), branch

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class SpectrumEntry:
    lam: float
    disk_index: int
    branch: BranchId

    def sort_key(self):
        return self.lam, self.disk_index, self.branch.m, self.branch.l


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues up to ``threshold`` with branch provenance.

    Ties are ordered by (lambda, disk_index, m, l).
    """
    entries: Tuple[SpectrumEntry, ...]
    threshold: float
    field_strength: float = field(default=float('nan'))

    def __post_init__(self):
        entries = tuple(sorted(self.entries, key=SpectrumEntry.sort_key))
        object.__setattr__(self, 'entries', entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, item):
        return self.entries[item]

    def __iter__(self):
        return iter(self.entries)

    @property
    def lambdas(self):
        return np.array([e.lam for e in self.entries], dtype=float)

    def truncate(self, n):
        """Spectrum of the n lowest entries; the threshold becomes the n-th eigenvalue."""
        entries = self.entries[:n]
        threshold = entries[-1].lam if entries else self.threshold
        return Spectrum(entries, threshold, self.field_strength)

    def to_frame(self):
        return pd.DataFrame({
            'n': np.arange(1, len(self) + 1, dtype=int),
            'disk_index': [e.disk_index for e in self.entries],
            'm': [e.branch.m for e in self.entries],
            'l': [e.branch.l for e in self.entries],
            'lambda': self.lambdas,
        })


def as_field(value):
    """FieldStrength from a float or FieldStrength; negative values are rejected here."""
    if isinstance(value, FieldStrength):
        return value
    return FieldStrength(float(value) if isinstance(value, Real) else value)


def as_disk(value):
    if isinstance(value, Disk):
        return value
    if isinstance(value, Real):
        return Disk(float(value))
    raise InvalidParam(f'expected a Disk or a radius, got {value!r}')


def as_system(value):
    """DiskSystem from a DiskSystem, a Disk, a radius or an iterable of either."""
    if isinstance(value, DiskSystem):
        return value
    if isinstance(value, (Disk, Real)):
        return DiskSystem((as_disk(value),))
    try:
        return DiskSystem(tuple(value))
    except TypeError:
        raise InvalidParam(f'cannot build a disk system from {value!r}')
