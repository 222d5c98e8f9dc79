"""Spins phi_ij = phi_i phi_j^-1, their part spectra and special parts.

Part spectra are isotopy invariants: an autotopism (alpha, beta, gamma)
conjugates spin (i, j) by beta onto spin (gamma(i), gamma(j)), so gamma must
permute parts with equal spectra among themselves.
"""
from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .perm import CycleType, Permutation, compose, cycle_type, inverse
from .quasigroup import Quasigroup

Spectrum = tuple[CycleType, ...]


class SpinTable:
    """Lazily computed spins of one quasigroup, cached per ordered pair."""

    def __init__(self, q: Quasigroup):
        self.q = q
        self.degree = q.order
        self._tracks = q.tracks()
        self._inv = [inverse(p) for p in self._tracks]
        self._spins: dict[tuple[int, int], Permutation] = {}
        self._types: dict[tuple[int, int], CycleType] = {}

    def spin(self, i: int, j: int) -> Permutation:
        if i == j:
            raise ValueError(f"spin ({i},{i}) is trivial and excluded")
        n = self.degree
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"labels ({i},{j}) out of range 1..{n}")
        key = (i, j)
        s = self._spins.get(key)
        if s is None:
            s = compose(self._tracks[i - 1], self._inv[j - 1])
            self._spins[key] = s
        return s

    def type(self, i: int, j: int) -> CycleType:
        key = (i, j)
        t = self._types.get(key)
        if t is None:
            t = cycle_type(self.spin(i, j))
            self._types[key] = t
        return t

    def part_spectrum(self, i: int) -> Spectrum:
        """Sorted multiset of cycle types of the spins (i, j), j != i."""
        return tuple(sorted(self.type(i, j) for j in range(1, self.degree + 1) if j != i))

    def spectra(self) -> list[Spectrum]:
        return [self.part_spectrum(i) for i in range(1, self.degree + 1)]


def spin_table(q: Quasigroup) -> SpinTable:
    return SpinTable(q)


def spin(q: Quasigroup, i: int, j: int) -> Permutation:
    return SpinTable(q).spin(i, j)


def part_spectrum(q: Quasigroup, i: int) -> Spectrum:
    if not 1 <= i <= q.order:
        raise ValueError(f"label {i} out of range 1..{q.order}")
    return SpinTable(q).part_spectrum(i)


def _unique(items: Sequence) -> set[int]:
    counts = Counter(items)
    return {i for i, s in enumerate(items, 1) if counts[s] == 1}


def special_parts(q: Quasigroup, table: Optional[SpinTable] = None) -> set[int]:
    table = table or SpinTable(q)
    return _unique(table.spectra())


def spectrum_classes(spectra: Sequence[Spectrum]) -> list[list[int]]:
    """Labels grouped by equal part spectrum, in order of first label."""
    groups: dict[Spectrum, list[int]] = {}
    for i, s in enumerate(spectra, 1):
        groups.setdefault(s, []).append(i)
    return list(groups.values())


@dataclass
class SpinReport:
    spectra: list[Spectrum]
    legend: dict[str, CycleType]
    special: set[int] = field(default_factory=set)

    @property
    def order(self) -> int:
        return len(self.spectra)

    def letters(self, i: int) -> str:
        """Abbreviated form of Sp(Phi_i), e.g. ``A+2C+3D``."""
        code = {t: k for k, t in self.legend.items()}
        counts = Counter(code[t] for t in self.spectra[i - 1])
        return "+".join(f"{c if c > 1 else ''}{k}" for k, c in sorted(counts.items()))

    def to_dict(self) -> list[dict]:
        return [
            {
                "index": i,
                "spectrum": [list(t) for t in s],
                "letters": self.letters(i),
                "special": i in self.special,
            }
            for i, s in enumerate(self.spectra, 1)
        ]

    def format(self) -> str:
        lines = [f"{k} = {list(t)}" for k, t in self.legend.items()]
        for i in range(1, self.order + 1):
            mark = "  special" if i in self.special else ""
            lines.append(f"Sp(Phi_{i}) = {self.letters(i) or '-'}{mark}")
        return "\n".join(lines)


def _letter(k: int) -> str:
    letters = string.ascii_uppercase
    return letters[k] if k < 26 else letters[k // 26 - 1] + letters[k % 26]


def spin_report(q: Quasigroup, legend: Optional[Sequence[CycleType]] = None,
                table: Optional[SpinTable] = None) -> SpinReport:
    """Spectra of every part with letter codes and special flags.

    Letters follow first appearance scanning parts 1..n, ascending cycle type
    within a part. ``legend`` fixes the order of the first letters instead;
    any remaining types continue the default scheme.
    """
    table = table or SpinTable(q)
    spectra = table.spectra()
    order: list[CycleType] = [tuple(t) for t in legend or ()]
    for s in spectra:
        for t in s:
            if t not in order:
                order.append(t)
    codes = {_letter(k): t for k, t in enumerate(order)}
    return SpinReport(spectra=spectra, legend=codes, special=_unique(spectra))
