"""Sparse spectra: rational exponents with integer multiplicities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping


@dataclass(frozen=True)
class Spectrum:
    """sum_alpha m_alpha t^alpha with every alpha = k / d."""

    d: int
    entries: tuple[tuple[int, int], ...]  # sorted (numerator k, multiplicity)

    @classmethod
    def build(cls, d: int, entries: Mapping[int, int] | None = None) -> "Spectrum":
        acc: dict[int, int] = {}
        for k, c in (entries or {}).items():
            acc[k] = acc.get(k, 0) + c
        return cls(d, tuple(sorted((k, c) for k, c in acc.items() if c)))

    @classmethod
    def from_alphas(cls, d: int, alphas: Mapping[Fraction, int]) -> "Spectrum":
        acc = {}
        for a, c in alphas.items():
            k = Fraction(a) * d
            if k.denominator != 1:
                raise ValueError(f"{a} is not a multiple of 1/{d}")
            acc[int(k)] = acc.get(int(k), 0) + c
        return cls.build(d, acc)

    def as_dict(self) -> dict[Fraction, int]:
        return {Fraction(k, self.d): c for k, c in self.entries}

    def __getitem__(self, alpha) -> int:
        return self.as_dict().get(Fraction(alpha), 0)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(frozenset(self.as_dict().items()))

    def total(self) -> int:
        return sum(c for _, c in self.entries)

    def with_denominator(self, d: int) -> "Spectrum":
        return Spectrum.from_alphas(d, self.as_dict())

    def triples(self) -> list[tuple[int, int, int]]:
        """Sorted (numerator, denominator, multiplicity), each alpha in lowest terms."""
        return sorted(((a.numerator, a.denominator, c) for a, c in self.as_dict().items()),
                      key=lambda x: Fraction(x[0], x[1]))

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for num, den, c in self.triples():
            if num == 0:
                term = str(abs(c))
            else:
                if den != 1:
                    a = f"t^({num}/{den})"
                else:
                    a = "t" if num == 1 else (f"t^{num}" if num > 0 else f"t^({num})")
                term = ("" if abs(c) == 1 else str(abs(c))) + a
            parts.append(("-" if c < 0 else "+") + f" {term}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]
