"""Transcribed reference data with a citation attached to every coefficient."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from importlib import resources

from .errors import ParseError
from .reps import GradedRep
from .serialize import _mono_key, group_from_str, parse_expr, parse_graded
from .spectrum import Spectrum

GOLDEN_ENV = "MILNORFIBRE_GOLDEN"


@dataclass(frozen=True)
class GoldenRecord:
    name: str
    kind: str
    value: object
    description: str = ""
    citations: dict = field(default_factory=dict)  # monomial -> anchor, or {None: anchor}

    def anchors(self) -> list[str]:
        return sorted(set(self.citations.values()))


@dataclass(frozen=True)
class GoldenData:
    records: dict
    constants: dict

    def __getitem__(self, name: str) -> GoldenRecord:
        try:
            return self.records[name]
        except KeyError:
            raise KeyError(f"no golden record named {name!r}") from None

    def value(self, name: str):
        return self[name].value

    def constant(self, name: str):
        return self.constants[name]["value"]


def _parse_record(name: str, raw: dict) -> GoldenRecord:
    kind = raw["kind"]
    if kind == "spectrum":
        acc: dict = {}
        d = raw["d"]
        for num, den, mult in raw["terms"]:
            if (d * num) % den:
                raise ParseError(f"{name}: {num}/{den} is not a multiple of 1/{d}")
            k = d * num // den
            acc[k] = acc.get(k, 0) + mult
        return GoldenRecord(name, kind, Spectrum.build(d, acc), raw.get("description", ""),
                            {None: raw["cite"]})
    group = group_from_str(raw["group"])
    if kind == "rep":
        return GoldenRecord(name, kind, parse_expr(group, raw["expr"]), raw.get("description", ""),
                            {None: raw["cite"]})
    if kind == "graded":
        terms, cites = {}, {}
        for t in raw["terms"]:
            key = _mono_key(t["mono"])
            if key in cites:
                raise ParseError(f"{name}: monomial {t['mono']!r} listed twice")
            terms[t["mono"]] = t["expr"]
            cites[key] = t["cite"]
        return GoldenRecord(name, kind, parse_graded(group, terms), raw.get("description", ""), cites)
    raise ParseError(f"{name}: unknown kind {kind!r}")


def parse_golden(text: str) -> GoldenData:
    raw = json.loads(text)
    if raw.get("format") != "milnorfibre-golden" or raw.get("version") != 1:
        raise ParseError("unrecognised golden data file")
    records = {name: _parse_record(name, r) for name, r in raw["records"].items()}
    for rec in records.values():
        # Poincare-type polynomials must be genuine representations
        if isinstance(rec.value, GradedRep) and "theta" not in rec.name and not rec.value.is_effective():
            raise ParseError(f"{rec.name}: negative multiplicity in a cohomology record")
    return GoldenData(records, dict(raw.get("constants", {})))


def golden_path() -> Path | None:
    env = os.environ.get(GOLDEN_ENV)
    return Path(env) if env else None


def load_golden(path: str | Path | None = None) -> GoldenData:
    """Read golden data; the environment variable overrides the bundled file."""
    path = Path(path) if path is not None else golden_path()
    if path is None:
        return _bundled()
    return parse_golden(Path(path).read_text())


@lru_cache(maxsize=None)
def _bundled() -> GoldenData:
    return parse_golden(resources.files("milnorfibre").joinpath("data/golden.json").read_text())
