"""Command-line front end.

Every command prints a header naming the ambient cyclic group mu_n; the
character gamma_i in any output means zeta_n -> zeta_n^i for that n.

Exit status: 0 when everything checked holds, 1 on a mathematical
violation, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass, field

from .arrangement import dense_edges_braid, dense_edges_rank2
from .braid import chi_u_sym
from .catalog import catalog, chi_U, equivariant_euler, get_group, monodromy_euler_quotient
from .checks import CheckReport
from .errors import EvenNotSupported, MilnorError, MissingCatalogEntry, MissingModel, ParseError, Unsupported
from .golden import load_golden
from .groups import Dihedral, ambient_order
from .hodge import golden_hd_braid, hd_contraction, purity_symmetry_check, spectrum_from_pd, theta_hd_from_spectrum, zeta_check
from .rank2 import (h0_general, h1_f0_dihedral, h1_f0_monodromy, pd_rank2_monodromy, spectrum_rank2,
                    weight_poly_dihedral)
from .reps import GradedRep, RepElement, gammas, specialize
from .serialize import format_expr, format_graded_terms, group_to_str, to_json
from .spectrum import Spectrum
from .validate import run_all, suite_for

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
CHECKS = ("purity", "zeta", "roundtrip")


@dataclass
class OutputRecord:
    command: str
    group: str
    ambient: int | None
    result: object = None  # RepElement, GradedRep or Spectrum
    citations: list[str] = field(default_factory=list)
    checks: list[CheckReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "group": self.group,
            "ambient_cyclic_order": self.ambient,
            "result": to_json(self.result) if self.result is not None else None,
            "citations": list(self.citations),
            "checks": [c.to_json() for c in self.checks],
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [f"# command: {self.command}", f"# group: {self.group}"]
        if self.ambient is not None:
            lines.append(f"# characters gamma_i are indexed relative to mu_{self.ambient}")
        if self.result is not None:
            lines.append(f"# result type: {_result_type(self.result)}")
            lines += _result_lines(self.result)
        for c in self.citations:
            lines.append(f"# cite: {c}")
        for n in self.notes:
            lines.append(f"# note: {n}")
        for c in self.checks:
            lines.append(c.line())
            lines += [f"    {v}" for v in c.violations]
            lines += [f"    note: {n}" for n in c.notes]
        return "\n".join(lines)


def _result_type(x) -> str:
    if isinstance(x, Spectrum):
        return f"spectrum, d = {x.d}"
    return group_to_str(x.group)


def _result_lines(x) -> list[str]:
    if isinstance(x, RepElement):
        return [format_expr(x)]
    if isinstance(x, GradedRep):
        return [f"{mono}: {expr}" for mono, expr in format_graded_terms(x).items()]
    return [str(x)]


# --------------------------------------------------------------------------
# commands


def cmd_euler(descriptor: str, command: str = "") -> OutputRecord:
    data = get_group(descriptor)
    rec = OutputRecord(command or f"euler --group {descriptor}", f"{descriptor} = {data.name}", data.m)
    try:
        rec.result = equivariant_euler(data)
    except MissingModel as exc:
        rec.result = monodromy_euler_quotient(data)
        rec.notes.append(f"{exc}; showing the invariant part, the monodromy Euler characteristic of F/G")
    rec.notes.append(f"chi(U) = {chi_U(data)}, m = {data.m}, |G| = {data.order}")
    if data.citation:
        rec.citations.append(data.citation)
    return rec


def cmd_rank2(what: str, p: int | None = None, d: int | None = None, command: str = "") -> OutputRecord:
    if (p is None) == (d is None):
        raise ParseError("give exactly one of --p and --d")
    lines = p if p is not None else d
    group = f"dihedral:{p} = G({p},{p},2), {p} lines" if p is not None else f"{d} lines through the origin of C^2"
    rec = OutputRecord(command or f"rank2 --{'p' if p is not None else 'd'} {lines} --what {what}", group, None)
    if what == "h1":
        rec.result = h1_f0_dihedral(p) if p is not None else h1_f0_monodromy(d)
    elif what == "monodromy":
        rec.result = h1_f0_monodromy(lines)
    elif what == "pd":
        rec.result = pd_rank2_monodromy(lines)
    elif what == "spectrum":
        rec.result = spectrum_rank2(lines)
    elif what == "weight":
        if p is None:
            raise ParseError("the weight polynomial is defined for dihedral groups; use --p")
        rec.result = weight_poly_dihedral(p)
    elif what == "h0":
        rec.result = h0_general(2, p, Dihedral(p)) if p is not None else gammas(d, [0])
    else:
        raise ParseError(f"unknown selector {what!r}")
    r = rec.result
    rec.ambient = r.d if isinstance(r, Spectrum) else ambient_order(r.group)
    return rec


def _spectrum_checks(sp: Spectrum, pd: GradedRep, ell: int, chi: int, edges, checks) -> list[CheckReport]:
    out = []
    for name in checks:
        if name == "purity":
            out.append(purity_symmetry_check(sp, ell, edges))
        elif name == "zeta":
            out.append(zeta_check(specialize(pd, u=1, v=1), chi))
        elif name == "roundtrip":
            rep = CheckReport("spectrum round trip", anchor="inverse placement rule")
            rep.require(theta_hd_from_spectrum(sp, ell, pd.group.n) == hd_contraction(pd),
                        "restricted Hodge-Deligne data read back from the spectrum differs")
            out.append(rep)
        else:
            raise ParseError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    return out


def cmd_spectrum(rank2: int | None = None, braid: int | None = None, checks=(), command: str = "") -> OutputRecord:
    if (rank2 is None) == (braid is None):
        raise ParseError("give exactly one of --rank2 and --braid")
    if braid is not None:
        if braid not in (2, 3, 4):
            raise Unsupported(f"Hodge data for the braid arrangement A_{braid} is not known; "
                              "only A_2, A_3 and A_4 are available")
        pd = golden_hd_braid(braid)
        sp = spectrum_from_pd(pd, braid)
        rec = OutputRecord(command or f"spectrum --braid {braid}", f"braid:{braid}, the arrangement A_{braid}", sp.d, sp)
        rec.citations += load_golden()[f"a{braid}.hd"].anchors()
        rec.checks = _spectrum_checks(sp, pd, braid, chi_u_sym(braid), dense_edges_braid(braid), checks)
        return rec
    pd = pd_rank2_monodromy(rank2)
    sp = spectrum_rank2(rank2)
    rec = OutputRecord(command or f"spectrum --rank2 {rank2}", f"rank2:{rank2}, {rank2} lines in C^2", sp.d, sp)
    rec.checks = _spectrum_checks(sp, pd, 2, 2 - rank2, dense_edges_rank2(rank2), checks)
    return rec


def cmd_validate(groups=None, command: str = "") -> OutputRecord:
    rec = OutputRecord(command or "validate", ", ".join(groups) if groups else "all", None)
    if groups:
        for g in groups:
            rec.checks += suite_for(g)
    else:
        rec.checks = run_all()
    passed = sum(c.passed for c in rec.checks)
    rec.notes.append(f"{passed} of {len(rec.checks)} checks pass")
    return rec


def cmd_groups(command: str = "") -> OutputRecord:
    rec = OutputRecord(command or "groups", "catalog", None)
    for data in catalog().values():
        rec.notes.append(f"{data.name}: family {data.family}, degrees {tuple(data.degrees)}")
    return rec


# --------------------------------------------------------------------------
# argument parsing


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="milnorfibre", parents=[common],
                                 description="Equivariant invariants of Milnor fibres of reflection arrangements.")
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("euler", parents=[common], help="equivariant Euler characteristic of F")
    e.add_argument("--group", required=True, help='e.g. "sym:4", "dihedral:5", "imprimitive:3,1,2", "table1:G4"')

    r = sub.add_parser("rank2", parents=[common], help="rank-two Milnor fibre data")
    sel = r.add_mutually_exclusive_group(required=True)
    sel.add_argument("--p", type=int, help="dihedral group G(p,p,2)")
    sel.add_argument("--d", type=int, help="number of lines")
    r.add_argument("--what", required=True, choices=("h1", "monodromy", "pd", "spectrum", "weight", "h0"))

    s = sub.add_parser("spectrum", parents=[common], help="spectrum with optional checks")
    tgt = s.add_mutually_exclusive_group(required=True)
    tgt.add_argument("--rank2", type=int, metavar="D")
    tgt.add_argument("--braid", type=int, metavar="N")
    s.add_argument("--check", default="", help="comma-separated subset of " + ",".join(CHECKS))

    v = sub.add_parser("validate", parents=[common], help="run the consistency suites")
    v.add_argument("--all", action="store_true", help="every suite (the default)")
    v.add_argument("--group", action="append", default=[], help="restrict to one group; may be repeated")

    sub.add_parser("groups", parents=[common], help="list the catalog")
    return ap


def _dispatch(args, command: str) -> OutputRecord:
    if args.command == "euler":
        return cmd_euler(args.group, command)
    if args.command == "rank2":
        return cmd_rank2(args.what, p=args.p, d=args.d, command=command)
    if args.command == "spectrum":
        checks = [c.strip() for c in args.check.split(",") if c.strip()]
        return cmd_spectrum(rank2=args.rank2, braid=args.braid, checks=checks, command=command)
    if args.command == "validate":
        groups = [g for item in args.group for g in item.split(";") if g]
        return cmd_validate(None if args.all else groups or None, command)
    return cmd_groups(command)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    fmt = getattr(args, "format", "text")
    command = shlex.join(argv)
    try:
        rec = _dispatch(args, command)
    except (ParseError, Unsupported, EvenNotSupported, MissingCatalogEntry, ValueError) as exc:
        _error(fmt, command, exc)
        return EXIT_USAGE
    except MilnorError as exc:
        _error(fmt, command, exc)
        return EXIT_VIOLATION
    if fmt == "json":
        print(json.dumps(rec.to_json(), indent=2, sort_keys=True))
    else:
        print(rec.to_text())
    return EXIT_OK if rec.passed else EXIT_VIOLATION


def _error(fmt: str, command: str, exc: Exception) -> None:
    kind = type(exc).__name__
    if fmt == "json":
        print(json.dumps({"command": command, "error": kind, "message": str(exc)}, indent=2))
    else:
        print(f"error ({kind}): {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
