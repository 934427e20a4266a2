"""Tabulate the Moebius-inversion data of every catalog group.

For each group: m, chi(U), the nonzero coefficients chi(U(d)^0/G(d)),
the monodromy Euler characteristic of F/G and, where a character model
is shipped, whether the equivariant Euler characteristic has dimension
m chi(U).
"""

import argparse
import time

from milnorfibre.catalog import (catalog, chi_U, chi_U0_mod_G, equivariant_euler, euler_coefficients,
                                 monodromy_euler_quotient)
from milnorfibre.errors import MissingCatalogEntry, MissingModel
from milnorfibre.serialize import format_expr


def main():
    ap = argparse.ArgumentParser(description="Moebius-inversion table for the catalog")
    ap.add_argument("--family", help="only this family, e.g. symmetric or dihedral")
    args = ap.parse_args()
    t0 = time.perf_counter()
    for data in catalog().values():
        if args.family and data.family != args.family:
            continue
        try:
            coeffs = {d: c for d, c in euler_coefficients(data).items() if c}
            quotient = format_expr(monodromy_euler_quotient(data))
            line = f"m={data.m:<3} chi(U)={chi_U(data):<5} chi(U0/G)={chi_U0_mod_G(data):<3} coeffs={coeffs}"
        except MissingCatalogEntry as exc:
            print(f"{data.name:<10} {exc}")
            continue
        try:
            dim_ok = equivariant_euler(data).dim() == data.m * chi_U(data)
            model = "dim ok" if dim_ok else "dim MISMATCH"
        except MissingModel:
            model = "no model"
        print(f"{data.name:<10} {line}  [{model}]  F/G: {quotient}")
    print(f"# {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    raise SystemExit(main())
