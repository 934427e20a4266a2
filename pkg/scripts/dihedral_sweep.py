"""Sweep G(p,p,2) over a range of p and tabulate H^1(F_0) and its consistency checks.

    python scripts/dihedral_sweep.py --max 20
"""

import argparse

from milnorfibre.arrangement import dense_edges_rank2
from milnorfibre.groups import Dihedral
from milnorfibre.hodge import purity_symmetry_check, zeta_check
from milnorfibre.rank2 import h1_f0_dihedral, h1_f0_monodromy, h1_f0_uniform, pd_rank2_monodromy, spectrum_rank2
from milnorfibre.reps import specialize, theta


def row(p: int) -> tuple:
    x = h1_f0_dihedral(p)
    effective = x.is_effective()
    restricts = theta(x, p) == h1_f0_monodromy(p)
    trace = x == h1_f0_uniform(Dihedral(p))
    zeta = zeta_check(specialize(pd_rank2_monodromy(p), u=1, v=1), 2 - p).passed
    purity = purity_symmetry_check(spectrum_rank2(p), 2, dense_edges_rank2(p)).passed
    return p, x.dim(), len(x.items()), effective, restricts, trace, zeta, purity


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min", type=int, default=3)
    ap.add_argument("--max", type=int, default=16)
    args = ap.parse_args()
    header = ("p", "dim", "terms", "effective", "theta", "trace", "zeta", "purity")
    print(" ".join(f"{h:>9}" for h in header))
    bad = 0
    for p in range(args.min, args.max + 1):
        r = row(p)
        bad += not all(r[3:])
        print(" ".join(f"{str(v):>9}" for v in r))
    print(f"{bad} rows with a failed check")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
