"""Regenerate src/milnorfibre/data/catalog.json from the record builders.

Table 4 exceptional groups are written with their degrees and e_H values but
without hyperplane counts, which are not on record.
"""

import argparse
import json
from pathlib import Path

from milnorfibre.catalog import (TABLE1, TABLE4, ReflectionGroupData, check_overrides, dihedral_record,
                                 imprimitive_r1_record, imprimitive_rank2_record, symmetric_record, table1_record)

OUT = Path(__file__).resolve().parent.parent / "src" / "milnorfibre" / "data" / "catalog.json"


def as_json(r: ReflectionGroupData) -> dict:
    return {
        "name": r.name, "family": r.family, "params": list(r.params), "rank": r.rank,
        "degrees": list(r.degrees), "coexponents": list(r.coexponents),
        "hyperplane_orders": None if r.hyperplane_orders is None
        else {str(k): v for k, v in sorted(r.hyperplane_orders.items())},
        "chiU0_overrides": {str(k): v for k, v in sorted(r.chiU0_overrides.items())},
        "citation": r.citation,
    }


def records() -> list[dict]:
    out = [symmetric_record(n) for n in range(3, 9)]
    out += [dihedral_record(p) for p in range(3, 31)]
    out += [imprimitive_r1_record(r, ell) for r in range(2, 5) for ell in range(1, 4)]
    out += [imprimitive_rank2_record(2 * p, p) for p in (2, 3)]  # uniform G(2p,p,2)
    out += [imprimitive_rank2_record(p * e, p) for p, e in ((2, 3), (2, 4), (3, 3))]  # non-uniform G(pe,p,2)
    out += [table1_record(*row) for row in TABLE1]
    raw = [as_json(r) for r in out]
    for name, e_values, degrees in TABLE4:
        raw.append({
            "name": name, "family": "table4", "params": [], "rank": 2, "degrees": list(degrees),
            "coexponents": None, "e_values": list(e_values), "hyperplane_orders": None,
            "chiU0_overrides": {}, "citation": "non-uniform rank-two groups table; counts per order not recorded",
        })
    for r in out:
        bad = check_overrides(r)
        if bad:
            raise SystemExit("\n".join(bad))
    return raw


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    doc = {"format": "milnorfibre-catalog", "version": 1, "groups": records()}
    args.out.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {len(doc['groups'])} groups to {args.out}")


if __name__ == "__main__":
    main()
