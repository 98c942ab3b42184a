"""Multiplicative group anatomy of the two small example braces.

Both are metabelian but not abelian, and both are A-groups: each Sylow
subgroup of the multiplicative group is abelian.  The Sylow subgroups are
read off as additive blocks, which double as left ideals.

Run:  python3 demos/group_structure.py
"""

from pathlib import Path

import numpy as np

from bracekit import build_family, derived_subgroup, group_report, load_spec, sylow_left_ideals

HERE = Path(__file__).parent / "specs"


def main():
    for name in ("cf72.json", "ns216.json"):
        B = build_family(load_spec(HERE / name))
        report = group_report(B)
        print(f"{name}: order {B.order}")
        print(f"  abelian={report.is_abelian}  metabelian={report.is_metabelian}  "
              f"A-group={report.is_A_group}")
        print(f"  derived subgroup size: {report.derived_size}")
        print(f"  sylow blocks: {report.sylow_sizes}")

        derived = derived_subgroup(B)
        blocks = sylow_left_ideals(B)
        # the derived subgroup meets each block in its twisted part only
        for rec, (p, size) in zip(blocks, report.sylow_sizes):
            inside = int(np.sum(rec.mask[derived]))
            print(f"  derived ∩ {p}-block: {inside} elements")
        print()


if __name__ == "__main__":
    main()
